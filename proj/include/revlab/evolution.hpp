#pragma once

#include "revlab/fourier_series.hpp"
#include "revlab/time_spec.hpp"

namespace revlab {

// Diagonal flow of the dispersive equation with multiplier e^{i n|n| t}:
// exact in time, no stepping.  Input must be real-flagged; output is real-
// flagged with Hermitian symmetry exact by construction.
FourierSeries evolve_bo(const FourierSeries& u0, const TimeSpec& t);

// Free-Schroedinger flow, multiplier e^{i n^2 t}.  Output is not real-valued.
FourierSeries evolve_schrodinger(const FourierSeries& v0, const TimeSpec& t);

// Real part of (I + iH) applied to an evolved Schroedinger series whose
// initial datum was real with mean `mean`: coefficient-wise
//   n > 0: v(n),  n < 0: conj(v(-n)),  n = 0: 2 Re v(0) - Re(mean).
// Equals evolve_bo of the same initial data.
FourierSeries bo_from_schrodinger(const FourierSeries& v, Complex mean);

}  // namespace revlab
