#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "revlab/gauss_weyl.hpp"
#include "revlab/step_function.hpp"
#include "revlab/time_spec.hpp"

namespace revlab {

// Reduced rational multiple p/q of 2*pi.  gcd is divided out and p is
// reduced mod q at construction (the flow is 2pi-periodic in time); the
// original numerator is kept for reporting.
struct RationalTime {
    std::uint64_t p = 0;  // reduced, < q
    std::uint64_t q = 1;
    std::uint64_t p_original = 0;

    static RationalTime of(std::uint64_t p, std::uint64_t q);
    double time() const { return 2.0 * M_PI * (static_cast<double>(p) / static_cast<double>(q)); }
    TimeSpec to_time_spec() const { return TimeSpec::rational(p, q); }
};

enum class RevivalPath { automatic, direct, table };

// Exact rational-time solution: at t = 2pi p/q the solution is the finite
// superposition (1/q) sum_k [Re W_k * u0 - Im W_k * H u0](x - 2pi k/q) with
// the Gauss weights W_k; u0 from its plateaus and H u0 from the closed-form
// log-sine formula, so the output is exact up to rounding.  The grid must
// keep every shifted node away from the breakpoints (guard_error otherwise).
// The table path (chosen automatically for q > 512 when q divides the grid
// size) reuses per-node tables of u0 and H u0; rows are identical to the
// direct path up to rounding and both are deterministic.
Eigen::VectorXd bo_revival(const PiecewiseConstant& u0, const RationalTime& rt,
                           const TorusGrid& grid, RevivalPath path = RevivalPath::automatic);

// Same superposition without the Hilbert part, complex-valued:
// (1/q) sum_k W_k u0(x - 2pi k/q).
Eigen::VectorXcd schrodinger_revival(const PiecewiseConstant& u0, const RationalTime& rt,
                                     const TorusGrid& grid,
                                     RevivalPath path = RevivalPath::automatic);

// Midpoint-style grid whose nodes provably avoid the shifted breakpoint
// lattice {a_j + 2pi k/q}: the offset starts at the midpoint pi/M and is
// nudged in steps of (pi/M)/64 until every lattice point is at circular
// distance > 1e-9 from every node.  (The plain midpoint offset can collide
// exactly: e.g. M = 10^4, q = 8544 puts node 312 on a breakpoint shift.)
TorusGrid lattice_safe_midpoint_grid(int m, const PiecewiseConstant& u0, std::uint64_t q);

}  // namespace revlab
