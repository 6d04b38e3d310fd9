#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revlab/bigint.hpp"

namespace revlab {

// One continued-fraction convergent p/q of a positive target.  `certified`
// records whether the Dirichlet quality bound |target - p/q| <= 1/q^2 holds;
// it is decided in exact integer arithmetic against the rational form of the
// target (the dyadic value of a double input, or the parsed decimal).
struct Convergent {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    double target = 0.0;
    double gap = 0.0;
    bool certified = false;
};

class CFExpansion {
  public:
    // Index of the deepest convergent (0-based; quotients a_0..a_deepest).
    int deepest() const { return static_cast<int>(quotients_.size()) - 1; }
    int size() const { return static_cast<int>(quotients_.size()); }
    // True when the expansion terminated: the target, at the precision it was
    // given, is exactly the last convergent.
    bool complete() const { return complete_; }

    std::uint64_t quotient(int i) const;
    Convergent convergent(int i) const;  // guard_error if p or q exceeds 64 bits
    double log_q(int i) const;           // ln q_i, exact big-integer source
    double gap(int i) const;             // |target - p_i/q_i|
    int error_sign(int i) const;         // sign(target - p_i/q_i), exact
    double target_value() const { return target_; }

    // (log q_n)/n at the deepest available n.  Requires >= 10 convergents.
    double levy_rate() const;

    // Convergent chosen for dyadic scale 2^j: index floor(j log2 / rho)
    // clamped to the available depth, with the relative denominator excess
    // r_j = log2(q)/j - 1.  guard_error when no denominator reaches 2^j.
    struct ScaleChoice {
        Convergent conv;
        int index = 0;
        double r = 0.0;
    };
    ScaleChoice select_for_scale(int j) const;

  private:
    std::vector<std::uint64_t> quotients_;
    std::vector<big_uint> num_, den_;
    big_uint target_num_, target_den_;  // exact rational form of the target
    double target_ = 0.0;
    bool complete_ = false;

    friend CFExpansion expand(double x, int depth);
    friend CFExpansion expand_decimal(std::string_view decimal, int depth);
};

// Gauss-map expansion of a floating-point target.  depth <= 40 (the depth
// beyond which a double carries no continued-fraction information).
CFExpansion expand(double x, int depth);

// Exact Euclid expansion of a positive decimal literal; depth unlimited
// (bounded by the precision of the literal: the expansion completes when the
// parsed rational is exhausted).
CFExpansion expand_decimal(std::string_view decimal, int depth);

// Built-in 50-digit targets.
const char* phi_decimal();
const char* e_decimal();

// Khinchin-Levy growth constant pi^2 / (12 ln 2).
double khinchin_levy_rho();

}  // namespace revlab
