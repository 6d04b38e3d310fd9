#include "revlab/gauss_weyl.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "revlab/errors.hpp"
#include "revlab/parallel.hpp"

namespace revlab {

namespace {
using u64 = std::uint64_t;
constexpr double kPi = std::numbers::pi;
}  // namespace

GaussWeights gauss_weights(u64 p, u64 q) {
    if (q == 0) throw validation_error("gauss weights need q >= 1");
    if (q > 1000000) throw guard_error("q above the 10^6 cost guard");
    if (std::gcd(p, q) != 1) throw validation_error("gauss weights need gcd(p, q) = 1");

    const u64 pm = p % q;
    // unit-circle table over the q-th roots, hit through exact residues
    std::vector<Complex> root(q);
    for (u64 r = 0; r < q; ++r) root[r] = std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(q));
    std::vector<u64> quad(q);
    for (u64 m = 0; m < q; ++m) quad[m] = (pm * ((m * m) % q)) % q;

    GaussWeights gw;
    gw.p = pm;
    gw.q = q;
    gw.w.resize(static_cast<Eigen::Index>(q));
    parallel_chunks(static_cast<std::int64_t>(q), 64, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t k = lo; k < hi; ++k) {
            Complex acc{0.0, 0.0};
            u64 lin = 0;  // k*m mod q, stepped by k
            for (u64 m = 0; m < q; ++m) {
                acc += root[(quad[m] + lin) % q];
                lin += static_cast<u64>(k);
                if (lin >= q) lin -= q;
            }
            gw.w[k] = acc;
        }
    });

    const double scale = static_cast<double>(q);
    const Complex total = gw.w.sum();
    if (std::abs(total - Complex{scale, 0.0}) > 1e-10 * std::max(1.0, scale))
        throw validation_error("gauss weights failed the column-sum invariant");
    if (std::abs(gw.w.squaredNorm() - scale * scale) > 1e-10 * scale * scale)
        throw validation_error("gauss weights failed the Parseval invariant");
    return gw;
}

double incomplete_weighted_sum_bound(int m_lo, int n_hi, const Eigen::VectorXd& weights_by_n,
                                     const Convergent& approx, double c1) {
    if (!(0 < m_lo && m_lo < n_hi)) throw validation_error("need 0 < M < N");
    if (approx.q == 0) throw validation_error("bound needs a valid convergent");
    for (Eigen::Index n = 0; n < weights_by_n.size(); ++n) {
        if ((n < m_lo || n > n_hi) && weights_by_n[n] != 0.0)
            throw validation_error("weights must vanish outside [M, N]");
    }
    double d = 0.0;
    for (int n = m_lo; n <= n_hi; ++n) {
        const double w_n = n < weights_by_n.size() ? weights_by_n[n] : 0.0;
        const double w_next = n + 1 < weights_by_n.size() ? weights_by_n[n + 1] : 0.0;
        d += std::abs(w_next - w_n);
    }
    const double sq = std::sqrt(static_cast<double>(approx.q));
    return d * c1 * (static_cast<double>(n_hi - m_lo) / sq + sq);
}

double WeylScanReport::max_ratio() const {
    double m = 0.0;
    for (const auto& s : scales) m = std::max(m, s.ratio);
    return m;
}

bool WeylScanReport::passes(double c_config) const { return max_ratio() <= c_config; }

WeylScanReport weyl_scan(const TimeSpec& t, double delta, int j_min, int j_max,
                         const LittlewoodPaleyBank& bank, int x_resolution) {
    if (j_min < 1 || j_min > j_max) throw validation_error("need 1 <= j_min <= j_max");
    if (j_max > 14) throw validation_error("weyl scan caps at j_max = 14");
    if (j_max > bank.j_max()) throw validation_error("bank too shallow for requested scales");
    if (x_resolution < (1 << (j_max + 2)))
        throw validation_error("x resolution must be at least 2^(j_max+2)");
    if (!(delta > 0.0)) throw validation_error("delta must be positive");

    WeylScanReport rep;
    rep.delta = delta;
    rep.x_resolution = x_resolution;

    for (int j = j_min; j <= j_max; ++j) {
        const std::int64_t lo = bank.support_lo(j), hi = bank.support_hi(j);
        const std::int64_t len = hi - lo + 1;
        Eigen::VectorXcd coeff(len);
        for (std::int64_t n = lo; n <= hi; ++n)
            coeff[n - lo] = bank.chi(j, n) * t.schrodinger_multiplier(n);

        const std::int64_t n_chunks = (x_resolution + 255) / 256;
        std::vector<double> chunk_max(static_cast<std::size_t>(n_chunks), 0.0);
        parallel_chunks(x_resolution, 256, [&](std::int64_t b, std::int64_t e) {
            double best = 0.0;
            for (std::int64_t r = b; r < e; ++r) {
                const double x = -kPi + 2.0 * kPi * static_cast<double>(r) / x_resolution;
                const Complex rot = std::polar(1.0, x);
                Complex w = std::polar(1.0, static_cast<double>(lo) * x);
                Complex acc{0.0, 0.0};
                for (std::int64_t n = lo; n <= hi; ++n) {
                    if ((n - lo) % 128 == 0) w = std::polar(1.0, static_cast<double>(n) * x);
                    acc += coeff[n - lo] * w;
                    w *= rot;
                }
                best = std::max(best, std::abs(acc));
            }
            chunk_max[static_cast<std::size_t>(b / 256)] = best;
        });
        double sup = 0.0;
        for (double v : chunk_max) sup = std::max(sup, v);
        rep.scales.push_back({j, sup, sup * std::exp2(-0.5 * j * (1.0 + delta))});
    }
    return rep;
}

}  // namespace revlab
