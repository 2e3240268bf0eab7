#pragma once

#include <golden/lattice.hpp>
#include <golden/parallel.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace golden {

enum class Notion { standard, extreme, periodic };

struct McEstimate {
    double mean = 0;
    double stderr_ = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// L2 discrepancy in the counting normalization: value is the square root of
// the integral of (A - N*lambda)^2 over the notion's box family.
struct DiscrepancyReport {
    Notion notion = Notion::standard;
    double value = 0;
    std::optional<McEstimate> mc;
    bool mc_flagged = false;  // set when |value^2 - mc mean| > 4 stderr
};

namespace discdetail {

// Separable closed forms.  Each notion reduces to a pair kernel summed over
// ordered point pairs, a per-point cross kernel, and a constant; the long
// double accumulators keep the O(N^2) sums well inside table precision.

// Ordered pair sums, parallel over rows, reduced in row order.
template <typename PairFn>
long double pair_sum(const std::vector<std::array<double, 2>>& pts, PairFn&& fn) {
    std::vector<long double> row(pts.size(), 0.0L);
    parallel_for(pts.size(), [&](std::size_t n) {
        long double acc = 0.0L;
        for (std::size_t m = 0; m < pts.size(); ++m) acc += fn(pts[n], pts[m]);
        row[n] = acc;
    });
    long double total = 0.0L;
    for (const long double v : row) total += v;
    return total;
}

inline double finish(long double sq) {
    return std::sqrt(static_cast<double>(sq < 0.0L ? 0.0L : sq));
}

}  // namespace discdetail

// Boxes anchored at the origin.
inline DiscrepancyReport l2_standard(const PointSet& p) {
    const auto& pts = p.pts;
    const long double n = static_cast<long double>(pts.size());
    const long double pair = discdetail::pair_sum(pts, [](const auto& a, const auto& b) {
        return (1.0L - std::max(a[0], b[0])) * (1.0L - std::max(a[1], b[1]));
    });
    long double cross = 0.0L;
    for (const auto& q : pts)
        cross += (1.0L - static_cast<long double>(q[0]) * q[0]) *
                 (1.0L - static_cast<long double>(q[1]) * q[1]) / 4.0L;
    const long double sq = pair - 2.0L * n * cross + n * n / 9.0L;
    return {Notion::standard, discdetail::finish(sq), std::nullopt, false};
}

// Boxes with both corners free.
inline DiscrepancyReport l2_extreme(const PointSet& p) {
    const auto& pts = p.pts;
    const long double n = static_cast<long double>(pts.size());
    const long double pair = discdetail::pair_sum(pts, [](const auto& a, const auto& b) {
        const long double kx = std::min(a[0], b[0]) * (1.0L - std::max(a[0], b[0]));
        const long double ky = std::min(a[1], b[1]) * (1.0L - std::max(a[1], b[1]));
        return kx * ky;
    });
    long double cross = 0.0L;
    for (const auto& q : pts)
        cross += (static_cast<long double>(q[0]) * (1.0L - q[0]) / 2.0L) *
                 (static_cast<long double>(q[1]) * (1.0L - q[1]) / 2.0L);
    const long double sq = pair - 2.0L * n * cross + n * n / 144.0L;
    return {Notion::extreme, discdetail::finish(sq), std::nullopt, false};
}

// Boxes wrapping on the torus.  The kernel depends only on coordinate
// differences, which also buys translation invariance.
inline DiscrepancyReport l2_periodic(const PointSet& p) {
    const auto& pts = p.pts;
    const long double n = static_cast<long double>(pts.size());
    const long double pair = discdetail::pair_sum(pts, [](const auto& a, const auto& b) {
        const long double tx = std::abs(a[0] - b[0]);
        const long double ty = std::abs(a[1] - b[1]);
        return (0.5L - tx + tx * tx) * (0.5L - ty + ty * ty);
    });
    const long double sq = pair - n * n / 9.0L;
    return {Notion::periodic, discdetail::finish(sq), std::nullopt, false};
}

inline DiscrepancyReport l2_discrepancy(const PointSet& p, Notion notion) {
    switch (notion) {
        case Notion::standard: return l2_standard(p);
        case Notion::extreme: return l2_extreme(p);
        default: return l2_periodic(p);
    }
}

namespace discdetail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Fixed block size keeps the estimate bitwise reproducible for a given seed
// regardless of thread count.
inline constexpr std::uint64_t kMcBlock = 65536;

struct BlockMoments {
    long double sum = 0.0L;
    long double sum2 = 0.0L;
};

}  // namespace discdetail

// Monte Carlo estimate of the squared discrepancy integral, sampling test
// boxes from the notion's own box distribution.  The extreme notion
// integrates over the ordered-corner region without normalizing its measure,
// so those samples carry the region volume 1/4.
inline McEstimate mc_oracle(const PointSet& p, Notion notion, std::uint64_t samples,
                            std::uint64_t seed) {
    if (samples < 10000) throw std::domain_error("mc_oracle needs >= 10^4 samples");
    using discdetail::kMcBlock;
    const auto& pts = p.pts;
    const double n = static_cast<double>(pts.size());
    const std::uint64_t blocks = (samples + kMcBlock - 1) / kMcBlock;
    std::vector<discdetail::BlockMoments> part(blocks);
    parallel_for(blocks, [&](std::size_t bi) {
        const std::uint64_t lo = bi * kMcBlock;
        const std::uint64_t hi = std::min(samples, lo + kMcBlock);
        std::mt19937_64 rng(discdetail::splitmix64(
            seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(bi) + 1))));
        const auto draw = [&]() {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        };
        discdetail::BlockMoments bm;
        for (std::uint64_t s = lo; s < hi; ++s) {
            double v = 0;
            if (notion == Notion::standard) {
                const double t1 = draw(), t2 = draw();
                double count = 0;
                for (const auto& q : pts)
                    if (q[0] < t1 && q[1] < t2) count += 1;
                const double d = count - n * t1 * t2;
                v = d * d;
            } else if (notion == Notion::extreme) {
                double a1 = draw(), b1 = draw(), a2 = draw(), b2 = draw();
                if (a1 > b1) std::swap(a1, b1);
                if (a2 > b2) std::swap(a2, b2);
                double count = 0;
                for (const auto& q : pts)
                    if (q[0] >= a1 && q[0] < b1 && q[1] >= a2 && q[1] < b2) count += 1;
                const double d = count - n * (b1 - a1) * (b2 - a2);
                v = d * d * 0.25;
            } else {
                const double ax = draw(), ex = draw(), ay = draw(), ey = draw();
                const double lx = ex - ax + (ex < ax ? 1.0 : 0.0);
                const double ly = ey - ay + (ey < ay ? 1.0 : 0.0);
                double count = 0;
                for (const auto& q : pts) {
                    const double ux = q[0] - ax + (q[0] < ax ? 1.0 : 0.0);
                    const double uy = q[1] - ay + (q[1] < ay ? 1.0 : 0.0);
                    if (ux < lx && uy < ly) count += 1;
                }
                const double d = count - n * lx * ly;
                v = d * d;
            }
            bm.sum += v;
            bm.sum2 += static_cast<long double>(v) * v;
        }
        part[bi] = bm;
    });
    long double sum = 0.0L, sum2 = 0.0L;
    for (const auto& bm : part) {
        sum += bm.sum;
        sum2 += bm.sum2;
    }
    const long double cnt = static_cast<long double>(samples);
    const long double mean = sum / cnt;
    long double var = (sum2 - cnt * mean * mean) / (cnt - 1.0L);
    if (var < 0.0L) var = 0.0L;
    McEstimate e;
    e.mean = static_cast<double>(mean);
    e.stderr_ = static_cast<double>(std::sqrt(static_cast<double>(var / cnt)));
    e.samples = samples;
    e.seed = seed;
    return e;
}

// Attaches an oracle estimate, flagging disagreement beyond 4 standard errors.
inline DiscrepancyReport attach_mc(DiscrepancyReport rep, const McEstimate& e) {
    rep.mc = e;
    rep.mc_flagged = std::abs(rep.value * rep.value - e.mean) > 4.0 * e.stderr_;
    return rep;
}

}  // namespace golden
