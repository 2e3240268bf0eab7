#pragma once

#include <golden/arith.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

enum class Backend { exact, floating };
enum class Family { fibonacci, modified, modified_prime, rotated_grid };

struct ExactPoint {
    GoldenRational x;
    GoldenRational y;
};

struct SetMeta {
    Family family = Family::fibonacci;
    long m = 0;       // lattice order; 0 for the rotated grid
    double R = 0.0;   // grid window size; 0 for the lattice families
    bool star = false;
    bool sym = false;
    Backend backend = Backend::exact;
};

// Ordered point list in the unit square.  The float view is always
// populated; the exact view only when backend == exact.
struct PointSet {
    SetMeta meta;
    std::vector<std::array<double, 2>> pts;
    std::vector<ExactPoint> exact;

    std::size_t size() const { return pts.size(); }
    bool has_exact() const { return meta.backend == Backend::exact; }
};

namespace detail {
// Memory guard: F_30 = 832040 points is the largest set the builders emit.
inline constexpr long kMaxOrder = 30;
inline constexpr double kMaxGridR = 1024.0;

inline void check_order(long m, long min_m) {
    if (m < min_m)
        throw std::domain_error("lattice order must be >= " + std::to_string(min_m));
    if (m > kMaxOrder)
        throw std::domain_error("lattice order capped at " + std::to_string(kMaxOrder));
}
}  // namespace detail

// pi(k) = k*F_{m-2} mod F_m, extended F_m-periodically to all k >= 0.
inline long long perm_pi(long m, long long k) {
    detail::check_order(m, 3);
    const BigInt fm = fib(m);
    const BigInt r = (BigInt(k) % fm) * fib(m - 2) % fm;
    return r.convert_to<long long>();
}

// Gap s(i): phi when pi(i) < pi(i+1), else 1.
inline GoldenInt gap_s(long m, long long i) {
    return perm_pi(m, i) < perm_pi(m, i + 1) ? GoldenInt(1, 0) : GoldenInt(0, 1);
}

// Exact gap structure of order m: pi as an array, gaps s, prefix sums x
// with x[F_m] = L = phi^{m-1}.
struct GapSequence {
    long m = 0;
    long long count = 0;            // F_m
    std::vector<long long> pi;      // pi[k] for k in [0, F_m)
    std::vector<GoldenInt> s;       // F_m gaps, each phi or 1
    std::vector<GoldenInt> x;       // F_m + 1 prefix sums
    GoldenInt L;

    // Sum of len consecutive gaps starting at r, indices taken mod F_m.
    GoldenInt window_sum(long long r, long long len) const {
        r %= count;
        GoldenInt total(0, 0);
        long long hi = r + len;
        while (hi > count) {
            total = total + L;
            hi -= count;
        }
        return total + x[hi] - x[r];
    }
};

inline GapSequence gap_sequence(long m) {
    detail::check_order(m, 3);
    GapSequence g;
    g.m = m;
    g.count = fib(m).convert_to<long long>();
    const long long step = fib(m - 2).convert_to<long long>();
    g.pi.resize(g.count);
    long long p = 0;
    for (long long k = 0; k < g.count; ++k) {
        g.pi[k] = p;
        p += step;
        if (p >= g.count) p -= g.count;
    }
    g.s.reserve(g.count);
    g.x.reserve(g.count + 1);
    g.x.emplace_back(0, 0);
    for (long long i = 0; i < g.count; ++i) {
        const long long next = i + 1 < g.count ? g.pi[i + 1] : 0;
        g.s.push_back(g.pi[i] < next ? GoldenInt(1, 0) : GoldenInt(0, 1));
        g.x.push_back(g.x.back() + g.s.back());
    }
    g.L = g.x.back();
    return g;
}

inline GoldenInt prefix_x(long m, long long k) {
    const GapSequence g = gap_sequence(m);
    if (k < 0 || k > g.count) throw std::domain_error("prefix_x: index out of range");
    return g.x[k];
}

// F_m points (k/F_m, pi(k)/F_m), exact backend.
inline PointSet build_fibonacci(long m) {
    detail::check_order(m, 3);
    const GapSequence g = gap_sequence(m);
    PointSet out;
    out.meta.family = Family::fibonacci;
    out.meta.m = m;
    out.meta.backend = Backend::exact;
    const GoldenInt den = GoldenInt::of_int(g.count);
    const double fd = static_cast<double>(g.count);
    out.pts.reserve(g.count);
    out.exact.reserve(g.count);
    for (long long k = 0; k < g.count; ++k) {
        out.exact.push_back({GoldenRational(GoldenInt::of_int(k), den),
                             GoldenRational(GoldenInt::of_int(g.pi[k]), den)});
        out.pts.push_back({static_cast<double>(k) / fd,
                           static_cast<double>(g.pi[k]) / fd});
    }
    return out;
}

// F_m points (x_k/L, x_{pi(k)}/L), exact backend, L = phi^{m-1}.
inline PointSet build_modified(long m) {
    detail::check_order(m, 3);
    const GapSequence g = gap_sequence(m);
    PointSet out;
    out.meta.family = Family::modified;
    out.meta.m = m;
    out.meta.backend = Backend::exact;
    out.pts.reserve(g.count);
    out.exact.reserve(g.count);
    const double ld = g.L.to_double();
    for (long long k = 0; k < g.count; ++k) {
        GoldenRational ex(g.x[k], g.L);
        GoldenRational ey(g.x[g.pi[k]], g.L);
        out.pts.push_back({g.x[k].to_double() / ld, g.x[g.pi[k]].to_double() / ld});
        out.exact.push_back({std::move(ex), std::move(ey)});
    }
    return out;
}

// Tuned boundary gap x replacing s(0) and s(F_m-1): sized so the largest
// exterior boxes match the interior box area.  The value solves a quadratic
// whose radical leaves Q(phi), hence the float backend.
inline double modified_prime_gap(long m) {
    detail::check_order(m, 5);
    const auto p = [](long n) { return phi_power(n).to_double(); };
    if (m % 2 == 1) {
        const double base = p(m - 1) - p(2);
        return 2.0 * p(m + 1) / (base + std::sqrt(base * base + 8.0 * p(m + 1)));
    }
    const double base = p(m - 2) + p(-1);
    return 0.5 * (-base + std::sqrt(base * base + 4.0 * (p(m) + p(1))));
}

// F_m points rebuilt from the tuned gaps, float backend,
// L = phi^{m-1} + 2x - phi^2.
inline PointSet build_modified_prime(long m) {
    detail::check_order(m, 5);
    const GapSequence g = gap_sequence(m);
    const double x = modified_prime_gap(m);
    std::vector<double> gaps(g.count);
    for (long long i = 0; i < g.count; ++i) gaps[i] = g.s[i].to_double();
    gaps.front() = x;
    gaps.back() = x;
    std::vector<double> prefix(g.count + 1, 0.0);
    for (long long i = 0; i < g.count; ++i) prefix[i + 1] = prefix[i] + gaps[i];
    const double L = prefix.back();
    PointSet out;
    out.meta.family = Family::modified_prime;
    out.meta.m = m;
    out.meta.backend = Backend::floating;
    out.pts.reserve(g.count);
    for (long long k = 0; k < g.count; ++k) {
        out.pts.push_back({prefix[k] / L, prefix[g.pi[k]] / L});
    }
    return out;
}

// P followed by its mirror {(x, 1-y)}.
inline PointSet symmetrize(const PointSet& p) {
    PointSet out = p;
    out.meta.sym = true;
    out.pts.reserve(2 * p.pts.size());
    for (const auto& q : p.pts) out.pts.push_back({q[0], 1.0 - q[1]});
    if (p.has_exact()) {
        const GoldenRational one = GoldenRational::of_int(1);
        out.exact.reserve(2 * p.exact.size());
        for (const auto& q : p.exact) out.exact.push_back({q.x, one - q.y});
    }
    return out;
}

// Drops every point equal to the origin.
inline PointSet remove_origin(const PointSet& p) {
    PointSet out;
    out.meta = p.meta;
    out.meta.star = true;
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
        const bool at_origin = p.pts[i][0] == 0.0 && p.pts[i][1] == 0.0;
        if (at_origin) continue;
        out.pts.push_back(p.pts[i]);
        if (p.has_exact()) out.exact.push_back(p.exact[i]);
    }
    return out;
}

// Grid Z^2 rotated by M = (1/sqrt(phi^2+1)) [[phi, 1], [-1, phi]],
// clipped to [0,R]^2 and scaled into the unit square.  Membership in the
// closed window uses tolerance 1e-12; output is sorted by (x, y).
inline PointSet build_rotated_grid(double R) {
    if (!(R >= 2.0)) throw std::domain_error("grid window must have R >= 2");
    if (R > detail::kMaxGridR) throw std::domain_error("grid window capped at 1024");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double scale = std::sqrt(phi * phi + 1.0);
    const double tol = 1e-12;
    const long B = static_cast<long>(std::ceil(R * std::sqrt(2.0))) + 2;
    PointSet out;
    out.meta.family = Family::rotated_grid;
    out.meta.R = R;
    out.meta.backend = Backend::floating;
    for (long z1 = -B; z1 <= B; ++z1) {
        for (long z2 = -B; z2 <= B; ++z2) {
            double px = (phi * z1 + z2) / scale;
            double py = (-z1 + phi * z2) / scale;
            if (px < -tol || px > R + tol || py < -tol || py > R + tol) continue;
            px = std::clamp(px, 0.0, R);
            py = std::clamp(py, 0.0, R);
            out.pts.push_back({px / R, py / R});
        }
    }
    std::sort(out.pts.begin(), out.pts.end());
    return out;
}

}  // namespace golden
