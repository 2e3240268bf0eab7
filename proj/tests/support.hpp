#pragma once

#include <golden/arith.hpp>
#include <golden/lattice.hpp>

#include <cmath>
#include <cstdint>
#include <random>

// Identity checks shared by the unit tests and the acceptance runner.
// Each returns the number of violations found (0 = clean).

namespace checks {

// Seeded random float set with pairwise-separated coordinates, so the
// tolerance-based geometry never sees accidental ties.
inline golden::PointSet random_set(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto draw = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    golden::PointSet p;
    p.meta.backend = golden::Backend::floating;
    while (p.pts.size() < n) {
        const double x = draw(), y = draw();
        bool clear = true;
        for (const auto& q : p.pts)
            if (std::abs(q[0] - x) < 1e-9 || std::abs(q[1] - y) < 1e-9) clear = false;
        if (clear) p.pts.push_back({x, y});
    }
    return p;
}

// Sum of F_k consecutive gaps starting at r: phi^{k-1} + phi^{-1} when k is
// odd and pi(r) < F_{m-k}; phi^{k-1} - phi^{-1} when k is even and
// pi(r) >= F_m - F_{m-k}; plain phi^{k-1} otherwise.
inline long window_sum_violations(const golden::GapSequence& g) {
    long bad = 0;
    for (long k = 3; k <= g.m - 1; ++k) {
        const long long fk = golden::fib(k).convert_to<long long>();
        const long long fmk = golden::fib(g.m - k).convert_to<long long>();
        const golden::GoldenInt base = golden::phi_power(k - 1);
        const golden::GoldenInt inv = golden::phi_power(-1);
        for (long long r = 0; r < g.count; ++r) {
            golden::GoldenInt want = base;
            if (k % 2 == 1 && g.pi[r] < fmk) {
                want = base + inv;
            } else if (k % 2 == 0 && g.pi[r] >= g.count - fmk) {
                want = base - inv;
            }
            if (g.window_sum(r, fk) != want) ++bad;
        }
    }
    return bad;
}

// pi(r + F_k) - pi(r) = +-(F_m - F_{m-k}) in the two window-shift cases.
inline long shift_violations(const golden::GapSequence& g) {
    long bad = 0;
    for (long k = 3; k <= g.m - 1; ++k) {
        const long long fk = golden::fib(k).convert_to<long long>();
        const long long fmk = golden::fib(g.m - k).convert_to<long long>();
        for (long long r = 0; r < g.count; ++r) {
            const long long shifted = g.pi[(r + fk) % g.count];
            if (k % 2 == 1 && g.pi[r] < fmk) {
                if (shifted != g.pi[r] + g.count - fmk) ++bad;
            } else if (k % 2 == 0 && g.pi[r] >= g.count - fmk) {
                if (shifted != g.pi[r] - (g.count - fmk)) ++bad;
            }
        }
    }
    return bad;
}

// pi is an involution for even m; for odd m it reverses: pi(pi(k)) = F_m - k
// for k >= 1.
inline long pi_symmetry_violations(const golden::GapSequence& g) {
    long bad = 0;
    for (long long k = 0; k < g.count; ++k) {
        const long long twice = g.pi[g.pi[k]];
        if (g.m % 2 == 0) {
            if (twice != k) ++bad;
        } else {
            if (k == 0 ? twice != 0 : twice != g.count - k) ++bad;
        }
    }
    return bad;
}

// Exactly F_{m-2} gaps equal 1.
inline long gap_count_violations(const golden::GapSequence& g) {
    long long ones = 0;
    for (const auto& s : g.s)
        if (s == golden::GoldenInt(0, 1)) ++ones;
    return ones == golden::fib(g.m - 2).convert_to<long long>() ? 0 : 1;
}

// The three arithmetic identities behind the lemmas.
inline long identity_violations(long m_max) {
    long bad = 0;
    for (long m = 2; m <= m_max; ++m) {
        if (golden::phi_power(m) != golden::phi_power(1) * golden::phi_power(m - 1))
            ++bad;
    }
    for (long m = 3; m <= m_max; ++m) {
        const golden::BigInt lhs = golden::fib(m - 2) * golden::fib(m - 2) +
                                   golden::fib(m) * golden::fib(m) -
                                   3 * golden::fib(m) * golden::fib(m - 2);
        if (lhs != (m % 2 == 0 ? 1 : -1)) ++bad;
    }
    for (long m = 4; m <= m_max; ++m) {
        for (long k = 3; k <= m - 1; ++k) {
            const golden::BigInt lhs =
                golden::fib(k) * golden::fib(m - 2) - golden::fib(k - 2) * golden::fib(m);
            if (lhs != (k % 2 == 0 ? 1 : -1) * golden::fib(m - k)) ++bad;
        }
    }
    return bad;
}

}  // namespace checks
