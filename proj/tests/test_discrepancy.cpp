#include <catch2/catch_amalgamated.hpp>

#include <golden/discrepancy.hpp>
#include <golden/lattice.hpp>

#include <cmath>
#include <stdexcept>

#include "support.hpp"

using namespace golden;

namespace {

PointSet from_points(std::vector<std::array<double, 2>> pts) {
    PointSet p;
    p.meta.backend = Backend::floating;
    p.pts = std::move(pts);
    return p;
}

PointSet shifted(const PointSet& p, double dx, double dy) {
    PointSet q = p;
    for (auto& pt : q.pts) {
        pt[0] = std::fmod(pt[0] + dx, 1.0);
        pt[1] = std::fmod(pt[1] + dy, 1.0);
    }
    return q;
}

PointSet swapped(const PointSet& p) {
    PointSet q = p;
    for (auto& pt : q.pts) std::swap(pt[0], pt[1]);
    return q;
}

PointSet doubled(const PointSet& p) {
    PointSet q = p;
    q.pts.insert(q.pts.end(), p.pts.begin(), p.pts.end());
    return q;
}

}  // namespace

TEST_CASE("single centered point, all three notions") {
    const auto p = from_points({{0.5, 0.5}});
    CHECK(l2_standard(p).value == Catch::Approx(0.282597083).margin(1e-8));
    CHECK(l2_extreme(p).value == Catch::Approx(0.195433990).margin(1e-8));
    CHECK(l2_periodic(p).value == Catch::Approx(0.372677996).margin(1e-8));
}

TEST_CASE("empty set has zero discrepancy under every notion") {
    const PointSet p = from_points({});
    CHECK(l2_standard(p).value == 0.0);
    CHECK(l2_extreme(p).value == 0.0);
    CHECK(l2_periodic(p).value == 0.0);
}

TEST_CASE("order-6 lattice columns, all six published-style values") {
    const auto fib = build_fibonacci(6);
    const auto mod = build_modified(6);
    CHECK(l2_extreme(fib).value == Catch::Approx(0.23199).margin(1.5e-5));
    CHECK(l2_extreme(mod).value == Catch::Approx(0.22865).margin(1.5e-5));
    CHECK(l2_standard(fib).value == Catch::Approx(0.89146).margin(1.5e-5));
    CHECK(l2_standard(mod).value == Catch::Approx(0.77149).margin(1.5e-5));
    CHECK(l2_standard(symmetrize(fib)).value == Catch::Approx(0.74419).margin(1.5e-5));
    CHECK(l2_standard(symmetrize(mod)).value == Catch::Approx(0.60696).margin(1.5e-5));
}

TEST_CASE("spot values at higher order") {
    CHECK(l2_extreme(build_modified(10)).value == Catch::Approx(0.28737).margin(1.5e-5));
    CHECK(l2_extreme(build_fibonacci(9)).value == Catch::Approx(0.27608).margin(1.5e-5));
    CHECK(l2_standard(build_fibonacci(9)).value == Catch::Approx(0.87375).margin(1.5e-5));
}

TEST_CASE("generic selector matches the per-notion entry points") {
    const auto p = build_modified(7);
    CHECK(l2_discrepancy(p, Notion::standard).value == l2_standard(p).value);
    CHECK(l2_discrepancy(p, Notion::extreme).value == l2_extreme(p).value);
    CHECK(l2_discrepancy(p, Notion::periodic).value == l2_periodic(p).value);
}

TEST_CASE("periodic notion is translation invariant") {
    const auto p = checks::random_set(17, 99);
    const double base = l2_periodic(p).value;
    CHECK(l2_periodic(shifted(p, 0.3, 0.7)).value == Catch::Approx(base).margin(1e-10));
    CHECK(l2_periodic(shifted(p, 0.618, 0.05)).value == Catch::Approx(base).margin(1e-10));
}

TEST_CASE("coordinate swap leaves every notion unchanged") {
    const auto p = checks::random_set(15, 7);
    const auto q = swapped(p);
    CHECK(l2_standard(q).value == Catch::Approx(l2_standard(p).value).margin(1e-12));
    CHECK(l2_extreme(q).value == Catch::Approx(l2_extreme(p).value).margin(1e-12));
    CHECK(l2_periodic(q).value == Catch::Approx(l2_periodic(p).value).margin(1e-12));
}

TEST_CASE("duplicating every point doubles each value") {
    const auto p = checks::random_set(9, 31);
    const auto q = doubled(p);
    CHECK(l2_standard(q).value ==
          Catch::Approx(2.0 * l2_standard(p).value).epsilon(1e-12));
    CHECK(l2_extreme(q).value == Catch::Approx(2.0 * l2_extreme(p).value).epsilon(1e-12));
    CHECK(l2_periodic(q).value ==
          Catch::Approx(2.0 * l2_periodic(p).value).epsilon(1e-12));
}

TEST_CASE("monte carlo estimate is reproducible for a fixed seed") {
    const auto p = build_fibonacci(6);
    const auto a = mc_oracle(p, Notion::standard, 50000, 1234);
    const auto b = mc_oracle(p, Notion::standard, 50000, 1234);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    const auto c = mc_oracle(p, Notion::standard, 50000, 1235);
    CHECK(a.mean != c.mean);
}

TEST_CASE("monte carlo rejects an undersized sample budget") {
    const auto p = build_fibonacci(5);
    CHECK_THROWS_AS(mc_oracle(p, Notion::standard, 9999, 1), std::domain_error);
    CHECK_NOTHROW(mc_oracle(p, Notion::standard, 10000, 1));
}

TEST_CASE("closed forms agree with the sampling oracle") {
    const auto sets = {build_fibonacci(5), build_modified(6)};
    int notion_idx = 0;
    for (const auto notion : {Notion::standard, Notion::extreme, Notion::periodic}) {
        for (const auto& p : sets) {
            const auto rep = attach_mc(l2_discrepancy(p, notion),
                                       mc_oracle(p, notion, 200000, 42 + notion_idx));
            INFO("notion " << notion_idx << " n " << p.size());
            CHECK_FALSE(rep.mc_flagged);
            CHECK(std::abs(rep.value * rep.value - rep.mc->mean) <=
                  4.0 * rep.mc->stderr_);
        }
        ++notion_idx;
    }
}

TEST_CASE("oracle flag fires on a corrupted value") {
    const auto p = build_fibonacci(6);
    auto rep = l2_standard(p);
    const auto est = mc_oracle(p, Notion::standard, 100000, 7);
    rep.value += 0.5;
    CHECK(attach_mc(rep, est).mc_flagged);
}
