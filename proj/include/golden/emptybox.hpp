#pragma once

#include <golden/arith.hpp>
#include <golden/lattice.hpp>
#include <golden/parallel.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

enum class BoxClass { interior, exterior, periodic_wrap };

struct ExactBox {
    GoldenRational x_lo, x_hi, y_lo, y_hi, area;
};

// Maximal empty axis-parallel box.  Periodic boxes may wrap: lo == hi on an
// axis encodes the full-length interval starting and ending at that value;
// lo > hi encodes an interval crossing the seam.
struct EmptyBox {
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    double area = 0;
    BoxClass cls = BoxClass::exterior;
    long long span_x = -1, span_y = -1;
    std::optional<ExactBox> exact;
};

struct DispersionResult {
    Backend backend = Backend::floating;
    double value = 0;
    std::optional<GoldenRational> exact_value;
    EmptyBox witness;
    std::vector<EmptyBox> boxes;  // full maximal list when requested
};

namespace ebdetail {

// Geometry backends.  cmp is the geometric comparison (tolerant for floats),
// cmp_area the raw three-way used to pick maxima.
struct FloatGeom {
    using Coord = double;
    static constexpr double tol = 1e-12;
    static int cmp(double a, double b) {
        if (a < b - tol) return -1;
        if (a > b + tol) return 1;
        return 0;
    }
    static int cmp_area(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }
    static double sub(double a, double b) { return a - b; }
    static double add(double a, double b) { return a + b; }
    static double mul(double a, double b) { return a * b; }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double dbl(double a) { return a; }
    static std::vector<double> distinct(std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::vector<double> out;
        for (double x : v)
            if (out.empty() || x - out.back() > tol) out.push_back(x);
        return out;
    }
    static int rank(const std::vector<double>& reps, double v) {
        auto it = std::lower_bound(reps.begin(), reps.end(), v - tol);
        return static_cast<int>(it - reps.begin());
    }
};

struct ExactGeom {
    using Coord = GoldenRational;
    static int cmp(const Coord& a, const Coord& b) { return a.cmp(b); }
    static int cmp_area(const Coord& a, const Coord& b) { return a.cmp(b); }
    static Coord sub(const Coord& a, const Coord& b) { return a - b; }
    static Coord add(const Coord& a, const Coord& b) { return a + b; }
    static Coord mul(const Coord& a, const Coord& b) { return a * b; }
    static Coord zero() { return GoldenRational::of_int(0); }
    static Coord one() { return GoldenRational::of_int(1); }
    static double dbl(const Coord& a) { return a.to_double(); }
    static std::vector<Coord> distinct(std::vector<Coord> v) {
        std::sort(v.begin(), v.end(),
                  [](const Coord& a, const Coord& b) { return a.cmp(b) < 0; });
        v.erase(std::unique(v.begin(), v.end(),
                            [](const Coord& a, const Coord& b) { return a.cmp(b) == 0; }),
                v.end());
        return v;
    }
    static int rank(const std::vector<Coord>& reps, const Coord& v) {
        int lo = 0, hi = static_cast<int>(reps.size()) - 1;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (reps[mid].cmp(v) < 0)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }
};

// Distinct sorted coordinate values plus per-column occupied y-ranks.
template <typename G>
struct Ranks {
    std::vector<typename G::Coord> xs, ys;
    std::vector<std::vector<int>> col;
    int nx() const { return static_cast<int>(xs.size()); }
    int ny() const { return static_cast<int>(ys.size()); }
};

template <typename G>
Ranks<G> make_ranks(const std::vector<typename G::Coord>& px,
                    const std::vector<typename G::Coord>& py, bool unit_edges) {
    Ranks<G> r;
    auto xs = px;
    auto ys = py;
    if (unit_edges) {
        xs.push_back(G::zero());
        xs.push_back(G::one());
        ys.push_back(G::zero());
        ys.push_back(G::one());
    }
    r.xs = G::distinct(std::move(xs));
    r.ys = G::distinct(std::move(ys));
    r.col.assign(r.xs.size(), {});
    for (std::size_t i = 0; i < px.size(); ++i) {
        r.col[G::rank(r.xs, px[i])].push_back(G::rank(r.ys, py[i]));
    }
    for (auto& c : r.col) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    return r;
}

struct RawBox {
    int il, ir, ib, it;
    long long sx = -1, sy = -1;
};

inline bool col_between(const std::vector<int>& c, int a, int b) {
    auto it = std::upper_bound(c.begin(), c.end(), a);
    return it != c.end() && *it < b;
}

// Is some rank of c strictly inside the open cyclic interval (a, b)?
// a == b means the full circle minus the single rank a.
inline bool col_cyclic(const std::vector<int>& c, int a, int b) {
    if (c.empty()) return false;
    if (a < b) return col_between(c, a, b);
    if (a > b) return c.back() > a || c.front() < b;
    return c.size() > 1 || c.front() != a;
}

// Standard sweep: left edge index times incremental right edge, gaps walked
// over an occupancy array.  Bottom/top maximality is inherent in the gap
// structure; left/right anchors are checked against the edge columns.
template <typename G>
std::vector<RawBox> sweep_standard(const Ranks<G>& r) {
    const int K = r.nx(), Ky = r.ny();
    std::vector<std::vector<RawBox>> per(K);
    parallel_for(static_cast<std::size_t>(K) - 1, [&](std::size_t iz) {
        const int i = static_cast<int>(iz);
        std::vector<char> cnt(Ky, 0);
        auto& out = per[i];
        for (int j = i + 1; j < K; ++j) {
            if (j - 1 > i)
                for (int yr : r.col[j - 1]) cnt[yr] = 1;
            int prev = 0;
            auto emit = [&](int a, int b) {
                if (a >= b) return;
                if (i > 0 && !col_between(r.col[i], a, b)) return;
                if (j < K - 1 && !col_between(r.col[j], a, b)) return;
                out.push_back({i, j, a, b});
            };
            for (int yr = 1; yr < Ky - 1; ++yr) {
                if (cnt[yr]) {
                    emit(prev, yr);
                    prev = yr;
                }
            }
            emit(prev, Ky - 1);
        }
    });
    std::vector<RawBox> flat;
    for (auto& v : per) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

// Torus sweep over ordered column pairs.  The right edge advances cyclically
// from the left column; the pair (i, i) is the full strip minus that column.
// Every side of a periodic box must sit on a point, so strips with no
// interior point yield nothing.
template <typename G>
std::vector<RawBox> sweep_torus(const Ranks<G>& r) {
    const int nx = r.nx(), ny = r.ny();
    std::vector<std::vector<RawBox>> per(nx);
    parallel_for(static_cast<std::size_t>(nx), [&](std::size_t iz) {
        const int xi = static_cast<int>(iz);
        std::vector<char> cnt(ny, 0);
        std::vector<int> occ;
        auto& out = per[xi];
        for (int t = 1; t <= nx; ++t) {
            const int xj = (xi + t) % nx;
            if (t > 1)
                for (int yr : r.col[(xi + t - 1) % nx]) cnt[yr] = 1;
            occ.clear();
            for (int yr = 0; yr < ny; ++yr)
                if (cnt[yr]) occ.push_back(yr);
            if (occ.empty()) continue;
            auto emit = [&](int a, int b) {
                if (!col_cyclic(r.col[xi], a, b)) return;
                if (xj != xi && !col_cyclic(r.col[xj], a, b)) return;
                const long long sy = (a == b) ? ny : ((b - a) % ny + ny) % ny;
                out.push_back({xi, xj, a, b, t, sy});
            };
            if (occ.size() == 1) {
                emit(occ[0], occ[0]);
            } else {
                for (std::size_t s = 0; s + 1 < occ.size(); ++s) emit(occ[s], occ[s + 1]);
                emit(occ.back(), occ.front());
            }
        }
    });
    std::vector<RawBox> flat;
    for (auto& v : per) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

template <typename G>
typename G::Coord cyclic_span(const std::vector<typename G::Coord>& vals, int lo,
                              int hi) {
    if (lo == hi) return G::one();
    if (lo < hi) return G::sub(vals[hi], vals[lo]);
    return G::add(G::sub(G::one(), vals[lo]), vals[hi]);
}

template <typename G>
EmptyBox finish_box(const Ranks<G>& r, const RawBox& rb, bool torus,
                    bool exact_payload) {
    using Coord = typename G::Coord;
    const Coord w = torus ? cyclic_span<G>(r.xs, rb.il, rb.ir)
                          : G::sub(r.xs[rb.ir], r.xs[rb.il]);
    const Coord h = torus ? cyclic_span<G>(r.ys, rb.ib, rb.it)
                          : G::sub(r.ys[rb.it], r.ys[rb.ib]);
    const Coord area = G::mul(w, h);
    EmptyBox b;
    b.x_lo = G::dbl(r.xs[rb.il]);
    b.x_hi = G::dbl(r.xs[rb.ir]);
    b.y_lo = G::dbl(r.ys[rb.ib]);
    b.y_hi = G::dbl(r.ys[rb.it]);
    b.area = G::dbl(area);
    if (torus) {
        b.cls = BoxClass::periodic_wrap;
        b.span_x = rb.sx;
        b.span_y = rb.sy;
    } else {
        const bool edge = rb.il == 0 || rb.ir == r.nx() - 1 || rb.ib == 0 ||
                          rb.it == r.ny() - 1;
        b.cls = edge ? BoxClass::exterior : BoxClass::interior;
    }
    if (exact_payload) {
        if constexpr (std::is_same_v<G, ExactGeom>) {
            b.exact = ExactBox{r.xs[rb.il], r.xs[rb.ir], r.ys[rb.ib], r.ys[rb.it], area};
        }
    }
    return b;
}

template <typename G>
std::vector<EmptyBox> finish_all(const Ranks<G>& r, const std::vector<RawBox>& raw,
                                 bool torus, bool exact_payload) {
    std::vector<EmptyBox> out;
    out.reserve(raw.size());
    for (const auto& rb : raw) out.push_back(finish_box<G>(r, rb, torus, exact_payload));
    return out;
}

inline void split_coords(const PointSet& p, std::vector<double>& px,
                         std::vector<double>& py) {
    px.reserve(p.pts.size());
    py.reserve(p.pts.size());
    for (const auto& q : p.pts) {
        px.push_back(q[0]);
        py.push_back(q[1]);
    }
}

inline void split_coords_exact(const PointSet& p, std::vector<GoldenRational>& px,
                               std::vector<GoldenRational>& py) {
    px.reserve(p.exact.size());
    py.reserve(p.exact.size());
    for (const auto& q : p.exact) {
        px.push_back(q.x);
        py.push_back(q.y);
    }
}

// Torus geometry identifies 1 with 0.
template <typename G>
void fold_unit(std::vector<typename G::Coord>& v) {
    for (auto& c : v)
        if (G::cmp(c, G::one()) == 0) c = G::zero();
}

}  // namespace ebdetail

// Complete list of maximal empty open boxes amidst P, each side on a point
// or on the square boundary.
inline std::vector<EmptyBox> enumerate_maximal_boxes(const PointSet& p) {
    using namespace ebdetail;
    if (p.has_exact()) {
        std::vector<GoldenRational> px, py;
        split_coords_exact(p, px, py);
        const auto r = make_ranks<ExactGeom>(px, py, true);
        return finish_all<ExactGeom>(r, sweep_standard<ExactGeom>(r), false, true);
    }
    std::vector<double> px, py;
    split_coords(p, px, py);
    const auto r = make_ranks<FloatGeom>(px, py, true);
    return finish_all<FloatGeom>(r, sweep_standard<FloatGeom>(r), false, false);
}

// Complete list of maximal empty periodic boxes, every side on a point.
// Degenerate sets leaving no anchorable side (one distinct column or row)
// report the full torus through a single wrap box of area 1.
inline std::vector<EmptyBox> enumerate_maximal_periodic_boxes(const PointSet& p) {
    using namespace ebdetail;
    if (p.size() == 0)
        throw std::domain_error("periodic boxes need at least one point");
    const auto degenerate = [&](double x, double y) {
        EmptyBox b;
        b.x_lo = b.x_hi = x;
        b.y_lo = b.y_hi = y;
        b.area = 1.0;
        b.cls = BoxClass::periodic_wrap;
        b.span_x = 1;
        b.span_y = 1;
        return std::vector<EmptyBox>{b};
    };
    std::vector<EmptyBox> out;
    if (p.has_exact()) {
        std::vector<GoldenRational> px, py;
        split_coords_exact(p, px, py);
        fold_unit<ExactGeom>(px);
        fold_unit<ExactGeom>(py);
        const auto r = make_ranks<ExactGeom>(px, py, false);
        if (r.nx() < 2 || r.ny() < 2)
            return degenerate(r.xs[0].to_double(), r.ys[0].to_double());
        out = finish_all<ExactGeom>(r, sweep_torus<ExactGeom>(r), true, true);
    } else {
        std::vector<double> px, py;
        split_coords(p, px, py);
        fold_unit<FloatGeom>(px);
        fold_unit<FloatGeom>(py);
        const auto r = make_ranks<FloatGeom>(px, py, false);
        if (r.nx() < 2 || r.ny() < 2) return degenerate(r.xs[0], r.ys[0]);
        out = finish_all<FloatGeom>(r, sweep_torus<FloatGeom>(r), true, false);
    }
    // Every returned box needs all four sides on points; aligned degenerate
    // configurations can leave nothing anchorable.
    if (out.empty())
        throw std::domain_error("no periodic box has every side on a point");
    return out;
}

namespace ebdetail {

inline DispersionResult pick_max(std::vector<EmptyBox> boxes, Backend backend,
                                 bool keep_boxes) {
    if (boxes.empty()) throw std::logic_error("empty maximal box list");
    DispersionResult res;
    res.backend = backend;
    const bool exact = backend == Backend::exact;
    int best = 0;
    for (int i = 1; i < static_cast<int>(boxes.size()); ++i) {
        int c;
        if (exact && boxes[i].exact && boxes[best].exact) {
            c = boxes[i].exact->area.cmp(boxes[best].exact->area);
            if (c == 0) {
                c = boxes[best].exact->x_lo.cmp(boxes[i].exact->x_lo);
                if (c == 0) c = boxes[best].exact->y_lo.cmp(boxes[i].exact->y_lo);
            }
        } else {
            c = boxes[i].area < boxes[best].area ? -1
                : boxes[i].area > boxes[best].area ? 1 : 0;
            if (c == 0) {
                c = boxes[best].x_lo < boxes[i].x_lo ? 1
                    : boxes[best].x_lo > boxes[i].x_lo ? -1 : 0;
                if (c == 0)
                    c = boxes[best].y_lo < boxes[i].y_lo ? 1
                        : boxes[best].y_lo > boxes[i].y_lo ? -1 : 0;
            }
        }
        if (c > 0) best = i;
    }
    res.witness = boxes[best];
    res.value = boxes[best].area;
    if (exact && boxes[best].exact) res.exact_value = boxes[best].exact->area;
    if (keep_boxes) res.boxes = std::move(boxes);
    return res;
}

}  // namespace ebdetail

// Supremum of empty-box areas; exact when the backend allows it.
inline DispersionResult dispersion(const PointSet& p, bool keep_boxes = false) {
    const Backend backend = p.has_exact() ? Backend::exact : Backend::floating;
    return ebdetail::pick_max(enumerate_maximal_boxes(p), backend, keep_boxes);
}

inline DispersionResult torus_dispersion(const PointSet& p, bool keep_boxes = false) {
    const Backend backend = p.has_exact() ? Backend::exact : Backend::floating;
    return ebdetail::pick_max(enumerate_maximal_periodic_boxes(p), backend,
                              keep_boxes);
}

struct OracleReport {
    bool ok = true;
    std::string detail;
};

namespace ebdetail {

inline bool same_box(const EmptyBox& a, const EmptyBox& b) {
    const double t = 1e-9;
    return std::abs(a.x_lo - b.x_lo) < t && std::abs(a.x_hi - b.x_hi) < t &&
           std::abs(a.y_lo - b.y_lo) < t && std::abs(a.y_hi - b.y_hi) < t;
}

inline std::string box_str(const EmptyBox& b) {
    return "(" + std::to_string(b.x_lo) + "," + std::to_string(b.x_hi) + ")x(" +
           std::to_string(b.y_lo) + "," + std::to_string(b.y_hi) + ")";
}

inline OracleReport compare_box_lists(std::vector<EmptyBox> got,
                                      std::vector<EmptyBox> want) {
    const auto by_bounds = [](const EmptyBox& a, const EmptyBox& b) {
        if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
        if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
        if (a.y_lo != b.y_lo) return a.y_lo < b.y_lo;
        return a.y_hi < b.y_hi;
    };
    std::sort(got.begin(), got.end(), by_bounds);
    std::sort(want.begin(), want.end(), by_bounds);
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : got)
            if (same_box(g, w)) found = true;
        if (!found) return {false, "missing box " + box_str(w)};
    }
    for (const auto& g : got) {
        bool found = false;
        for (const auto& w : want)
            if (same_box(g, w)) found = true;
        if (!found) return {false, "unexpected box " + box_str(g)};
    }
    if (got.size() != want.size())
        return {false, "box multiplicity differs: " + std::to_string(got.size()) +
                           " vs " + std::to_string(want.size())};
    return {};
}

}  // namespace ebdetail

// Independent brute-force referee for the standard enumerator: candidate
// bounds are tried directly as value 4-tuples, with no rank machinery.
inline OracleReport verify_box_oracle(const PointSet& p,
                                      const std::vector<EmptyBox>& claimed) {
    using ebdetail::FloatGeom;
    const double tol = FloatGeom::tol;
    std::vector<double> exv{0.0, 1.0}, eyv{0.0, 1.0};
    for (const auto& q : p.pts) {
        exv.push_back(q[0]);
        eyv.push_back(q[1]);
    }
    exv = FloatGeom::distinct(std::move(exv));
    eyv = FloatGeom::distinct(std::move(eyv));
    std::vector<EmptyBox> found;
    for (std::size_t il = 0; il < exv.size(); ++il) {
        for (std::size_t ir = il + 1; ir < exv.size(); ++ir) {
            for (std::size_t ib = 0; ib < eyv.size(); ++ib) {
                for (std::size_t it = ib + 1; it < eyv.size(); ++it) {
                    const double xl = exv[il], xr = exv[ir];
                    const double yb = eyv[ib], yt = eyv[it];
                    bool empty = true;
                    for (const auto& q : p.pts)
                        if (q[0] > xl + tol && q[0] < xr - tol && q[1] > yb + tol &&
                            q[1] < yt - tol)
                            empty = false;
                    if (!empty) continue;
                    const auto on = [&](double v, double e) {
                        return std::abs(v - e) <= tol;
                    };
                    bool okl = il == 0, okr = ir == exv.size() - 1;
                    bool okb = ib == 0, okt = it == eyv.size() - 1;
                    for (const auto& q : p.pts) {
                        const bool iny = q[1] > yb + tol && q[1] < yt - tol;
                        const bool inx = q[0] > xl + tol && q[0] < xr - tol;
                        if (iny && on(q[0], xl)) okl = true;
                        if (iny && on(q[0], xr)) okr = true;
                        if (inx && on(q[1], yb)) okb = true;
                        if (inx && on(q[1], yt)) okt = true;
                    }
                    if (!(okl && okr && okb && okt)) continue;
                    EmptyBox b;
                    b.x_lo = xl;
                    b.x_hi = xr;
                    b.y_lo = yb;
                    b.y_hi = yt;
                    b.area = (xr - xl) * (yt - yb);
                    found.push_back(b);
                }
            }
        }
    }
    OracleReport rep = ebdetail::compare_box_lists(claimed, found);
    if (!rep.ok) return rep;
    double max_claimed = 0, max_found = 0;
    for (const auto& b : claimed) max_claimed = std::max(max_claimed, b.area);
    for (const auto& b : found) max_found = std::max(max_found, b.area);
    if (std::abs(max_claimed - max_found) > 1e-9)
        return {false, "max area differs: " + std::to_string(max_claimed) + " vs " +
                           std::to_string(max_found)};
    return {};
}

// Brute-force referee for the periodic enumerator.
inline OracleReport verify_periodic_box_oracle(const PointSet& p,
                                               const std::vector<EmptyBox>& claimed) {
    using ebdetail::FloatGeom;
    const double tol = FloatGeom::tol;
    std::vector<double> xs, ys;
    for (const auto& q : p.pts) {
        xs.push_back(q[0] >= 1.0 - tol ? 0.0 : q[0]);
        ys.push_back(q[1] >= 1.0 - tol ? 0.0 : q[1]);
    }
    std::vector<double> exv = FloatGeom::distinct(xs), eyv = FloatGeom::distinct(ys);
    const auto in_cyc = [&](double v, double lo, double hi) {
        // strictly inside the open cyclic interval (lo, hi); lo == hi is the
        // full circle minus the value lo
        if (std::abs(lo - hi) <= tol) return std::abs(v - lo) > tol;
        if (lo < hi) return v > lo + tol && v < hi - tol;
        return v > lo + tol || v < hi - tol;
    };
    std::vector<EmptyBox> found;
    for (double xl : exv) {
        for (double xr : exv) {
            for (double yb : eyv) {
                for (double yt : eyv) {
                    bool empty = true;
                    for (std::size_t i = 0; i < xs.size(); ++i)
                        if (in_cyc(xs[i], xl, xr) && in_cyc(ys[i], yb, yt)) empty = false;
                    if (!empty) continue;
                    bool okl = false, okr = false, okb = false, okt = false;
                    for (std::size_t i = 0; i < xs.size(); ++i) {
                        const bool iny = in_cyc(ys[i], yb, yt);
                        const bool inx = in_cyc(xs[i], xl, xr);
                        if (iny && std::abs(xs[i] - xl) <= tol) okl = true;
                        if (iny && std::abs(xs[i] - xr) <= tol) okr = true;
                        if (inx && std::abs(ys[i] - yb) <= tol) okb = true;
                        if (inx && std::abs(ys[i] - yt) <= tol) okt = true;
                    }
                    if (!(okl && okr && okb && okt)) continue;
                    EmptyBox b;
                    b.x_lo = xl;
                    b.x_hi = xr;
                    b.y_lo = yb;
                    b.y_hi = yt;
                    const double w = std::abs(xl - xr) <= tol ? 1.0
                                     : xl < xr               ? xr - xl
                                                             : 1.0 - xl + xr;
                    const double h = std::abs(yb - yt) <= tol ? 1.0
                                     : yb < yt               ? yt - yb
                                                             : 1.0 - yb + yt;
                    b.area = w * h;
                    b.cls = BoxClass::periodic_wrap;
                    long long sx = 1, sy = 1;
                    for (double v : exv)
                        if (in_cyc(v, xl, xr)) ++sx;
                    for (double v : eyv)
                        if (in_cyc(v, yb, yt)) ++sy;
                    b.span_x = std::abs(xl - xr) <= tol ? static_cast<long long>(exv.size()) : sx;
                    b.span_y = std::abs(yb - yt) <= tol ? static_cast<long long>(eyv.size()) : sy;
                    found.push_back(b);
                }
            }
        }
    }
    OracleReport rep = ebdetail::compare_box_lists(claimed, found);
    if (!rep.ok) return rep;
    for (const auto& c : claimed) {
        for (const auto& f : found) {
            if (ebdetail::same_box(c, f)) {
                if (c.span_x != f.span_x || c.span_y != f.span_y)
                    return {false, "span mismatch at " + ebdetail::box_str(c)};
            }
        }
    }
    double max_claimed = 0, max_found = 0;
    for (const auto& b : claimed) max_claimed = std::max(max_claimed, b.area);
    for (const auto& b : found) max_found = std::max(max_found, b.area);
    if (std::abs(max_claimed - max_found) > 1e-9)
        return {false, "max area differs: " + std::to_string(max_claimed) + " vs " +
                           std::to_string(max_found)};
    return {};
}

// Interior/exterior audit of the modified lattice: interior boxes must all
// have one exact area and exterior boxes must be strictly smaller.  Below
// order 5 the partition is reported without being asserted.
struct Theorem1Report {
    long m = 0;
    bool asserted = false;
    long interior_count = 0;
    long exterior_count = 0;
    bool interior_all_equal = true;
    bool exterior_all_smaller = true;

    bool holds() const { return interior_all_equal && exterior_all_smaller; }
};

inline Theorem1Report classify_theorem1(const PointSet& p) {
    if (p.meta.family != Family::modified || !p.has_exact())
        throw std::domain_error("theorem audit needs the exact modified lattice");
    if (p.meta.m < 4) throw std::domain_error("theorem audit needs m >= 4");
    Theorem1Report rep;
    rep.m = p.meta.m;
    rep.asserted = p.meta.m >= 5;
    const GoldenInt L = phi_power(p.meta.m - 1);
    const GoldenRational target(phi_power(p.meta.m + 1), L * L);
    for (const auto& b : enumerate_maximal_boxes(p)) {
        const int c = b.exact->area.cmp(target);
        if (b.cls == BoxClass::interior) {
            ++rep.interior_count;
            if (c != 0) rep.interior_all_equal = false;
        } else {
            ++rep.exterior_count;
            if (c >= 0) rep.exterior_all_smaller = false;
        }
    }
    return rep;
}

}  // namespace golden
