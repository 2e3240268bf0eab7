#pragma once

#include <golden/discrepancy.hpp>
#include <golden/emptybox.hpp>
#include <golden/lattice.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace golden::io {

inline std::string fmt_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// Round-trips a value through a 12-significant-digit rendering so reports
// carry the same number in text and JSON form.
inline double sig12(double v) {
    return std::strtod(fmt_sig(v, 12).c_str(), nullptr);
}

// Fixed 5 decimals, ties away from zero.
inline std::string fmt_fixed5(double v) {
    const long long scaled = std::llround(v * 1e5);
    const long long a = scaled < 0 ? -scaled : scaled;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%lld.%05lld", scaled < 0 ? "-" : "", a / 100000,
                  a % 100000);
    return buf;
}

// Same rounding, but a value that IS a short decimal prints at its natural
// width ("1.44", "1"); inexact values keep all five places ("1.80340").
inline std::string fmt_table(double v) {
    std::string s = fmt_fixed5(v);
    const double grid = static_cast<double>(std::llround(v * 1e5)) / 1e5;
    if (std::abs(v - grid) > 1e-9) return s;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

inline std::string family_str(Family f) {
    switch (f) {
        case Family::fibonacci: return "fib";
        case Family::modified: return "mod";
        case Family::modified_prime: return "modprime";
        default: return "grid";
    }
}

inline std::string backend_str(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

inline std::string notion_str(Notion n) {
    switch (n) {
        case Notion::standard: return "standard";
        case Notion::extreme: return "extreme";
        default: return "periodic";
    }
}

inline std::string class_str(BoxClass c) {
    switch (c) {
        case BoxClass::interior: return "interior";
        case BoxClass::exterior: return "exterior";
        default: return "periodic_wrap";
    }
}

inline void write_csv(std::ostream& os, const PointSet& p) {
    os << "x,y\n";
    for (const auto& q : p.pts) os << fmt_sig(q[0], 17) << ',' << fmt_sig(q[1], 17) << '\n';
}

// Accepts the files write_csv produces; a leading header line is optional.
inline PointSet read_csv(std::istream& is) {
    PointSet p;
    p.meta.backend = Backend::floating;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double x = 0, y = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2) {
            if (first) {
                first = false;
                continue;
            }
            throw std::runtime_error("bad csv line: " + line);
        }
        first = false;
        p.pts.push_back({x, y});
    }
    return p;
}

inline nlohmann::ordered_json int_json(const BigInt& v) {
    if (v >= BigInt(-9007199254740992LL) && v <= BigInt(9007199254740992LL))
        return v.convert_to<long long>();
    return v.str();
}

inline nlohmann::ordered_json golden_int_json(const GoldenInt& g) {
    return {{"a", int_json(g.a)}, {"b", int_json(g.b)}};
}

inline nlohmann::ordered_json rational_json(const GoldenRational& r) {
    return {{"num", golden_int_json(r.num())}, {"den", golden_int_json(r.den())}};
}

inline nlohmann::ordered_json meta_json(const SetMeta& meta) {
    nlohmann::ordered_json j;
    j["family"] = family_str(meta.family);
    if (meta.family == Family::rotated_grid)
        j["R"] = meta.R;
    else
        j["m"] = meta.m;
    j["star"] = meta.star;
    j["sym"] = meta.sym;
    return j;
}

inline nlohmann::ordered_json point_set_json(const PointSet& p) {
    nlohmann::ordered_json j;
    j["backend"] = backend_str(p.meta.backend);
    j["meta"] = meta_json(p.meta);
    auto& pts = j["points"] = nlohmann::ordered_json::array();
    if (p.has_exact()) {
        for (const auto& q : p.exact)
            pts.push_back({{"x", rational_json(q.x)}, {"y", rational_json(q.y)}});
    } else {
        for (const auto& q : p.pts) pts.push_back({{"x", q[0]}, {"y", q[1]}});
    }
    return j;
}

inline nlohmann::ordered_json box_json(const EmptyBox& b) {
    nlohmann::ordered_json j;
    j["x_lo"] = sig12(b.x_lo);
    j["x_hi"] = sig12(b.x_hi);
    j["y_lo"] = sig12(b.y_lo);
    j["y_hi"] = sig12(b.y_hi);
    j["area"] = sig12(b.area);
    j["class"] = class_str(b.cls);
    if (b.span_x >= 0) j["span"] = {b.span_x, b.span_y};
    if (b.exact) {
        j["exact"] = {{"x_lo", rational_json(b.exact->x_lo)},
                      {"x_hi", rational_json(b.exact->x_hi)},
                      {"y_lo", rational_json(b.exact->y_lo)},
                      {"y_hi", rational_json(b.exact->y_hi)},
                      {"area", rational_json(b.exact->area)}};
    }
    return j;
}

inline nlohmann::ordered_json dispersion_json(const DispersionResult& r, std::size_t n,
                                              bool include_boxes) {
    nlohmann::ordered_json j;
    j["backend"] = backend_str(r.backend);
    j["n"] = n;
    j["value"] = sig12(r.value);
    j["n_times_value"] = sig12(static_cast<double>(n) * r.value);
    if (r.exact_value) j["exact_value"] = rational_json(*r.exact_value);
    j["witness"] = box_json(r.witness);
    if (include_boxes) {
        auto& arr = j["boxes"] = nlohmann::ordered_json::array();
        for (const auto& b : r.boxes) arr.push_back(box_json(b));
    }
    return j;
}

inline nlohmann::ordered_json discrepancy_json(const DiscrepancyReport& r) {
    nlohmann::ordered_json j;
    j["notion"] = notion_str(r.notion);
    j["value"] = r.value;
    j["squared"] = r.value * r.value;
    if (r.mc) {
        j["mc"] = {{"mean", r.mc->mean},
                   {"stderr", r.mc->stderr_},
                   {"samples", r.mc->samples},
                   {"seed", r.mc->seed}};
        j["mc_flagged"] = r.mc_flagged;
    }
    return j;
}

namespace svgdetail {

inline double sx(double u) { return 20.0 + 560.0 * u; }
inline double sy(double v) { return 580.0 - 560.0 * v; }

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// A torus box may wrap; it then covers one segment at each end of the axis.
inline std::vector<std::pair<double, double>> segments(double lo, double hi) {
    if (lo < hi) return {{lo, hi}};
    if (lo == hi) return {{0.0, 1.0}};
    return {{lo, 1.0}, {0.0, hi}};
}

}  // namespace svgdetail

inline void write_svg(std::ostream& os, const PointSet& p,
                      const std::vector<EmptyBox>* boxes = nullptr) {
    using namespace svgdetail;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "<rect x=\"20\" y=\"20\" width=\"560\" height=\"560\" fill=\"white\" "
          "stroke=\"black\" stroke-width=\"1\"/>\n";
    if (boxes) {
        for (const auto& b : *boxes) {
            const bool interior = b.cls == BoxClass::interior;
            const std::string style =
                interior ? "fill=\"#c8c8c8\" fill-opacity=\"0.6\" stroke=\"none\""
                         : "fill=\"none\" stroke=\"#777777\" stroke-width=\"1\"";
            for (const auto& [xa, xb] : segments(b.x_lo, b.x_hi))
                for (const auto& [ya, yb] : segments(b.y_lo, b.y_hi)) {
                    os << "<rect x=\"" << num(sx(xa)) << "\" y=\"" << num(sy(yb))
                       << "\" width=\"" << num(560.0 * (xb - xa)) << "\" height=\""
                       << num(560.0 * (yb - ya)) << "\" " << style << "><title>area="
                       << fmt_sig(b.area, 12) << "</title></rect>\n";
                }
        }
    }
    for (const auto& q : p.pts)
        os << "<circle cx=\"" << num(sx(q[0])) << "\" cy=\"" << num(sy(q[1]))
           << "\" r=\"3\" fill=\"#1a4fa0\"/>\n";
    os << "</svg>\n";
}

}  // namespace golden::io
