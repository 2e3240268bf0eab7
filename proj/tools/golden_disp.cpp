// Command-line front end: generates Fibonacci-type point sets, runs the
// empty-box dispersion enumerator and the L2 discrepancy closed forms,
// reproduces the survey tables, and exports CSV/JSON/SVG.

#include <CLI11.hpp>

#include <golden/discrepancy.hpp>
#include <golden/emptybox.hpp>
#include <golden/io.hpp>
#include <golden/lattice.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using namespace golden;

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct Options {
    std::string family = "mod";
    int m = 7;
    double R = 10.0;
    bool star = false;
    bool sym = false;
    std::string backend;  // empty: family default
    bool torus = false;
    bool boxes = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 12345;
    std::string out;
    std::string format;  // empty: command default
    std::string notion = "standard";
    std::string in;
    int m_min = -1;
    int m_max = -1;
};

Family parse_family(const std::string& s) {
    if (s == "fib") return Family::fibonacci;
    if (s == "mod") return Family::modified;
    if (s == "modprime") return Family::modified_prime;
    if (s == "grid") return Family::rotated_grid;
    throw CliError(2, "unknown family: " + s);
}

// Builds the requested set, applying variants in star-then-sym order.
PointSet build_set(const Options& o) {
    const Family fam = parse_family(o.family);
    const bool wants_exact = o.backend.empty()
                                 ? (fam == Family::fibonacci || fam == Family::modified)
                                 : o.backend == "exact";
    if (wants_exact && (fam == Family::modified_prime || fam == Family::rotated_grid))
        throw CliError(2, "family " + o.family + " supports only the float backend");
    PointSet p;
    try {
        switch (fam) {
            case Family::fibonacci: p = build_fibonacci(o.m); break;
            case Family::modified: p = build_modified(o.m); break;
            case Family::modified_prime: p = build_modified_prime(o.m); break;
            default: p = build_rotated_grid(o.R); break;
        }
        if (o.star) p = remove_origin(p);
        if (o.sym) p = symmetrize(p);
    } catch (const std::exception& e) {
        throw CliError(2, e.what());
    }
    if (!wants_exact && p.has_exact()) {
        p.exact.clear();
        p.meta.backend = Backend::floating;
    }
    return p;
}

// All validation runs before this, so a failed run never leaves a file.
void emit(const Options& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        if (!std::cout.good()) throw CliError(1, "write to stdout failed");
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw CliError(1, "cannot open " + o.out);
    f << body;
    f.flush();
    if (!f.good()) throw CliError(1, "write to " + o.out + " failed");
}

std::string pick_format(const Options& o, const std::string& def,
                        std::initializer_list<const char*> allowed) {
    const std::string fmt = o.format.empty() ? def : o.format;
    for (const char* a : allowed)
        if (fmt == a) return fmt;
    throw CliError(2, "format " + fmt + " not supported by this command");
}

int run_gen(const Options& o) {
    const std::string fmt = pick_format(o, "csv", {"csv", "json"});
    const PointSet p = build_set(o);
    std::ostringstream os;
    if (fmt == "csv")
        io::write_csv(os, p);
    else
        os << io::point_set_json(p).dump(2) << '\n';
    emit(o, os.str());
    return 0;
}

int run_disp(const Options& o) {
    const std::string fmt = pick_format(o, "text", {"text", "json"});
    const PointSet p = build_set(o);
    DispersionResult r;
    try {
        r = o.torus ? torus_dispersion(p, o.boxes) : dispersion(p, o.boxes);
    } catch (const std::exception& e) {
        throw CliError(2, e.what());
    }
    const double n = static_cast<double>(p.size());
    std::ostringstream os;
    if (fmt == "json") {
        auto j = io::dispersion_json(r, p.size(), o.boxes);
        j["torus"] = o.torus;
        os << j.dump(2) << '\n';
    } else {
        os << "family = " << o.family << '\n';
        if (p.meta.family == Family::rotated_grid)
            os << "R = " << io::fmt_sig(o.R, 12) << '\n';
        else
            os << "m = " << o.m << '\n';
        os << "star = " << (o.star ? 1 : 0) << '\n';
        os << "sym = " << (o.sym ? 1 : 0) << '\n';
        os << "backend = " << io::backend_str(r.backend) << '\n';
        os << "torus = " << (o.torus ? 1 : 0) << '\n';
        os << "n = " << p.size() << '\n';
        os << "disp = " << io::fmt_sig(r.value, 12) << '\n';
        os << "n*disp = " << io::fmt_sig(n * r.value, 12) << '\n';
        os << "n*disp(5dp) = " << io::fmt_table(n * r.value) << '\n';
        if (r.exact_value) os << "exact = " << r.exact_value->str() << '\n';
        const auto box_line = [&](const EmptyBox& b) {
            std::ostringstream bs;
            bs << '[' << io::fmt_sig(b.x_lo, 12) << ',' << io::fmt_sig(b.x_hi, 12)
               << "] x [" << io::fmt_sig(b.y_lo, 12) << ',' << io::fmt_sig(b.y_hi, 12)
               << "] area " << io::fmt_sig(b.area, 12) << " class "
               << io::class_str(b.cls);
            if (b.span_x >= 0) bs << " span " << b.span_x << ' ' << b.span_y;
            return bs.str();
        };
        os << "witness = " << box_line(r.witness) << '\n';
        if (o.boxes) {
            os << "boxes = " << r.boxes.size() << '\n';
            for (const auto& b : r.boxes) os << "box " << box_line(b) << '\n';
        }
    }
    emit(o, os.str());
    return 0;
}

Notion parse_notion(const std::string& s) {
    if (s == "standard") return Notion::standard;
    if (s == "extreme") return Notion::extreme;
    if (s == "periodic") return Notion::periodic;
    throw CliError(2, "unknown notion: " + s);
}

int run_disc(const Options& o) {
    const std::string fmt = pick_format(o, "text", {"text", "json"});
    const Notion notion = parse_notion(o.notion);
    const PointSet p = build_set(o);
    DiscrepancyReport rep = l2_discrepancy(p, notion);
    if (o.samples > 0) {
        try {
            rep = attach_mc(rep, mc_oracle(p, notion, o.samples, o.seed));
        } catch (const std::exception& e) {
            throw CliError(2, e.what());
        }
    }
    std::ostringstream os;
    if (fmt == "json") {
        os << io::discrepancy_json(rep).dump(2) << '\n';
    } else {
        os << "notion = " << io::notion_str(rep.notion) << '\n';
        os << "n = " << p.size() << '\n';
        os << "value = " << io::fmt_sig(rep.value, 12) << '\n';
        os << "squared = " << io::fmt_sig(rep.value * rep.value, 12) << '\n';
        if (rep.mc) {
            os << "mc_mean = " << io::fmt_sig(rep.mc->mean, 12) << '\n';
            os << "mc_stderr = " << io::fmt_sig(rep.mc->stderr_, 12) << '\n';
            os << "mc_samples = " << rep.mc->samples << '\n';
            os << "mc_seed = " << rep.mc->seed << '\n';
            os << "mc_flagged = " << (rep.mc_flagged ? 1 : 0) << '\n';
        }
    }
    emit(o, os.str());
    return 0;
}

// Paper-reported conjectural closed-form values for the tuned family beyond
// the range proven there; printed beside the enumerated value, never asserted.
const std::map<int, const char*> kConjecturedTuned = {
    {12, "1.83465"}, {15, "1.87970"}, {25, "1.89431"}, {30, "1.89442"}};

double scaled_disp(PointSet p) {
    p.exact.clear();
    p.meta.backend = Backend::floating;
    const double n = static_cast<double>(p.size());
    return n * dispersion(p).value;
}

int run_table1(const Options& o) {
    pick_format(o, "text", {"text"});
    const int lo = o.m_min < 0 ? 5 : o.m_min;
    const int hi = o.m_max < 0 ? 15 : o.m_max;
    if (lo < 5) throw CliError(2, "table1 needs m >= 5");
    if (hi > 16) throw CliError(2, "table1 enumerates up to m = 16");
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%3s %12s %12s %12s\n", "m", "fib*", "mod*",
                  "modprime*");
    os << line;
    for (int m = lo; m <= hi; ++m) {
        Options base;
        base.m = m;
        base.star = true;
        base.backend = "float";
        base.family = "fib";
        const double c1 = scaled_disp(build_set(base));
        base.family = "mod";
        const double c2 = scaled_disp(build_set(base));
        base.family = "modprime";
        const double c3 = scaled_disp(build_set(base));
        std::snprintf(line, sizeof line, "%3d %12s %12s %12s", m,
                      io::fmt_table(c1).c_str(), io::fmt_table(c2).c_str(),
                      io::fmt_table(c3).c_str());
        os << line;
        if (const auto it = kConjecturedTuned.find(m); it != kConjecturedTuned.end())
            os << " (conjectured-in-paper: " << it->second << ')';
        os << '\n';
    }
    emit(o, os.str());
    return 0;
}

int run_table3(const Options& o) {
    pick_format(o, "text", {"text"});
    const int lo = o.m_min < 0 ? 6 : o.m_min;
    const int hi = o.m_max < 0 ? 14 : o.m_max;
    if (lo < 3) throw CliError(2, "table3 needs m >= 3");
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%3s %10s %10s %10s %10s %10s %10s\n", "m",
                  "extr(fib)", "extr(mod)", "std(fib)", "std(mod)", "std(fib_s)",
                  "std(mod_s)");
    os << line;
    for (int m = lo; m <= hi; ++m) {
        PointSet fib, mod;
        try {
            fib = build_fibonacci(m);
            mod = build_modified(m);
        } catch (const std::exception& e) {
            throw CliError(2, e.what());
        }
        std::snprintf(line, sizeof line, "%3d %10s %10s %10s %10s %10s %10s\n", m,
                      io::fmt_fixed5(l2_extreme(fib).value).c_str(),
                      io::fmt_fixed5(l2_extreme(mod).value).c_str(),
                      io::fmt_fixed5(l2_standard(fib).value).c_str(),
                      io::fmt_fixed5(l2_standard(mod).value).c_str(),
                      io::fmt_fixed5(l2_standard(symmetrize(fib)).value).c_str(),
                      io::fmt_fixed5(l2_standard(symmetrize(mod)).value).c_str());
        os << line;
    }
    emit(o, os.str());
    return 0;
}

int run_svg(const Options& o, bool have_in, bool have_family) {
    pick_format(o, "svg", {"svg"});
    if (have_in && have_family)
        throw CliError(2, "svg takes either --in or --family, not both");
    PointSet p;
    if (have_in) {
        std::ifstream f(o.in);
        if (!f) throw CliError(1, "cannot open " + o.in);
        try {
            p = io::read_csv(f);
        } catch (const std::exception& e) {
            throw CliError(1, e.what());
        }
    } else {
        p = build_set(o);
    }
    std::ostringstream os;
    if (o.boxes && p.size() > 0) {
        DispersionResult r;
        try {
            r = o.torus ? torus_dispersion(p, true) : dispersion(p, true);
        } catch (const std::exception& e) {
            throw CliError(2, e.what());
        }
        io::write_svg(os, p, &r.boxes);
    } else {
        io::write_svg(os, p, nullptr);
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Fibonacci-type point sets: dispersion and L2 discrepancy toolkit"};
    app.require_subcommand(1);

    const auto add_family = [&](CLI::App* c) {
        c->add_option("--family", o.family, "fib | mod | modprime | grid");
        c->add_option("--m", o.m, "lattice order");
        c->add_option("--R", o.R, "grid scale");
        c->add_flag("--star", o.star, "remove the origin point");
        c->add_flag("--sym", o.sym, "reflect across the horizontal midline");
        c->add_option("--backend", o.backend, "exact | float");
    };
    const auto add_out = [&](CLI::App* c) {
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--format", o.format, "output format");
    };

    auto* gen = app.add_subcommand("gen", "generate a point set (csv or json)");
    add_family(gen);
    add_out(gen);

    auto* disp = app.add_subcommand("disp", "largest empty box and dispersion");
    add_family(disp);
    add_out(disp);
    disp->add_flag("--torus", o.torus, "periodic boxes on the torus");
    disp->add_flag("--boxes", o.boxes, "list every maximal empty box");

    auto* disc = app.add_subcommand("disc", "L2 discrepancy closed forms");
    add_family(disc);
    add_out(disc);
    disc->add_option("--notion", o.notion, "standard | extreme | periodic");
    disc->add_option("--samples", o.samples, "Monte Carlo check sample count");
    disc->add_option("--seed", o.seed, "Monte Carlo seed");

    auto* t1 = app.add_subcommand("table1", "scaled dispersion of the starred families");
    add_out(t1);
    t1->add_option("--m-min", o.m_min, "first order (default 5)");
    t1->add_option("--m-max", o.m_max, "last order (default 15, cap 16)");

    auto* t3 = app.add_subcommand("table3", "L2 discrepancies of the lattice families");
    add_out(t3);
    t3->add_option("--m-min", o.m_min, "first order (default 6)");
    t3->add_option("--m-max", o.m_max, "last order (default 14)");

    auto* svg = app.add_subcommand("svg", "scatter plot, optionally with box overlay");
    add_family(svg);
    add_out(svg);
    svg->add_option("--in", o.in, "plot a csv point file instead of a family");
    svg->add_flag("--torus", o.torus, "periodic boxes on the torus");
    svg->add_flag("--boxes", o.boxes, "overlay every maximal empty box");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(o);
        if (disp->parsed()) return run_disp(o);
        if (disc->parsed()) return run_disc(o);
        if (t1->parsed()) return run_table1(o);
        if (t3->parsed()) return run_table3(o);
        return run_svg(o, svg->count("--in") > 0, svg->count("--family") > 0);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
