#include "twyang/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "twyang/diagrams.hpp"
#include "twyang/error.hpp"
#include "twyang/fusion.hpp"
#include "twyang/gform.hpp"
#include "twyang/irreducibility.hpp"
#include "twyang/repmatrix.hpp"
#include "twyang/report_json.hpp"
#include "twyang/tensor.hpp"

namespace twyang {

namespace {

struct Options {
    int n = 2;
    std::string form = "so";
    std::string g_file;
    std::string modules;
    int k = 0;
    int samples = 0;
    std::uint64_t seed = 1;
    bool json = false;
    int box_cap = kDefaultBoxCap;
    int depth = 3;
    std::string diagram;
    std::string z = "1/3";
    std::string grid;
    std::string points;
    int random = 0;
    std::string arithmetic = "auto";
    int jobs = 1;
    bool n_given = false;
    bool samples_given = false;
    bool grid_given = false;
    bool points_given = false;
};

/// Raised for command-line mistakes that the library does not see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::InvalidForm:
        case ErrorKind::MalformedShape:
        case ErrorKind::ShapeExceedsDimension:
        case ErrorKind::BoxCapExceeded:
        case ErrorKind::ArityMismatch:
        case ErrorKind::SlopeCollision:
        case ErrorKind::IndexOutOfRange: return true;
        default: return false;
    }
}

GForm make_form(const Options& o) {
    const FormKind kind = parse_form_kind(o.form);
    if (o.g_file.empty()) {
        if (o.n < 1) throw UsageError("--n must be positive");
        return GForm::standard(kind, static_cast<std::size_t>(o.n));
    }
    std::ifstream in(o.g_file);
    if (!in) throw UsageError("cannot read --g-file " + o.g_file);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("--g-file: ") + e.what());
    }
    GForm g = GForm::custom(kind, matrix_from_json(j));
    if (o.n_given && static_cast<std::size_t>(o.n) != g.N())
        throw UsageError("--n " + std::to_string(o.n) + " disagrees with the " + std::to_string(g.N()) + "x" +
                         std::to_string(g.N()) + " matrix in --g-file");
    return g;
}

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
}

std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

// ---------------------------------------------------------------------------------------------

int cmd_check_ybe(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    const std::size_t N = form.N();
    const int count = o.samples_given ? o.samples : 5;
    std::mt19937_64 rng(o.seed);
    LegLayout layout = LegLayout::uniform(N, 3);
    const auto eye = Matrix<Rational>::identity(layout.total());
    json samples = json::array();
    int passed = 0;
    for (int s = 0; s < count; ++s) {
        Rational u = random_rational(rng), v = random_rational(rng), w = random_rational(rng);
        auto R = [&](const Rational& a, const Rational& b) { return yang_R(form, a, b); };
        auto L = [&](const Matrix<Rational>& op, std::vector<std::size_t> legs, const Matrix<Rational>& x) {
            return apply_on_legs(op, legs, layout, x);
        };
        Matrix<Rational> lhs = L(R(u, v), {0, 1}, L(R(u, w), {0, 2}, L(R(v, w), {1, 2}, eye)));
        Matrix<Rational> rhs = L(R(v, w), {1, 2}, L(R(u, w), {0, 2}, L(R(u, v), {0, 1}, eye)));
        const bool ok = lhs == rhs;
        passed += ok;
        samples.push_back({{"u", u.str()}, {"v", v.str()}, {"w", w.str()}, {"pass", ok}});
    }
    const bool ok = passed == count;
    if (o.json) {
        out << json{{"check", "yang-baxter"}, {"N", N}, {"samples", samples}, {"pass", ok}}.dump(2) << "\n";
    } else {
        out << "yang-baxter R12 R13 R23 = R23 R13 R12, N = " << N << "\n";
        out << pad("u", 8) << pad("v", 8) << pad("w", 8) << "result\n";
        for (const auto& s : samples)
            out << pad(s["u"].get<std::string>(), 8) << pad(s["v"].get<std::string>(), 8)
                << pad(s["w"].get<std::string>(), 8) << yes_no(s["pass"].get<bool>()) << "\n";
        out << "yang-baxter: " << passed << "/" << count << (ok ? " pass" : " FAIL") << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_check_relations(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    auto Z = FusedModuleSpec::parse(o.modules, form, o.box_cap);
    std::vector<std::pair<Rational, Rational>> pts;
    if (o.samples_given) {
        std::mt19937_64 rng(o.seed);
        for (int s = 0; s < o.samples; ++s) pts.emplace_back(random_rational(rng), random_rational(rng));
        if (pts.empty()) throw UsageError("--samples must be positive");
    }
    auto rep = check_defining_relations(Z, pts);
    if (o.json) {
        json samples = json::array();
        for (const auto& s : rep.samples)
            samples.push_back({{"u", s.u.str()}, {"v", s.v.str()}, {"singular", s.singular}, {"rtt", s.rtt},
                               {"reflection", s.reflection}});
        out << json{{"spec", Z.str()},        {"form", to_string(form.kind())}, {"N", form.N()},
                    {"dim", Z.dim()},         {"degree_bound", rep.degree_bound}, {"evaluated", rep.evaluated},
                    {"rtt", rep.rtt},         {"reflection", rep.reflection},    {"samples", samples}}
                   .dump(2)
            << "\n";
    } else {
        out << "module " << (Z.size() ? Z.str() : "(trivial)") << " (" << to_string(form.kind()) << ", N = " << form.N()
            << ", dim " << Z.dim() << ")\n";
        out << "samples evaluated: " << rep.evaluated << " of " << rep.samples.size() << ", need more than "
            << rep.degree_bound << "\n";
        out << "RTT relation: " << yes_no(rep.rtt) << "\n";
        out << "reflection relation: " << yes_no(rep.reflection) << "\n";
    }
    if (!rep.ok()) {
        if (!o.json && rep.evaluated <= rep.degree_bound) out << "too few pole-free samples to certify the relations\n";
        return kExitFail;
    }
    return kExitPass;
}

int cmd_fusion(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    if (o.diagram.empty()) throw UsageError("fusion requires --diagram");
    auto omega = SkewDiagram::parse(o.diagram);
    auto f = fusion_operator(omega, static_cast<int>(form.N()), {}, o.box_cap);
    auto rep = verify_fusion_invariants(*f, form);
    auto sh = sharp(omega);
    auto contents = column_tableau(omega).contents;
    if (o.json) {
        out << json{{"diagram", diagram_to_json(omega)},
                    {"N", form.N()},
                    {"form", to_string(form.kind())},
                    {"contents", contents},
                    {"dim", rep.dim},
                    {"ssyt", rep.ssyt},
                    {"dimension_matches", rep.dimension_matches},
                    {"t_invariant", rep.t_invariant},
                    {"sharp", {{"diagram", diagram_to_json(sh.diagram)}, {"c", sh.c}}},
                    {"sharp_conjugation", rep.sharp_conjugation},
                    {"slope_independent", rep.slope_independent},
                    {"pass", rep.ok()}}
                   .dump(2)
            << "\n";
    } else {
        out << "diagram " << omega.str() << ", N = " << form.N() << ", " << to_string(form.kind()) << "\n";
        out << "contents:";
        for (int c : contents) out << " " << c;
        out << "\n";
        out << "dim " << rep.dim << ", semistandard tableaux " << rep.ssyt << ": " << yes_no(rep.dimension_matches) << "\n";
        out << "t-invariant: " << yes_no(rep.t_invariant) << "\n";
        out << "sharp " << sh.diagram.str() << " (c = " << sh.c << "), conjugation: " << yes_no(rep.sharp_conjugation)
            << "\n";
        out << "slope independence: " << yes_no(rep.slope_independent) << "\n";
    }
    return rep.ok() ? kExitPass : kExitFail;
}

int cmd_duality(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    if (o.diagram.empty()) throw UsageError("duality requires --diagram");
    auto omega = SkewDiagram::parse(o.diagram);
    const Rational z = Rational::parse(o.z);
    auto rep = duality_check(omega, z, form);
    if (o.json) {
        out << json{{"diagram", diagram_to_json(omega)}, {"z", z.str()},          {"N", form.N()},
                    {"form", to_string(form.kind())},    {"samples", rep.samples}, {"passed", rep.passed},
                    {"pass", rep.ok()}}
                   .dump(2)
            << "\n";
    } else {
        out << "duality for " << omega.str() << " at z = " << z << ", N = " << form.N() << ", "
            << to_string(form.kind()) << ": " << rep.passed << "/" << rep.samples << " " << yes_no(rep.ok()) << "\n";
    }
    return rep.ok() ? kExitPass : kExitFail;
}

Arithmetic parse_arithmetic(const std::string& s) {
    if (s == "auto") return Arithmetic::Auto;
    if (s == "rational") return Arithmetic::Rational;
    if (s == "modp") return Arithmetic::ModP;
    throw UsageError("--arithmetic must be auto, rational or modp");
}

IrreducibilityOptions verdict_options(const Options& o) {
    IrreducibilityOptions v;
    v.K = o.k;
    v.depth = o.depth;
    v.seed = o.seed;
    v.arithmetic = parse_arithmetic(o.arithmetic);
    if (o.k != 0 && o.k < 2) throw UsageError("--k must be at least 2");
    if (o.depth < 0) throw UsageError("--depth must be nonnegative");
    return v;
}

void print_report(const IrreducibilityReport& r, std::ostream& out) {
    out << "module " << (r.spec.empty() ? "(trivial)" : r.spec) << " (" << r.form << ", N = " << r.N << ")\n";
    out << "walls: ";
    if (r.on_wall.empty()) out << "none";
    for (std::size_t i = 0; i < r.on_wall.size(); ++i) out << (i ? "; " : "") << r.on_wall[i];
    out << "\n";
    out << "leading order " << r.laurent_order << ", rank " << r.phi_rank << (r.phi_surjective ? " (surjective)" : "")
        << "\n";
    out << "commutant dim " << r.commutant_dim << " with K = " << r.K << (r.stabilized ? ", stable" : ", not stable")
        << (r.commutant_exact ? "" : " (mod p bound)") << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
}

int cmd_irreducible(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    auto Z = FusedModuleSpec::parse(o.modules, form, o.box_cap);
    auto rep = irreducibility_verdict(Z, verdict_options(o));
    if (o.json)
        out << report_to_json(rep).dump(2) << "\n";
    else
        print_report(rep, out);
    return rep.verdict == Verdict::Irreducible ? kExitPass : kExitFail;
}

struct PointResult {
    std::vector<Rational> z;
    std::optional<IrreducibilityReport> report;
    std::vector<std::string> walls;
    ErrorKind error_kind = ErrorKind::InternalInconsistency;
    std::string error;
};

int cmd_scan(const Options& o, std::ostream& out) {
    const GForm form = make_form(o);
    auto tmpl = FusedModuleSpec::parse(o.modules, form, o.box_cap);
    const std::size_t ell = tmpl.size();
    auto options = verdict_options(o);
    if (!o.points_given && !o.grid_given && o.random == 0)
        throw UsageError("scan needs --points, --grid or --random");

    std::vector<std::vector<Rational>> pts;
    if (o.points_given) {
        std::stringstream ss(o.points);
        std::string tuple;
        while (std::getline(ss, tuple, ';')) {
            auto z = parse_rationals(tuple);
            if (z.size() != ell)
                throw Error(ErrorKind::ArityMismatch, "point '" + tuple + "' needs " + std::to_string(ell) + " values");
            pts.push_back(std::move(z));
        }
    }
    if (o.grid_given) {
        auto axis = parse_rationals(o.grid);
        if (!axis.empty()) {
            std::vector<std::size_t> idx(ell, 0);
            while (true) {
                std::vector<Rational> z;
                for (auto i : idx) z.push_back(axis[i]);
                pts.push_back(std::move(z));
                std::size_t d = ell;
                while (d > 0 && ++idx[d - 1] == axis.size()) idx[--d] = 0;
                if (d == 0) break;
            }
        }
    }
    if (o.random < 0) throw UsageError("--random must be nonnegative");
    for (auto& z : off_wall_points(ell, static_cast<std::size_t>(o.random), o.seed)) pts.push_back(std::move(z));

    std::vector<PointResult> results(pts.size());
    auto work = [&](std::size_t i) {
        PointResult& r = results[i];
        r.z = pts[i];
        try {
            auto Z = tmpl.with_parameters(pts[i]);
            r.walls = walls(Z).violated();
            r.report = irreducibility_verdict(Z, options);
        } catch (const Error& e) {
            r.error_kind = e.kind();
            r.error = e.what();
        }
    };
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
    if (jobs == 1) {
        for (std::size_t i = 0; i < pts.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < pts.size(); i += jobs) work(i);
            });
        for (auto& th : pool) th.join();
    }

    std::size_t irr = 0, inc = 0, red = 0, errors = 0, walled = 0, violations = 0;
    for (const auto& r : results) {
        if (!r.walls.empty()) ++walled;
        if (!r.report) {
            ++errors;
            if (r.error_kind == ErrorKind::InternalInconsistency) ++violations;
            continue;
        }
        switch (r.report->verdict) {
            case Verdict::Irreducible: ++irr; break;
            case Verdict::Inconclusive: ++inc; break;
            case Verdict::Reducible: ++red; break;
        }
    }
    if (o.json) {
        json points = json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            json zs = json::array();
            for (const auto& x : r.z) zs.push_back(x.str());
            json p{{"index", i}, {"z", zs}, {"on_wall", r.walls}};
            if (r.report)
                p["report"] = report_to_json(*r.report);
            else
                p["error"] = {{"kind", std::string(to_string(r.error_kind))}, {"message", r.error}};
            points.push_back(std::move(p));
        }
        json summary{{"points", results.size()},     {"irreducible", irr}, {"inconclusive", inc},
                     {"reducible", red},             {"errors", errors},   {"on_wall", walled},
                     {"soundness_violations", violations}};
        out << json{{"template", tmpl.str()}, {"form", to_string(form.kind())}, {"N", form.N()},
                    {"points", points},       {"summary", summary}}
                   .dump(2)
            << "\n";
    } else {
        out << pad("#", 5) << pad("z", 18) << pad("walls", 7) << pad("order", 7) << pad("rank", 7) << pad("surj", 6)
            << pad("comm", 6) << pad("K", 4) << "verdict\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            std::string zs;
            for (std::size_t k = 0; k < r.z.size(); ++k) zs += (k ? "," : "") + r.z[k].str();
            out << pad(std::to_string(i), 5) << pad(zs, 18) << pad(std::to_string(r.walls.size()), 7);
            if (r.report) {
                const auto& p = *r.report;
                out << pad(std::to_string(p.laurent_order), 7) << pad(std::to_string(p.phi_rank), 7)
                    << pad(p.phi_surjective ? "yes" : "no", 6) << pad(std::to_string(p.commutant_dim), 6)
                    << pad(std::to_string(p.K), 4) << to_string(p.verdict) << "\n";
            } else {
                out << "error: " << r.error << "\n";
            }
        }
        out << "points " << results.size() << ": irreducible " << irr << ", inconclusive " << inc << ", reducible " << red
            << ", errors " << errors << ", on a wall " << walled << "\n";
    }
    return violations == 0 ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for fused representations of twisted Yangians"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "site dimension N")->check(CLI::PositiveNumber);
        sub->add_option("--form", o.form, "so or sp");
        sub->add_option("--g-file", o.g_file, "JSON matrix for a custom form g");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_flag("--json", o.json, "emit JSON");
        sub->add_option("--box-cap", o.box_cap, "maximum total number of boxes");
    };
    auto module_opts = [&](CLI::App* sub) {
        sub->add_option("--modules", o.modules, "factors \"lambda/mu:z;...\"");
        sub->add_option("--k", o.k, "generator truncation K (default 2n + 2)");
        sub->add_option("--depth", o.depth, "extra Laurent coefficients inspected");
        sub->add_option("--arithmetic", o.arithmetic, "auto, rational or modp");
    };

    auto* ybe = app.add_subcommand("check-ybe", "Yang-Baxter equation at random rational samples");
    common(ybe);
    ybe->add_option("--samples", o.samples, "number of samples");
    auto* rel = app.add_subcommand("check-relations", "RTT and reflection relations on a module");
    common(rel);
    module_opts(rel);
    rel->add_option("--samples", o.samples, "number of random (u, v) samples");
    auto* fus = app.add_subcommand("fusion", "fusion operator and its invariants");
    common(fus);
    fus->add_option("--diagram", o.diagram, "skew diagram \"lambda/mu\"")->required();
    auto* dual = app.add_subcommand("duality", "duality of the elementary module with its sharp");
    common(dual);
    dual->add_option("--diagram", o.diagram, "skew diagram \"lambda/mu\"")->required();
    dual->add_option("--z", o.z, "module parameter");
    auto* irr = app.add_subcommand("irreducible", "irreducibility verdict at one parameter point");
    common(irr);
    module_opts(irr);
    auto* scan = app.add_subcommand("scan", "irreducibility verdicts over a set of parameter points");
    common(scan);
    module_opts(scan);
    scan->add_option("--points", o.points, "explicit points \"z1,z2;z1,z2;...\"");
    scan->add_option("--grid", o.grid, "values per factor; the grid is their Cartesian power");
    scan->add_option("--random", o.random, "number of random off-wall points");
    scan->add_option("--jobs", o.jobs, "worker threads");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (auto* sub : {ybe, rel, fus, dual, irr, scan}) {
        if (!sub->parsed()) continue;
        o.n_given = sub->count("--n") > 0;
        if (sub->get_option_no_throw("--samples")) o.samples_given = sub->count("--samples") > 0;
        if (sub->get_option_no_throw("--grid")) o.grid_given = sub->count("--grid") > 0;
        if (sub->get_option_no_throw("--points")) o.points_given = sub->count("--points") > 0;
    }
    try {
        if (ybe->parsed()) return cmd_check_ybe(o, out);
        if (rel->parsed()) return cmd_check_relations(o, out);
        if (fus->parsed()) return cmd_fusion(o, out);
        if (dual->parsed()) return cmd_duality(o, out);
        if (irr->parsed()) return cmd_irreducible(o, out);
        if (scan->parsed()) return cmd_scan(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << (is_input_error(e.kind()) ? "usage error: " : "error: ") << e.what() << "\n";
        return is_input_error(e.kind()) ? kExitUsage : kExitFail;
    }
    return kExitUsage;
}

}  // namespace twyang
