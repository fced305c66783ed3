// mopoly: evaluation, verification suites and limit reports for the discrete multiple orthogonal
// polynomial families. JSON (or CSV) on stdout, a short summary on stderr.
// Exit codes: 0 all checks pass, 1 some check failed, 2 invalid input.

#include "mop/analytic_sweep.hpp"
#include "mop/asymptotics.hpp"
#include "mop/error.hpp"
#include "mop/moment_check.hpp"
#include "mop/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mop;

namespace {

struct Options {
    // family spec
    std::string family, params;
    std::vector<std::string> a, alpha, beta, c, pi;
    long N = -1;
    std::vector<long> n;
    std::vector<int> perm;
    // common
    std::uint64_t seed = 0;
    std::string sweep = "standard", format = "json", precision, config;
    int nodes = 256, trials = -1, draws = -1;
    bool all_reports = false;
    // per command
    std::string which = "all", kind = "both", rep = "coefficient", form = "printed", orientation = "matching", edge = "all";
    std::string integrand = "type2";
    long x = 0, jmax = 10, component = 0, max_total = -1;
    std::string sign = "corrected";
    bool no_hermite = false;
};

// Raised for bad input; main maps it to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ojson load_json(const std::string& s) {
    try {
        if (!s.empty() && (s.front() == '{' || s.front() == '[')) return ojson::parse(s);
        std::ifstream in(s);
        if (!in) throw InputError("cannot open '" + s + "'");
        return ojson::parse(in);
    } catch (const ojson::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

FamilyParams family_params(const Options& o) {
    if (!o.params.empty()) return params_from_json(load_json(o.params));
    if (o.family.empty()) throw InputError("a family is required (--family or --params)");
    const Family f = parse_family(o.family);
    ojson j{{"family", family_name(f)}};
    auto list = [&](const char* key, const std::vector<std::string>& v) {
        if (v.empty()) throw InputError(std::string("--") + key + " is required for " + family_name(f));
        j[key] = v;
    };
    auto scalar = [&](const char* key, const std::vector<std::string>& v) {
        if (v.size() != 1) throw InputError(std::string("--") + key + " takes one value for " + family_name(f));
        j[key] = v.front();
    };
    auto need_N = [&] {
        if (o.N < 0) throw InputError(std::string("--N is required for ") + family_name(f));
        j["N"] = o.N;
    };
    switch (f) {
    case Family::Hahn:
        list("alpha", o.alpha);
        scalar("beta", o.beta);
        need_N();
        break;
    case Family::MeixnerII:
        list("beta", o.beta);
        scalar("c", o.c);
        break;
    case Family::MeixnerI:
        scalar("beta", o.beta);
        list("c", o.c);
        break;
    case Family::Kravchuk:
        list("pi", o.pi);
        need_N();
        break;
    case Family::Charlier: list("a", o.a); break;
    }
    return params_from_json(j);
}

MultiIndex multi_index(const Options& o, std::size_t p) {
    if (o.n.size() != p) throw InputError("--n needs " + std::to_string(p) + " entries");
    for (long v : o.n)
        if (v < 0) throw InputError("--n entries must be non-negative");
    return MultiIndex(o.n);
}

Permutation permutation(const Options& o, std::size_t p) {
    if (o.perm.empty()) return Permutation::identity(p);
    if (o.perm.size() != p) throw InputError("--perm needs " + std::to_string(p) + " entries");
    return Permutation(o.perm);
}

SweepConfig sweep_of(const Options& o) {
    auto cfg = sweep_config(parse_sweep(o.sweep), o.seed);
    if (o.draws > 0) cfg.draws = o.draws;
    if (o.trials > 0) cfg.identity_trials = o.trials;
    if (o.max_total >= 0) cfg.max_total = o.max_total;
    cfg.all_reports = o.all_reports;
    return cfg;
}

std::vector<Family> families_of(const Options& o) {
    if (o.family.empty() || o.family == "all") return all_families();
    return {parse_family(o.family)};
}

Precision precision_of(const Options& o) {
    if (!o.precision.empty()) return parse_precision(o.precision);
    if (const char* env = std::getenv("MOPOLY_PRECISION")) return parse_precision(env);
    return Precision::Double;
}

std::string csv_field(const ojson& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

// Writes rows of flat objects as CSV with the keys of the first row as header.
void write_csv(std::ostream& out, const ojson& rows) {
    if (rows.empty()) return;
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
    }
    out << "\n";
    for (const auto& r : rows) {
        first = true;
        for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
            out << (first ? "" : ",") << csv_field(r.contains(it.key()) ? r[it.key()] : ojson(nullptr));
            first = false;
        }
        out << "\n";
    }
}

void emit(const Options& o, const ojson& doc, const ojson& csv_rows) {
    if (o.format == "csv") write_csv(std::cout, csv_rows);
    else std::cout << doc.dump() << "\n";
}

ojson coeff_rows(const std::vector<Rational>& c) {
    ojson rows = ojson::array();
    for (std::size_t k = 0; k < c.size(); ++k) rows.push_back(ojson{{"degree", k}, {"coeff", to_string(c[k])}});
    return rows;
}

// ---- eval ----

int eval_type2(const Options& o) {
    const auto fp = family_params(o);
    const auto n = multi_index(o, fp.p());
    Type2Representation rep;
    if (o.rep == "coefficient") rep = Type2Representation::CoefficientSum;
    else if (o.rep == "weighted") rep = Type2Representation::WeightedPfq;
    else throw InputError("--rep must be coefficient or weighted");
    const auto B = type2(fp, n, rep);
    emit(o, polynomial_to_json(B), coeff_rows(B.coeffs()));
    std::cerr << "type II " << family_name(fp.family()) << " n=" << n.str() << ": degree " << n.total() << "\n";
    return 0;
}

int eval_type1(const Options& o) {
    const auto fp = family_params(o);
    const auto n = multi_index(o, fp.p());
    Type1Form form;
    if (o.form == "printed") form = Type1Form::Printed;
    else if (o.form == "alternative") form = Type1Form::Alternative;
    else if (o.form == "derivation") form = Type1Form::Derivation;
    else throw InputError("--form must be printed, alternative or derivation");
    if (o.component < 0 || o.component > static_cast<long>(fp.p())) throw InputError("--i out of range");
    ojson comps = ojson::array(), rows = ojson::array();
    for (std::size_t i = 0; i < fp.p(); ++i) {
        if (o.component != 0 && static_cast<long>(i) + 1 != o.component) continue;
        if (n[i] == 0) continue;
        const auto A = type1(fp, n, i, form);
        comps.push_back(ojson{{"i", i + 1}, {"prefactor", A.prefactor.str()}, {"coeffs", rationals_to_json(A.rational_part.coeffs())}});
        for (std::size_t k = 0; k < A.rational_part.coeffs().size(); ++k)
            rows.push_back(ojson{{"i", i + 1}, {"prefactor", A.prefactor.str()}, {"degree", k},
                                 {"coeff", to_string(A.rational_part.coeffs()[k])}});
    }
    emit(o, ojson{{"components", comps}}, rows);
    std::cerr << "type I " << family_name(fp.family()) << " n=" << n.str() << ": " << comps.size() << " component(s)\n";
    return 0;
}

int eval_linear_form(const Options& o) {
    const auto fp = family_params(o);
    const auto n = multi_index(o, fp.p());
    const auto L = linear_form(fp, n, o.x);
    ojson doc{{"x", o.x},
              {"value", static_cast<double>(L.value)},
              {"exact", L.exact ? ojson(to_string(L.exact_value)) : ojson(nullptr)}};
    emit(o, doc, ojson::array({doc}));
    std::cerr << "linear form at x=" << o.x << ": " << static_cast<double>(L.value) << "\n";
    return 0;
}

int eval_integral(const Options& o) {
    const auto fp = family_params(o);
    const auto n = multi_index(o, fp.p());
    IntegrandSpec s{fp, n, o.x, o.integrand == "type2", std::nullopt};
    if (o.integrand != "type2" && o.integrand != "type1") throw InputError("--integrand must be type2 or type1");
    if (o.component > 0) s.component = static_cast<std::size_t>(o.component - 1);
    Orientation orient;
    if (o.orientation == "matching") orient = matching_orientation(fp.family(), s.type2);
    else if (o.orientation == "stated") orient = stated_orientation(fp.family(), s.type2);
    else throw InputError("--orientation must be matching or stated");
    const auto c = choose_contour(pole_sets(s), orient, o.nodes);
    ojson doc;
    auto run = [&](auto tag) {
        using T = decltype(tag);
        const auto q = contour_quadrature<T>(s, c);
        bool zero = false;
        const T closed = closed_form_value<T>(s, &zero);
        doc = ojson{{"integrand", integrand_name(s)},
                    {"x", o.x},
                    {"orientation", orientation_name(orient)},
                    {"nodes", o.nodes},
                    {"precision", precision_name(precision_of(o))},
                    {"re", static_cast<double>(q.value.real())},
                    {"im", static_cast<double>(q.value.imag())},
                    {"error_estimate", static_cast<double>(q.error_estimate)},
                    {"closed_form", static_cast<double>(closed)},
                    {"relative_deviation", static_cast<double>(relative_deviation<T>(q.value, closed, zero, q.scale))}};
    };
    if (precision_of(o) == Precision::Double) run(double{});
    else run((long double){});
    emit(o, doc, ojson::array({doc}));
    std::cerr << doc["integrand"].get<std::string>() << ": " << doc["re"].get<double>() << " vs closed form "
              << doc["closed_form"].get<double>() << "\n";
    return 0;
}

int recur(const Options& o) {
    const auto fp = family_params(o);
    const auto n = multi_index(o, fp.p());
    const auto rc = nnrc(fp, n, permutation(o, fp.p()));
    ojson rows = ojson::array();
    for (std::size_t k = 0; k < rc.b0.size(); ++k) rows.push_back(ojson{{"coefficient", "b0"}, {"index", k + 1}, {"value", to_string(rc.b0[k])}});
    for (std::size_t k = 0; k < rc.bj.size(); ++k) rows.push_back(ojson{{"coefficient", "b"}, {"index", k + 1}, {"value", to_string(rc.bj[k])}});
    emit(o, ojson{{"b0", rationals_to_json(rc.b0)}, {"b", rationals_to_json(rc.bj)}}, rows);
    std::cerr << "recurrence coefficients " << family_name(fp.family()) << " n=" << n.str() << " perm=" << rc.perm.str() << "\n";
    return 0;
}

// ---- verify ----

int finish_suites(const Options& o, const std::vector<SuiteResult>& suites) {
    ojson summ = ojson::array(), reports = ojson::array();
    bool ok = true;
    for (const auto& s : suites) {
        summ.push_back(s.summary_json());
        for (const auto& r : s.reports) reports.push_back(report_to_json(r));
        ok = ok && s.ok();
        std::cerr << s.name << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped";
        if (s.adjudicated) std::cerr << ", " << s.adjudicated << " adjudication record(s)";
        std::cerr << "\n";
    }
    emit(o, ojson{{"ok", ok}, {"seed", o.seed}, {"suites", summ}, {"reports", reports}}, summ);
    std::cerr << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    return ok ? 0 : 1;
}

int verify_closed(const Options& o) {
    const auto cfg = sweep_of(o);
    if (o.kind != "both" && o.kind != "type2" && o.kind != "type1") throw InputError("--kind must be type2, type1 or both");
    std::vector<SuiteResult> out;
    for (Family f : families_of(o)) {
        if (o.kind != "type1") out.push_back(verify_type2_sweep(f, cfg));
        if (o.kind != "type2") out.push_back(verify_type1_sweep(f, cfg));
    }
    return finish_suites(o, out);
}

int verify_identities(const Options& o) {
    const auto cfg = sweep_of(o);
    std::vector<IdentityKind> kinds;
    if (o.which == "all")
        kinds = {IdentityKind::ChuVandermonde, IdentityKind::Gauss, IdentityKind::PfaffSaalschutz,
                 IdentityKind::Lemma1, IdentityKind::Lemma2, IdentityKind::Lemma3};
    else kinds = {parse_identity_kind(o.which)};
    std::vector<SuiteResult> out;
    for (auto k : kinds) out.push_back(verify_identity_sweep(k, cfg.identity_trials, o.seed, o.all_reports));
    return finish_suites(o, out);
}

int verify_biorth(const Options& o) {
    const auto cfg = sweep_of(o);
    std::vector<SuiteResult> out;
    for (Family f : families_of(o)) out.push_back(verify_biorthogonality_sweep(f, cfg));
    return finish_suites(o, out);
}

int verify_recurrence(const Options& o) {
    const auto cfg = sweep_of(o);
    std::vector<SuiteResult> out;
    for (Family f : families_of(o)) out.push_back(verify_recurrence_sweep(f, cfg));
    return finish_suites(o, out);
}

int verify_representations(const Options& o) {
    const auto cfg = sweep_of(o);
    std::vector<SuiteResult> out;
    for (Family f : families_of(o)) out.push_back(verify_representation_sweep(f, cfg));
    return finish_suites(o, out);
}

int verify_integrals(const Options& o) {
    IntegralSweepConfig cfg;
    cfg.seed = o.seed;
    cfg.nodes = o.nodes;
    cfg.precision = precision_of(o);
    cfg.all_reports = o.all_reports;
    const auto preset = parse_sweep(o.sweep);
    cfg.draws = preset == SweepPreset::Small ? 1 : preset == SweepPreset::Standard ? 4 : 12;
    if (o.draws > 0) cfg.draws = o.draws;
    if (o.max_total >= 0) cfg.max_total = o.max_total;
    if (o.orientation == "stated") cfg.stated_orientation = true;
    else if (o.orientation != "matching") throw InputError("--orientation must be matching or stated");
    ContourSpec{Circle{{0, 0}, 1}, Orientation::Counterclockwise, cfg.nodes}.validate();
    std::vector<SuiteResult> out;
    for (Family f : families_of(o)) out.push_back(verify_integral_sweep(f, cfg));
    return finish_suites(o, out);
}

int verify_rodrigues(const Options& o) {
    auto cfg = sweep_of(o);
    if (o.max_total < 0) cfg.max_total = std::min<long>(cfg.max_total, 4);
    RodriguesSign sign;
    if (o.sign == "corrected") sign = RodriguesSign::Corrected;
    else if (o.sign == "printed") sign = RodriguesSign::Printed;
    else throw InputError("--sign must be corrected or printed");
    std::vector<SuiteResult> out;
    if (o.family.empty() || o.family == "all")
        for (Family f : {Family::MeixnerI, Family::Kravchuk, Family::Charlier}) out.push_back(verify_rodrigues_sweep(f, cfg, sign));
    else out.push_back(verify_rodrigues_sweep(parse_family(o.family), cfg, sign));
    return finish_suites(o, out);
}

// ---- limits / moments ----

int limits(const Options& o) {
    std::vector<LimitEdge> edges;
    if (o.edge == "all") edges = all_edges();
    else edges = {parse_edge(o.edge)};
    const auto suite = run_limit_suite(edges, !o.no_hermite && o.edge == "all");
    const auto asym = standard_asymptotic_checks();
    ojson reps = ojson::array(), herm = ojson::array(), as = ojson::array(), rows = ojson::array();
    bool asym_ok = true;
    auto add_rows = [&](const ConvergenceReport& r) {
        for (const auto& p : r.points)
            rows.push_back(ojson{{"edge", r.edge}, {"quantity", r.quantity}, {"probe", r.probe},
                                 {"limit_variable", p.limit_variable}, {"error", static_cast<double>(p.error)},
                                 {"verdict", verdict_name(r.verdict)}});
    };
    for (const auto& r : suite.reports) {
        reps.push_back(convergence_report_json(r));
        add_rows(r);
    }
    for (const auto& h : suite.hermite) herm.push_back(hermite_agreement_json(h));
    for (const auto& r : asym) {
        as.push_back(convergence_report_json(r));
        add_rows(r);
        asym_ok = asym_ok && r.verdict != Verdict::Fail;
    }
    const bool ok = suite.ok() && asym_ok;
    emit(o, ojson{{"ok", ok}, {"reports", reps}, {"hermite_agreement", herm}, {"asymptotics", as}}, rows);
    long fails = 0;
    for (const auto& r : suite.reports) fails += r.verdict == Verdict::Fail;
    std::cerr << suite.reports.size() << " convergence reports, " << fails << " failing; " << suite.hermite.size()
              << " Hermite agreement probes; " << asym.size() << " gamma asymptotic checks\n";
    return ok ? 0 : 1;
}

int moments(const Options& o) {
    if (!o.params.empty() || (!o.family.empty() && o.family != "all" && (!o.a.empty() || !o.beta.empty() || !o.c.empty() ||
                                                                          !o.alpha.empty() || !o.pi.empty()))) {
        const auto fp = family_params(o);
        ojson comps = ojson::array();
        bool ok = true;
        for (const auto& c : validate_moments(fp, o.jmax)) {
            const bool pass = c.rel_error < Real("1e-20");
            ok = ok && pass;
            comps.push_back(ojson{{"component", c.component + 1}, {"j", c.j}, {"closed_form", c.closed.str(30)},
                                  {"brute_force", c.brute.str(30)}, {"relative_error", static_cast<double>(c.rel_error)},
                                  {"terms", c.terms}, {"pass", pass}});
        }
        emit(o, ojson{{"ok", ok}, {"comparisons", comps}}, comps);
        std::cerr << comps.size() << " moment comparisons, " << (ok ? "all within 1e-20" : "some above 1e-20") << "\n";
        return ok ? 0 : 1;
    }
    auto cfg = sweep_of(o);
    std::vector<SuiteResult> out;
    std::vector<Family> fams;
    if (o.family.empty() || o.family == "all") fams = {Family::MeixnerII, Family::MeixnerI, Family::Charlier};
    else fams = {parse_family(o.family)};
    for (Family f : fams) out.push_back(verify_moment_sweep(f, cfg, o.jmax));
    return finish_suites(o, out);
}

// Turns config-file keys into flags not already given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t k = 0; k + 1 < args.size(); ++k)
        if (args[k] == "--config") path = args[k + 1];
    for (const auto& a : args)
        if (a.rfind("--config=", 0) == 0) path = a.substr(9);
    if (path.empty()) return args;
    const ojson cfg = load_json(path);
    if (!cfg.is_object()) throw InputError("config must be a JSON object");
    auto given = [&](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        const std::string flag = "--" + it.key();
        if (given(flag)) continue;
        const ojson& v = it.value();
        if (it.key() == "params") {
            args.push_back(flag);
            args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        } else if (v.is_boolean()) {
            if (v.get<bool>()) args.push_back(flag);
        } else if (v.is_array()) {
            std::string joined;
            for (const auto& e : v) joined += (joined.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
            args.push_back(flag);
            args.push_back(joined);
        } else {
            args.push_back(flag);
            args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    return args;
}

void family_flags(CLI::App* app, Options& o) {
    app->add_option("--family", o.family, "hahn, meixner2, meixner1, kravchuk or charlier");
    app->add_option("--params", o.params, "family spec as inline JSON or a JSON file");
    app->add_option("--a", o.a, "Charlier a_i")->delimiter(',');
    app->add_option("--alpha", o.alpha, "Hahn alpha_i")->delimiter(',');
    app->add_option("--beta", o.beta, "Hahn/Meixner I beta, Meixner II beta_i")->delimiter(',');
    app->add_option("--c", o.c, "Meixner II c, Meixner I c_i")->delimiter(',');
    app->add_option("--pi", o.pi, "Kravchuk p_i")->delimiter(',');
    app->add_option("--N", o.N, "support size for Hahn and Kravchuk");
}

void common_flags(CLI::App* app, Options& o) {
    app->add_option("--seed", o.seed, "seed for randomized sweeps");
    app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--precision", o.precision, "double or extended (overrides MOPOLY_PRECISION)");
    app->add_option("--config", o.config, "JSON file or inline JSON with flag values");
}

void sweep_flags(CLI::App* app, Options& o) {
    app->add_option("--sweep", o.sweep, "small, standard or deep");
    app->add_option("--draws", o.draws, "parameter draws per family and p");
    app->add_option("--max-total", o.max_total, "largest |n| in the sweep");
    app->add_flag("--all-reports", o.all_reports, "keep passing trial reports in the output");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"mopoly: discrete multiple orthogonal polynomials"};
    app.require_subcommand(1);
    int (*action)(const Options&) = nullptr;
    auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&action, fn] { action = fn; }); };

    auto* eval = app.add_subcommand("eval", "evaluate closed forms");
    eval->require_subcommand(1);
    auto* e2 = eval->add_subcommand("type2", "type II polynomial coefficients");
    auto* e1 = eval->add_subcommand("type1", "type I polynomials with their prefactors");
    auto* elf = eval->add_subcommand("linear-form", "type I linear form at x");
    auto* eint = eval->add_subcommand("integral", "contour-integral representation at x");
    for (auto* s : {e2, e1, elf, eint}) {
        family_flags(s, o);
        common_flags(s, o);
        s->add_option("--n", o.n, "multi-index")->delimiter(',')->required();
    }
    e2->add_option("--rep", o.rep, "coefficient or weighted");
    e1->add_option("--form", o.form, "printed, alternative or derivation");
    e1->add_option("--i", o.component, "single component, 1-based");
    elf->add_option("--x", o.x, "support point")->required();
    eint->add_option("--x", o.x, "support point")->required();
    eint->add_option("--integrand", o.integrand, "type2 or type1");
    eint->add_option("--i", o.component, "type I component, 1-based; omitted for the linear form");
    eint->add_option("--nodes", o.nodes, "quadrature nodes (power of two, >= 16)");
    eint->add_option("--orientation", o.orientation, "matching or stated");
    bind(e2, eval_type2);
    bind(e1, eval_type1);
    bind(elf, eval_linear_form);
    bind(eint, eval_integral);

    auto* rec = app.add_subcommand("recur", "nearest-neighbour recurrence coefficients");
    family_flags(rec, o);
    common_flags(rec, o);
    rec->add_option("--n", o.n, "multi-index")->delimiter(',')->required();
    rec->add_option("--perm", o.perm, "permutation of 1..p, default identity")->delimiter(',');
    bind(rec, recur);

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    auto* vco = ver->add_subcommand("closed-vs-oracle", "closed forms against the moment oracle");
    auto* vid = ver->add_subcommand("identities", "hypergeometric identities and lemmas");
    auto* vbi = ver->add_subcommand("biorthogonality", "biorthogonality table");
    auto* vre = ver->add_subcommand("recurrence", "recurrence coefficients and identities");
    auto* vrp = ver->add_subcommand("representations", "equivalent closed-form representations");
    auto* vin = ver->add_subcommand("integrals", "contour integrals against closed forms");
    auto* vro = ver->add_subcommand("rodrigues", "Rodrigues formulas against closed forms");
    for (auto* s : {vco, vid, vbi, vre, vrp, vin, vro}) {
        common_flags(s, o);
        sweep_flags(s, o);
    }
    for (auto* s : {vco, vbi, vre, vrp, vin, vro}) s->add_option("--family", o.family, "one family or all");
    vco->add_option("--kind", o.kind, "type2, type1 or both");
    vid->add_option("--which", o.which, "chu_vandermonde, gauss, pfaff_saalschutz, lemma1..3 or all");
    vid->add_option("--trials", o.trials, "trials per identity");
    vin->add_option("--nodes", o.nodes, "quadrature nodes");
    vin->add_option("--orientation", o.orientation, "matching or stated");
    vro->add_option("--sign", o.sign, "corrected or printed");
    bind(vco, verify_closed);
    bind(vid, verify_identities);
    bind(vbi, verify_biorth);
    bind(vre, verify_recurrence);
    bind(vrp, verify_representations);
    bind(vin, verify_integrals);
    bind(vro, verify_rodrigues);

    auto* lim = app.add_subcommand("limits", "limit relations and gamma asymptotics");
    common_flags(lim, o);
    lim->add_option("--edge", o.edge, "edge name such as hahn->meixner2, or all");
    lim->add_flag("--no-hermite", o.no_hermite, "skip the Hermite route agreement");
    bind(lim, limits);

    auto* mom = app.add_subcommand("moments", "closed-form moments against brute-force sums");
    family_flags(mom, o);
    common_flags(mom, o);
    sweep_flags(mom, o);
    mom->add_option("--jmax", o.jmax, "largest moment order");
    bind(mom, moments);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = apply_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);
        return action(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ojson::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
