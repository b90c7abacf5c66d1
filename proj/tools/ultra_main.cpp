// Command-line front end: series evaluation, ultra-radical branches,
// three-term and multi-term solving, and trajectory data for plots.
//
// Output is a versioned JSON record (or CSV for trajectories) with numbers
// at 17 significant digits; identical invocations produce identical bytes.
// Exit codes: 0 success, 2 usage/parse/domain error, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ultra/hypermaster.hpp"
#include "ultra/merge.hpp"
#include "ultra/radical.hpp"
#include "ultra/solver.hpp"

#include "json_writer.hpp"
#include "scalar_parse.hpp"

namespace {

using namespace ultra;
using cli::Json;
using cli::ParsedScalar;

struct GlobalOpts {
    int max_terms = 5000;
    bool max_terms_set = false;
    double tol = 1e-16;
    int u_max = 16;
    std::string format = "csv";
};

SeriesOptions series_opts(const GlobalOpts& g) {
    SeriesOptions o;
    o.max_terms = g.max_terms;
    o.rel_tol = g.tol;
    return o;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json record_header(const std::string& command,
                   const std::vector<std::pair<std::string, std::string>>& inputs) {
    Json rec = Json::object();
    rec.add("schema_version", Json::str("1"));
    rec.add("command", Json::str(command));
    Json in = Json::object();
    for (const auto& [k, v] : inputs) in.add(k, Json::str(v));
    rec.add("inputs", std::move(in));
    return rec;
}

void emit(Json rec, Json results, const std::vector<std::string>& warnings) {
    rec.add("results", std::move(results));
    Json w = Json::array();
    for (const std::string& s : warnings) w.push(Json::str(s));
    rec.add("warnings", std::move(w));
    std::cout << rec.dump() << "\n";
}

// ---------------------------------------------------------------- radius ---

int cmd_radius(const std::string& a_s, const std::string& b_s) {
    const ParsedScalar a = cli::parse_scalar(a_s);
    const ParsedScalar b = cli::parse_scalar(b_s);
    const Radius R = convergence_radius(a.value, b.value);

    std::string tag = "general";
    if (R.kind == RadiusKind::infinite) tag = "a=b=0";
    else if (R.kind == RadiusKind::equal_exponents) tag = "b=a";
    else if (a.value == Complex{}) tag = "a=0";
    else if (b.value == Complex{}) tag = "b=0";

    Json row = Json::object();
    row.add("value", R.kind == RadiusKind::finite ? Json::num(R.value) : Json::null());
    row.add("case", Json::str(tag));
    emit(record_header("radius", {{"a", a_s}, {"b", b_s}}), Json::array().push(std::move(row)),
         {});
    return 0;
}

// ----------------------------------------------------------------- ultra ---

Json branch_row(int n, const BranchValue& bv) {
    Json row = Json::object();
    row.add("n", Json::integer(n));
    row.add("value_re", Json::num(bv.y.real()));
    row.add("value_im", Json::num(bv.y.imag()));
    row.add("J", Json::str(to_string(bv.spec.J)));
    row.add("N", Json::integer(bv.spec.N));
    row.add("u", Json::integer(bv.u));
    row.add("f_re", Json::num(bv.f.real()));
    row.add("f_im", Json::num(bv.f.imag()));
    row.add("residual", Json::num(bv.residual));
    row.add("terms_used", Json::integer(bv.eval.terms_used));
    row.add("status", Json::str(to_string(bv.eval.status)));
    row.add("closed_form", Json::boolean(bv.closed_form));
    return row;
}

int cmd_ultra(const std::string& n_s, const std::string& a_s, const std::string& b_s,
              const std::string& x_s, const GlobalOpts& g) {
    const ParsedScalar a = cli::parse_scalar(a_s);
    const ParsedScalar b = cli::parse_scalar(b_s);
    const ParsedScalar x = cli::parse_scalar(x_s);
    RadicalOptions opts;
    opts.series = series_opts(g);
    opts.u_max = g.u_max;

    Json results = Json::array();
    std::vector<std::string> failures;
    for (int n : cli::parse_branch_list(n_s)) {
        try {
            const BranchValue bv = ultra_radical(n, a.value, b.value, x.value, opts);
            if (bv.eval.status != SeriesStatus::converged) {
                const Radius R = convergence_radius(a.value, b.value);
                const bool outside = !R.strictly_inside(std::abs(x.value));
                failures.push_back(
                    "branch n=" + std::to_string(n) + ": series (J=" +
                    to_string(bv.spec.J) + ", N=" + std::to_string(bv.spec.N) + ") " +
                    to_string(bv.eval.status) +
                    (outside ? "; direct series unusable for |x| >= R" : ""));
            }
            results.push(branch_row(n, bv));
        } catch (const EvaluationError& e) {
            failures.push_back("branch n=" + std::to_string(n) + ": " + e.what());
        }
    }
    emit(record_header("ultra", {{"n", n_s}, {"a", a_s}, {"b", b_s}, {"x", x_s}}),
         std::move(results), failures);
    if (!failures.empty()) {
        for (const std::string& f : failures) std::cerr << "ultra: " << f << "\n";
        return 3;
    }
    return 0;
}

// ----------------------------------------------------------------- solve ---

int cmd_solve(const std::string& n_s, const std::string& A_s, const std::string& a_s,
              const std::string& B_s, const std::string& b_s, const std::string& C_s,
              const std::string& pipeline, const GlobalOpts& g) {
    const ParsedScalar A = cli::parse_scalar(A_s), a = cli::parse_scalar(a_s);
    const ParsedScalar B = cli::parse_scalar(B_s), b = cli::parse_scalar(b_s);
    const ParsedScalar C = cli::parse_scalar(C_s);
    if (pipeline != "abc" && pipeline != "aabbc")
        throw DomainError("--pipeline must be abc or aabbc");

    SolverOptions opts;
    opts.series = series_opts(g);
    opts.u_max = g.u_max;
    opts.a_ratio = a.ratio;
    opts.b_ratio = b.ratio;
    const TrinomialEq eq{A.value, a.value, B.value, b.value, C.value};

    Json results = Json::array();
    std::vector<std::string> failures;
    int converged = 0;
    for (int n : cli::parse_branch_list(n_s)) {
        try {
            const RootReport rep = pipeline == "abc" ? solver_abc(n, eq, opts)
                                                     : solver_aabbc(n, eq, opts);
            Json row = Json::object();
            row.add("n", Json::integer(n));
            row.add("value_re", Json::num(rep.Y.real()));
            row.add("value_im", Json::num(rep.Y.imag()));
            row.add("transform", Json::str(to_string(rep.transform)));
            row.add("N", Json::integer(rep.N));
            row.add("u", Json::integer(rep.u));
            row.add("residual", Json::num(rep.residual));
            row.add("terms_used", Json::integer(rep.eval.terms_used));
            row.add("status", Json::str(to_string(rep.eval.status)));
            row.add("pipeline", Json::str(pipeline));
            if (rep.via_canonical) {
                row.add("canonical_x_re", Json::num(rep.canonical_x.real()));
                row.add("canonical_x_im", Json::num(rep.canonical_x.imag()));
            }
            results.push(std::move(row));
            if (rep.eval.status == SeriesStatus::converged) ++converged;
        } catch (const EvaluationError& e) {
            failures.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
    }
    emit(record_header("solve", {{"n", n_s},
                                 {"A", A_s},
                                 {"a", a_s},
                                 {"B", B_s},
                                 {"b", b_s},
                                 {"C", C_s},
                                 {"pipeline", pipeline}}),
         std::move(results), failures);
    if (converged == 0) {
        for (const std::string& f : failures) std::cerr << "solve: " << f << "\n";
        return 3;
    }
    return 0;
}

// ---------------------------------------------------------------- series ---

int cmd_series(const std::string& m_s, const std::string& a_s, const std::string& b_s,
               const std::string& x_s, int d, const std::string& c_s,
               const std::string& bs_s, const std::string& xs_s, const GlobalOpts& g) {
    const ParsedScalar m = cli::parse_scalar(m_s), a = cli::parse_scalar(a_s);
    const ParsedScalar b = cli::parse_scalar(b_s), x = cli::parse_scalar(x_s);
    const ParsedScalar c = cli::parse_scalar(c_s);

    SeriesEval ev;
    if (!bs_s.empty() || !xs_s.empty()) {
        if (bs_s.empty() || xs_s.empty())
            throw DomainError("--merged-b and --merged-x must be given together");
        if (d != 0 || c.value != Complex(1.0))
            throw DomainError("merged series does not combine with -d or -c");
        MergedParams mp;
        mp.m = m.value;
        mp.a = a.value;
        for (const ParsedScalar& p : cli::parse_scalar_list(bs_s)) mp.bs.push_back(p.value);
        for (const ParsedScalar& p : cli::parse_scalar_list(xs_s)) mp.xs.push_back(p.value);
        MergeOptions mo;
        if (g.max_terms_set) mo.max_total_order = g.max_terms;
        mo.rel_tol = g.tol;
        ev = merged_series(mp, mo);
    } else if (c.value != Complex(1.0)) {
        if (d != 0) throw DomainError("-c does not combine with -d");
        ev = super_master(m.value, a.value, b.value, x.value, c.value, series_opts(g));
    } else {
        ev = master_series({m.value, a.value, b.value}, x.value, d, series_opts(g));
    }

    Json row = Json::object();
    row.add("value_re", Json::num(ev.value.real()));
    row.add("value_im", Json::num(ev.value.imag()));
    row.add("terms_used", Json::integer(ev.terms_used));
    row.add("status", Json::str(to_string(ev.status)));
    row.add("last_term_mag", Json::num(ev.last_term_mag));

    std::vector<std::string> warnings;
    if (ev.status != SeriesStatus::converged)
        warnings.push_back(std::string("series ") + to_string(ev.status));
    emit(record_header("series", {{"m", m_s},
                                  {"a", a_s},
                                  {"b", b_s},
                                  {"x", x_s},
                                  {"d", std::to_string(d)},
                                  {"c", c_s},
                                  {"merged_b", bs_s},
                                  {"merged_x", xs_s}}),
         Json::array().push(std::move(row)), warnings);
    if (ev.status != SeriesStatus::converged) {
        std::cerr << "series: " << to_string(ev.status) << "\n";
        return 3;
    }
    return 0;
}

// ------------------------------------------------------------ trajectory ---

std::vector<int> default_branches(Complex a) {
    if (a.imag() == 0.0 && a.real() >= 1.0 && a.real() <= 64.0 &&
        a.real() == std::floor(a.real())) {
        std::vector<int> ns;
        for (int n = 0; n < static_cast<int>(a.real()); ++n) ns.push_back(n);
        return ns;
    }
    return {0};
}

double parse_arc_param(const std::string& tok, char name) {
    std::string t = cli::strip_spaces(tok);
    if (t.size() > 2 && (t[0] == name || t[0] == std::tolower(name)) && t[1] == '=')
        t = t.substr(2);
    double v;
    if (!cli::parse_double(t, v))
        throw DomainError(std::string("bad arc parameter '") + tok + "'");
    return v;
}

int cmd_trajectory(const std::string& n_s, const std::string& a_s, const std::string& b_s,
                   const std::string& from_s, const std::string& to_s, int steps,
                   const std::vector<std::string>& arc, const GlobalOpts& g) {
    const ParsedScalar a = cli::parse_scalar(a_s);
    const ParsedScalar b = cli::parse_scalar(b_s);
    const std::vector<int> ns =
        n_s.empty() ? default_branches(a.value) : cli::parse_branch_list(n_s);

    std::vector<Complex> xs;
    if (!arc.empty()) {
        if (arc.size() != 2) throw DomainError("--arc takes two values: P Q");
        const double P = parse_arc_param(arc[0], 'P');
        const double Q = parse_arc_param(arc[1], 'Q');
        const Radius R = convergence_radius(a.value, b.value);
        if (R.kind != RadiusKind::finite)
            throw DomainError("--arc needs a finite convergence radius");
        xs.push_back(P * R.value * std::exp(Complex(0.0, Q * kPi / 4.0)));
    } else {
        if (from_s.empty() || to_s.empty())
            throw DomainError("trajectory needs --from/--to or --arc");
        if (steps < 1) throw DomainError("--steps must be >= 1");
        const Complex x0 = cli::parse_scalar(from_s).value;
        const Complex x1 = cli::parse_scalar(to_s).value;
        if (steps == 1) {
            xs.push_back(x0);
        } else {
            for (int i = 0; i < steps; ++i)
                xs.push_back(x0 + (x1 - x0) * (static_cast<double>(i) / (steps - 1)));
        }
    }

    RadicalOptions opts;
    opts.series = series_opts(g);
    opts.u_max = g.u_max;

    struct Row {
        Complex x;
        int n;
        bool ok;
        BranchValue bv;
    };
    std::vector<Row> rows;
    for (const Complex& x : xs)
        for (int n : ns) {
            Row r{x, n, true, {}};
            try {
                r.bv = ultra_radical(n, a.value, b.value, x, opts);
            } catch (const Error&) {
                r.ok = false;
            }
            rows.push_back(std::move(r));
        }

    if (g.format == "csv") {
        std::string out = "x_re,x_im,n,y_re,y_im,J,N,u,status\n";
        for (const Row& r : rows) {
            out += fmt17(r.x.real()) + "," + fmt17(r.x.imag()) + "," + std::to_string(r.n) + ",";
            if (r.ok) {
                out += fmt17(r.bv.y.real()) + "," + fmt17(r.bv.y.imag()) + "," +
                       to_string(r.bv.spec.J) + "," + std::to_string(r.bv.spec.N) + "," +
                       std::to_string(r.bv.u) + "," + to_string(r.bv.eval.status);
            } else {
                out += ",,,0,0,error";
            }
            out += "\n";
        }
        std::cout << out;
        return 0;
    }
    if (g.format != "structured") throw DomainError("--format must be csv or structured");

    Json results = Json::array();
    for (const Row& r : rows) {
        Json row = Json::object();
        row.add("x_re", Json::num(r.x.real()));
        row.add("x_im", Json::num(r.x.imag()));
        row.add("n", Json::integer(r.n));
        if (r.ok) {
            row.add("y_re", Json::num(r.bv.y.real()));
            row.add("y_im", Json::num(r.bv.y.imag()));
            row.add("J", Json::str(to_string(r.bv.spec.J)));
            row.add("N", Json::integer(r.bv.spec.N));
            row.add("u", Json::integer(r.bv.u));
            row.add("status", Json::str(to_string(r.bv.eval.status)));
        } else {
            row.add("y_re", Json::null());
            row.add("y_im", Json::null());
            row.add("J", Json::str(""));
            row.add("N", Json::integer(0));
            row.add("u", Json::integer(0));
            row.add("status", Json::str("error"));
        }
        results.push(std::move(row));
    }
    emit(record_header("trajectory", {{"n", n_s},
                                      {"a", a_s},
                                      {"b", b_s},
                                      {"from", from_s},
                                      {"to", to_s},
                                      {"steps", std::to_string(steps)}}),
         std::move(results), {});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"master power series, ultra-radical branches and trinomial solvers"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--max-terms", g.max_terms, "series term budget")
        ->envname("ULTRA_MAX_TERMS");
    app.add_option("--tol", g.tol, "relative series tolerance")->envname("ULTRA_TOL");
    app.add_option("--u-max", g.u_max, "verification log-branch window")
        ->envname("ULTRA_U_MAX");
    app.add_option("--format", g.format, "trajectory output format: csv|structured")
        ->envname("ULTRA_FORMAT");
    app.fallthrough();

    std::string n_s = "0", a_s, b_s, x_s, m_s = "1", c_s = "1";
    std::string A_s, B_s, C_s, pipeline = "abc";
    std::string from_s, to_s, bs_s, xs_s, n_traj;
    std::vector<std::string> arc;
    int d = 0, steps = 1;

    CLI::App* radius = app.add_subcommand("radius", "convergence radius of the series");
    radius->add_option("--a", a_s)->required();
    radius->add_option("--b", b_s)->required();

    CLI::App* ultra_cmd = app.add_subcommand("ultra", "branches of y^a = 1 + a*x*y^b");
    ultra_cmd->add_option("-n,--n", n_s, "branch index or list");
    ultra_cmd->add_option("--a", a_s)->required();
    ultra_cmd->add_option("--b", b_s)->required();
    ultra_cmd->add_option("--x", x_s)->required();

    CLI::App* solve = app.add_subcommand("solve", "roots of A*Y^a + B*Y^b + C = 0");
    solve->add_option("-n,--n", n_s, "root index or list");
    solve->add_option("--A", A_s)->required();
    solve->add_option("--a", a_s)->required();
    solve->add_option("--B", B_s)->required();
    solve->add_option("--b", b_s)->required();
    solve->add_option("--C", C_s)->required();
    solve->add_option("--pipeline", pipeline, "abc | aabbc");

    CLI::App* series = app.add_subcommand("series", "evaluate the master series");
    series->add_option("--m", m_s);
    series->add_option("--a", a_s)->required();
    series->add_option("--b", b_s)->required();
    series->add_option("--x", x_s)->required();
    series->add_option("-d,--d", d, "shift: d>0 integrals, d<0 derivatives");
    series->add_option("-c,--c", c_s, "super-series multiplier");
    series->add_option("--merged-b", bs_s, "merged-core exponents b1,b2,...");
    series->add_option("--merged-x", xs_s, "merged-core arguments x1,x2,...");

    CLI::App* traj = app.add_subcommand("trajectory", "branch values along an x sweep");
    traj->add_option("-n,--n", n_traj, "branch list (default: one period)");
    traj->add_option("--a", a_s)->required();
    traj->add_option("--b", b_s)->required();
    traj->add_option("--from", from_s);
    traj->add_option("--to", to_s);
    traj->add_option("--steps", steps);
    traj->add_option("--arc", arc, "P Q: single point x = P*R*exp(Q*pi*i/4)")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.max_terms_set = app.count("--max-terms") > 0;

    try {
        if (*radius) return cmd_radius(a_s, b_s);
        if (*ultra_cmd) return cmd_ultra(n_s, a_s, b_s, x_s, g);
        if (*solve) return cmd_solve(n_s, A_s, a_s, B_s, b_s, C_s, pipeline, g);
        if (*series) return cmd_series(m_s, a_s, b_s, x_s, d, c_s, bs_s, xs_s, g);
        if (*traj) return cmd_trajectory(n_traj, a_s, b_s, from_s, to_s, steps, arc, g);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvaluationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
