#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpart/errors.hpp"
#include "qpart/gap.hpp"
#include "qpart/kernels.hpp"
#include "qpart/oppainleve.hpp"
#include "qpart/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qpart;

namespace {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

// Rows of numbers or strings, rendered as CSV or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string fmt(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string csv_cell(const json& v)
{
    if (v.is_number_float())
        return fmt(v.get<double>());
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return v.dump();
}

std::string render(const Table& t, const std::string& format, const json& meta)
{
    std::ostringstream os;
    if (format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << (i ? "," : "") << csv_cell(r[i]);
            os << "\n";
        }
        return os.str();
    }
    json doc = meta;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.size(); ++i)
            o[t.columns[i]] = r[i];
        rows.push_back(std::move(o));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw DomainError("cannot open output file " + out);
    f << text;
}

json params_json(const QParams& p)
{
    return {{"xi", p.xi()}, {"q", p.q()}, {"tail_tol", p.tail_tol()}, {"max_terms", p.max_terms()}};
}

struct Options {
    double xi = 0.3;
    double q = 0.5;
    int n_max = -1;
    std::string variant = "length";
    std::string method = "toeplitz";
    std::string format = "csv";
    std::string out;
    std::string suite = "all";
    int grid_points = 201;
    std::string branch = "x";
    std::string source = "determinant";
};

int cmd_verify(const Options& o, const QParams& p)
{
    const Suite s = parse_suite(o.suite);
    const auto checks = run_suite(s, p);
    bool ok = true;
    Table t{{"check_id", "reference", "measured", "tolerance", "pass", "note"}, {}};
    for (const auto& c : checks) {
        ok = ok && c.pass;
        t.rows.push_back({c.check_id, c.reference, c.measured, c.tolerance, c.pass, c.note});
    }
    json meta = {{"command", "verify"}, {"suite", suite_name(s)}, {"params", params_json(p)}, {"pass", ok}};
    emit(render(t, o.format, meta), o.out);
    return ok ? kPass : kFail;
}

int cmd_limit_shape(const Options& o)
{
    if (o.grid_points < 2)
        throw DomainError("grid-points must be at least 2");
    const LimitShape ls(o.xi);
    const double lo = ls.a() - 1.0, hi = ls.b() + 1.0;
    std::vector<double> xs;
    for (int i = 0; i < o.grid_points; ++i)
        xs.push_back(lo + (hi - lo) * i / (o.grid_points - 1));
    xs.push_back(ls.a());
    xs.push_back(ls.b());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Table t{{"x", "rho", "omega"}, {}};
    for (double x : xs)
        t.rows.push_back({x, ls.rho(x), ls.omega(x)});
    json meta = {{"command", "limit-shape"}, {"xi", o.xi}, {"a", ls.a()}, {"b", ls.b()}};
    emit(render(t, o.format, meta), o.out);
    return kPass;
}

int cmd_gap_table(const Options& o, const QParams& p)
{
    GapVariant v;
    if (o.variant == "length")
        v = GapVariant::length;
    else if (o.variant == "first-part")
        v = GapVariant::first_part;
    else
        throw DomainError("variant must be length or first-part");
    const int n_max = o.n_max < 0 ? 10 : o.n_max;
    if (n_max > 40)
        throw DomainError("n-max must not exceed 40 for gap-table");
    const std::map<std::string, GapMethod> methods{
        {"toeplitz", ToeplitzMethod{}}, {"fredholm", FredholmMethod{}}, {"enumeration", EnumerationMethod{}}};
    Table t;
    if (o.method == "all") {
        t.columns = {"N", "toeplitz", "fredholm", "enumeration", "enumeration_tail", "max_discrepancy"};
        for (int N = 0; N <= n_max; ++N) {
            const GapQuery qu{v, N, p};
            const double a = gap_probability(qu, ToeplitzMethod{}).value;
            const double b = gap_probability(qu, FredholmMethod{}).value;
            const GapResult e = gap_probability(qu, EnumerationMethod{});
            const double d = std::max({std::abs(a - b), std::abs(a - e.value), std::abs(b - e.value)});
            t.rows.push_back({N, a, b, e.value, e.error_bound, d});
        }
    } else {
        const auto it = methods.find(o.method);
        if (it == methods.end())
            throw DomainError("method must be toeplitz, fredholm, enumeration or all");
        t.columns = {"N", "probability", "error_bound"};
        for (int N = 0; N <= n_max; ++N) {
            const GapResult r = gap_probability({v, N, p}, it->second);
            t.rows.push_back({N, r.value, r.error_bound});
        }
    }
    json meta = {{"command", "gap-table"}, {"variant", o.variant}, {"method", o.method}, {"params", params_json(p)}};
    emit(render(t, o.format, meta), o.out);
    return kPass;
}

int cmd_painleve(const Options& o, const QParams& p)
{
    PainleveBranch b;
    if (o.branch == "x")
        b = PainleveBranch::x;
    else if (o.branch == "y")
        b = PainleveBranch::y;
    else
        throw DomainError("branch must be x or y");
    PainleveSource s;
    if (o.source == "determinant")
        s = PainleveSource::determinant;
    else if (o.source == "recurrence")
        s = PainleveSource::recurrence;
    else
        throw DomainError("source must be determinant or recurrence");
    const int n_max = o.n_max < 0 ? 16 : o.n_max;
    const PainleveState st = painleve_trajectory(b, s, p, n_max);
    const auto res = qpv_residuals(st);
    const auto tc = tail_comparator(st);
    Table t;
    if (b == PainleveBranch::x)
        t.columns = {"n", "x", "residual", "comparator"};
    else
        t.columns = {"n", "y_sq", "y_prod", "residual", "comparator"};
    for (int n = 0; n <= n_max; ++n) {
        const double r = n >= 1 && n < n_max ? res[n] : NAN;
        if (b == PainleveBranch::x)
            t.rows.push_back({n, st.values[n], r, tc[n]});
        else
            t.rows.push_back({n, st.y_sq(n), n < n_max ? st.y_prod(n) : NAN, r, tc[n]});
    }
    json meta = {{"command", "painleve"}, {"branch", o.branch}, {"source", o.source}, {"params", params_json(p)}};
    emit(render(t, o.format, meta), o.out);
    return kPass;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-deformed random partitions: verification suites and data tables"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--xi", o.xi, "xi in [0,1)");
        c->add_option("--q", o.q, "q in [0,1)");
        c->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", o.out, "output path (stdout by default)");
    };
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("suite", o.suite, "special, measures, kernels, gap, painleve or all")
        ->check(CLI::IsMember({"special", "measures", "kernels", "gap", "painleve", "all"}));
    auto* shape = app.add_subcommand("limit-shape", "tabulate rho and Omega");
    common(shape);
    shape->add_option("--grid-points", o.grid_points, "number of x samples on [a-1, b+1]");
    auto* gap = app.add_subcommand("gap-table", "gap probabilities for N = 0..n-max");
    common(gap);
    gap->add_option("--variant", o.variant, "length or first-part");
    gap->add_option("--method", o.method, "toeplitz, fredholm, enumeration or all");
    gap->add_option("--n-max", o.n_max, "largest N");
    auto* pv = app.add_subcommand("painleve", "q-P_V trajectory with residual and tail comparator");
    common(pv);
    pv->add_option("--branch", o.branch, "x or y");
    pv->add_option("--source", o.source, "determinant or recurrence");
    pv->add_option("--n-max", o.n_max, "largest index (at most 25)");
    // the shared grammar accepts these everywhere
    for (auto* c : {verify, shape})
        c->add_option("--n-max", o.n_max, "unused");
    for (auto* c : {verify, shape, pv}) {
        c->add_option("--variant", o.variant, "unused");
        c->add_option("--method", o.method, "unused");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*shape)
            return cmd_limit_shape(o);
        const QParams p(o.q, o.xi, SeriesControl::from_environment());
        if (*verify)
            return cmd_verify(o, p);
        if (*gap)
            return cmd_gap_table(o, p);
        return cmd_painleve(o, p);
    } catch (const DomainError& e) {
        std::cerr << "qpart: " << e.what() << "\n";
        return kUsage;
    } catch (const LimitExceeded& e) {
        std::cerr << "qpart: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "qpart: " << e.what() << "\n";
        return kFail;
    }
}
