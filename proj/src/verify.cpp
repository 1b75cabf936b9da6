#include "qpart/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qpart/errors.hpp"
#include "qpart/gap.hpp"
#include "qpart/kernels.hpp"
#include "qpart/measures.hpp"
#include "qpart/oppainleve.hpp"
#include "qpart/partitions.hpp"
#include "qpart/qspecial.hpp"

namespace qpart {

namespace {

const std::vector<double> kQSchedule{0.9, 0.97, 0.99};

Check make(std::string id, std::string ref, double measured, double tol, std::string note = {})
{
    const bool pass = std::isfinite(measured) && measured <= tol;
    return {std::move(id), std::move(ref), measured, tol, pass, std::move(note)};
}

// number of i with dev[i] >= dev[i-1]
double monotone_violations(const std::vector<double>& dev)
{
    double v = 0.0;
    for (std::size_t i = 1; i < dev.size(); ++i)
        if (!(dev[i] < dev[i - 1]))
            v += 1.0;
    return v;
}

void special_checks(const QParams& p, std::vector<Check>& out)
{
    const double m1 = macmahon(p), m2 = macmahon_exponential(p);
    out.push_back(make("special.macmahon_forms", "product and exponential forms of M(xi;q)",
                       std::abs(m1 - m2) / m1, 1e-13));

    // plane partition counts
    const std::vector<std::uint64_t> known{1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
    const auto coeffs = macmahon_series_coefficients(static_cast<int>(known.size()) - 1);
    double bad = 0.0;
    for (std::size_t i = 0; i < known.size(); ++i)
        bad += coeffs[i] != known[i];
    out.push_back(make("special.macmahon_coefficients", "series coefficients of M count plane partitions", bad, 0.0));

    const double x = 2.0 * p.xi() * std::sqrt(p.q());
    double dev = 0.0;
    if (x > 0.0) {
        for (int kind : {1, 2})
            for (int nu = 0; nu <= 4; ++nu) {
                const double a = modified_q_bessel(kind, nu, x, p.q(), p.control(), ModifiedRoute::power_series);
                const double b = modified_q_bessel(kind, nu, x, p.q(), p.control(), ModifiedRoute::hypergeometric);
                dev = std::max(dev, std::abs(a - b) / std::max(std::abs(a), 1e-300));
            }
    }
    out.push_back(make("special.modified_bessel_routes", "power series and 1phi1 forms of I^(1), I^(2)", dev, 1e-12));

    for (auto [w, v, id] : {std::tuple{Weight::I, SymbolVariant::I, "special.symbol_fourier_I"},
                            std::tuple{Weight::I_check, SymbolVariant::I_check, "special.symbol_fourier_I_check"}}) {
        const KernelTable t = fourier_coefficients(w, p, -8, 8);
        double d = 0.0;
        for (int n = -8; n <= 8; ++n)
            d = std::max(d, std::abs(t.at(n) - symbol_coefficient(v, n, p)));
        out.push_back(make(id, "Fourier coefficients of the weight equal the modified q-Bessel moments", d, 1e-12));
    }

    const KernelTable j = fourier_coefficients(Weight::J_gen, p, -8, 8);
    double dj = 0.0;
    for (int n = -8; n <= 8; ++n)
        dj = std::max(dj, std::abs(j.at(n) - std::pow(p.q(), 0.5 * n) * q_bessel(3, n, 2.0 * p.xi(), p.q(), p.control())));
    out.push_back(make("special.hahn_exton_generating", "Laurent coefficients of (a/z)/(az) are q^{n/2} J^(3)_n(2 xi)", dj,
                       1e-12));
}

void measure_checks(const QParams& p, std::vector<Check>& out)
{
    for (auto [kind, id] : {std::pair<MeasureKind, const char*>{QppSquared{p}, "measures.normalization_squared"},
                            std::pair<MeasureKind, const char*>{QppMixed{p}, "measures.normalization_mixed"}}) {
        const double s = normalization_partial_sum(kind, 25);
        const double m = s > 1.0 + 1e-12 ? INFINITY : 1.0 - s;
        out.push_back(make(id, "total mass over |lambda| <= 25 lies in [1 - 1e-8, 1]", m, 1e-8));
    }

    double bad = 0.0;
    for (int n = 0; n <= 8; ++n) {
        BigInt s = 0;
        for (const Partition& l : partitions_of(n)) {
            const BigInt d = dimension(l);
            s += d * d;
        }
        BigInt f = 1;
        for (int k = 2; k <= n; ++k)
            f *= k;
        bad += s != f;
    }
    out.push_back(make("measures.dimension_square_sum", "sum of (dim lambda)^2 over lambda of n equals n!", bad, 0.0));

    // q -> 1 chain at eta = 1 on a few small partitions
    std::vector<double> dsq(kQSchedule.size(), 0.0), dmx(kQSchedule.size(), 0.0);
    for (const Partition& l : {Partition(), Partition({1}), Partition({2, 1}), Partition({3, 1})}) {
        const auto rows = q_limit_check(l, 1.0, kQSchedule);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            dsq[i] = std::max(dsq[i], std::abs(rows[i].squared - rows[i].pp));
            dmx[i] = std::max(dmx[i], std::abs(rows[i].mixed - rows[i].pp));
        }
    }
    out.push_back(make("measures.q_limit_squared", "squared measure tends to Poissonized Plancherel as q -> 1",
                       monotone_violations(dsq), 0.0));
    out.push_back(make("measures.q_limit_mixed", "mixed measure tends to Poissonized Plancherel as q -> 1",
                       monotone_violations(dmx), 0.0));
}

void kernel_checks(const QParams& p, std::vector<Check>& out)
{
    const SchurKernel sk(MiwaTimes::principal(p.xi(), p.q()), MiwaTimes::principal(p.xi(), p.q()));
    const QBesselKernel qk(p);
    double d = 0.0;
    for (int a = -15; a <= 15; a += 2)
        for (int b = -15; b <= 15; b += 2) {
            const HalfInteger r = HalfInteger::from_twice(a), s = HalfInteger::from_twice(b);
            d = std::max(d, std::abs(sk(r, s) - qk(r, s)));
        }
    out.push_back(make("kernels.schur_vs_q_bessel", "Schur kernel of the squared measure equals the q-Bessel kernel", d,
                       1e-10));

    // one- and two-point correlations against enumeration
    std::vector<HalfInteger> pts;
    for (int a = -11; a <= 11; a += 2)
        pts.push_back(HalfInteger::from_twice(a));
    const int np = static_cast<int>(pts.size());
    std::vector<double> one(np, 0.0), two(np * np, 0.0);
    double mass = 0.0;
    const MeasureKind kind = QppSquared{p};
    enumerate_partitions(22, [&](const Partition& l) {
        const double m = measure(kind, l);
        mass += m;
        std::vector<char> in(np, 0);
        for (const HalfInteger& c : fermionic_coordinates(l, l.length() + 7)) {
            const int idx = (c.twice() + 11) / 2;
            if (c.twice() >= -11 && c.twice() <= 11)
                in[idx] = 1;
        }
        for (int i = 0; i < np; ++i) {
            if (!in[i])
                continue;
            one[i] += m;
            for (int j = i + 1; j < np; ++j)
                if (in[j])
                    two[i * np + j] += m;
        }
    });
    const KernelFn k = make_kernel(kind);
    double dc = 0.0;
    for (int i = 0; i < np; ++i) {
        dc = std::max(dc, std::abs(correlation(k, {pts[i]}) - one[i]));
        for (int j = i + 1; j < np; ++j)
            dc = std::max(dc, std::abs(correlation(k, {pts[i], pts[j]}) - two[i * np + j]));
    }
    out.push_back(make("kernels.determinantal_law", "det K on 1- and 2-point sets equals enumerated probabilities", dc,
                       1e-5, "unenumerated mass " + std::to_string(1.0 - mass)));

    std::vector<double> dev;
    for (double q : kQSchedule) {
        const QParams pq(q, 1.0 - q);
        const HalfInteger r = HalfInteger::above(0), s = HalfInteger::above(1);
        dev.push_back(std::abs(q_bessel_kernel(pq, r, s) - discrete_bessel_kernel(1.0, r, s)));
    }
    out.push_back(make("kernels.q_to_1_discrete_bessel", "q-Bessel kernel tends to the discrete Bessel kernel",
                       monotone_violations(dev), 0.0));

    const LimitShape ls(0.5);
    const auto bulk = scaling_probe_bulk(0.5, 0.5 * (ls.a() + ls.b()), 1, kQSchedule);
    out.push_back(make("kernels.bulk_scaling", "bulk deviation from the sine kernel decreases", bulk.monotone_decreasing ? 0.0 : 1.0,
                       0.0));
    const auto edge = scaling_probe_edge(0.5, 0.0, 0.0, kQSchedule);
    out.push_back(make("kernels.edge_scaling", "edge deviation from the Airy kernel decreases",
                       edge.monotone_decreasing ? 0.0 : 1.0, 0.0));

    const double a1 = limit_shape(1.0 - 1e-12).a();
    out.push_back(make("kernels.limit_shape_a_at_xi_1", "a tends to -2 log 2 = -1.386 as xi -> 1",
                       std::abs(std::round(a1 * 1000.0) / 1000.0 + 1.386), 1e-12));
    double dab = 0.0;
    for (double xi : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const LimitShape s(xi);
        double series = 0.0;
        for (int n = 1; n < 2000; ++n)
            series += 2.0 * std::pow(xi, n) / n;
        dab = std::max({dab, std::abs(s.alpha0() + 2.0 * std::log(1.0 - xi)) / std::abs(s.alpha0()),
                        std::abs(s.beta0() - xi / ((1.0 - xi) * (1.0 - xi))) / s.beta0(),
                        std::abs(s.alpha0() - series) / series});
    }
    out.push_back(make("kernels.edge_constants", "alpha_0 = -2 log(1 - xi) = 2 sum xi^n/n, beta_0 = xi/(1-xi)^2", dab,
                       1e-14));
}

void gap_checks(const QParams& p, std::vector<Check>& out)
{
    double dtf = 0.0, dte = 0.0;
    for (double xi : {0.1, 0.3, 0.5})
        for (double q : {0.3, 0.5, 0.7}) {
            const QParams g(q, xi, p.control());
            for (GapVariant v : {GapVariant::length, GapVariant::first_part})
                for (int N = 0; N <= 6; ++N) {
                    const GapQuery qu{v, N, g};
                    const double t = gap_probability(qu, ToeplitzMethod{}).value;
                    dtf = std::max(dtf, std::abs(t - gap_probability(qu, FredholmMethod{}).value));
                    dte = std::max(dte, std::abs(t - gap_probability(qu, EnumerationMethod{}).value));
                }
        }
    out.push_back(make("gap.toeplitz_vs_fredholm", "Toeplitz and Fredholm gap probabilities agree on the grid", dtf, 1e-10));
    out.push_back(make("gap.toeplitz_vs_enumeration", "Toeplitz and enumerated gap probabilities agree on the grid", dte,
                       1e-6));

    for (auto [v, id] : {std::pair{SymbolVariant::I, "gap.z_infinity"}, std::pair{SymbolVariant::I_check, "gap.z_check_infinity"}}) {
        const double z = toeplitz_det(v, 30, 0, p).value;
        out.push_back(make(id, "Z_30 approaches M(xi;q)", std::abs(z / macmahon(p) - 1.0), 1e-10));
    }

    for (auto [v, id] : {std::pair{GapVariant::length, "gap.monotone_length"},
                         std::pair{GapVariant::first_part, "gap.monotone_first_part"}}) {
        const auto scan = monotonicity_scan(v, p, 30);
        double bad = 0.0;
        for (std::size_t i = 1; i < scan.size(); ++i)
            bad += scan[i] < scan[i - 1] - 1e-14;
        bad += std::abs(scan.back() - 1.0) > 1e-10;
        out.push_back(make(id, "gap probability is nondecreasing in N and reaches 1", bad, 0.0));
    }
}

void painleve_checks(const QParams& p, std::vector<Check>& out)
{
    static const char* ids[] = {"painleve.dpii_x",          "painleve.dpii_y",           "painleve.lax_compatibility",
                                "painleve.lax_det_k",       "painleve.lax_inversion",    "painleve.qpv_x",
                                "painleve.qpv_y",           "painleve.recurrence_vs_det", "painleve.rhp_det",
                                "painleve.rhp_jump",        "painleve.rhp_y0",           "painleve.tail_comparator",
                                "painleve.tau_relation",    "painleve.zx_relation"};
    if (!(p.xi() > 0.0)) {
        for (const char* id : ids)
            out.push_back(make(id, "not applicable at xi = 0", 0.0, 0.0, "skipped"));
        return;
    }

    for (auto [b, id] : {std::pair{PainleveBranch::x, "painleve.qpv_x"}, std::pair{PainleveBranch::y, "painleve.qpv_y"}}) {
        const auto st = painleve_trajectory(b, PainleveSource::determinant, p, 13);
        const auto r = qpv_residuals(st);
        out.push_back(make(id, "determinant data satisfy the q-P_V recurrence, n = 1..12",
                           *std::max_element(r.begin() + 1, r.end()), 1e-7));
    }

    double drec = 0.0, tail = 0.0;
    for (PainleveBranch b : {PainleveBranch::x, PainleveBranch::y}) {
        const auto det = painleve_trajectory(b, PainleveSource::determinant, p, 12);
        const auto rec = painleve_trajectory(b, PainleveSource::recurrence, p, 12);
        for (int n = 0; n <= 12; ++n)
            drec = std::max(drec, std::abs(rec.values[n] - det.values[n]) / std::abs(det.values[n]));
        const auto tc = tail_comparator(det);
        tail = std::max(tail, std::abs(tc[12] - 1.0));
    }
    out.push_back(make("painleve.recurrence_vs_det", "forward recurrence reproduces determinant data", drec, 1e-7));
    out.push_back(make("painleve.tail_comparator", "values approach the Hahn-Exton q-Bessel tail", tail, 1e-6));

    double comp = 0.0, inv = 0.0, dk = 0.0, ddet = 0.0, dy0 = 0.0, jump = 0.0, tau = 0.0, zx = 0.0;
    const std::vector<std::complex<double>> probes{{0.37, 0.21}, {2.6, 0.3}, {-1.1, 0.7}, {0.2, -1.5}, {1.3, 1.3}};
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const OPSequence op = op_sequence(v, p, 15);
        for (int n = 1; n <= 10; ++n) {
            const LaxReport rep = lax_checks(n, op, probes);
            dk = std::max(dk, std::abs(rep.det_k + 1.0));
            for (const auto& pr : rep.probes) {
                comp = std::max(comp, pr.compatibility);
                inv = std::max(inv, pr.inversion);
            }
        }
        for (int n = 1; n <= 8; ++n) {
            ddet = std::max(ddet, std::abs(rhp_sample(op, n, {2.0, 0.0}).det_Y - 1.0));
            const Mat2 y0 = rhp_sample(op, n, {0.0, 0.0}).Y;
            Mat2 want;
            want << op.x[n], 1.0 / op.kappa_sq[n], -op.kappa_sq[n - 1], op.x[n];
            dy0 = std::max(dy0, (y0 - want).cwiseAbs().maxCoeff());
        }
        for (int n : {1, 4})
            for (double th : {0.3, 2.0})
                jump = std::max(jump, rhp_jump_residual(op, n, th));
        for (const auto& r : tau_relation_check(v, p, 2, 12))
            tau = std::max(tau, std::abs(r.residual));
        for (int n = 1; n <= 15; ++n)
            zx = std::max(zx, std::abs(op.zx_ratio[n] - op.one_minus_x_sq(n)));
    }
    out.push_back(make("painleve.lax_compatibility", "U_n(qz) T_n(z) = T_{n+1}(z) U_n(z), n <= 10", comp, 1e-8));
    out.push_back(make("painleve.lax_inversion", "T_n(z)^{-1} = q^{-n} K_n T_n(1/(qz)) K_n, n <= 10", inv, 1e-8));
    out.push_back(make("painleve.lax_det_k", "det K_n = -1", dk, 1e-15));
    out.push_back(make("painleve.rhp_det", "det Y_n(2) = 1, n <= 8", ddet, 1e-8));
    out.push_back(make("painleve.rhp_y0", "Y_n(0) = [[x_n, kappa_n^-2], [-kappa_{n-1}^2, x_n]]", dy0, 1e-8));
    out.push_back(make("painleve.rhp_jump", "Y_+ J^{-1} = Y_- on the circle", jump, 1e-4));
    out.push_back(make("painleve.tau_relation", "second difference of log Z_n equals log(1 - x_n^2), n = 2..12", tau, 1e-9));
    out.push_back(make("painleve.zx_relation", "Z_{n+1} Z_{n-1} / Z_n^2 = 1 - x_n^2, n <= 15", zx, 1e-9));

    for (auto [v, id] : {std::pair{OPVariant::plain, "painleve.dpii_x"}, std::pair{OPVariant::check, "painleve.dpii_y"}}) {
        const auto rows = dpii_limit_check(1.0, kQSchedule, {1, 2, 3, 4, 5}, v);
        std::vector<double> dev;
        for (const auto& r : rows)
            dev.push_back(r.max_residual);
        out.push_back(make(id, "d-P_II residual decreases as q -> 1 with xi = (1-q) eta", monotone_violations(dev), 0.0));
    }
}

}  // namespace

Suite parse_suite(const std::string& name)
{
    static const std::map<std::string, Suite> m{{"special", Suite::special}, {"measures", Suite::measures},
                                                {"kernels", Suite::kernels}, {"gap", Suite::gap},
                                                {"painleve", Suite::painleve}, {"all", Suite::all}};
    const auto it = m.find(name);
    if (it == m.end())
        throw DomainError("unknown suite '" + name + "'");
    return it->second;
}

std::string suite_name(Suite s)
{
    switch (s) {
    case Suite::special: return "special";
    case Suite::measures: return "measures";
    case Suite::kernels: return "kernels";
    case Suite::gap: return "gap";
    case Suite::painleve: return "painleve";
    case Suite::all: return "all";
    }
    return "all";
}

std::vector<Check> run_suite(Suite s, const QParams& p)
{
    std::vector<Check> out;
    const bool all = s == Suite::all;
    if (all || s == Suite::special)
        special_checks(p, out);
    if (all || s == Suite::measures)
        measure_checks(p, out);
    if (all || s == Suite::kernels)
        kernel_checks(p, out);
    if (all || s == Suite::gap)
        gap_checks(p, out);
    if (all || s == Suite::painleve)
        painleve_checks(p, out);
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.check_id < b.check_id; });
    return out;
}

}  // namespace qpart
