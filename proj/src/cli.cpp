#include "fraczeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <variant>

#include "fraczeta/fracdiff.hpp"
#include "fraczeta/primes.hpp"
#include "fraczeta/transfer.hpp"
#include "fraczeta/zeta.hpp"

namespace fraczeta::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    json meta = json::object();
};

struct OutputSpec {
    std::string format = "csv";
    std::string path;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const Table& t, std::ostream& os) {
    os << "# meta: " << t.meta.dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        os << format_double(v);
                    else
                        os << v;
                },
                row[i]);
        }
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os) {
    json doc = json::object();
    json meta = t.meta;
    meta["columns"] = t.columns;
    doc["meta"] = meta;
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& cell : row) std::visit([&](const auto& v) { r.push_back(v); }, cell);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump() << '\n';
}

void emit(const Table& t, const OutputSpec& spec, std::ostream& out) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!spec.path.empty()) {
        file.open(spec.path, std::ios::binary | std::ios::trunc);
        if (!file) throw ConfigError("cannot open output file " + spec.path);
        os = &file;
    }
    if (spec.format == "json")
        write_json(t, *os);
    else
        write_csv(t, *os);
}

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

void add_output_flags(CLI::App* sub, OutputSpec& spec) {
    sub->add_option("--format", spec.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", spec.path, "output file (default: stdout)");
}

// ---------------------------------------------------------------- transfer

struct TransferArgs {
    double z0 = 1, vc = 1, d = 2, vmin = 1e-3, vmax = 1e3;
    std::int64_t points = 50;
    bool log_spacing = false;
};

Table cmd_transfer(const TransferArgs& a) {
    const transfer::ColeColeParams params{a.z0, a.vc, a.d};
    params.validate();
    const auto grid = transfer::frequency_grid(a.vmin, a.vmax, a.points, a.log_spacing);
    const auto values = transfer::sweep(params, grid);
    const auto arc = transfer::arc_geometry(params);

    Table t;
    t.columns = {"v", "re", "im", "modulus", "phase_deg"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex z = values[i];
        t.rows.push_back({grid[i], z.real(), z.imag(), std::abs(z), degrees(std::arg(z))});
    }
    t.meta["command"] = "transfer";
    t.meta["z0"] = a.z0;
    t.meta["vc"] = a.vc;
    t.meta["d"] = a.d;
    t.meta["vmin"] = a.vmin;
    t.meta["vmax"] = a.vmax;
    t.meta["points"] = a.points;
    t.meta["log"] = a.log_spacing;
    t.meta["arc_geometry"] = {{"center", {arc.center.real(), arc.center.imag()}},
                              {"radius", arc.radius},
                              {"chord", arc.chord},
                              {"depression_angle", arc.depression_angle}};
    t.meta["fractional_phase"] = 0.5 * std::numbers::pi / a.d;
    return t;
}

// ------------------------------------------------------------------- relax

struct RelaxArgs {
    double z0 = 1, vc = 1, d = 2, freq = 1, h = 1e-3;
    std::string drive = "step";
    std::optional<std::int64_t> steps;
};

Table cmd_relax(const RelaxArgs& a) {
    const transfer::ColeColeParams params{a.z0, a.vc, a.d};
    params.validate();
    if (!(a.h > 0.0)) throw DomainError("h must be > 0");
    const bool sine = a.drive == "sin";
    if (sine && !(a.freq > 0.0)) throw DomainError("freq must be > 0");

    std::int64_t steps = 10'000;
    if (a.steps)
        steps = *a.steps;
    else if (sine)
        steps = std::min<std::int64_t>(
            fracdiff::kMaxSamples, static_cast<std::int64_t>(std::ceil(12.0 * 2.0 * std::numbers::pi / (a.freq * a.h))) + 1);
    if (steps < 2) throw DomainError("steps must be >= 2");
    if (steps > fracdiff::kMaxSamples) throw ConfigError("steps must be <= 100000");

    fracdiff::SampledSignal drive{a.h, std::vector<double>(static_cast<std::size_t>(steps))};
    for (std::size_t n = 0; n < drive.values.size(); ++n)
        drive.values[n] = sine ? std::sin(a.freq * drive.time(n)) : 1.0;
    const auto u = fracdiff::solve_relaxation(params, drive);

    Table t;
    t.columns = {"t", "i_t", "u_t"};
    for (std::size_t n = 0; n < u.values.size(); ++n) t.rows.push_back({drive.time(n), drive.values[n], u.values[n]});

    t.meta["command"] = "relax";
    t.meta["z0"] = a.z0;
    t.meta["vc"] = a.vc;
    t.meta["d"] = a.d;
    t.meta["drive"] = a.drive;
    t.meta["freq"] = a.freq;
    t.meta["h"] = a.h;
    t.meta["steps"] = steps;
    if (sine) {
        const double period = 2.0 * std::numbers::pi / a.freq;
        const double t_last = u.time(u.values.size() - 1);
        if (t_last < 2.0 * period) throw DomainError("sin drive needs at least two periods of samples for the fit");
        const Complex g = fracdiff::fit_sinusoid(u, a.freq, t_last - 2.0 * period);
        t.meta["gain"] = std::abs(g);
        t.meta["phase"] = std::arg(g);
        t.meta["phase_deg"] = degrees(std::arg(g));
        t.meta["gain_re"] = g.real();
        t.meta["gain_im"] = g.imag();
    }
    return t;
}

// -------------------------------------------------------------------- zeta

struct ZetaArgs {
    std::string mode = "zeta";
    double sigma = 0.5, theta = 0, tol = 1e-12;
    int sign = 1;
    std::int64_t terms = 1'000'000, prime_limit = 100'000;
};

Table cmd_zeta(const ZetaArgs& a) {
    if (!(a.sigma > 0.0) || !std::isfinite(a.sigma)) throw DomainError("sigma must be > 0");
    if (!std::isfinite(a.theta)) throw DomainError("theta must be finite");
    if (a.sign != 1 && a.sign != -1) throw DomainError("sign must be +1 or -1");
    const Complex s(a.sigma, a.sign * a.theta);
    const ToleranceConfig cfg{a.tol, 100'000'000};

    Complex value;
    std::int64_t used = 0;
    if (a.mode == "eta" || a.mode == "zeta") {
        cfg.validate();
        if (a.mode == "zeta") {
            value = zeta::zeta_from_eta(s, cfg);
            used = zeta::eta_sum(s, cfg).terms;
        } else {
            const auto r = zeta::eta_sum(s, cfg);
            value = r.value;
            used = r.terms;
        }
    } else if (a.mode == "direct") {
        value = zeta::zeta_direct(s, a.terms);
        used = a.terms;
    } else if (a.mode == "mobius") {
        value = zeta::mobius_inverse_zeta(s, a.terms);
        used = a.terms;
    } else {
        if (!(s.real() > 1.0)) throw DomainError("euler_product: Re(s) must be > 1");
        const auto ps = primes::sieve(a.prime_limit);
        value = zeta::euler_product(s, ps);
        used = static_cast<std::int64_t>(ps.primes.size());
    }

    Table t;
    t.columns = {"mode", "s_re", "s_im", "value_re", "value_im", "terms_used"};
    t.rows.push_back({a.mode, s.real(), s.imag(), value.real(), value.imag(), used});
    t.meta["command"] = "zeta";
    t.meta["mode"] = a.mode;
    t.meta["sigma"] = a.sigma;
    t.meta["theta"] = a.theta;
    t.meta["sign"] = a.sign;
    t.meta["terms"] = a.terms;
    t.meta["tol"] = a.tol;
    t.meta["prime_limit"] = a.prime_limit;
    return t;
}

// ------------------------------------------------------------------- zeros

struct ZerosArgs {
    double from = 10, to = 30, step = 0.05, tol = 1e-12;
};

Table cmd_zeros(const ZerosArgs& a) {
    if (!(a.from < a.to)) throw DomainError("--from must be < --to");
    const auto zeros = zeta::find_zeros(a.from, a.to, a.step, ToleranceConfig{a.tol, 100'000'000});
    Table t;
    t.columns = {"t_lo", "t_hi", "t_refined", "residual"};
    for (const auto& z : zeros) t.rows.push_back({z.t_lo, z.t_hi, z.t_refined, z.residual});
    t.meta["command"] = "zeros";
    t.meta["from"] = a.from;
    t.meta["to"] = a.to;
    t.meta["step"] = a.step;
    t.meta["tol"] = a.tol;
    t.meta["count"] = zeros.size();
    return t;
}

// ------------------------------------------------------------------- varpi

struct VarpiArgs {
    double from = 0.1, to = 5, step = 0.01;
    std::int64_t prime_limit = 10'000;
    std::string convention = "as_printed";
};

Table cmd_varpi(const VarpiArgs& a) {
    if (a.prime_limit < 2) throw DomainError("--primes must be >= 2");
    const primes::VarpiConfig cfg{a.prime_limit, a.convention == "both_minus" ? primes::SignConvention::both_minus
                                                                             : primes::SignConvention::as_printed};
    const auto ps = primes::sieve(a.prime_limit);
    const auto grid = primes::varpi_grid(a.from, a.to, a.step, ps, cfg);
    const auto minima = primes::varpi_minima(grid);

    Table t;
    t.columns = {"theta_prime", "varpi_re", "varpi_im", "modulus"};
    for (const auto& [theta, v] : grid) t.rows.push_back({theta, v.real(), v.imag(), std::abs(v)});

    t.meta["command"] = "varpi";
    t.meta["from"] = a.from;
    t.meta["to"] = a.to;
    t.meta["step"] = a.step;
    t.meta["primes"] = a.prime_limit;
    t.meta["convention"] = a.convention;
    json mins = json::array();
    for (const auto& m : minima) mins.push_back({m.theta_prime, m.modulus});
    t.meta["minima"] = std::move(mins);
    json ref = json::array();
    for (std::int64_t p : primes::sieve(20).primes)
        for (const auto& s : primes::solve_theta_prime(p, 4)) ref.push_back({s.p, s.k, s.sign, s.theta_prime});
    t.meta["theta_prime_reference_columns"] = {"p", "k", "sign", "theta_prime"};
    t.meta["theta_prime_reference"] = std::move(ref);
    return t;
}

// ------------------------------------------------------------------ chart1

struct ChartArgs {
    double d = 2, theta = 0, tol = 1e-12;
    std::int64_t terms = 100;
};

Table cmd_chart1(const ChartArgs& a) {
    if (!(a.d > 1.0)) throw DomainError("d must be > 1");
    const zeta::ChartParams params{a.d, a.theta};
    const auto series = zeta::chart1_series(params, a.terms);
    const ToleranceConfig cfg{a.tol, 100'000'000};
    const Complex e1 = zeta::eta(params.s1(), cfg);
    const Complex e2 = zeta::eta(params.s2(), cfg);

    Table t;
    t.columns = {"n",           "inv_xi_h_re", "inv_xi_h_im", "lambda_h_re", "lambda_h_im", "inv_xi_v_re", "inv_xi_v_im",
                 "lambda_v_re", "lambda_v_im", "eta_s1_re",   "eta_s1_im",   "eta_s2_re",   "eta_s2_im"};
    for (const auto& p : series)
        t.rows.push_back({p.terms, p.inv_xi_h.real(), p.inv_xi_h.imag(), p.lambda_h.real(), p.lambda_h.imag(),
                          p.inv_xi_v.real(), p.inv_xi_v.imag(), p.lambda_v.real(), p.lambda_v.imag(), e1.real(),
                          e1.imag(), e2.real(), e2.imag()});
    t.meta["command"] = "chart1";
    t.meta["d"] = a.d;
    t.meta["theta"] = a.theta;
    t.meta["terms"] = a.terms;
    t.meta["tol"] = a.tol;
    t.meta["s1"] = {params.s1().real(), params.s1().imag()};
    t.meta["s2"] = {params.s2().real(), params.s2().imag()};
    t.meta["eta_residual"] = std::abs(e1 - e2);
    return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fraczeta: Cole-Cole, fractional relaxation and Dirichlet-series toolkit"};
    // relax takes a --h step size, which clashes with the short -h help flag.
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    OutputSpec output;
    std::function<Table()> action;

    TransferArgs ta;
    auto* tr = app.add_subcommand("transfer", "Cole-Cole transfer function sweep");
    tr->add_option("--z0", ta.z0);
    tr->add_option("--vc", ta.vc);
    tr->add_option("--d", ta.d);
    tr->add_option("--vmin", ta.vmin);
    tr->add_option("--vmax", ta.vmax);
    tr->add_option("--points", ta.points);
    tr->add_flag("--log", ta.log_spacing, "logarithmic frequency spacing");
    add_output_flags(tr, output);
    tr->callback([&] { action = [&] { return cmd_transfer(ta); }; });

    RelaxArgs ra;
    auto* rl = app.add_subcommand("relax", "time-domain fractional relaxation");
    rl->add_option("--z0", ra.z0);
    rl->add_option("--vc", ra.vc);
    rl->add_option("--d", ra.d);
    rl->add_option("--drive", ra.drive)->check(CLI::IsMember({"step", "sin"}));
    rl->add_option("--freq", ra.freq);
    rl->add_option("--h", ra.h);
    rl->add_option("--steps", ra.steps);
    add_output_flags(rl, output);
    rl->callback([&] { action = [&] { return cmd_relax(ra); }; });

    ZetaArgs za;
    auto* zt = app.add_subcommand("zeta", "eta / zeta / Dirichlet-series evaluation at one point");
    zt->add_option("--mode", za.mode)->check(CLI::IsMember({"eta", "zeta", "direct", "mobius", "euler"}));
    zt->add_option("--sigma", za.sigma);
    zt->add_option("--theta", za.theta);
    zt->add_option("--sign", za.sign);
    zt->add_option("--terms", za.terms);
    zt->add_option("--tol", za.tol);
    zt->add_option("--prime-limit", za.prime_limit);
    add_output_flags(zt, output);
    zt->callback([&] { action = [&] { return cmd_zeta(za); }; });

    ZerosArgs zr;
    auto* zs = app.add_subcommand("zeros", "critical-line zeros via the Hardy rotation");
    zs->add_option("--from", zr.from);
    zs->add_option("--to", zr.to);
    zs->add_option("--step", zr.step);
    zs->add_option("--tol", zr.tol);
    add_output_flags(zs, output);
    zs->callback([&] { action = [&] { return cmd_zeros(zr); }; });

    VarpiArgs va;
    auto* vp = app.add_subcommand("varpi", "truncated prime product scan in theta'");
    vp->add_option("--from", va.from);
    vp->add_option("--to", va.to);
    vp->add_option("--step", va.step);
    vp->add_option("--primes", va.prime_limit);
    vp->add_option("--convention", va.convention)->check(CLI::IsMember({"as_printed", "both_minus"}));
    add_output_flags(vp, output);
    vp->callback([&] { action = [&] { return cmd_varpi(va); }; });

    ChartArgs ca;
    auto* ch = app.add_subcommand("chart1", "partial sums of the hyperbolic-distance construction");
    ch->add_option("--d", ca.d);
    ch->add_option("--theta", ca.theta);
    ch->add_option("--terms", ca.terms);
    ch->add_option("--tol", ca.tol);
    add_output_flags(ch, output);
    ch->callback([&] { action = [&] { return cmd_chart1(ca); }; });

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("fraczeta");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        emit(action(), output, out);
    } catch (const InputError& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kInvalid;
    } catch (const NumericalError& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kNumerical;
    }
    return kOk;
}

}  // namespace fraczeta::cli
