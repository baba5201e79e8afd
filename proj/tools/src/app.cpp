#include "fracschrod_app/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fracschrod/box_well.hpp"
#include "fracschrod/claims.hpp"
#include "fracschrod/config.hpp"
#include "fracschrod/fracderiv.hpp"
#include "fracschrod/free_particle.hpp"
#include "fracschrod/ladder.hpp"
#include "fracschrod/numeric_oracle.hpp"
#include "fracschrod/oscillator.hpp"
#include "fracschrod/report.hpp"
#include "fracschrod/svg.hpp"

namespace fracschrod::app {

namespace {

using Files = std::vector<std::pair<std::string, std::string>>;

// Values given on the command line, applied on top of the config file.
struct Overrides {
    std::string config_file;
    std::string out;
    std::map<std::string, std::string> settings;
};

void add_common(CLI::App* sub, Overrides& o) {
    sub->add_option("--config", o.config_file, "key = value configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "output directory");
    for (const char* key : {"m", "c", "hbar", "B", "omega", "L", "convention", "levels"}) {
        sub->add_option_function<std::string>(
            std::string("--") + key, [&o, key](const std::string& v) { o.settings[key] = v; },
            std::string("override '") + key + "'");
    }
    sub->add_option_function<std::string>(
        "--grid-points", [&o](const std::string& v) { o.settings["grid_points"] = v; }, "finite-difference grid nodes");
}

RunConfig resolve(const Overrides& o) {
    RunConfig config;
    if (!o.config_file.empty()) config = load_config(o.config_file);
    for (const auto& [k, v] : o.settings) config.set(k, v);
    return config;
}

std::string num(double v) { return format_number(v); }

ConfigEcho echo_with(const RunConfig& config, std::string subcommand, ConfigEcho extra = {}) {
    ConfigEcho e{{"subcommand", std::move(subcommand)}};
    auto base = config.echo();
    e.insert(e.end(), base.begin(), base.end());
    e.insert(e.end(), extra.begin(), extra.end());
    return e;
}

void add_table(Files& files, const std::string& stem, const Table& table, const ConfigEcho& echo) {
    files.emplace_back(stem + ".csv", to_csv(table, echo));
    files.emplace_back(stem + ".json", table_to_json(table, echo));
}

struct FreeFlags {
    std::optional<double> energy;
    std::optional<double> time;
    double k0 = 3.0;
};

Files run_free(const RunConfig& config, const FreeFlags& flags) {
    const auto& p = config.params;
    const double xi = derive_scales(p, Convention::Reduced).xi;
    const double energy = flags.energy.value_or(p.hbar * p.hbar * xi * xi / p.mass);
    const double t = flags.time.value_or(1.0 / p.c);
    const auto roots = characteristic_roots(p, energy);
    const auto echo = echo_with(config, "free", {{"E", num(energy)}, {"t", num(t)}, {"k0", num(flags.k0)}});

    Table r{{"quantity", "re", "im"}, {}};
    r.rows.push_back({"lambda1", num(roots.lambda1.real()), num(roots.lambda1.imag())});
    r.rows.push_back({"lambda2", num(roots.lambda2.real()), num(roots.lambda2.imag())});
    r.rows.push_back({"discriminant", num(roots.discriminant), num(0.0)});
    r.rows.push_back({"underdamped", underdamped_condition(p, energy) ? "1" : "0", num(0.0)});

    const auto derived = packet_translation(xi, p.c, t, flags.k0);
    const PacketTranslation printed{xi * xi, derived.amplitude};
    const double centre = p.c * t;
    const GridSpec grid(centre - 5.0 - xi, centre + 5.0, 401);
    Table packet{{"x", "damped_abs", "translated_xi_half_abs", "translated_xi_squared_abs"}, {}};
    Curve c_damped{"damped packet", {}, {}}, c_printed{"translation by xi^2", {}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.x(i);
        const double a = std::abs(damped_packet(xi, p.c, t, flags.k0, x));
        const double b = std::abs(translated_packet(derived, p.c, t, flags.k0, x));
        const double c = std::abs(translated_packet(printed, p.c, t, flags.k0, x));
        packet.rows.push_back({num(x), num(a), num(b), num(c)});
        c_damped.x.push_back(x);
        c_damped.y.push_back(a);
        c_printed.x.push_back(x);
        c_printed.y.push_back(c);
    }
    const auto wave = damped_plane_wave(p, energy, {1.0, 0.0}, {0.0, 0.0});
    const double span = wave.k > 0.0 ? 4.0 * std::numbers::pi / wave.k : 10.0;
    const GridSpec wave_grid(0.0, span, 401);
    Table w{{"x", "re_psi", "im_psi", "abs_psi_squared"}, {}};
    Curve density{"|psi|^2", {}, {}};
    for (std::size_t i = 0; i < wave_grid.size(); ++i) {
        const double x = wave_grid.x(i);
        const complex v = wave(x);
        w.rows.push_back({num(x), num(v.real()), num(v.imag()), num(std::norm(v))});
        density.x.push_back(x);
        density.y.push_back(std::norm(v));
    }
    Files files;
    add_table(files, "free_roots", r, echo);
    add_table(files, "free_wave", w, echo);
    files.emplace_back("free_wave.svg", render_svg({density}, {"damped plane wave", "x", "|psi|^2"}));
    add_table(files, "free_packet", packet, echo);
    files.emplace_back("free_packet.svg",
                       render_svg({c_damped, c_printed}, {"packet envelope", "x", "|psi|"}));
    return files;
}

Files run_box(const RunConfig& config) {
    const auto& p = config.params;
    const double half = 0.5 * p.length;
    const GridSpec grid(-half, half, config.grid_points);
    const auto closed = quantize_box(p, config.levels);
    const auto oracle = richardson_spectrum(
        [&](const GridSpec& g) { return build_operator(p, Potential::box(), g); }, grid,
        static_cast<std::size_t>(config.levels));
    Table t{{"n", "k", "closed_form", "oracle", "abs_deviation", "rel_deviation"}, {}};
    Curve stairs{"E_n", {}, {}, true};
    for (const auto& level : closed.levels) {
        const double o = oracle.values[level.n - 1];
        const double d = std::abs(o - level.energy);
        t.rows.push_back({std::to_string(level.n), num(level.k), num(level.energy), num(o), num(d),
                          num(d / std::abs(level.energy))});
        stairs.x.push_back(level.n);
        stairs.y.push_back(level.energy);
    }
    const auto psi = box_eigenfunction(p, 1);
    const GridSpec plot(-half, half, 201);
    Curve density{"|psi_1|^2", {}, {}};
    Table wave{{"x", "psi_1", "abs_psi_1_squared"}, {}};
    for (std::size_t i = 0; i < plot.size(); ++i) {
        const double v = psi(plot.x(i));
        density.x.push_back(plot.x(i));
        density.y.push_back(v * v);
        wave.rows.push_back({num(plot.x(i)), num(v), num(v * v)});
    }
    Files files;
    add_table(files, "box_spectrum", t, echo_with(config, "box"));
    add_table(files, "box_wavefunction", wave, echo_with(config, "box"));
    files.emplace_back("box_spectrum.svg", render_svg({stairs}, {"box spectrum", "n", "E_n"}));
    files.emplace_back("box_density.svg", render_svg({density}, {"damped box ground state", "x", "|psi_1|^2"}));
    return files;
}

Files run_osc(const RunConfig& config) {
    const auto& p = config.params;
    const auto scales = derive_scales(p, config.convention);
    const auto closed = quantize_oscillator(p, config.convention, config.levels);
    const auto oracle = richardson_spectrum(
        [&](const GridSpec& y) { return build_oscillator_operator(scales.g, y); },
        oscillator_y_grid(scales.g, config.grid_points), closed.levels.size());
    Table t{{"n", "eps_closed_form", "eps_oracle", "abs_deviation", "energy"}, {}};
    for (const auto& level : closed.levels) {
        const double o = oracle.values[level.n];
        t.rows.push_back({std::to_string(level.n), num(level.eps), num(o), num(std::abs(o - level.eps)),
                          num(level.energy)});
    }
    const GridSpec y(-scales.mu - 6.0, 6.0, 241);
    Curve damped{"damped psi_0", {}, {}}, plain{"undamped psi_0", {}, {}};
    const auto psi_d = osc_eigenfunction(p, scales.mu, 0);
    const auto psi_u = osc_eigenfunction(p, 0.0, 0);
    Table wave{{"y", "psi_0_damped", "psi_0_undamped"}, {}};
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double x = y.x(i) / scales.b;
        damped.x.push_back(y.x(i));
        damped.y.push_back(psi_d(x));
        plain.x.push_back(y.x(i));
        plain.y.push_back(psi_u(x));
        wave.rows.push_back({num(y.x(i)), num(psi_d(x)), num(psi_u(x))});
    }
    Table pn{{"n", "power", "coefficient", "P_n(mu)", "normalization"}, {}};
    for (int n = 0; n <= config.levels; ++n) {
        const auto poly = pn_polynomial(n);
        for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
            pn.rows.push_back({std::to_string(n), std::to_string(2 * k), poly.coeffs[k].str(), num(poly(scales.mu)),
                               num(osc_normalization(p, n, scales.mu))});
        }
    }
    const auto echo = echo_with(config, "osc", {{"g", num(scales.g)}, {"mu", num(scales.mu)}});
    Files files;
    add_table(files, "osc_spectrum", t, echo);
    add_table(files, "osc_pn", pn, echo);
    add_table(files, "osc_wavefunction", wave, echo);
    files.emplace_back("osc_ground.svg", render_svg({damped, plain}, {"oscillator ground state", "y", "psi_0"}));
    return files;
}

Files run_ladder(const RunConfig& config, int n) {
    const auto& p = config.params;
    const double mu = ladder_shift(p);
    const GridSpec grid = ladder_grid(p);
    auto state = [&](int k) {
        const auto psi = osc_eigenfunction(p, mu, k);
        return WaveSample::sample(grid, [&](double x) { return complex{psi(x), 0.0}; });
    };
    auto coefficient = [](const WaveSample& basis, const WaveSample& v) {
        return inner_product(basis, v) / inner_product(basis, basis);
    };
    Table t{{"quantity", "formula_re", "formula_im", "quadrature_re", "quadrature_im", "deviation"}, {}};
    auto row = [&](const std::string& name, complex f, complex q) {
        t.rows.push_back({name, num(f.real()), num(f.imag()), num(q.real()), num(q.imag()), num(std::abs(f - q))});
    };
    for (const auto& r : {fractional_energy_report(n, p), momentum_expectation_report(p, n)}) {
        row(r.quantity, r.formula_value, r.quadrature_value);
    }
    row(fmt::format("create ratio n={}", n), ladder_ratio(n, mu, LadderKind::Create),
        coefficient(state(n + 1), apply_ladder(make_ladder(p, LadderKind::Create), state(n))));
    if (n >= 1) {
        row(fmt::format("destroy ratio n={}", n), ladder_ratio(n, mu, LadderKind::Destroy),
            coefficient(state(n - 1), apply_ladder(make_ladder(p, LadderKind::Destroy), state(n))));
    }
    const auto comm = commutator_value(p);
    row("commutator", comm.closed_form, comm.numeric);
    Files files;
    add_table(files, "ladder", t, echo_with(config, "ladder", {{"n", std::to_string(n)}, {"mu", num(mu)}}));
    return files;
}

struct FracFlags {
    bool demo = false;
    std::string input;
    double alpha = 0.5;
    double dx = 1e-3;
};

Files run_frac(const RunConfig& config, const FracFlags& flags) {
    const FracOrder alpha(flags.alpha);
    ConfigEcho extra{{"alpha", num(flags.alpha)}};
    SampledFunction f;
    if (flags.demo) {
        f = SampledFunction::sample([](double x) { return x; }, 0.0, flags.dx,
                                    static_cast<std::size_t>(std::llround(1.0 / flags.dx)) + 1);
        extra.emplace_back("function", "x");
        extra.emplace_back("dx", num(flags.dx));
    } else {
        f = read_sampled_csv(flags.input);
        extra.emplace_back("input", flags.input);
    }
    const auto d = gl_derivative_all(f, alpha);
    Table t;
    t.header = {"x", "f", "gl_derivative"};
    if (flags.demo) {
        t.header.push_back("power_rule");
        t.header.push_back("abs_deviation");
    }
    Curve numeric{"Grunwald-Letnikov", {}, {}};
    for (std::size_t i = 1; i < f.values.size(); ++i) {
        const double x = f.x0 + static_cast<double>(i) * f.dx;
        std::vector<std::string> r{num(x), num(f.values[i]), num(d.values[i])};
        if (flags.demo) {
            const double o = power_rule_oracle(1.0, alpha, x);
            r.push_back(num(o));
            r.push_back(num(std::abs(o - d.values[i])));
        }
        t.rows.push_back(std::move(r));
        numeric.x.push_back(x);
        numeric.y.push_back(d.values[i]);
    }
    Files files;
    add_table(files, "frac", t, echo_with(config, "frac", extra));
    files.emplace_back("frac.svg", render_svg({numeric}, {"fractional derivative", "x", "D^alpha f"}));
    return files;
}

Files run_verify(const RunConfig& config, std::ostream& out) {
    const auto rows = run_verification(config);
    std::map<Verdict, int> tally;
    for (const auto& r : rows) ++tally[r.verdict];
    out << fmt::format("{} rows: {} confirmed, {} discrepant, {} formula-only\n", rows.size(),
                       tally[Verdict::Confirmed], tally[Verdict::Discrepant], tally[Verdict::FormulaOnly]);
    const auto echo = echo_with(config, "verify");
    return {{"report.csv", rows_to_csv(rows, echo)}, {"report.json", rows_to_json(rows, echo)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form versus numerical checks for fractionally damped quantum systems", "fracschrod"};
    app.require_subcommand(1);
    Overrides o;
    FreeFlags free_flags;
    FracFlags frac_flags;
    int ladder_n = 0;

    auto* free = app.add_subcommand("free", "damped plane waves and packet translation");
    add_common(free, o);
    free->add_option("--E", free_flags.energy, "energy (default hbar^2 xi^2 / m)");
    free->add_option("--t", free_flags.time, "packet time (default 1/c)");
    free->add_option("--k0", free_flags.k0, "packet carrier wave number");
    auto* box = app.add_subcommand("box", "infinite well spectrum against the eigensolver");
    add_common(box, o);
    auto* osc = app.add_subcommand("osc", "damped oscillator spectrum against the eigensolver");
    add_common(osc, o);
    auto* ladder = app.add_subcommand("ladder", "ladder ratios and expectation formulas");
    add_common(ladder, o);
    ladder->add_option("--n", ladder_n, "level")->check(CLI::Range(0, 12));
    auto* frac = app.add_subcommand("frac", "Grunwald-Letnikov fractional derivative");
    add_common(frac, o);
    auto* demo = frac->add_flag("--demo", frac_flags.demo, "differentiate f(x) = x on [0, 1]");
    auto* input = frac->add_option("--input", frac_flags.input, "CSV with header x,value")->check(CLI::ExistingFile);
    demo->excludes(input);
    frac->add_option("--alpha", frac_flags.alpha, "order in (0, 1]");
    frac->add_option("--dx", frac_flags.dx, "demo grid step")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "full claim suite, report.csv and report.json");
    add_common(verify, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (frac->parsed() && !frac_flags.demo && frac_flags.input.empty()) {
            throw CLI::ValidationError("frac", "one of --demo or --input is required");
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    RunConfig config;
    try {
        config = resolve(o);
    } catch (const std::invalid_argument& e) {
        err << "fracschrod: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "fracschrod: " << e.what() << '\n';
        return 1;
    }

    try {
        const auto dir = resolve_out_dir(config, std::getenv("FRACSCHROD_OUT"), o.out.empty() ? nullptr : &o.out);
        Files files;
        if (free->parsed()) files = run_free(config, free_flags);
        else if (box->parsed()) files = run_box(config);
        else if (osc->parsed()) files = run_osc(config);
        else if (ladder->parsed()) files = run_ladder(config, ladder_n);
        else if (frac->parsed()) files = run_frac(config, frac_flags);
        else files = run_verify(config, out);
        write_outputs(dir, files);
        for (const auto& [name, content] : files) out << (dir / name).string() << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << "fracschrod: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fracschrod::app
