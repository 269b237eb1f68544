#include "lisum/harness.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <ostream>

#include "lisum/angle_kernel.hpp"
#include "lisum/asymptotics.hpp"
#include "lisum/integral_forms.hpp"
#include "lisum/quadrature.hpp"
#include "lisum/zero_sum.hpp"

namespace lisum {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view text) {
    text = trim(text);
    std::int64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) throw Error("not an integer: '" + std::string(text) + "'");
    return v;
}

std::shared_ptr<const ZeroCatalog> load_zeros(const RunConfig& config) {
    if (!config.zeros_path) throw Error("this command needs --zeros <path>");
    return std::make_shared<const ZeroCatalog>(ZeroCatalog::ingest(*config.zeros_path));
}

std::vector<std::int64_t> orders(const RunConfig& config) {
    if (config.n_range) {
        std::vector<std::int64_t> out;
        for (auto n = config.n_range->lo; n <= config.n_range->hi; ++n) out.push_back(n);
        return out;
    }
    if (config.n) return {*config.n};
    throw Error("give --n <int> or --n-range <lo>..<hi>");
}

QuadratureSpec quadrature_spec(const RunConfig& config) {
    QuadratureSpec spec;
    spec.rel_tol = config.tol_rel;
    spec.abs_tol = config.tol_abs;
    spec.validate();
    return spec;
}

// In-row error token for the compare CSV.
std::string error_token(const std::exception& e) {
    if (dynamic_cast<const TailRegimeError*>(&e)) return "error:tail_regime";
    if (dynamic_cast<const QuadratureError*>(&e)) return "error:quadrature";
    if (dynamic_cast<const ModelKindError*>(&e)) return "error:model_kind";
    if (dynamic_cast<const DomainError*>(&e)) return "error:domain";
    return "error:other";
}

template <class F>
std::string cell(F&& f) {
    try {
        return format_real(f());
    } catch (const Error& e) {
        return error_token(e);
    }
}

}  // namespace

NRange parse_n_range(std::string_view text) {
    const auto sep = text.find("..");
    if (sep == std::string_view::npos) throw Error("n range must look like <lo>..<hi>");
    NRange r{parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 2))};
    if (r.lo < 0 || r.hi < r.lo) throw Error("n range needs 0 <= lo <= hi");
    return r;
}

PlantedZero parse_plant(std::string_view text) {
    const auto sep = text.find(',');
    if (sep == std::string_view::npos) throw Error("plant must look like <sigma>,<T>");
    return {parse_real(text.substr(0, sep)), parse_real(text.substr(sep + 1))};
}

Real parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    Real v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) throw Error("not a number: '" + std::string(text) + "'");
    return v;
}

std::optional<CountingKind> parse_model(std::string_view text) {
    if (text == "rvm") return CountingKind::smooth_rvm;
    if (text == "rvm78") return CountingKind::smooth_rvm_plus_7_8;
    if (text == "empirical") return CountingKind::empirical;
    return std::nullopt;
}

std::string_view model_name(CountingKind kind) {
    switch (kind) {
        case CountingKind::smooth_rvm: return "rvm";
        case CountingKind::smooth_rvm_plus_7_8: return "rvm78";
        case CountingKind::empirical: return "empirical";
    }
    return "?";
}

std::string format_real(Real x) {
    if (x == 0) return "0";  // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::vector<Real> verify_heights(const ZeroCatalog& catalog) {
    std::vector<Real> hs;
    const Real top = catalog.max_height();
    for (Real h = 20; h < top; h *= Real(1.25)) hs.push_back(h);
    hs.push_back(top);
    return hs;
}

std::vector<Real> windowed_count_drift(const ZeroCatalog& catalog, std::size_t block) {
    // Antiderivative of the smooth count T/2pi ln(T/2pi) - T/2pi + 7/8.
    auto smooth_integral = [](Real t) {
        const Real x = t / kTwoPi;
        return kTwoPi * (x * x / 2 * std::log(x) - Real(0.75) * x * x) + Real(0.875) * t;
    };
    const auto ts = catalog.ordinates();
    std::vector<Real> drift;
    for (std::size_t start = 0; start + block < ts.size(); start += block) {
        const std::size_t stop = start + block;
        Real area = 0;
        // N_emp = k + 1 on [T_k, T_{k+1}) (0-based k)
        for (std::size_t k = start; k < stop; ++k) {
            area += static_cast<Real>(k + 1) * (ts[k + 1] - ts[k]);
        }
        area -= smooth_integral(ts[stop]) - smooth_integral(ts[start]);
        drift.push_back(area / (ts[stop] - ts[start]));
    }
    return drift;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto catalog = load_zeros(config);
    bool ok = true;
    out << "# " << catalog->source_label() << ": " << catalog->count()
        << " zeros, max height " << format_real(catalog->max_height()) << '\n';
    if (!catalog->starts_at_first_zero()) {
        log << "verify: table does not start at the first zero (14.1347...)\n";
        ok = false;
    }
    out << "height,empirical,model,gap,envelope,ok\n";
    for (const Real h : verify_heights(*catalog)) {
        const auto rep = check_counting(*catalog, h);
        const Real env = counting_envelope(h);
        const bool inside = std::fabs(rep.gap) <= env;
        ok = ok && inside;
        out << format_real(h) << ',' << rep.empirical_count << ',' << format_real(rep.model_count)
            << ',' << format_real(rep.gap) << ',' << format_real(env) << ','
            << (inside ? "yes" : "NO") << '\n';
    }
    const auto drift = windowed_count_drift(*catalog);
    Real worst = 0;
    std::size_t worst_block = 0;
    for (std::size_t i = 0; i < drift.size(); ++i) {
        if (std::fabs(drift[i]) > worst) {
            worst = std::fabs(drift[i]);
            worst_block = i;
        }
    }
    out << "# windowed drift: max |mean gap| = " << format_real(worst) << " (limit "
        << format_real(kDriftLimit) << ")\n";
    if (worst > kDriftLimit) {
        const auto first_bad = static_cast<std::size_t>(
            std::find_if(drift.begin(), drift.end(),
                         [](Real d) { return std::fabs(d) > kDriftLimit; }) - drift.begin());
        log << "verify: counts drift from the smooth model from zero #" << first_bad * 256 + 1
            << " on (worst block " << worst_block << "); a zero is missing or duplicated\n";
        ok = false;
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto catalog = load_zeros(config);
    SumOptions opts;
    opts.threads = config.threads;
    ZeroSumEngine engine(catalog, config.b, opts);
    std::optional<PerturbedCatalog> perturbed;
    if (!config.plants.empty()) {
        perturbed.emplace(catalog);
        for (const auto& z : config.plants) perturbed = plant(*perturbed, z);
    }
    out << "n,b,partial_sum,tail_estimate,total,tail_bound,terms_used\n";
    bool warned = false;
    for (const auto n : orders(config)) {
        const auto r = perturbed ? engine.sum_perturbed(n, *perturbed) : engine.sum(n);
        if (r.shallow_catalog && !warned) {
            log << "compute: zero table is shallower than 10|2b+1|n; the tail dominates\n";
            warned = true;
        }
        out << n << ',' << format_real(config.b) << ',' << format_real(r.partial_sum) << ','
            << format_real(r.tail_estimate) << ',' << format_real(r.total) << ','
            << format_real(r.tail_bound) << ',' << r.terms_used << '\n';
    }
    return kExitOk;
}

int cmd_asymptotic(const RunConfig& config, std::ostream& out, std::ostream&) {
    out << "n,c,main_term,linear_term,total\n";
    for (const auto n : orders(config)) {
        const auto a = asymptotic(LiParams(n, config.b));
        out << n << ',' << format_real(a.c) << ',' << format_real(a.main_term) << ','
            << format_real(a.linear_term) << ',' << format_real(a.total) << '\n';
    }
    return kExitOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream&) {
    std::shared_ptr<const ZeroCatalog> catalog;
    std::optional<ZeroSumEngine> engine;
    if (config.zeros_path) {
        catalog = load_zeros(config);
        SumOptions opts;
        opts.threads = config.threads;
        engine.emplace(catalog, config.b, opts);
    }
    const LiParams check(0, config.b);  // rejects b = -1/2 up front
    std::optional<CountingModel> model;
    if (config.with_integrals) {
        model = config.model == CountingKind::empirical
                    ? CountingModel::empirical(catalog ? catalog : load_zeros(config))
                    : CountingModel::smooth(config.model);
    }
    const auto spec = quadrature_spec(config);

    out << "# lisum compare b=" << format_real(config.b) << " model=" << model_name(config.model)
        << '\n';
    out << kCompareHeader << '\n';
    for (const auto n : orders(config)) {
        const LiParams params(n, config.b);
        std::string zs, tb, e6, e7, e8, as, res;
        std::optional<Real> zs_total;
        std::optional<Real> as_total;
        if (engine) {
            try {
                const auto r = engine->sum(n);
                zs_total = r.total;
                zs = format_real(r.total);
                tb = format_real(r.tail_bound);
            } catch (const Error& e) {
                zs = error_token(e);
            }
        }
        if (model) {
            e6 = cell([&] { return integral_eq6(params, *model, spec).value; });
            e7 = cell([&] { return integral_eq7(params, *model, spec).value; });
            e8 = cell([&] { return integral_eq8(params, *model, spec).value; });
        }
        if (n == 0) {
            as_total = 0;  // (c/2) n ln n -> 0
        } else {
            as_total = asymptotic(params).total;
        }
        as = format_real(*as_total);
        if (zs_total) res = format_real(*zs_total - *as_total);
        out << n << ',' << zs << ',' << tb << ',' << e6 << ',' << e7 << ',' << e8 << ',' << as
            << ',' << res << '\n';
    }
    return kExitOk;
}

int cmd_residuals(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto catalog = load_zeros(config);
    ResidualOptions opts;
    opts.sum.threads = config.threads;
    const auto rep = residual_study(config.b, config.n_grid, catalog, opts);
    out << "n,zero_sum,asymptotic,residual,residual_over_n\n";
    for (std::size_t i = 0; i < rep.n_grid.size(); ++i) {
        const Real n = static_cast<Real>(rep.n_grid[i]);
        out << rep.n_grid[i] << ',' << format_real(rep.totals[i]) << ','
            << format_real(rep.totals[i] - rep.residuals[i]) << ',' << format_real(rep.residuals[i])
            << ',' << format_real(rep.residuals[i] / n) << '\n';
    }
    out << "# b=" << format_real(config.b)
        << " fitted_exponent=" << (rep.degenerate ? std::string("-inf") : format_real(rep.fitted_exponent))
        << " passes_o_n=" << (rep.passes_o_n ? "true" : "false")
        << " tail_fraction=" << format_real(rep.tail_fraction) << '\n';
    if (rep.tail_fraction >= opts.max_tail_fraction) {
        log << "residuals: tail bound is " << format_real(rep.tail_fraction)
            << " of the linear term at the largest n; deeper tables tighten the study\n";
    }
    return rep.passes_o_n ? kExitOk : kExitCheckFailed;
}

int cmd_perturb(const RunConfig& config, std::ostream& out, std::ostream&) {
    const auto catalog = load_zeros(config);
    if (config.n_max < 1) throw Error("--n-max must be >= 1");
    PerturbedCatalog perturbed(catalog);
    for (const auto& z : config.plants) perturbed = plant(perturbed, z);
    SumOptions opts;
    opts.threads = config.threads;
    ZeroSumEngine engine(catalog, config.b, opts);

    std::optional<std::int64_t> first_negative;
    Real min_total = std::numeric_limits<Real>::infinity();
    std::int64_t argmin = 0;
    engine.sweep(1, config.n_max, [&](const SumResult& r) {
        const std::int64_t n = r.params.n();
        if (r.total < min_total) {
            min_total = r.total;
            argmin = n;
        }
        if (r.total < 0 && !first_negative) first_negative = n;
    }, &perturbed);
    out << "b=" << format_real(config.b) << '\n';
    out << "planted=" << config.plants.size() << '\n';
    out << "n_max=" << config.n_max << '\n';
    out << "first_negative_n=" << (first_negative ? std::to_string(*first_negative) : "none") << '\n';
    out << "min_total=" << format_real(min_total) << '\n';
    out << "argmin_n=" << argmin << '\n';
    return kExitOk;
}

int cmd_gr_check(const RunConfig& config, std::ostream& out, std::ostream& log) {
    const auto spec = quadrature_spec(config);
    struct Row {
        const char* name;
        Real target;
        Real tol;
        QuadratureResult (*fn)(const QuadratureSpec&);
    };
    const Row rows[] = {
        {"int_0^inf sin(y)/y dy", kPi / 2, config.tol_sine, &sine_integral},
        {"int_0^inf ln(y) sin(y)/y dy", -kPi * kEulerGamma / 2, config.tol_log_sine,
         &log_sine_integral},
    };
    bool ok = true;
    for (const auto& row : rows) {
        try {
            const auto r = row.fn(spec);
            const Real err = std::fabs(r.value - row.target);
            const bool pass = err <= row.tol;
            ok = ok && pass;
            out << row.name << ": value=" << format_real(r.value) << " target="
                << format_real(row.target) << " |error|=" << format_real(err)
                << " tol=" << format_real(row.tol) << (pass ? " PASS" : " FAIL") << '\n';
        } catch (const QuadratureError& e) {
            log << row.name << ": " << e.what() << " (partial " << format_real(e.partial_value())
                << ")\n";
            ok = false;
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& log) {
    try {
        if (config.b == Real(-0.5)) {
            throw DomainError("b = -1/2 is excluded: the criterion holds for every real b except -1/2");
        }
        switch (config.command) {
            case Command::verify: return cmd_verify(config, out, log);
            case Command::compute: return cmd_compute(config, out, log);
            case Command::asymptotic: return cmd_asymptotic(config, out, log);
            case Command::compare: return cmd_compare(config, out, log);
            case Command::residuals: return cmd_residuals(config, out, log);
            case Command::perturb: return cmd_perturb(config, out, log);
            case Command::gr_check: return cmd_gr_check(config, out, log);
        }
    } catch (const LineError& e) {
        log << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        log << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lisum
