// lisum: generalized Li sums over zeta zeros from the command line.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "lisum/harness.hpp"

using namespace lisum;

int main(int argc, char** argv) {
    CLI::App app{"Generalized Li sums k_{n,b} over non-trivial zeta zeros"};
    app.require_subcommand(1);

    RunConfig config;
    std::string b_text = "0";
    std::string n_range_text;
    std::string model_text = "rvm78";
    std::vector<std::string> plant_texts;
    std::string out_path;
    std::string zeros_path;
    std::string tol_rel_text;
    std::string tol_sine_text;
    std::string tol_log_sine_text;
    std::int64_t n = 0;

    const std::map<std::string, Command> commands{
        {"verify", Command::verify},       {"compute", Command::compute},
        {"asymptotic", Command::asymptotic}, {"compare", Command::compare},
        {"residuals", Command::residuals}, {"perturb", Command::perturb},
        {"gr-check", Command::gr_check},
    };
    const std::map<std::string, std::string> help{
        {"verify", "check zero counts against the Riemann-von Mangoldt model"},
        {"compute", "sum k_{n,b} over a zero table (with analytic tail)"},
        {"asymptotic", "evaluate the large-n formula and its terms"},
        {"compare", "CSV of zero sum, integral forms and asymptotic per n"},
        {"residuals", "residual r(n) = sum - asymptotic over an n grid"},
        {"perturb", "scan n with planted off-line zeros for a negative total"},
        {"gr-check", "quadrature check of the sine and log-sine integrals"},
    };

    for (const auto& [name, cmd] : commands) {
        auto* sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--b", b_text, "real shift b (b != -1/2)");
        sub->add_option("--n", n, "order n");
        sub->add_option("--n-range", n_range_text, "orders <lo>..<hi>");
        sub->add_option("--n-grid", config.n_grid, "orders for the residual study")->delimiter(',');
        sub->add_option("--zeros", zeros_path, "zero table (one ordinate per line)");
        sub->add_option("--model", model_text, "counting model rvm|rvm78|empirical");
        sub->add_option("--plant", plant_texts, "planted zero <sigma>,<T> (repeatable)");
        sub->add_option("--n-max", config.n_max, "largest n scanned by perturb");
        sub->add_flag("--with-integrals", config.with_integrals, "add the eq6/eq7/eq8 columns");
        sub->add_option("--out", out_path, "output file (default: standard output)");
        sub->add_option("--tol-rel", tol_rel_text, "quadrature relative tolerance");
        sub->add_option("--tol-sine", tol_sine_text, "gr-check tolerance for pi/2");
        sub->add_option("--tol-log-sine", tol_log_sine_text, "gr-check tolerance for -pi gamma/2");
        sub->add_option("--threads", config.threads, "worker threads (0 = all cores)");
        sub->callback([&, cmd = cmd] { config.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        config.b = parse_real(b_text);
        if (config.b == Real(-0.5)) {
            std::cerr << "error: b = -1/2 is excluded: the criterion holds for every real b except -1/2\n";
            return kExitUsage;
        }
        for (const auto* sub : app.get_subcommands()) {
            if (sub->count("--n") > 0) config.n = n;
        }
        if (!n_range_text.empty()) config.n_range = parse_n_range(n_range_text);
        if (!zeros_path.empty()) config.zeros_path = zeros_path;
        const auto model = parse_model(model_text);
        if (!model) throw Error("unknown model '" + model_text + "'");
        config.model = *model;
        for (const auto& p : plant_texts) config.plants.push_back(parse_plant(p));
        if (!tol_rel_text.empty()) config.tol_rel = parse_real(tol_rel_text);
        if (!tol_sine_text.empty()) config.tol_sine = parse_real(tol_sine_text);
        if (!tol_log_sine_text.empty()) config.tol_log_sine = parse_real(tol_log_sine_text);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        return run_command(config, file, std::cerr);
    }
    return run_command(config, std::cout, std::cerr);
}
