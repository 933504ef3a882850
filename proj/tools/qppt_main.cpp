// qppt: separability checks for small qubit systems from partial-transpose
// moment bounds. Subcommands: check, sweep, certify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qppt/io.hpp"

namespace {

nlohmann::json load_json_arg(const std::string& arg, const char* what) {
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else if (!arg.empty() && arg.front() == '[') {
        text = arg;
    } else {
        std::ifstream f(arg);
        if (!f) throw qppt::Error(std::string(what) + ": cannot open file '" + arg + "'");
        std::ostringstream os;
        os << f.rdbuf();
        text = os.str();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw qppt::Error(std::string(what) + ": malformed JSON: " + e.what());
    }
}

std::vector<int> parse_comma_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw qppt::Error("bipartition: expected comma-separated qubit indices, got '" + s + "'");
        }
    }
    return out;
}

struct GridArg {
    std::string param;
    double lo = 0.0, hi = 1.0, step = 0.01;
    bool has_step = true;
};

GridArg parse_grid(const std::string& s, bool need_step) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    const std::size_t want = need_step ? 4 : 3;
    if (parts.size() != want)
        throw qppt::Error(std::string("grid: expected ") +
                          (need_step ? "param:lo:hi:step" : "param:lo:hi") + ", got '" + s + "'");
    GridArg g;
    g.param = parts[0];
    try {
        g.lo = std::stod(parts[1]);
        g.hi = std::stod(parts[2]);
        if (need_step) g.step = std::stod(parts[3]);
    } catch (const std::exception&) {
        throw qppt::Error("grid: numeric fields could not be parsed in '" + s + "'");
    }
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PPT moment bounds for multiqubit entanglement detection"};
    app.require_subcommand(1);

    std::string state_arg;
    std::string detector_arg;
    std::vector<std::string> bipartition_args;
    std::string triads_arg = "standard";
    std::string out_path;
    std::string format = "json";
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    std::string grid_arg;
    std::string bisect_arg;
    double bisect_tol = 1e-10;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--state", state_arg, "state spec: JSON file path or inline JSON")->required();
        cmd->add_option("--detector", detector_arg, "comma-separated detector names "
                                                    "(m1,m2,sigma,horodecki,peres,sr,srpt)");
        cmd->add_option("--bipartition", bipartition_args,
                        "transposed qubits as a comma list, e.g. 1,2 (repeatable)");
        cmd->add_option("--triads", triads_arg, "per-qubit frames: 'standard' or a JSON file");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", tolerance, "positivity tolerance");
        cmd->add_option("--seed", seed, "seed recorded with the run");
    };

    CLI::App* check = app.add_subcommand("check", "run a detector battery, exit 3 on violation");
    add_common(check);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate detectors over a parameter grid (CSV)");
    add_common(sweep);
    sweep->add_option("--grid", grid_arg, "param:lo:hi:step")->required();

    CLI::App* certify = app.add_subcommand("certify", "bisect a detector threshold");
    add_common(certify);
    certify->add_option("--bisect", bisect_arg, "param:lo:hi")->required();
    certify->add_option("--bisect-tol", bisect_tol, "bracket width target");

    CLI11_PARSE(app, argc, argv);

    try {
        qppt::RunConfig cfg;
        cfg.state = qppt::parse_state_spec(load_json_arg(state_arg, "state"));
        if (!detector_arg.empty()) {
            std::stringstream ss(detector_arg);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.detectors.push_back(tok);
        }
        cfg.out_path = out_path;
        cfg.format = format;
        cfg.tolerance = tolerance;
        cfg.seed = seed;
        if (triads_arg != "standard")
            cfg.triads = qppt::parse_triads(load_json_arg(triads_arg, "triads"));

        if (!bipartition_args.empty()) {
            // need the qubit count to validate; build once
            const int n = cfg.state.build().n_qubits;
            for (const auto& s : bipartition_args)
                cfg.bipartitions.push_back(qppt::Bipartition::of(n, parse_comma_ints(s)));
        }

        if (check->parsed()) return qppt::cmd_check(cfg, std::cout, std::cerr);
        if (sweep->parsed()) {
            const GridArg g = parse_grid(grid_arg, /*need_step=*/true);
            qppt::GridSpec spec{g.param, g.lo, g.hi, g.step};
            cfg.format = "csv";
            return qppt::cmd_sweep(cfg, spec, std::cout, std::cerr);
        }
        const GridArg g = parse_grid(bisect_arg, /*need_step=*/false);
        qppt::BisectSpec spec{g.param, g.lo, g.hi, bisect_tol};
        return qppt::cmd_certify(cfg, spec, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
