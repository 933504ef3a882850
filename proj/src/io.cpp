#include "qppt/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qppt {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kAllDetectors{"m1", "m2", "sigma", "horodecki", "peres", "sr", "srpt"};

double require_number(const json& params, const std::string& field) {
    if (!params.contains(field)) throw Error("state spec: missing field '" + field + "'");
    if (!params[field].is_number()) throw Error("state spec: field '" + field + "' must be a number");
    return params[field].get<double>();
}

int require_int(const json& params, const std::string& field) {
    if (!params.contains(field)) throw Error("state spec: missing field '" + field + "'");
    if (!params[field].is_number_integer())
        throw Error("state spec: field '" + field + "' must be an integer");
    return params[field].get<int>();
}

Vec3 parse_vec3(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) throw Error("state spec: field '" + field + "' must be a 3-vector");
    Vec3 v{};
    for (int i = 0; i < 3; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_number())
            throw Error("state spec: field '" + field + "' must hold numbers");
        v[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i)].get<double>();
    }
    return v;
}

ComplexMatrix parse_raw_matrix(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw Error("state spec: field 'matrix' must be a nonempty array");
    const std::size_t dim = rows.size();
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != dim)
            throw Error("state spec: field 'matrix' must be square");
        for (std::size_t c = 0; c < dim; ++c) {
            const json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                throw Error("state spec: field 'matrix' entries must be [re, im] pairs");
            m(r, c) = Complex{cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    return m;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

StateSpec parse_state_spec(const json& j) {
    if (!j.is_object()) throw Error("state spec: expected a JSON object");
    if (!j.contains("family") || !j["family"].is_string())
        throw Error("state spec: missing field 'family'");
    StateSpec spec;
    spec.family = j["family"].get<std::string>();
    spec.params = j;
    spec.params.erase("family");

    const bool known = spec.family == "werner2" || spec.family == "werner_n" || spec.family == "ghz" ||
                       spec.family == "schmidt3" || spec.family == "two_qubit_data" || spec.family == "raw";
    if (!known) throw Error("state spec: unknown family '" + spec.family + "'");
    return spec;
}

DensityOperator StateSpec::build() const {
    if (family == "werner2") return werner_two_qubit(require_number(params, "x"));
    if (family == "werner_n") return werner_n_qubit(require_int(params, "n"), require_number(params, "x"));
    if (family == "ghz") {
        const double phi = params.contains("phi") ? require_number(params, "phi") : 0.0;
        return ghz_like(require_int(params, "n"), require_number(params, "p"), phi);
    }
    if (family == "schmidt3") {
        if (!params.contains("lambda") || !params["lambda"].is_array() || params["lambda"].size() != 5)
            throw Error("state spec: field 'lambda' must be an array of five numbers");
        SchmidtParams p;
        for (std::size_t i = 0; i < 5; ++i) p.lambda[i] = params["lambda"][i].get<double>();
        p.phi = params.contains("phi") ? require_number(params, "phi") : 0.0;
        return schmidt_three_qubit(p);
    }
    if (family == "two_qubit_data") {
        TwoQubitData d;
        if (params.contains("s1")) d.s1 = parse_vec3(params["s1"], "s1");
        if (params.contains("s2")) d.s2 = parse_vec3(params["s2"], "s2");
        if (params.contains("T")) {
            const json& rows = params["T"];
            if (!rows.is_array() || rows.size() != 3) throw Error("state spec: field 'T' must be 3x3");
            for (int r = 0; r < 3; ++r) d.t[static_cast<std::size_t>(r)] = parse_vec3(rows[static_cast<std::size_t>(r)], "T");
        }
        return two_qubit_from_data(d);
    }
    if (family == "raw") {
        if (!params.contains("matrix")) throw Error("state spec: missing field 'matrix'");
        return DensityOperator::from_matrix(parse_raw_matrix(params["matrix"]));
    }
    throw Error("state spec: unknown family '" + family + "'");
}

bool StateSpec::has_parameter(const std::string& name) const {
    if (family == "werner2" || family == "werner_n") return name == "x";
    if (family == "ghz") return name == "p" || name == "phi";
    if (family == "schmidt3") {
        if (name == "phi") return true;
        return name.size() == 7 && name.rfind("lambda", 0) == 0 && name[6] >= '0' && name[6] <= '4';
    }
    return false;
}

StateSpec StateSpec::with_parameter(const std::string& name, double value) const {
    if (!has_parameter(name))
        throw Error("state family '" + family + "' has no parameter '" + name + "'");
    StateSpec out = *this;
    if (family == "schmidt3" && name != "phi") {
        const std::size_t idx = static_cast<std::size_t>(name[6] - '0');
        if (value < 0.0 || value > 1.0)
            throw RangeError("schmidt3 parameter '" + name + "' must lie in [0, 1]");
        std::array<double, 5> lambda{};
        for (std::size_t i = 0; i < 5; ++i) lambda[i] = params["lambda"][i].get<double>();
        double others = 0.0;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != idx) others += lambda[i] * lambda[i];
        const double want = 1.0 - value * value;
        if (others <= 0.0 && want > 1e-15)
            throw Error("schmidt3 sweep: remaining lambdas are zero, cannot renormalize");
        const double scale = others > 0.0 ? std::sqrt(want / others) : 0.0;
        for (std::size_t i = 0; i < 5; ++i) lambda[i] = (i == idx) ? value : lambda[i] * scale;
        out.params["lambda"] = lambda;
        return out;
    }
    out.params[name] = value;
    return out;
}

std::vector<OrthonormalTriad> parse_triads(const json& j) {
    const auto one = [](const json& o) {
        if (!o.is_object()) throw Error("triads: expected objects with fields k, l, m");
        OrthonormalTriad t;
        t.k = parse_vec3(o.contains("k") ? o["k"] : json{}, "k");
        t.l = parse_vec3(o.contains("l") ? o["l"] : json{}, "l");
        t.m = parse_vec3(o.contains("m") ? o["m"] : json{}, "m");
        validate(t);
        return t;
    };
    std::vector<OrthonormalTriad> out;
    if (j.is_object()) {
        out.push_back(one(j));
    } else if (j.is_array()) {
        for (const auto& o : j) out.push_back(one(o));
    } else {
        throw Error("triads: expected an object or an array of objects");
    }
    if (out.empty()) throw Error("triads: empty");
    return out;
}

ordered_json certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["detector"] = cert.detector;
    j["bipartition"]["n_qubits"] = cert.bipartition.n_qubits;
    j["bipartition"]["transposed"] = cert.bipartition.transposed;
    j["min_eigenvalue"] = cert.min_eigenvalue;
    j["bound_satisfied"] = cert.bound_satisfied;
    j["tolerance"] = cert.tolerance;
    j["witness_values"] = ordered_json::object();
    for (const auto& [k, v] : cert.witness_values) j["witness_values"][k] = v;
    return j;
}

namespace {

struct Battery {
    DensityOperator rho;
    std::vector<OrthonormalTriad> triads;
    std::vector<Bipartition> bipartitions;
    std::vector<std::string> detectors;
    SigmaSet sigma;
    double tol = kDefaultTol;
};

bool detector_applicable(const std::string& name, int n_qubits) {
    if (name == "m1" || name == "m2" || name == "horodecki") return n_qubits == 2;
    return true;
}

Battery prepare_battery(const RunConfig& cfg) {
    Battery b;
    b.rho = cfg.state.build();
    b.tol = cfg.tolerance;
    const int n = b.rho.n_qubits;

    b.triads = cfg.triads.empty() ? standard_triads(n) : cfg.triads;
    if (static_cast<int>(b.triads.size()) == 1 && n > 1)
        b.triads = std::vector<OrthonormalTriad>(static_cast<std::size_t>(n), b.triads.front());
    if (static_cast<int>(b.triads.size()) != n)
        throw Error("triads: need one triad per qubit (" + std::to_string(n) + ")");

    if (cfg.bipartitions.empty()) {
        b.bipartitions.push_back(Bipartition::first_r(n, 1));
    } else {
        for (const auto& bp : cfg.bipartitions) {
            if (bp.n_qubits != n) throw Error("bipartition: qubit count does not match the state");
            validate(bp);
            b.bipartitions.push_back(bp);
        }
    }

    if (cfg.detectors.empty()) {
        for (const auto& name : kAllDetectors)
            if (detector_applicable(name, n)) b.detectors.push_back(name);
    } else {
        for (const auto& name : cfg.detectors) {
            if (std::find(kAllDetectors.begin(), kAllDetectors.end(), name) == kAllDetectors.end())
                throw Error("unknown detector '" + name + "'");
            if (!detector_applicable(name, n))
                throw Error("detector '" + name + "' needs a two-qubit state");
            b.detectors.push_back(name);
        }
    }

    b.sigma = build_sigma_set(b.triads);
    return b;
}

Certificate run_detector(const Battery& b, const std::string& name, const Bipartition& bp) {
    if (name == "m1") return m1_certificate(b.rho, bp, b.tol);
    if (name == "m2") return m2_certificate(b.rho, b.triads[0], b.triads[1], bp, b.tol);
    if (name == "sigma") return sigma_bound(b.rho, b.sigma, build_pt_sigma_set(b.sigma, bp), b.tol);
    if (name == "horodecki") {
        Certificate cert = horodecki(b.rho, b.tol);
        cert.bipartition = bp;
        return cert;
    }
    if (name == "peres") return peres_oracle(b.rho, bp, b.tol);
    if (name == "sr") return sr_certificate(b.rho, b.sigma, bp, b.tol);
    if (name == "srpt") return srpt_certificate(b.rho, b.sigma, bp, b.tol);
    throw Error("unknown detector '" + name + "'");
}

void write_report(const RunConfig& cfg, const std::string& text, std::ostream& fallback) {
    if (cfg.out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file '" + cfg.out_path + "'");
    f << text;
}

ordered_json report_header(const char* command, const RunConfig& cfg) {
    ordered_json j;
    j["command"] = command;
    j["family"] = cfg.state.family;
    j["parameters"] = cfg.state.params;
    j["seed"] = cfg.seed;
    j["tolerance"] = cfg.tolerance;
    return j;
}

} // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const Battery b = prepare_battery(cfg);

        std::vector<Certificate> certs;
        for (const auto& name : b.detectors)
            for (const auto& bp : b.bipartitions) certs.push_back(run_detector(b, name, bp));

        bool all_ok = true;
        for (const auto& c : certs) all_ok = all_ok && c.bound_satisfied;

        std::string text;
        if (cfg.format == "csv") {
            std::ostringstream os;
            os << "detector,bipartition,min_eigenvalue,bound_satisfied,tolerance\n";
            for (const auto& c : certs) {
                std::string bp = c.bipartition.to_string();
                for (auto& ch : bp)
                    if (ch == ',') ch = ';';
                os << c.detector << "," << bp << "," << format_double(c.min_eigenvalue) << ","
                   << (c.bound_satisfied ? 1 : 0) << "," << format_double(c.tolerance) << "\n";
            }
            text = os.str();
        } else {
            ordered_json j = report_header("check", cfg);
            j["certificates"] = ordered_json::array();
            for (const auto& c : certs) j["certificates"].push_back(certificate_to_json(c));
            text = j.dump(2) + "\n";
        }
        write_report(cfg, text, out);
        return all_ok ? 0 : 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_sweep(const RunConfig& cfg, const GridSpec& grid, std::ostream& out, std::ostream& err) {
    try {
        if (!cfg.state.has_parameter(grid.param))
            throw Error("state family '" + cfg.state.family + "' has no parameter '" + grid.param + "'");
        if (grid.step <= 0.0) throw Error("grid: step must be positive");

        // probe the battery once to resolve detectors/bipartitions deterministically
        Battery probe = prepare_battery(cfg);
        const Bipartition bp = probe.bipartitions.front();

        std::ostringstream os;
        os << grid.param;
        for (const auto& name : probe.detectors) os << "," << name << "_min_eig," << name << "_satisfied";
        os << "\n";

        const int count = static_cast<int>(std::floor((grid.hi - grid.lo) / grid.step + 0.5)) + 1;
        for (int i = 0; i < count; ++i) {
            const double x = grid.lo + grid.step * i;
            if (x > grid.hi + 0.5 * grid.step) break;
            RunConfig point = cfg;
            point.state = cfg.state.with_parameter(grid.param, x);
            Battery b = prepare_battery(point);
            os << format_double(x);
            for (const auto& name : probe.detectors) {
                const Certificate c = run_detector(b, name, bp);
                os << "," << format_double(c.min_eigenvalue) << "," << (c.bound_satisfied ? 1 : 0);
            }
            os << "\n";
        }
        write_report(cfg, os.str(), out);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_certify(const RunConfig& cfg, const BisectSpec& bisect, std::ostream& out, std::ostream& err) {
    bool bracket_failure = false;
    try {
        if (!cfg.state.has_parameter(bisect.param))
            throw Error("state family '" + cfg.state.family + "' has no parameter '" + bisect.param + "'");
        if (cfg.detectors.size() != 1)
            throw Error("certify: exactly one detector must be selected");

        Battery probe = prepare_battery(cfg);
        const Bipartition bp = probe.bipartitions.front();
        const std::string detector = probe.detectors.front();

        const auto family = [&](double x) { return cfg.state.with_parameter(bisect.param, x).build(); };
        const auto run = [&](const DensityOperator& rho) {
            Battery b = probe;
            b.rho = rho;
            return run_detector(b, detector, bp);
        };

        BisectResult res;
        try {
            res = threshold_bisect(family, run, bisect.lo, bisect.hi, bisect.tol);
        } catch (const NotBracketed&) {
            bracket_failure = true;
            throw;
        }

        ordered_json j = report_header("certify", cfg);
        j["detector"] = detector;
        j["parameter"] = bisect.param;
        j["lo"] = bisect.lo;
        j["hi"] = bisect.hi;
        j["bisect_tolerance"] = bisect.tol;
        j["threshold"] = res.threshold;
        j["iterations"] = res.iterations;
        j["bracket_width"] = res.bracket_width;
        write_report(cfg, j.dump(2) + "\n", out);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return bracket_failure ? 2 : 1;
    }
}

} // namespace qppt
