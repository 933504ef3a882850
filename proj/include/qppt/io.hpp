#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qppt/detectors.hpp"
#include "qppt/pauli.hpp"
#include "qppt/states.hpp"

namespace qppt {

/// A state description as consumed from JSON:
///   {"family": "werner2"|"werner_n"|"ghz"|"schmidt3"|"two_qubit_data"|"raw", ...}
/// "raw" carries a row-major complex matrix as rows of [re, im] pairs.
struct StateSpec {
    std::string family;
    nlohmann::json params;

    DensityOperator build() const;
    bool has_parameter(const std::string& name) const;

    /// Copy with one numeric parameter substituted. Substituting a schmidt3
    /// lambda rescales the remaining four so the vector stays normalized.
    StateSpec with_parameter(const std::string& name, double value) const;
};

StateSpec parse_state_spec(const nlohmann::json& j);

std::vector<OrthonormalTriad> parse_triads(const nlohmann::json& j);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

struct RunConfig {
    StateSpec state;
    std::vector<std::string> detectors;    // empty: every applicable detector
    std::vector<Bipartition> bipartitions; // empty: transpose qubit 1
    std::vector<OrthonormalTriad> triads;  // empty: standard axes per qubit
    std::string out_path;                  // empty: write to the given stream
    std::string format = "json";           // json | csv
    double tolerance = kDefaultTol;
    std::uint64_t seed = 0;
};

struct GridSpec {
    std::string param;
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.01;
};

struct BisectSpec {
    std::string param;
    double lo = 0.0;
    double hi = 1.0;
    double tol = 1e-10;
};

// Exit codes: 0 all bounds satisfied, 3 violation found, 1 input error,
// 2 certify bracket failure.
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, const GridSpec& grid, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& cfg, const BisectSpec& bisect, std::ostream& out, std::ostream& err);

} // namespace qppt
