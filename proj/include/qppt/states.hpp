#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qppt/linalg.hpp"

namespace qppt {

/// A validated N-qubit density matrix: Hermitian and unit trace to 1e-10,
/// minimum eigenvalue >= -1e-10.
struct DensityOperator {
    int n_qubits = 0;
    ComplexMatrix matrix;

    /// Full validation (including an eigensolve for positivity).
    static DensityOperator from_matrix(ComplexMatrix m, double tol = kDefaultTol);

    /// Hermiticity/trace checks only; for constructors whose output is
    /// positive by construction (convex mixtures of pure states).
    static DensityOperator trusted(int n_qubits, ComplexMatrix m, double tol = kDefaultTol);
};

/// Bloch vectors and correlation matrix of a two-qubit state:
/// s1_i = Tr[rho (sigma_i x I)], s2_j = Tr[rho (I x sigma_j)],
/// t_ij = Tr[rho (sigma_i x sigma_j)].
struct TwoQubitData {
    Vec3 s1{0, 0, 0};
    Vec3 s2{0, 0, 0};
    Mat3 t = mat3_zero();
};

/// Five-term canonical form of a three-qubit pure state:
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>,
/// with l_i >= 0, phi in [0, pi], sum l_i^2 = 1.
struct SchmidtParams {
    std::array<double, 5> lambda{1, 0, 0, 0, 0};
    double phi = 0.0;
};

void validate(const SchmidtParams& p, double tol = 1e-12);

/// rho = 1/4 [I x I + sigma.s1 x I + I x sigma.s2 + sum_ij t_ij sigma_i x sigma_j].
/// Throws NotPositive when the parameters fail positivity (unphysical
/// parameters, not a bug).
DensityOperator two_qubit_from_data(const TwoQubitData& d);

TwoQubitData extract_two_qubit_data(const DensityOperator& rho);

/// Singlet Werner state: (1-x)/4 I + x |Psi->(<Psi-|, 0 <= x <= 1.
DensityOperator werner_two_qubit(double x);

/// N-qubit Werner state: x |GHZ><GHZ| + (1-x)/2^N I, 2 <= n <= 8.
DensityOperator werner_n_qubit(int n, double x);

/// sqrt(p)|0..0> + e^{i phi} sqrt(1-p)|1..1>, pure.
DensityOperator ghz_like(int n, double p, double phi);

DensityOperator schmidt_three_qubit(const SchmidtParams& par);

/// Convex mixture of `terms` Haar-random product pure states. Single-qubit
/// kets come from normalized complex Gaussian pairs, mixture weights from a
/// flat simplex sample; deterministic for a fixed seed.
DensityOperator random_separable(int n, int terms, std::uint64_t seed);

DensityOperator maximally_mixed(int n);

/// Projector onto a normalized state vector of dimension 2^N.
DensityOperator pure_state(const std::vector<Complex>& amplitudes);

} // namespace qppt
