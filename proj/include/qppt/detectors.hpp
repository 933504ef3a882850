#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qppt/moments.hpp"
#include "qppt/pauli.hpp"
#include "qppt/pt.hpp"
#include "qppt/states.hpp"

namespace qppt {

/// Outcome of one detector run. For eigenvalue-based detectors
/// bound_satisfied <=> min_eigenvalue >= -tolerance.
struct Certificate {
    std::string detector;
    Bipartition bipartition;
    double min_eigenvalue = 0.0;
    bool bound_satisfied = true;
    std::map<std::string, double> witness_values;
    double tolerance = kDefaultTol;
};

/// Rotations O1, O2 in SO(3) with O1 T O2^T = diag(t). The diagonal entries
/// are ordered by descending absolute value and may be negative: determinant
/// corrections from the SVD factors are folded into the last entry.
struct DiagonalizedT {
    Mat3 o1;
    Mat3 o2;
    Vec3 t{};
};

DiagonalizedT diagonalize_T(const Mat3& t);

/// Two-qubit separability conditions on the diagonalized correlation matrix:
/// all of 1 + t1 - t2 - t3, 1 - t1 + t2 - t3, 1 - t1 - t2 + t3,
/// 1 + t1 + t2 + t3 must be nonnegative.
Certificate horodecki(const DensityOperator& rho, double tol = kDefaultTol);

/// The Sigma-moment separability bound
///   <Sigma_0^PT> >= sqrt(<Sigma_1>^2 + <Sigma_2>^2 + <Sigma_3^PT>^2).
/// min_eigenvalue is the bound margin (an eigenvalue of the 4x4 PT moment
/// matrix); the full-matrix minimum is reported in witness_values since the
/// other eigenvalue branch can bind first.
Certificate sigma_bound(const DensityOperator& rho, const std::vector<OrthonormalTriad>& triads,
                        int r, double tol = kDefaultTol);
Certificate sigma_bound(const DensityOperator& rho, const std::vector<OrthonormalTriad>& triads,
                        const Bipartition& b, double tol = kDefaultTol);
Certificate sigma_bound(const DensityOperator& rho, const SigmaSet& s, const PtSigmaSet& ps,
                        double tol = kDefaultTol);

/// Genuine tripartite entanglement of the canonical three-qubit form:
/// tau_3 = 4 l0^2 l4^2.
double tangle3(const SchmidtParams& par);

/// Ground-truth NPT detector: minimum eigenvalue of the partially
/// transposed density matrix. Every moment detector is only ever as strong
/// as this one.
Certificate peres_oracle(const DensityOperator& rho, const Bipartition& b, double tol = kDefaultTol);

// Detector wrappers over the moment machinery, shared by the CLI battery.
Certificate m1_certificate(const DensityOperator& rho, const Bipartition& b, double tol = kDefaultTol);
Certificate m2_certificate(const DensityOperator& rho, const OrthonormalTriad& f1,
                           const OrthonormalTriad& f2, const Bipartition& b, double tol = kDefaultTol);
Certificate sr_certificate(const DensityOperator& rho, const SigmaSet& s, const Bipartition& b,
                           double tol = kDefaultTol);
Certificate srpt_certificate(const DensityOperator& rho, const SigmaSet& s, const Bipartition& b,
                             double tol = kDefaultTol);

struct BisectResult {
    double threshold = 0.0;
    int iterations = 0;
    double bracket_width = 0.0;
};

/// Locates a detector's satisfied/violated boundary by bisection on a
/// monotone family. Endpoints must sit strictly inside their regions
/// (margin > tol at lo, < -tol at hi), otherwise NotBracketed is thrown.
BisectResult threshold_bisect(const std::function<DensityOperator(double)>& family,
                              const std::function<Certificate(const DensityOperator&)>& detector,
                              double lo, double hi, double tol);

} // namespace qppt
