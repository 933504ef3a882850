#pragma once

#include <vector>

#include "qppt/linalg.hpp"
#include "qppt/pt.hpp"

namespace qppt {

/// A right-handed orthonormal measurement frame (k, l, m) for one qubit:
/// unit vectors, pairwise orthogonal, k x l = m, each to 1e-12. Validation
/// rejects near-orthonormal input rather than repairing it, so the
/// provenance of frames stays explicit.
struct OrthonormalTriad {
    Vec3 k{1, 0, 0};
    Vec3 l{0, 1, 0};
    Vec3 m{0, 0, 1};

    static OrthonormalTriad standard() { return {}; }
};

void validate(const OrthonormalTriad& t, double tol = 1e-12);

std::vector<OrthonormalTriad> standard_triads(int n_qubits);

/// sigma . n for a unit vector n: 2x2 Hermitian, traceless, squares to I.
/// Basis convention: sigma_z eigenbasis with |0> the +1 eigenvector.
ComplexMatrix sigma_dot(const Vec3& n);

enum class LadderSign { plus, minus };

/// Ladder operator of a frame: (1/2) sigma . (k +- i l).
ComplexMatrix sigma_pm(const OrthonormalTriad& triad, LadderSign sign);

/// The four collective N-qubit operators built from per-qubit frames:
///   Sigma_1 = (x) sigma_+  +  (x) sigma_-
///   Sigma_2 = -i [ (x) sigma_+  -  (x) sigma_- ]
///   Sigma_3 = (x) P_+  -  (x) P_-        with P_+- = (I +- sigma.m)/2
///   Sigma_0 = (x) P_+  +  (x) P_-        ( = Sigma_i^2 for i = 1,2,3 )
/// They satisfy Sigma_i Sigma_j = i eps_ijk Sigma_k for i != j.
struct SigmaSet {
    int n_qubits = 0;
    std::vector<OrthonormalTriad> triads;
    ComplexMatrix sigma1, sigma2, sigma3, sigma0;
};

/// Builds a SigmaSet for 1 <= N <= 8 qubits; throws TooManyQubits beyond.
SigmaSet build_sigma_set(const std::vector<OrthonormalTriad>& triads);

/// Images of the Sigma operators under partial transpose of the first r
/// qubits, in the local time-reversal convention (sigma -> -sigma on the
/// transposed qubits):
///   Sigma_1^PT = (-1)^r Sigma_1,  Sigma_2^PT = (-1)^r Sigma_2,
///   Sigma_3^PT / Sigma_0^PT swap P_+ <-> P_- on the transposed factors.
struct PtSigmaSet {
    SigmaSet base;
    int r = 0;                   // number of transposed qubits
    std::vector<int> transposed; // the actual subset (prefix 1..r by default)
    ComplexMatrix sigma1_pt, sigma2_pt, sigma3_pt, sigma0_pt;
};

PtSigmaSet build_pt_sigma_set(const SigmaSet& s, int r);
PtSigmaSet build_pt_sigma_set(const SigmaSet& s, const Bipartition& b);

} // namespace qppt
