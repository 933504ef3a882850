#pragma once

#include <array>
#include <vector>

#include "qppt/linalg.hpp"
#include "qppt/pauli.hpp"
#include "qppt/pt.hpp"
#include "qppt/states.hpp"

namespace qppt {

/// An operator list (A_0 = I, A_1, ..., A_n), all of one dimension, from
/// which moment matrices M[a][b] = Tr[rho A_a A_b^dagger] are formed.
struct OperatorColumn {
    std::vector<ComplexMatrix> ops;

    /// (I x I, sigma_i x I, I x sigma_j): the basic two-qubit column.
    static OperatorColumn two_qubit_basic();

    /// (I x I, sigma.k1 x sigma.k2, sigma.l1 x sigma.l2, sigma.m1 x sigma.m2).
    static OperatorColumn two_qubit_frame(const OrthonormalTriad& t1, const OrthonormalTriad& t2);

    /// (I, Sigma_1, Sigma_2, Sigma_3).
    static OperatorColumn from_sigma(const SigmaSet& s);
};

void validate(const OperatorColumn& xi);

/// Moment matrix of a state over an operator column. `entries` is Hermitian
/// and positive semidefinite for any valid state; `real_part` is
/// (entries + entrywise conjugate)/2, real symmetric, and PSD whenever
/// `entries` is (the real part of a PSD Hermitian matrix is PSD).
struct MomentMatrix {
    ComplexMatrix entries;
    ComplexMatrix real_part;
};

MomentMatrix moment_matrix(const ComplexMatrix& rho, const OperatorColumn& xi);
MomentMatrix moment_matrix(const DensityOperator& rho, const OperatorColumn& xi);

/// One evaluation of the variance-product uncertainty check
///   <dA1^2><dA2^2> >= 1/4 |<[A1,A2]>|^2 + 1/4 <{dA1,dA2}>^2.
/// `holds` follows the 3x3 moment block (I, A1, A2): for a valid state it is
/// exactly the inequality verdict; after a partial transpose the block can
/// also fail through a negative variance, which the product form alone
/// cannot see.
struct SrResult {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
    double variance1 = 0.0;
    double variance2 = 0.0;
    double block_min_eigenvalue = 0.0; // of the 3x3 moment block
};

SrResult sr_check(const DensityOperator& rho, const ComplexMatrix& a1, const ComplexMatrix& a2);

/// The same check with every operator replaced by its partial-transpose
/// image before taking moments, i.e. all moments evaluated in rho^PT.
/// Obeyed by every separable state; violation certifies entanglement.
SrResult srpt_check(const DensityOperator& rho, const ComplexMatrix& a1, const ComplexMatrix& a2,
                    const Bipartition& b);

/// The 7x7 real symmetric moment matrix of the basic two-qubit column,
/// in block form (1, s1^T, s2^T; s1, I, T; s2, T^T, I), and its partial
/// transpose counterpart with s1 -> -s1, T -> -T.
struct M1Pair {
    ComplexMatrix m;    // 7x7, real entries
    ComplexMatrix m_pt; // 7x7, real entries
};

M1Pair m1_pair(const DensityOperator& rho);

/// Schur reduction of an m1-form 7x7 matrix: returns B - C C^T (6x6); the
/// PSD verdict of the output equals that of the input.
ComplexMatrix m1_schur(const ComplexMatrix& m);

/// Closed-form eigenvalues of the 4x4 frame moment matrix after partial
/// transpose, in terms of t_ab = a^T T b:
///   { 1 + tk - tl - tm, 1 - tk + tl - tm, 1 - tk - tl + tm, 1 + tk + tl + tm }.
std::array<double, 4> m2_pt_eigs(const DensityOperator& rho, const OrthonormalTriad& f1,
                                 const OrthonormalTriad& f2);

/// The explicit 4x4 partial-transpose frame moment matrix for given t values.
ComplexMatrix m2_pt_matrix(double tk, double tl, double tm);

/// The 4x4 Sigma moment matrix and its partial-transpose counterpart:
///   [ 1      <S1>    <S2>    <S3>  ]
///   [ <S1>   <S0>    i<S3>  -i<S2> ]
///   [ <S2>  -i<S3>   <S0>    i<S1> ]
///   [ <S3>   i<S2>  -i<S1>   <S0>  ]
/// with PT expectation values substituted in the second matrix.
struct MsigmaPair {
    ComplexMatrix m;    // 4x4 Hermitian
    ComplexMatrix m_pt; // 4x4 Hermitian
};

MsigmaPair msigma_pair(const DensityOperator& rho, const SigmaSet& s, const PtSigmaSet& ps);

/// Closed-form eigenvalues of a Sigma PT moment matrix, returned as
/// { mu1+, mu1-, mu2+, mu2- } where
///   mu1+- = <S0^PT> +- w,   w = sqrt(<S1>^2 + <S2>^2 + <S3^PT>^2),
///   mu2+- = (1 + <S0^PT>)/2 +- sqrt((1 - <S0^PT>)^2 + 4 w^2)/2.
std::array<double, 4> msigma_pt_eigs(const ComplexMatrix& m_pt);

} // namespace qppt
