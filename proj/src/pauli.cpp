#include "qppt/pauli.hpp"

#include <algorithm>
#include <cmath>

namespace qppt {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix fold_kron(const std::vector<ComplexMatrix>& factors) {
    ComplexMatrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

} // namespace

void validate(const OrthonormalTriad& t, double tol) {
    if (std::abs(norm(t.k) - 1.0) > tol) throw NotUnit("triad: k is not a unit vector");
    if (std::abs(norm(t.l) - 1.0) > tol) throw NotUnit("triad: l is not a unit vector");
    if (std::abs(norm(t.m) - 1.0) > tol) throw NotUnit("triad: m is not a unit vector");
    if (std::abs(dot(t.k, t.l)) > tol || std::abs(dot(t.k, t.m)) > tol || std::abs(dot(t.l, t.m)) > tol)
        throw NotOrthonormal("triad: vectors are not pairwise orthogonal");
    const Vec3 kl = cross(t.k, t.l);
    const Vec3 diff{kl[0] - t.m[0], kl[1] - t.m[1], kl[2] - t.m[2]};
    if (norm(diff) > tol) throw NotOrthonormal("triad: not right-handed (k x l != m)");
}

std::vector<OrthonormalTriad> standard_triads(int n_qubits) {
    return std::vector<OrthonormalTriad>(static_cast<std::size_t>(n_qubits), OrthonormalTriad::standard());
}

ComplexMatrix sigma_dot(const Vec3& n) {
    if (std::abs(norm(n) - 1.0) > 1e-12) throw NotUnit("sigma_dot: direction is not a unit vector");
    ComplexMatrix m(2);
    m(0, 0) = n[2];
    m(0, 1) = Complex{n[0], -n[1]};
    m(1, 0) = Complex{n[0], n[1]};
    m(1, 1) = -n[2];
    return m;
}

ComplexMatrix sigma_pm(const OrthonormalTriad& triad, LadderSign sign) {
    validate(triad);
    const ComplexMatrix sk = sigma_dot(triad.k);
    const ComplexMatrix sl = sigma_dot(triad.l);
    const Complex phase = (sign == LadderSign::plus) ? kI : -kI;
    return 0.5 * (sk + phase * sl);
}

SigmaSet build_sigma_set(const std::vector<OrthonormalTriad>& triads) {
    const int n = static_cast<int>(triads.size());
    if (n < 1) throw RangeError("build_sigma_set: need at least one qubit");
    if (n > 8) throw TooManyQubits("build_sigma_set: at most 8 qubits supported");
    for (const auto& t : triads) validate(t);

    std::vector<ComplexMatrix> plus, minus, proj_up, proj_dn;
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    for (const auto& t : triads) {
        plus.push_back(sigma_pm(t, LadderSign::plus));
        minus.push_back(sigma_pm(t, LadderSign::minus));
        const ComplexMatrix sm = sigma_dot(t.m);
        proj_up.push_back(0.5 * (id2 + sm));
        proj_dn.push_back(0.5 * (id2 - sm));
    }

    SigmaSet s;
    s.n_qubits = n;
    s.triads = triads;
    const ComplexMatrix all_plus = fold_kron(plus);
    const ComplexMatrix all_minus = fold_kron(minus);
    s.sigma1 = all_plus + all_minus;
    s.sigma2 = -kI * (all_plus - all_minus);
    const ComplexMatrix up = fold_kron(proj_up);
    const ComplexMatrix dn = fold_kron(proj_dn);
    s.sigma3 = up - dn;
    s.sigma0 = up + dn;
    return s;
}

PtSigmaSet build_pt_sigma_set(const SigmaSet& s, int r) {
    if (r < 1 || r >= s.n_qubits)
        throw BadBipartition("build_pt_sigma_set: r must satisfy 1 <= r < N");
    return build_pt_sigma_set(s, Bipartition::first_r(s.n_qubits, r));
}

PtSigmaSet build_pt_sigma_set(const SigmaSet& s, const Bipartition& b) {
    validate(b);
    if (b.n_qubits != s.n_qubits)
        throw BadBipartition("build_pt_sigma_set: bipartition qubit count mismatch");

    std::vector<bool> flipped(static_cast<std::size_t>(s.n_qubits), false);
    for (int q : b.transposed) flipped[static_cast<std::size_t>(q - 1)] = true;

    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    std::vector<ComplexMatrix> term1, term2; // P-swap on transposed factors
    for (int q = 0; q < s.n_qubits; ++q) {
        const ComplexMatrix sm = sigma_dot(s.triads[static_cast<std::size_t>(q)].m);
        const ComplexMatrix p_up = 0.5 * (id2 + sm);
        const ComplexMatrix p_dn = 0.5 * (id2 - sm);
        term1.push_back(flipped[static_cast<std::size_t>(q)] ? p_dn : p_up);
        term2.push_back(flipped[static_cast<std::size_t>(q)] ? p_up : p_dn);
    }

    PtSigmaSet ps;
    ps.base = s;
    ps.r = static_cast<int>(b.transposed.size());
    ps.transposed = b.transposed;
    const double sign = (ps.r % 2 == 0) ? 1.0 : -1.0;
    ps.sigma1_pt = sign * s.sigma1;
    ps.sigma2_pt = sign * s.sigma2;
    const ComplexMatrix t1 = fold_kron(term1);
    const ComplexMatrix t2 = fold_kron(term2);
    ps.sigma3_pt = t1 - t2;
    ps.sigma0_pt = t1 + t2;

    // constructive consistency with the matrix-level map:
    // (Sigma_1 Sigma_2)^PT = i Sigma_3^PT and (Sigma_1^2)^PT = Sigma_0^PT
    const ComplexMatrix prod_pt = time_reversal_pt(s.sigma1 * s.sigma2, b);
    if (max_abs_diff(prod_pt, kI * ps.sigma3_pt) > 1e-10)
        throw Error("build_pt_sigma_set: (Sigma_1 Sigma_2)^PT != i Sigma_3^PT");
    if (max_abs_diff(time_reversal_pt(s.sigma0, b), ps.sigma0_pt) > 1e-10)
        throw Error("build_pt_sigma_set: (Sigma_i^2)^PT != Sigma_0^PT");

    return ps;
}

} // namespace qppt
