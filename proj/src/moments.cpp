#include "qppt/moments.hpp"

#include <cmath>

namespace qppt {

namespace {

constexpr Complex kI{0.0, 1.0};

double real_expectation(const ComplexMatrix& rho, const ComplexMatrix& op) {
    return trace_product(rho, op).real();
}

SrResult sr_moments(const ComplexMatrix& rho, const ComplexMatrix& a1, const ComplexMatrix& a2) {
    if (!a1.is_hermitian(kDefaultTol) || !a2.is_hermitian(kDefaultTol))
        throw NotHermitian("uncertainty check: observables must be Hermitian");
    if (rho.dim() != a1.dim() || rho.dim() != a2.dim())
        throw DimensionMismatch("uncertainty check: dimension mismatch");

    const double e1 = real_expectation(rho, a1);
    const double e2 = real_expectation(rho, a2);
    const double e11 = trace_product(rho, a1 * a1).real();
    const double e22 = trace_product(rho, a2 * a2).real();
    const Complex e12 = trace_product(rho, a1 * a2);
    const Complex e21 = trace_product(rho, a2 * a1);

    SrResult r;
    r.variance1 = e11 - e1 * e1;
    r.variance2 = e22 - e2 * e2;
    r.lhs = r.variance1 * r.variance2;
    const double comm_sq = std::norm(e12 - e21);        // |<[A1,A2]>|^2
    const double anti = (e12 + e21).real() - 2 * e1 * e2; // <{dA1,dA2}>
    r.rhs = 0.25 * comm_sq + 0.25 * anti * anti;

    // min eigenvalue of the principal block [[1, e1, e2], [e1, e11, e12], [e2, conj(e12), e22]]
    ComplexMatrix block(3);
    block(0, 0) = 1.0;
    block(0, 1) = e1;
    block(0, 2) = e2;
    block(1, 0) = e1;
    block(1, 1) = e11;
    block(1, 2) = e12;
    block(2, 0) = e2;
    block(2, 1) = std::conj(e12);
    block(2, 2) = e22;
    r.block_min_eigenvalue = min_eigenvalue(block);
    return r;
}

} // namespace

OperatorColumn OperatorColumn::two_qubit_basic() {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix sx = sigma_dot({1, 0, 0});
    const ComplexMatrix sy = sigma_dot({0, 1, 0});
    const ComplexMatrix sz = sigma_dot({0, 0, 1});
    OperatorColumn xi;
    xi.ops = {kron(id2, id2), kron(sx, id2), kron(sy, id2), kron(sz, id2),
              kron(id2, sx), kron(id2, sy), kron(id2, sz)};
    return xi;
}

OperatorColumn OperatorColumn::two_qubit_frame(const OrthonormalTriad& t1, const OrthonormalTriad& t2) {
    validate(t1);
    validate(t2);
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    OperatorColumn xi;
    xi.ops = {kron(id2, id2), kron(sigma_dot(t1.k), sigma_dot(t2.k)),
              kron(sigma_dot(t1.l), sigma_dot(t2.l)), kron(sigma_dot(t1.m), sigma_dot(t2.m))};
    return xi;
}

OperatorColumn OperatorColumn::from_sigma(const SigmaSet& s) {
    OperatorColumn xi;
    xi.ops = {ComplexMatrix::identity(s.sigma0.dim()), s.sigma1, s.sigma2, s.sigma3};
    return xi;
}

void validate(const OperatorColumn& xi) {
    if (xi.ops.empty()) throw BadShape("operator column: empty");
    const std::size_t dim = xi.ops.front().dim();
    if (!xi.ops.front().approx_equal(ComplexMatrix::identity(dim), 1e-12))
        throw BadShape("operator column: first entry must be the identity");
    for (const auto& op : xi.ops)
        if (op.dim() != dim) throw DimensionMismatch("operator column: mixed dimensions");
}

MomentMatrix moment_matrix(const ComplexMatrix& rho, const OperatorColumn& xi) {
    validate(xi);
    if (rho.dim() != xi.ops.front().dim())
        throw DimensionMismatch("moment_matrix: state and operators differ in dimension");

    const std::size_t k = xi.ops.size();
    std::vector<ComplexMatrix> rho_a;
    rho_a.reserve(k);
    for (const auto& op : xi.ops) rho_a.push_back(rho * op);

    MomentMatrix mm;
    mm.entries = ComplexMatrix(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            // Tr[rho A_a A_b^dagger] as a Frobenius product of rho*A_a with A_b
            Complex v = 0.0;
            const ComplexMatrix& left = rho_a[a];
            const ComplexMatrix& right = xi.ops[b];
            const std::size_t n = rho.dim();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) v += left(i, j) * std::conj(right(i, j));
            mm.entries(a, b) = v;
        }
    }
    mm.real_part = ComplexMatrix(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) mm.real_part(a, b) = mm.entries(a, b).real();
    return mm;
}

MomentMatrix moment_matrix(const DensityOperator& rho, const OperatorColumn& xi) {
    return moment_matrix(rho.matrix, xi);
}

SrResult sr_check(const DensityOperator& rho, const ComplexMatrix& a1, const ComplexMatrix& a2) {
    SrResult r = sr_moments(rho.matrix, a1, a2);
    r.holds = r.lhs >= r.rhs - 1e-12;
    return r;
}

SrResult srpt_check(const DensityOperator& rho, const ComplexMatrix& a1, const ComplexMatrix& a2,
                    const Bipartition& b) {
    const ComplexMatrix rho_pt = partial_transpose(rho.matrix, b);
    SrResult r = sr_moments(rho_pt, a1, a2);
    r.holds = r.block_min_eigenvalue >= -kDefaultTol;
    return r;
}

M1Pair m1_pair(const DensityOperator& rho) {
    if (rho.n_qubits != 2) throw WrongArity("m1_pair: need a two-qubit state");
    const TwoQubitData d = extract_two_qubit_data(rho);

    auto assemble = [](const Vec3& s1, const Vec3& s2, const Mat3& t) {
        ComplexMatrix m(7);
        m(0, 0) = 1.0;
        for (int i = 0; i < 3; ++i) {
            m(0, 1 + i) = s1[i];
            m(1 + i, 0) = s1[i];
            m(0, 4 + i) = s2[i];
            m(4 + i, 0) = s2[i];
            m(1 + i, 1 + i) = 1.0;
            m(4 + i, 4 + i) = 1.0;
            for (int j = 0; j < 3; ++j) {
                m(1 + i, 4 + j) = t[i][j];
                m(4 + j, 1 + i) = t[i][j];
            }
        }
        return m;
    };

    M1Pair pair;
    pair.m = assemble(d.s1, d.s2, d.t);
    Vec3 neg_s1{-d.s1[0], -d.s1[1], -d.s1[2]};
    Mat3 neg_t = d.t;
    for (auto& row : neg_t)
        for (auto& x : row) x = -x;
    pair.m_pt = assemble(neg_s1, d.s2, neg_t);
    return pair;
}

ComplexMatrix m1_schur(const ComplexMatrix& m) {
    if (m.dim() != 7) throw BadShape("m1_schur: expected a 7x7 matrix");
    if (std::abs(m(0, 0) - Complex{1.0, 0.0}) > 1e-9)
        throw BadShape("m1_schur: corner entry must be 1");
    ComplexMatrix out(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out(i, j) = m(1 + i, 1 + j) - m(1 + i, 0) * m(0, 1 + j);
    return out;
}

std::array<double, 4> m2_pt_eigs(const DensityOperator& rho, const OrthonormalTriad& f1,
                                 const OrthonormalTriad& f2) {
    if (rho.n_qubits != 2) throw WrongArity("m2_pt_eigs: need a two-qubit state");
    validate(f1);
    validate(f2);
    const TwoQubitData d = extract_two_qubit_data(rho);
    const double tk = bilinear(f1.k, d.t, f2.k);
    const double tl = bilinear(f1.l, d.t, f2.l);
    const double tm = bilinear(f1.m, d.t, f2.m);
    return {1.0 + tk - tl - tm, 1.0 - tk + tl - tm, 1.0 - tk - tl + tm, 1.0 + tk + tl + tm};
}

ComplexMatrix m2_pt_matrix(double tk, double tl, double tm) {
    ComplexMatrix m(4);
    const double row0[4] = {1.0, -tk, -tl, -tm};
    for (int i = 0; i < 4; ++i) {
        m(0, i) = row0[i];
        m(i, 0) = row0[i];
        m(i, i) = 1.0;
    }
    m(1, 2) = tm;
    m(2, 1) = tm;
    m(1, 3) = tl;
    m(3, 1) = tl;
    m(2, 3) = tk;
    m(3, 2) = tk;
    return m;
}

namespace {

ComplexMatrix sigma_display(double e1, double e2, double e3, double e0) {
    ComplexMatrix m(4);
    m(0, 0) = 1.0;
    m(0, 1) = e1;
    m(0, 2) = e2;
    m(0, 3) = e3;
    m(1, 0) = e1;
    m(2, 0) = e2;
    m(3, 0) = e3;
    m(1, 1) = e0;
    m(2, 2) = e0;
    m(3, 3) = e0;
    m(1, 2) = kI * e3;
    m(2, 1) = -kI * e3;
    m(1, 3) = -kI * e2;
    m(3, 1) = kI * e2;
    m(2, 3) = kI * e1;
    m(3, 2) = -kI * e1;
    return m;
}

} // namespace

MsigmaPair msigma_pair(const DensityOperator& rho, const SigmaSet& s, const PtSigmaSet& ps) {
    if (rho.matrix.dim() != s.sigma0.dim() || s.sigma0.dim() != ps.sigma0_pt.dim())
        throw DimensionMismatch("msigma_pair: dimension mismatch");

    const double e1 = trace_product(rho.matrix, s.sigma1).real();
    const double e2 = trace_product(rho.matrix, s.sigma2).real();
    const double e3 = trace_product(rho.matrix, s.sigma3).real();
    const double e0 = trace_product(rho.matrix, s.sigma0).real();
    const double p1 = trace_product(rho.matrix, ps.sigma1_pt).real();
    const double p2 = trace_product(rho.matrix, ps.sigma2_pt).real();
    const double p3 = trace_product(rho.matrix, ps.sigma3_pt).real();
    const double p0 = trace_product(rho.matrix, ps.sigma0_pt).real();

    MsigmaPair pair;
    pair.m = sigma_display(e1, e2, e3, e0);
    pair.m_pt = sigma_display(p1, p2, p3, p0);
    return pair;
}

std::array<double, 4> msigma_pt_eigs(const ComplexMatrix& m_pt) {
    if (m_pt.dim() != 4) throw BadShape("msigma_pt_eigs: expected a 4x4 matrix");
    const double p0 = m_pt(1, 1).real();
    const double w1 = m_pt(0, 1).real();
    const double w2 = m_pt(0, 2).real();
    const double w3 = m_pt(0, 3).real();
    const double w = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
    const double rad = 0.5 * std::sqrt((1.0 - p0) * (1.0 - p0) + 4.0 * w * w);
    return {p0 + w, p0 - w, 0.5 * (1.0 + p0) + rad, 0.5 * (1.0 + p0) - rad};
}

} // namespace qppt
