#include "qppt/detectors.hpp"

#include <algorithm>
#include <cmath>

namespace qppt {

DiagonalizedT diagonalize_T(const Mat3& t) {
    const Svd3 dec = svd3(t);
    DiagonalizedT out;
    Mat3 u = dec.u;
    Mat3 v = dec.v;
    out.t = dec.s;
    if (mat3_det(u) < 0.0) {
        for (int i = 0; i < 3; ++i) u[i][2] = -u[i][2];
        out.t[2] = -out.t[2];
    }
    if (mat3_det(v) < 0.0) {
        for (int i = 0; i < 3; ++i) v[i][2] = -v[i][2];
        out.t[2] = -out.t[2];
    }
    out.o1 = mat3_transpose(u);
    out.o2 = mat3_transpose(v);
    return out;
}

Certificate horodecki(const DensityOperator& rho, double tol) {
    if (rho.n_qubits != 2) throw WrongArity("horodecki: need a two-qubit state");
    const TwoQubitData d = extract_two_qubit_data(rho);
    const DiagonalizedT diag = diagonalize_T(d.t);
    const double t1 = diag.t[0], t2 = diag.t[1], t3 = diag.t[2];
    const std::array<double, 4> combos{1.0 + t1 - t2 - t3, 1.0 - t1 + t2 - t3,
                                       1.0 - t1 - t2 + t3, 1.0 + t1 + t2 + t3};

    Certificate cert;
    cert.detector = "horodecki";
    cert.bipartition = Bipartition::first_r(2, 1);
    cert.tolerance = tol;
    cert.min_eigenvalue = *std::min_element(combos.begin(), combos.end());
    cert.bound_satisfied = cert.min_eigenvalue >= -tol;
    cert.witness_values = {{"t1", t1},       {"t2", t2},       {"t3", t3},
                           {"combo1", combos[0]}, {"combo2", combos[1]},
                           {"combo3", combos[2]}, {"combo4", combos[3]}};
    return cert;
}

Certificate sigma_bound(const DensityOperator& rho, const SigmaSet& s, const PtSigmaSet& ps,
                        double tol) {
    const MsigmaPair pair = msigma_pair(rho, s, ps);
    const std::array<double, 4> mu = msigma_pt_eigs(pair.m_pt);

    const double e1 = pair.m(0, 1).real();
    const double e2 = pair.m(0, 2).real();
    const double e3 = pair.m(0, 3).real();
    const double p3 = pair.m_pt(0, 3).real();
    const double p0 = pair.m_pt(1, 1).real();

    Certificate cert;
    cert.detector = "sigma";
    cert.bipartition = Bipartition::of(s.n_qubits, ps.transposed);
    cert.tolerance = tol;
    cert.min_eigenvalue = mu[1]; // the bound margin <S0^PT> - w
    cert.bound_satisfied = cert.min_eigenvalue >= -tol;
    cert.witness_values = {{"sigma1", e1},
                           {"sigma2", e2},
                           {"sigma3", e3},
                           {"sigma3_pt", p3},
                           {"sigma0_pt", p0},
                           {"mu2_minus", mu[3]},
                           {"matrix_min_eigenvalue", *std::min_element(mu.begin(), mu.end())}};
    return cert;
}

Certificate sigma_bound(const DensityOperator& rho, const std::vector<OrthonormalTriad>& triads,
                        const Bipartition& b, double tol) {
    const SigmaSet s = build_sigma_set(triads);
    const PtSigmaSet ps = build_pt_sigma_set(s, b);
    return sigma_bound(rho, s, ps, tol);
}

Certificate sigma_bound(const DensityOperator& rho, const std::vector<OrthonormalTriad>& triads,
                        int r, double tol) {
    if (r < 1 || r >= rho.n_qubits) throw BadBipartition("sigma_bound: r must satisfy 1 <= r < N");
    return sigma_bound(rho, triads, Bipartition::first_r(rho.n_qubits, r), tol);
}

double tangle3(const SchmidtParams& par) {
    validate(par);
    const double p = par.lambda[0] * par.lambda[4];
    return 4.0 * p * p;
}

Certificate peres_oracle(const DensityOperator& rho, const Bipartition& b, double tol) {
    const ComplexMatrix pt = partial_transpose(rho.matrix, b);
    Certificate cert;
    cert.detector = "peres";
    cert.bipartition = b;
    cert.tolerance = tol;
    cert.min_eigenvalue = min_eigenvalue(pt);
    cert.bound_satisfied = cert.min_eigenvalue >= -tol;
    return cert;
}

Certificate m1_certificate(const DensityOperator& rho, const Bipartition& b, double tol) {
    if (rho.n_qubits != 2) throw WrongArity("m1 detector: need a two-qubit state");
    const M1Pair pair = m1_pair(rho);
    // bipartition {2} flips the other side; the verdict is the same by symmetry
    const ComplexMatrix& m_pt = pair.m_pt;

    Certificate cert;
    cert.detector = "m1";
    cert.bipartition = b;
    cert.tolerance = tol;
    cert.min_eigenvalue = min_eigenvalue(m_pt);
    cert.bound_satisfied = cert.min_eigenvalue >= -tol;
    cert.witness_values = {{"m_min_eigenvalue", min_eigenvalue(pair.m)},
                           {"schur_min_eigenvalue", min_eigenvalue(m1_schur(m_pt))}};
    return cert;
}

Certificate m2_certificate(const DensityOperator& rho, const OrthonormalTriad& f1,
                           const OrthonormalTriad& f2, const Bipartition& b, double tol) {
    const std::array<double, 4> mu = m2_pt_eigs(rho, f1, f2);
    Certificate cert;
    cert.detector = "m2";
    cert.bipartition = b;
    cert.tolerance = tol;
    cert.min_eigenvalue = *std::min_element(mu.begin(), mu.end());
    cert.bound_satisfied = cert.min_eigenvalue >= -tol;
    cert.witness_values = {{"mu1", mu[0]}, {"mu2", mu[1]}, {"mu3", mu[2]}, {"mu4", mu[3]}};
    return cert;
}

Certificate sr_certificate(const DensityOperator& rho, const SigmaSet& s, const Bipartition& b,
                           double tol) {
    const SrResult r = sr_check(rho, s.sigma1, s.sigma2);
    Certificate cert;
    cert.detector = "sr";
    cert.bipartition = b;
    cert.tolerance = tol;
    cert.min_eigenvalue = r.block_min_eigenvalue;
    cert.bound_satisfied = r.holds;
    cert.witness_values = {{"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"variance1", r.variance1},
                           {"variance2", r.variance2}};
    return cert;
}

Certificate srpt_certificate(const DensityOperator& rho, const SigmaSet& s, const Bipartition& b,
                             double tol) {
    const SrResult r = srpt_check(rho, s.sigma1, s.sigma2, b);
    Certificate cert;
    cert.detector = "srpt";
    cert.bipartition = b;
    cert.tolerance = tol;
    cert.min_eigenvalue = r.block_min_eigenvalue;
    cert.bound_satisfied = r.block_min_eigenvalue >= -tol;
    cert.witness_values = {{"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"variance1", r.variance1},
                           {"variance2", r.variance2}};
    return cert;
}

BisectResult threshold_bisect(const std::function<DensityOperator(double)>& family,
                              const std::function<Certificate(const DensityOperator&)>& detector,
                              double lo, double hi, double tol) {
    if (!(lo < hi)) throw RangeError("threshold_bisect: need lo < hi");
    if (tol <= 0.0) throw RangeError("threshold_bisect: tolerance must be positive");

    const auto margin = [&](double x) { return detector(family(x)).min_eigenvalue; };
    const double margin_lo = margin(lo);
    const double margin_hi = margin(hi);
    if (margin_lo <= kDefaultTol || margin_hi >= -kDefaultTol)
        throw NotBracketed("threshold_bisect: verdict boundary is not strictly inside [lo, hi]");

    BisectResult out;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (margin(mid) >= -kDefaultTol)
            lo = mid;
        else
            hi = mid;
        ++out.iterations;
    }
    out.threshold = 0.5 * (lo + hi);
    out.bracket_width = hi - lo;
    return out;
}

} // namespace qppt
