#include "qppt/states.hpp"

#include <cmath>

#include "qppt/pauli.hpp"
#include "qppt/rng.hpp"

namespace qppt {

namespace {

int qubits_for_dim(std::size_t dim) {
    int n = 0;
    std::size_t d = 1;
    while (d < dim) {
        d <<= 1;
        ++n;
    }
    if (d != dim) throw DimensionMismatch("matrix dimension is not a power of two");
    return n;
}

void check_hermitian_unit_trace(const ComplexMatrix& m, double tol) {
    if (!m.is_hermitian(tol)) throw NotHermitian("density operator is not Hermitian");
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > tol)
        throw NotNormalized("density operator trace is not 1");
}

ComplexMatrix outer(const std::vector<Complex>& psi) {
    ComplexMatrix m(psi.size());
    for (std::size_t r = 0; r < psi.size(); ++r)
        for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
    return m;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = sigma_dot({1, 0, 0});
    return m;
}
const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = sigma_dot({0, 1, 0});
    return m;
}
const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = sigma_dot({0, 0, 1});
    return m;
}

const ComplexMatrix& pauli(int i) {
    switch (i) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        default: return pauli_z();
    }
}

} // namespace

DensityOperator DensityOperator::from_matrix(ComplexMatrix m, double tol) {
    const int n = qubits_for_dim(m.dim());
    check_hermitian_unit_trace(m, tol);
    const Spectrum spec = hermitian_eigenvalues(m, tol);
    if (spec.values.front() < -tol)
        throw NotPositive("density operator has a negative eigenvalue");
    DensityOperator rho;
    rho.n_qubits = n;
    rho.matrix = std::move(m);
    return rho;
}

DensityOperator DensityOperator::trusted(int n_qubits, ComplexMatrix m, double tol) {
    if (m.dim() != (std::size_t{1} << n_qubits))
        throw DimensionMismatch("density operator dimension is not 2^N");
    check_hermitian_unit_trace(m, tol);
    DensityOperator rho;
    rho.n_qubits = n_qubits;
    rho.matrix = std::move(m);
    return rho;
}

void validate(const SchmidtParams& p, double tol) {
    double sum = 0.0;
    for (double l : p.lambda) {
        if (l < 0.0) throw RangeError("schmidt parameters must be nonnegative");
        sum += l * l;
    }
    if (std::abs(sum - 1.0) > tol) throw NotNormalized("schmidt parameters: sum of squares is not 1");
    if (p.phi < 0.0 || p.phi > 3.14159265358979323847)
        throw RangeError("schmidt phase must lie in [0, pi]");
}

DensityOperator two_qubit_from_data(const TwoQubitData& d) {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    ComplexMatrix m = kron(id2, id2);
    for (int i = 0; i < 3; ++i) {
        if (d.s1[i] != 0.0) m += d.s1[i] * kron(pauli(i), id2);
        if (d.s2[i] != 0.0) m += d.s2[i] * kron(id2, pauli(i));
        for (int j = 0; j < 3; ++j)
            if (d.t[i][j] != 0.0) m += d.t[i][j] * kron(pauli(i), pauli(j));
    }
    m *= Complex{0.25, 0.0};
    return DensityOperator::from_matrix(std::move(m));
}

TwoQubitData extract_two_qubit_data(const DensityOperator& rho) {
    if (rho.n_qubits != 2) throw WrongArity("extract_two_qubit_data: need a two-qubit state");
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    TwoQubitData d;
    for (int i = 0; i < 3; ++i) {
        d.s1[i] = trace_product(rho.matrix, kron(pauli(i), id2)).real();
        d.s2[i] = trace_product(rho.matrix, kron(id2, pauli(i))).real();
        for (int j = 0; j < 3; ++j)
            d.t[i][j] = trace_product(rho.matrix, kron(pauli(i), pauli(j))).real();
    }
    return d;
}

DensityOperator werner_two_qubit(double x) {
    if (x < 0.0 || x > 1.0) throw RangeError("werner_two_qubit: x must lie in [0, 1]");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::vector<Complex> singlet{0.0, inv_sqrt2, -inv_sqrt2, 0.0};
    ComplexMatrix m = outer(singlet);
    m *= Complex{x, 0.0};
    ComplexMatrix id = ComplexMatrix::identity(4);
    id *= Complex{(1.0 - x) / 4.0, 0.0};
    m += id;
    return DensityOperator::trusted(2, std::move(m));
}

DensityOperator werner_n_qubit(int n, double x) {
    if (n < 2) throw RangeError("werner_n_qubit: need at least two qubits");
    if (n > 8) throw TooManyQubits("werner_n_qubit: at most 8 qubits supported");
    if (x < 0.0 || x > 1.0) throw RangeError("werner_n_qubit: x must lie in [0, 1]");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> ghz(dim, 0.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ghz.front() = inv_sqrt2;
    ghz.back() = inv_sqrt2;
    ComplexMatrix m = outer(ghz);
    m *= Complex{x, 0.0};
    ComplexMatrix id = ComplexMatrix::identity(dim);
    id *= Complex{(1.0 - x) / static_cast<double>(dim), 0.0};
    m += id;
    return DensityOperator::trusted(n, std::move(m));
}

DensityOperator ghz_like(int n, double p, double phi) {
    if (n < 2) throw RangeError("ghz_like: need at least two qubits");
    if (n > 8) throw TooManyQubits("ghz_like: at most 8 qubits supported");
    if (p < 0.0 || p > 1.0) throw RangeError("ghz_like: p must lie in [0, 1]");
    if (phi < 0.0 || phi > 6.283185307179586477)
        throw RangeError("ghz_like: phi must lie in [0, 2 pi]");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Complex> psi(dim, 0.0);
    psi.front() = std::sqrt(p);
    psi.back() = std::polar(std::sqrt(1.0 - p), phi);
    return DensityOperator::trusted(n, outer(psi));
}

DensityOperator schmidt_three_qubit(const SchmidtParams& par) {
    validate(par);
    std::vector<Complex> psi(8, 0.0);
    psi[0] = par.lambda[0];                           // |000>
    psi[4] = std::polar(par.lambda[1], par.phi);      // |100>
    psi[5] = par.lambda[2];                           // |101>
    psi[6] = par.lambda[3];                           // |110>
    psi[7] = par.lambda[4];                           // |111>
    return DensityOperator::trusted(3, outer(psi));
}

DensityOperator random_separable(int n, int terms, std::uint64_t seed) {
    if (n < 1) throw RangeError("random_separable: need at least one qubit");
    if (n > 8) throw TooManyQubits("random_separable: at most 8 qubits supported");
    if (terms < 1) throw RangeError("random_separable: need at least one term");

    SeededRng rng(seed);

    std::vector<double> weights(static_cast<std::size_t>(terms));
    double total = 0.0;
    for (auto& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
    }
    for (auto& w : weights) w /= total;

    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m(dim);
    for (int k = 0; k < terms; ++k) {
        std::vector<Complex> psi{1.0};
        for (int q = 0; q < n; ++q) {
            Complex a{rng.gaussian(), rng.gaussian()};
            Complex b{rng.gaussian(), rng.gaussian()};
            const double nm = std::sqrt(std::norm(a) + std::norm(b));
            a /= nm;
            b /= nm;
            std::vector<Complex> next(psi.size() * 2);
            for (std::size_t i = 0; i < psi.size(); ++i) {
                next[2 * i] = psi[i] * a;
                next[2 * i + 1] = psi[i] * b;
            }
            psi = std::move(next);
        }
        const double w = weights[static_cast<std::size_t>(k)];
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) m(r, c) += w * psi[r] * std::conj(psi[c]);
    }
    return DensityOperator::trusted(n, std::move(m));
}

DensityOperator maximally_mixed(int n) {
    if (n < 1) throw RangeError("maximally_mixed: need at least one qubit");
    if (n > 8) throw TooManyQubits("maximally_mixed: at most 8 qubits supported");
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= Complex{1.0 / static_cast<double>(dim), 0.0};
    return DensityOperator::trusted(n, std::move(m));
}

DensityOperator pure_state(const std::vector<Complex>& amplitudes) {
    const int n = qubits_for_dim(amplitudes.size());
    double nm = 0.0;
    for (const auto& a : amplitudes) nm += std::norm(a);
    if (std::abs(nm - 1.0) > 1e-12) throw NotNormalized("pure_state: amplitudes are not normalized");
    return DensityOperator::trusted(n, outer(amplitudes));
}

} // namespace qppt
