#include "qppt/pt.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace qppt {

Bipartition Bipartition::first_r(int n_qubits, int r) {
    Bipartition b;
    b.n_qubits = n_qubits;
    for (int q = 1; q <= r; ++q) b.transposed.push_back(q);
    validate(b);
    return b;
}

Bipartition Bipartition::of(int n_qubits, std::vector<int> transposed) {
    Bipartition b;
    b.n_qubits = n_qubits;
    b.transposed = std::move(transposed);
    std::sort(b.transposed.begin(), b.transposed.end());
    b.transposed.erase(std::unique(b.transposed.begin(), b.transposed.end()), b.transposed.end());
    validate(b);
    return b;
}

Bipartition Bipartition::complement() const {
    Bipartition c;
    c.n_qubits = n_qubits;
    for (int q = 1; q <= n_qubits; ++q)
        if (!std::binary_search(transposed.begin(), transposed.end(), q)) c.transposed.push_back(q);
    return c;
}

std::size_t Bipartition::mask() const {
    std::size_t m = 0;
    for (int q : transposed) m |= std::size_t{1} << (n_qubits - q);
    return m;
}

std::string Bipartition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < transposed.size(); ++i) {
        if (i) os << ",";
        os << transposed[i];
    }
    return os.str();
}

void validate(const Bipartition& b) {
    if (b.n_qubits < 1) throw BadBipartition("bipartition: need at least one qubit");
    if (b.transposed.empty()) throw BadBipartition("bipartition: transposed set is empty");
    if (static_cast<int>(b.transposed.size()) >= b.n_qubits)
        throw BadBipartition("bipartition: transposed set must be a proper subset");
    for (int q : b.transposed)
        if (q < 1 || q > b.n_qubits) throw BadBipartition("bipartition: qubit index out of range");
}

namespace {

// literal partial transpose over an exact bit mask, no normalization
ComplexMatrix pt_mask(const ComplexMatrix& m, std::size_t mask) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t ti = (i & ~mask) | (j & mask);
            const std::size_t tj = (j & ~mask) | (i & mask);
            out(ti, tj) = m(i, j);
        }
    }
    return out;
}

std::size_t checked_mask(const ComplexMatrix& m, const Bipartition& b, bool normalize) {
    validate(b);
    if (m.dim() != (std::size_t{1} << b.n_qubits))
        throw DimensionMismatch("partial transpose: matrix dimension is not 2^N for the bipartition");
    if (normalize && 2 * b.transposed.size() > static_cast<std::size_t>(b.n_qubits))
        return b.complement().mask();
    return b.mask();
}

} // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Bipartition& b) {
    return pt_mask(m, checked_mask(m, b, /*normalize=*/true));
}

ComplexMatrix observable_pt(const ComplexMatrix& o, const Bipartition& b) {
    return partial_transpose(o, b);
}

ComplexMatrix time_reversal_pt(const ComplexMatrix& o, const Bipartition& b) {
    const std::size_t mask = checked_mask(o, b, /*normalize=*/false);
    ComplexMatrix t = pt_mask(o, mask);
    // conjugation by the sigma_y product is a signed index permutation:
    // (U A U)(i,j) = (-1)^(popcount(i&mask)+popcount(j&mask)) A(i^mask, j^mask)
    const std::size_t n = t.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int pi = std::popcount(i & mask);
        for (std::size_t j = 0; j < n; ++j) {
            const int pj = std::popcount(j & mask);
            const double sign = ((pi + pj) % 2 == 0) ? 1.0 : -1.0;
            out(i, j) = sign * t(i ^ mask, j ^ mask);
        }
    }
    return out;
}

} // namespace qppt
