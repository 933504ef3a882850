#pragma once

#include <string>
#include <vector>

#include "qppt/linalg.hpp"

namespace qppt {

/// A bipartite cut of an N-qubit system: the set of qubits (1-based, qubit 1
/// being the leftmost tensor factor) that get transposed. Must be a nonempty
/// proper subset of {1..N}.
struct Bipartition {
    int n_qubits = 0;
    std::vector<int> transposed; // sorted, unique, 1-based

    static Bipartition first_r(int n_qubits, int r);
    static Bipartition of(int n_qubits, std::vector<int> transposed);

    Bipartition complement() const;
    std::size_t mask() const; // bit (n_qubits - q) set for each transposed qubit q
    std::string to_string() const;
};

void validate(const Bipartition& b);

/// Partial transpose of a 2^N x 2^N matrix over the given qubit subset: the
/// row/column sub-indices of the transposed qubits are swapped. Involutive,
/// trace- and hermiticity-preserving. Subsets larger than N/2 are normalized
/// to their complement before processing (identical spectra, fewer swaps).
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Bipartition& b);

/// The dual map on observables; satisfies Tr[rho^PT o] = Tr[rho o^PT]
/// exactly. For matrices this is the same linear map as partial_transpose.
ComplexMatrix observable_pt(const ComplexMatrix& o, const Bipartition& b);

/// Local time-reversal on the transposed qubits: partial transpose followed
/// by conjugation with sigma_y on each transposed factor. Sends sigma.n to
/// -sigma.n on those qubits, which is the convention the Sigma-operator
/// partial-transpose formulas are written in. Differs from partial_transpose
/// by a local unitary, so every positivity verdict agrees between the two.
ComplexMatrix time_reversal_pt(const ComplexMatrix& o, const Bipartition& b);

} // namespace qppt
