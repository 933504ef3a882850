#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qppt/errors.hpp"

namespace qppt {

using Complex = std::complex<double>;

/// Default absolute tolerance for hermiticity and positivity checks.
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major storage. The universal carrier for
/// operators and density matrices in this library. Values are immutable by
/// convention once constructed; all operations return fresh matrices.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex z);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const; // entrywise

    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;

    /// Equality up to an explicit absolute entrywise tolerance.
    bool approx_equal(const ComplexMatrix& other, double tol) const;
    bool is_hermitian(double tol = kDefaultTol) const;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex z, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex z);

/// Tr[a b] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix.
struct Spectrum {
    std::vector<double> values; // ascending
    double residual = 0.0;      // max ||H v - lambda v||_2 over returned pairs
};

/// Real spectrum of a Hermitian matrix via cyclic Jacobi rotations, chosen
/// for reproducibility over speed (all matrices here are at most 256x256).
/// Throws NotHermitian if ||m - m^dagger||_max > tol, and Error if the
/// eigenpair residual exceeds tol.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol = kDefaultTol);

double min_eigenvalue(const ComplexMatrix& m, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Small real 3D kit: measurement frames, correlation matrices, rotations.

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>; // row-major: m[r][c]

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

Mat3 mat3_zero();
Mat3 mat3_identity();
Mat3 mat3_transpose(const Mat3& m);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Vec3 mat3_apply(const Mat3& m, const Vec3& v);
double mat3_det(const Mat3& m);
double mat3_max_abs_diff(const Mat3& a, const Mat3& b);

/// a^T m b
double bilinear(const Vec3& a, const Mat3& m, const Vec3& b);

struct Svd3 {
    Mat3 u;
    Vec3 s; // nonnegative, descending
    Mat3 v; // input = u * diag(s) * v^T
};

/// Singular value decomposition of a real 3x3 matrix (one-sided Jacobi).
/// u and v are orthogonal to ~1e-15; reconstruction holds to ~1e-14 for
/// entries of order one.
Svd3 svd3(const Mat3& t);

} // namespace qppt
