#include "qppt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qppt {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("matrix add: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch("matrix sub: dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex z) {
    for (auto& x : a_) x *= z;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    if (dim_ != other.dim_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (std::abs(a_[i] - other.a_[i]) > tol) return false;
    return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix mul: dimension mismatch");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

ComplexMatrix operator*(Complex z, ComplexMatrix m) { return m *= z; }
ComplexMatrix operator*(ComplexMatrix m, Complex z) { return m *= z; }

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_product: dimension mismatch");
    Complex t = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra)
        for (std::size_t ca = 0; ca < na; ++ca) {
            const Complex f = a(ra, ca);
            if (f == Complex{}) continue;
            for (std::size_t rb = 0; rb < nb; ++rb)
                for (std::size_t cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
        }
    return out;
}

namespace {

// Cyclic Jacobi for complex Hermitian matrices, with eigenvector accumulation.
// Works on the symmetrized input, zeroing one off-diagonal pair per rotation.
void jacobi_hermitian(const ComplexMatrix& h, std::vector<double>& evals, ComplexMatrix& evecs) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h;
    evecs = ComplexMatrix::identity(n);

    const double scale = std::max(h.frobenius_norm(), 1e-300);
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const Complex s = (t * c) * (apq / mag);

                // A <- J^dagger A J with J = [[c, s], [-conj(s), c]] on (p,q)
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(s) * aiq;
                    a(i, q) = s * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = std::conj(s) * apj + c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = evecs(i, p), viq = evecs(i, q);
                    evecs(i, p) = c * vip - std::conj(s) * viq;
                    evecs(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    evals.resize(n);
    for (std::size_t i = 0; i < n; ++i) evals[i] = a(i, i).real();
}

} // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    if (!m.is_hermitian(tol)) throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian within tolerance");

    const std::size_t n = m.dim();
    ComplexMatrix h(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    std::vector<double> evals;
    ComplexMatrix v;
    jacobi_hermitian(h, evals, v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return evals[i] < evals[j]; });

    Spectrum out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = evals[order[i]];

    // residual against the symmetrized matrix, max over eigenpairs
    const ComplexMatrix hv = h * v;
    double worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) r2 += std::norm(hv(i, j) - evals[j] * v(i, j));
        worst = std::max(worst, std::sqrt(r2));
    }
    out.residual = worst;
    if (out.residual > tol)
        throw Error("hermitian_eigenvalues: eigenpair residual exceeds tolerance");
    return out;
}

double min_eigenvalue(const ComplexMatrix& m, double tol) {
    return hermitian_eigenvalues(m, tol).values.front();
}

// ---------------------------------------------------------------------------

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Mat3 mat3_zero() { return {Vec3{0, 0, 0}, Vec3{0, 0, 0}, Vec3{0, 0, 0}}; }

Mat3 mat3_identity() { return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}; }

Mat3 mat3_transpose(const Mat3& m) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[c][r] = m[r][c];
    return out;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 out = mat3_zero();
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k)
            for (int c = 0; c < 3; ++c) out[r][c] += a[r][k] * b[k][c];
    return out;
}

Vec3 mat3_apply(const Mat3& m, const Vec3& v) {
    Vec3 out{};
    for (int r = 0; r < 3; ++r) out[r] = m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2];
    return out;
}

double mat3_det(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double mat3_max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(a[r][c] - b[r][c]));
    return m;
}

double bilinear(const Vec3& a, const Mat3& m, const Vec3& b) { return dot(a, mat3_apply(m, b)); }

namespace {

Vec3 column(const Mat3& m, int c) { return {m[0][c], m[1][c], m[2][c]}; }

void set_column(Mat3& m, int c, const Vec3& v) {
    m[0][c] = v[0];
    m[1][c] = v[1];
    m[2][c] = v[2];
}

// fill in orthonormal columns of u wherever keep[c] is false
void complete_orthonormal(Mat3& u, const std::array<bool, 3>& keep) {
    std::vector<Vec3> basis;
    for (int c = 0; c < 3; ++c)
        if (keep[c]) basis.push_back(column(u, c));
    for (int c = 0; c < 3; ++c) {
        if (keep[c]) continue;
        Vec3 best{};
        double best_norm = -1.0;
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 cand{};
            cand[axis] = 1.0;
            for (const auto& b : basis) {
                const double proj = dot(cand, b);
                for (int i = 0; i < 3; ++i) cand[i] -= proj * b[i];
            }
            const double n = norm(cand);
            if (n > best_norm) {
                best_norm = n;
                best = cand;
            }
        }
        for (int i = 0; i < 3; ++i) best[i] /= best_norm;
        set_column(u, c, best);
        basis.push_back(best);
    }
}

} // namespace

Svd3 svd3(const Mat3& t) {
    Mat3 b = t;
    Mat3 v = mat3_identity();

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool converged = true;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int i = 0; i < 3; ++i) {
                    alpha += b[i][p] * b[i][p];
                    beta += b[i][q] * b[i][q];
                    gamma += b[i][p] * b[i][q];
                }
                if (std::abs(gamma) <= 1e-30 + 1e-16 * std::sqrt(alpha * beta)) continue;
                converged = false;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                double tt = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                if (zeta < 0.0) tt = -tt;
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = c * tt;

                for (int i = 0; i < 3; ++i) {
                    const double bp = b[i][p], bq = b[i][q];
                    b[i][p] = c * bp - s * bq;
                    b[i][q] = s * bp + c * bq;
                }
                for (int i = 0; i < 3; ++i) {
                    const double vp = v[i][p], vq = v[i][q];
                    v[i][p] = c * vp - s * vq;
                    v[i][q] = s * vp + c * vq;
                }
            }
        }
        if (converged) break;
    }

    Vec3 s{};
    for (int c = 0; c < 3; ++c) s[c] = norm(column(b, c));

    // descending singular values; permute b and v columns alongside
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return s[i] > s[j]; });
    Mat3 bs, vs;
    Vec3 ss{};
    for (int c = 0; c < 3; ++c) {
        set_column(bs, c, column(b, order[c]));
        set_column(vs, c, column(v, order[c]));
        ss[c] = s[order[c]];
    }

    Mat3 u = mat3_identity();
    std::array<bool, 3> keep{false, false, false};
    const double cutoff = 1e-13 * std::max(ss[0], 1e-300);
    for (int c = 0; c < 3; ++c) {
        if (ss[c] > cutoff) {
            Vec3 col = column(bs, c);
            for (int i = 0; i < 3; ++i) col[i] /= ss[c];
            set_column(u, c, col);
            keep[c] = true;
        }
    }
    complete_orthonormal(u, keep);

    return {u, ss, vs};
}

} // namespace qppt
