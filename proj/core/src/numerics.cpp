#include "holotor/numerics.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace holotor {

namespace {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EMat> emap(const Matrix& m) {
    return Eigen::Map<const EMat>(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                  static_cast<Eigen::Index>(m.cols()));
}

Matrix from_eigen(const EMat& e) {
    Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = 0; j < e.cols(); ++j)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
    return m;
}

}  // namespace

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<cplx> entries)
    : rows_(r), cols_(c), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw dim_error("Matrix: entries length != rows*cols");
    check_finite();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void Matrix::check_finite() const {
    for (const cplx& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw math_error("non-finite matrix entry");
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dim_error("Matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    if (rows_ && o.cols_ && cols_) {
        Eigen::Map<EMat>(r.a_.data(), static_cast<Eigen::Index>(rows_),
                         static_cast<Eigen::Index>(o.cols_)) = emap(*this) * emap(o);
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dim_error("Matrix sum: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dim_error("Matrix diff: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

cplx Matrix::trace() const {
    if (rows_ != cols_) throw dim_error("trace: non-square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

cplx det(const Matrix& m) {
    if (m.rows() != m.cols()) throw dim_error("det: non-square");
    m.check_finite();
    if (m.rows() == 0) return 1.0;  // empty product convention (n=1 torsion)
    return emap(m).partialPivLu().determinant();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw dim_error("inverse: non-square");
    m.check_finite();
    if (m.rows() == 0) return m;
    Eigen::PartialPivLU<EMat> lu(emap(m));
    EMat inv = lu.inverse();
    if (!inv.allFinite()) throw math_error("inverse: singular matrix");
    return from_eigen(inv);
}

Matrix lstsq(const Matrix& A, const Matrix& b) {
    if (A.rows() != b.rows()) throw dim_error("lstsq: shape mismatch");
    A.check_finite();
    b.check_finite();
    Eigen::JacobiSVD<EMat> svd(emap(A), Eigen::ComputeThinU | Eigen::ComputeThinV);
    return from_eigen(svd.solve(emap(b)));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

std::pair<cplx, cplx> eig2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw dim_error("eig2: need 2x2");
    m.check_finite();
    const cplx t = m(0, 0) + m(1, 1);
    const cplx d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const cplx s = std::sqrt(t * t - 4.0 * d);
    return {(t + s) / 2.0, (t - s) / 2.0};
}

NullspaceResult nullspace(const Matrix& m, double tol) {
    if (tol <= 0) throw dim_error("nullspace: tol must be positive");
    m.check_finite();
    Eigen::JacobiSVD<EMat> svd(emap(m), Eigen::ComputeFullV);
    NullspaceResult res;
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i) res.singular_values.push_back(sv(i));
    const double scale = sv.size() ? sv(0) : 0.0;
    const double thresh = tol * (scale > 0 ? scale : 1.0);
    const Eigen::Index n = static_cast<Eigen::Index>(m.cols());
    for (Eigen::Index j = 0; j < n; ++j) {
        const double s = j < sv.size() ? sv(j) : 0.0;
        if (s <= thresh) {
            Matrix v(m.cols(), 1);
            for (Eigen::Index i = 0; i < n; ++i) v(static_cast<std::size_t>(i), 0) = svd.matrixV()(i, j);
            res.basis.push_back(std::move(v));
        }
    }
    return res;
}

std::vector<cplx> eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) throw dim_error("eigenvalues: non-square");
    m.check_finite();
    Eigen::ComplexEigenSolver<EMat> es(emap(m), /*computeEigenvectors=*/false);
    std::vector<cplx> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double frobenius(const Matrix& m) {
    double s = 0.0;
    for (const cplx& z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw dim_error("max_abs_diff: shape mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
    return d;
}

}  // namespace holotor
