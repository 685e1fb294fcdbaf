#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "holotor/errors.hpp"

namespace holotor {

using cplx = std::complex<double>;

// Dense complex matrix, row-major.  Small sizes only (<= 4^n, n <= 6): the
// whole artifact works with explicit Kronecker products of 2x2 blocks.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<cplx> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(cplx s) const;
    Matrix operator-() const { return *this * cplx(-1.0); }
    friend Matrix operator*(cplx s, const Matrix& m) { return m * s; }

    Matrix transpose() const;
    cplx trace() const;

    // Rejects NaN/inf entries; every public numerics entry point calls this.
    void check_finite() const;

private:
    std::size_t rows_, cols_;
    std::vector<cplx> a_;
};

// Determinant by LU with partial pivoting; det of the 0x0 matrix is 1.
cplx det(const Matrix& m);

Matrix inverse(const Matrix& m);

// Kronecker product, (i,j)x(k,l) -> (i*rows(b)+k, j*cols(b)+l).
Matrix kron(const Matrix& a, const Matrix& b);

// Eigenvalues of a 2x2 matrix via the quadratic formula on
// lambda^2 - tr(m) lambda + det(m).
std::pair<cplx, cplx> eig2(const Matrix& m);

struct NullspaceResult {
    std::vector<Matrix> basis;            // orthonormal column vectors
    std::vector<double> singular_values;  // descending, for rank diagnostics
};

// Orthonormal basis of {v : ||Mv|| <= tol * ||M||}, via SVD.
NullspaceResult nullspace(const Matrix& m, double tol);

// Minimum-norm least-squares solution of A x = b, via SVD.
Matrix lstsq(const Matrix& A, const Matrix& b);

// Eigenvalues of a general square matrix (used for multiplicity counts).
std::vector<cplx> eigenvalues(const Matrix& m);

double frobenius(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace holotor
