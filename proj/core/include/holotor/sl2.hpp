#pragma once

#include "holotor/numerics.hpp"

namespace holotor {

// Element of SL2(C).  det is checked once on construction.
struct SL2Elem {
    Matrix m;  // 2x2

    SL2Elem() : m(Matrix::identity(2)) {}
    explicit SL2Elem(Matrix mat, double tol = 1e-6) : m(std::move(mat)) {
        if (m.rows() != 2 || m.cols() != 2) throw dim_error("SL2Elem: need 2x2");
        const double scale = frobenius(m);
        if (std::abs(det(m) - cplx(1.0)) > tol * (1.0 + scale * scale))
            throw math_error("SL2Elem: det != 1");
    }

    static SL2Elem diag(cplx t) {
        Matrix m(2, 2);
        m(0, 0) = t;
        m(1, 1) = 1.0 / t;
        return SL2Elem(std::move(m));
    }

    SL2Elem inv() const { return SL2Elem(inverse(m)); }
    SL2Elem operator*(const SL2Elem& o) const { return SL2Elem(m * o.m); }
    cplx tr() const { return m(0, 0) + m(1, 1); }
};

}  // namespace holotor
