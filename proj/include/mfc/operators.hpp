#pragma once

#include <complex>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <unsupported/Eigen/KroneckerProduct>

#include "mfc/layout.hpp"

namespace mfc {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

// Complex sparse operator tagged with its layout. Operators living on
// different layouts never combine; that is a hard error, not a silent
// broadcast. Hamiltonian terms carry angular-frequency units (rad/ns),
// ladder/Pauli operators are dimensionless.
class QOperator {
public:
    QOperator(LayoutPtr layout, SparseMatrix matrix)
        : layout_(std::move(layout)), mat_(std::move(matrix)) {
        if (!layout_) throw std::invalid_argument("QOperator: null layout");
        const auto d = static_cast<Eigen::Index>(layout_->total_dim());
        if (mat_.rows() != d || mat_.cols() != d)
            throw std::invalid_argument("QOperator: matrix dimension does not match layout");
        mat_.makeCompressed();
    }

    const LayoutPtr& layout() const { return layout_; }
    const SparseMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }

    QOperator adjoint() const { return QOperator(layout_, SparseMatrix(mat_.adjoint())); }
    QOperator transpose() const { return QOperator(layout_, SparseMatrix(mat_.transpose())); }
    QOperator conjugate() const { return QOperator(layout_, SparseMatrix(mat_.conjugate())); }

    double max_abs() const {
        double m = 0.0;
        for (int k = 0; k < mat_.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(mat_, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m;
    }

    // Relative max-norm distance from Hermiticity, ||A - A^dag||_max / ||A||_max.
    double hermiticity_defect() const {
        SparseMatrix d = SparseMatrix(mat_.adjoint()) - mat_;
        double num = 0.0;
        for (int k = 0; k < d.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(d, k); it; ++it)
                num = std::max(num, std::abs(it.value()));
        const double den = max_abs();
        return den > 0.0 ? num / den : num;
    }

    DenseMatrix dense() const { return DenseMatrix(mat_); }

    QOperator& operator+=(const QOperator& rhs) {
        check_same_layout(rhs);
        mat_ += rhs.mat_;
        return *this;
    }
    QOperator& operator-=(const QOperator& rhs) {
        check_same_layout(rhs);
        mat_ -= rhs.mat_;
        return *this;
    }
    QOperator& operator*=(Complex s) {
        mat_ *= s;
        return *this;
    }

    friend QOperator operator+(QOperator a, const QOperator& b) { return a += b; }
    friend QOperator operator-(QOperator a, const QOperator& b) { return a -= b; }
    friend QOperator operator*(Complex s, QOperator a) { return a *= s; }
    friend QOperator operator*(QOperator a, Complex s) { return a *= s; }
    friend QOperator operator*(double s, QOperator a) { return a *= Complex(s, 0.0); }
    friend QOperator operator*(QOperator a, double s) { return a *= Complex(s, 0.0); }
    friend QOperator operator-(const QOperator& a) { return a * Complex(-1.0, 0.0); }

    friend QOperator operator*(const QOperator& a, const QOperator& b) {
        a.check_same_layout(b);
        return QOperator(a.layout_, SparseMatrix(a.mat_ * b.mat_));
    }

    void check_same_layout(const QOperator& rhs) const {
        if (*layout_ != *rhs.layout_)
            throw std::invalid_argument("QOperator: operators from different layouts combined");
    }

private:
    LayoutPtr layout_;
    SparseMatrix mat_;
};

inline QOperator identity_operator(const LayoutPtr& layout) {
    const auto d = static_cast<Eigen::Index>(layout->total_dim());
    SparseMatrix m(d, d);
    m.setIdentity();
    return QOperator(layout, std::move(m));
}

// Truncated bosonic annihilation operator: entries sqrt(n) at (n-1, n).
inline QOperator fock_annihilation(int dim) {
    if (dim < 2) throw std::invalid_argument("fock_annihilation: dim must be >= 2");
    SparseMatrix m(dim, dim);
    m.reserve(Eigen::VectorXi::Constant(dim, 1));
    for (int n = 1; n < dim; ++n) m.insert(n - 1, n) = std::sqrt(static_cast<double>(n));
    return QOperator(single_boson("mode", dim), std::move(m));
}

struct PauliOperators {
    QOperator sigma_minus;
    QOperator sigma_plus;
    QOperator sigma_z;
};

// Two-level operators on the basis {|g> = 0, |e> = 1}:
// sigma_plus sigma_minus = |e><e|, sigma_z = |e><e| - |g><g|.
inline PauliOperators pauli_operators() {
    LayoutPtr l = single_two_level();
    SparseMatrix sm(2, 2), sz(2, 2);
    sm.insert(0, 1) = Complex(1.0, 0.0);
    sz.insert(0, 0) = Complex(-1.0, 0.0);
    sz.insert(1, 1) = Complex(1.0, 0.0);
    QOperator minus(l, std::move(sm));
    QOperator plus = minus.adjoint();
    return {minus, std::move(plus), QOperator(l, std::move(sz))};
}

// Kronecker-embed a single-subsystem operator into a full layout at the named
// slot, identities on all other slots, in layout order.
inline QOperator embed(const QOperator& op, const LayoutPtr& layout, std::string_view slot) {
    const std::size_t k = layout->index_of(slot);
    const auto& sub = layout->at(k);
    if (op.dim() != sub.dim)
        throw std::invalid_argument("embed: operator dim " + std::to_string(op.dim()) +
                                    " does not match slot '" + std::string(slot) + "' dim " +
                                    std::to_string(sub.dim));
    SparseMatrix acc(1, 1);
    acc.insert(0, 0) = Complex(1.0, 0.0);
    for (std::size_t i = 0; i < layout->size(); ++i) {
        if (i == k) {
            acc = Eigen::kroneckerProduct(acc, op.matrix()).eval();
        } else {
            SparseMatrix id(layout->at(i).dim, layout->at(i).dim);
            id.setIdentity();
            acc = Eigen::kroneckerProduct(acc, id).eval();
        }
    }
    return QOperator(layout, std::move(acc));
}

// Convenience: embedded annihilation / Pauli operators for a layout slot.
inline QOperator annihilation(const LayoutPtr& layout, std::string_view slot) {
    return embed(fock_annihilation(layout->at(layout->index_of(slot)).dim), layout, slot);
}

inline QOperator number_operator(const LayoutPtr& layout, std::string_view slot) {
    QOperator a = annihilation(layout, slot);
    return a.adjoint() * a;
}

inline QOperator sigma_minus(const LayoutPtr& layout, std::string_view slot) {
    return embed(pauli_operators().sigma_minus, layout, slot);
}

inline QOperator sigma_z(const LayoutPtr& layout, std::string_view slot) {
    return embed(pauli_operators().sigma_z, layout, slot);
}

} // namespace mfc
