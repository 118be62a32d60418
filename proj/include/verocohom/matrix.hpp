#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "verocohom/errors.hpp"
#include "verocohom/rational.hpp"

namespace verocohom {

/// Dense matrix over Q, row-major. 0xN and Nx0 shapes are legal.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<Rational> row(std::size_t i) const {
        return {data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    bool operator==(const QMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix matmul(const QMatrix& a, const QMatrix& b);

/// Reduce to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_inplace(QMatrix& m);

std::size_t rank(QMatrix m);

/// Canonical (RREF) basis of the right kernel {v : m v = 0}, one row per basis vector.
QMatrix kernel(const QMatrix& m);

/// Row-span subspace of a fixed ambient coordinate space. The basis is kept
/// in RREF with zero rows dropped, so equal subspaces have identical bases.
struct Subspace {
    std::string ambient_label;
    std::size_t ambient_dim = 0;
    QMatrix basis; // rows are basis vectors; always RREF

    std::size_t dim() const { return basis.rows(); }
};

Subspace make_subspace(std::string ambient_label, std::size_t ambient_dim, QMatrix spanning_rows);
Subspace zero_space(std::string ambient_label, std::size_t ambient_dim);
Subspace full_space(std::string ambient_label, std::size_t ambient_dim);

/// Right kernel of m as a subspace of Q^cols.
Subspace kernel_subspace(std::string ambient_label, const QMatrix& m);

/// Rows annihilating a under the standard dot product (not the apolarity pairing).
QMatrix coordinate_annihilator(const Subspace& a);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const std::vector<Rational>& v);
bool contains_subspace(const Subspace& a, const Subspace& b); // b subset of a
bool same_space(const Subspace& a, const Subspace& b);

} // namespace verocohom
