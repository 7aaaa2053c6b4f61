#include "sixv/poly_matrix.hpp"

#include <utility>

namespace sixv {

PolyMatrix::PolyMatrix(int rows, int cols, VarTablePtr table)
    : rows_(rows), cols_(cols), table_(std::move(table)) {
    if (rows_ < 0 || cols_ < 0)
        throw StructuralError("matrix dimensions must be non-negative");
    entries_.assign(static_cast<std::size_t>(rows_) * cols_, Polynomial(table_));
}

PolyMatrix PolyMatrix::identity(int n, VarTablePtr table) {
    PolyMatrix m(n, n, table);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::constant(m.table_, 1);
    return m;
}

Polynomial& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw StructuralError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const Polynomial& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw StructuralError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (cols_ != other.rows_)
        throw StructuralError("matrix shapes do not allow multiplication");
    PolyMatrix r(rows_, other.cols_, table_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Polynomial& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Polynomial& bkj = other.at(k, j);
                if (bkj.is_zero())
                    continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw StructuralError("matrix shapes do not allow addition");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += other.entries_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw StructuralError("matrix shapes do not allow subtraction");
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] -= other.entries_[i];
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!(entries_[i] == other.entries_[i]))
            return false;
    return true;
}

Polynomial PolyMatrix::det_bareiss() const {
    if (rows_ != cols_)
        throw StructuralError("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return Polynomial::constant(table_, 1);
    PolyMatrix a = *this;
    Polynomial prev = Polynomial::constant(table_, 1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!a.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return Polynomial(table_);
        if (pivot != k) {
            for (int j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(pivot, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial numerator = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = exact_div(numerator, prev);
            }
            a.at(i, k) = Polynomial(table_);
        }
        prev = a.at(k, k);
    }
    Polynomial det = a.at(n - 1, n - 1);
    return negate ? -det : det;
}

} // namespace sixv
