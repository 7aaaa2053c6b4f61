#pragma once

#include <vector>

#include "sixv/poly.hpp"

namespace sixv {

// Dense rectangular grid of polynomials over one shared VarTable.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols, VarTablePtr table);

    static PolyMatrix identity(int n, VarTablePtr table);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarTablePtr& table() const { return table_; }

    Polynomial& at(int i, int j);
    const Polynomial& at(int i, int j) const;

    PolyMatrix operator*(const PolyMatrix& other) const;
    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    bool operator==(const PolyMatrix& other) const;

    // Fraction-free Bareiss elimination with row pivoting; every interior
    // division is exact by construction (a failure signals a bug).
    Polynomial det_bareiss() const;

private:
    int rows_;
    int cols_;
    VarTablePtr table_;
    std::vector<Polynomial> entries_;
};

} // namespace sixv
