#pragma once

#include <vector>

#include "sixv/poly.hpp"

namespace sixv {

// Square matrix over {-1, 0, 1} whose rows and columns each sum to 1 with
// all partial sums in {0, 1}.
struct AsmMatrix {
    int n = 0;
    std::vector<int> entries;  // row-major, n*n

    int entry(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
    bool operator==(const AsmMatrix& other) const {
        return n == other.n && entries == other.entries;
    }
};

// Full defining-property check for an arbitrary entry grid.
bool is_asm(const AsmMatrix& a);

// All matrices of order n, ascending in row-major lexicographic order with
// -1 < 0 < 1.  StructuralError outside 1 <= n <= 6.
std::vector<AsmMatrix> enumerate_asm(int n);

struct AsmStatistics {
    long nu = 0;   // sum of A_ij A_kl over i < k, l <= j (inversions)
    long mu = 0;   // number of -1 entries
    long rho = 0;  // zeros left of the 1 in the top row
};

AsmStatistics asm_statistics(const AsmMatrix& a);

// Edge occupations of an n x n lattice square with domain-wall boundaries.
// Lattice row r (1-based, bottom to top, the r-th row applied) turns the
// site occupations vert[r-1] into vert[r]; vert[0] is all zeros, vert[n]
// all ones, and vert[r] holds exactly r ones.  horiz[r-1][j] is the
// auxiliary occupation on row r after site j, so horiz[r-1][0] = 1 (ket
// side) and horiz[r-1][n] = 0 (bra side), with per-site conservation
//   horiz[r-1][j] = horiz[r-1][j-1] + vert[r-1][j-1] - vert[r][j-1].
struct SixVertexConfiguration {
    int n = 0;
    std::vector<std::vector<int>> vert;   // (n+1) x n
    std::vector<std::vector<int>> horiz;  // n x (n+1)

    bool operator==(const SixVertexConfiguration& other) const {
        return n == other.n && vert == other.vert && horiz == other.horiz;
    }
};

// Checks boundaries, 0/1 edge values and conservation at every site.
bool is_sixvertex_dw(const SixVertexConfiguration& c);

// Matrix entry A_ij = vert[n+1-i][j-1] - vert[n-i][j-1]: matrix row 1 is
// the top lattice row, a 1 marks a deposit vertex and a -1 a pickup.
// StructuralError when the input fails its defining property.
SixVertexConfiguration asm_to_sixvertex(const AsmMatrix& a);
AsmMatrix sixvertex_to_asm(const SixVertexConfiguration& c);

// All domain-wall configurations, generated by walking each row's
// auxiliary line (independently of enumerate_asm).
std::vector<SixVertexConfiguration> enumerate_sixvertex_dw(int n);

// How often each local vertex type occurs: at a site with auxiliary a
// in/out and occupation s in/out,
//   a0 = (0,0 -> 0,0)   stay empty      weight 1 - b v
//   b0 = (0,1 -> 0,1)   stay filled     weight 1 + b v
//   c1 = (1,0 -> 0,1)   deposit         weight 2 v
//   c0 = (0,1 -> 1,0)   pickup          weight 1
//   b1 = (1,0 -> 1,0)   pass empty      weight v
//   a1 = (1,1 -> 1,1)   pass filled     weight v.
struct VertexCounts {
    long a0 = 0, a1 = 0, b0 = 0, b1 = 0, c0 = 0, c1 = 0;
};

VertexCounts vertex_type_counts(const SixVertexConfiguration& c);
// Same tally restricted to lattice row r (1-based, bottom to top).
VertexCounts vertex_type_counts_row(const SixVertexConfiguration& c, int r);

// sum over matrices of x^nu y^mu z^rho; the table must define x, y, z.
Polynomial asm_generating_function(int n, const VarTablePtr& table);

// Three independent confirmations that the statistics collapse at the
// one-parameter specialization:
//   gf_route:        substituting x = u-1, y = u, z = 1 into the
//                    generating function gives u^{n(n-1)/2} identically;
//   weighted_route:  summing the actual lattice vertex weights at equal
//                    row parameters gives (2v)^{n(n+1)/2} in v, b;
//   rational_route:  sum_A ((1-bv)/(1+bv))^nu (2/(1+bv))^mu equals
//                    (2/(1+bv))^{n(n-1)/2} at exact sample points.
struct UFormulaReport {
    bool gf_route = false;
    bool weighted_route = false;
    bool rational_route = false;
    bool all() const { return gf_route && weighted_route && rational_route; }
};

UFormulaReport verify_u_formula(int n);

} // namespace sixv
