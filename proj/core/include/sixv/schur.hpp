#pragma once

#include <string>
#include <vector>

#include "sixv/partitions.hpp"
#include "sixv/poly.hpp"

namespace sixv {

// Variable environment for the symmetric-function operations: z_1..z_N
// plus beta, which is either a formal variable or a bound rational.
struct SchurContext {
    VarTablePtr table;
    std::vector<std::string> z_names;
    std::string beta_name;   // empty when beta is bound
    Rational beta_value{0};

    static SchurContext make(int nvars);
    static SchurContext make(int nvars, const Rational& beta);

    int nvars() const { return static_cast<int>(z_names.size()); }
    bool beta_formal() const { return !beta_name.empty(); }
    // 1-based.
    Polynomial z(int j) const;
    Polynomial beta() const;
    Polynomial constant(const Rational& c) const { return Polynomial::constant(table, c); }
};

// det(vars_j^(lambda_k + N - k)) / prod_{j<k}(vars_j - vars_k) with the
// given variable polynomials; the division is exact.
Polynomial schur_bialternant_in(const Partition& lambda, const std::vector<Polynomial>& vars);

Polynomial schur_bialternant(const Partition& lambda, const SchurContext& ctx);

// One chain's contribution, expressed over the common denominator
// prod_k (1 + 2*beta*z_k)^(N-1).
struct ChainTerm {
    InterlacingChain chain;
    Polynomial numerator;
};

std::vector<ChainTerm> combinatorial_chain_terms(const Partition& lambda, const SchurContext& ctx);

// Interlacing-chain formula: sums the chain weights over the common
// denominator, then divides out the denominator powers and the factors
// (z_j + z_k + 2*beta*z_j*z_k), in that order.  Every division is exact
// whenever the formula holds; DivisionNotExact therefore signals a
// genuine violation.
Polynomial schur_combinatorial(const Partition& lambda, const SchurContext& ctx);

// Q_x in N variables for a strict partition x with exactly N parts:
// alternating sum over permutations of z^x * prod_{j<k}(z_j + z_k),
// divided exactly by the Vandermonde, times 2^N.
Polynomial schur_q(const StrictPartition& x, const SchurContext& ctx);

// Single-variable skew Q: 2^{#(y|x)} z^{sum y - sum x} when y interlaces
// over x, zero otherwise.  Requires |y| = |x| + 1.
Polynomial skew_q_single(const StrictPartition& y, const StrictPartition& x, const Polynomial& z);

// Which index the determinant entry's numerator uses for y:
// columns -> (z_j^M - y_k^M), rows -> (z_j^M - y_j^M).
enum class CauchyIndexing { columns, rows };

struct CauchySides {
    Polynomial lhs_cleared;
    Polynomial rhs_cleared;
    bool equal;
};

// Both sides of the box-restricted Cauchy identity
//   sum_{lambda in (M-N)^N} s_lambda(z) s_{lambda^dual}(y)
//     = det[entry] / (prod_{j<k}(z_j - z_k) * prod_{j<k}(y_k - y_j))
// in cross-multiplied polynomial form, for either entry-index candidate.
CauchySides cauchy_sides(int sites, int particles, CauchyIndexing indexing);

} // namespace sixv
