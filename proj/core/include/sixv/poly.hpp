#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sixv/errors.hpp"
#include "sixv/rational.hpp"

namespace sixv {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Immutable ordered list of distinct variable names.  The order fixes the
// monomial ordering, canonical printing, and term iteration.  Two
// polynomials are compatible operands when their tables are equal by
// pointer or by content.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    static VarTablePtr make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const;

    // -1 when absent.
    int index_of(std::string_view name) const;
    // StructuralError when absent.
    int require(std::string_view name) const;

    bool same_content(const VarTable& other) const { return names_ == other.names_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int, std::less<>> index_;
};

// Exponent vector with trailing zeros elided.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial var(int index, std::uint32_t exp = 1);
    static Monomial from_exponents(std::vector<std::uint32_t> exps);

    std::uint32_t exponent(int index) const;
    // Number of stored exponents; indices >= width() are zero.
    int width() const { return static_cast<int>(exp_.size()); }
    long total_degree() const;
    bool is_one() const { return exp_.empty(); }

    Monomial times(const Monomial& other) const;
    // Whether this divides other.
    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;
    Monomial without(int index) const;

    // Graded lexicographic: total degree first, then exponents left to
    // right (earlier variables dominate).  Returns <0, 0, >0.
    static int cmp(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

private:
    std::vector<std::uint32_t> exp_;
    void trim();
};

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) < 0;
    }
};

// Global guardrail: arithmetic whose result could exceed this many terms
// throws TermCapExceeded instead of thrashing.  Default 10^6.
std::size_t term_cap();
void set_term_cap(std::size_t cap);

// Sparse multivariate polynomial with rational coefficients over a shared
// VarTable.  Immutable value semantics; all arithmetic is exact.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    // Zero over the empty table.
    Polynomial();
    // Zero over the given table.
    explicit Polynomial(VarTablePtr table);

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }
    static Polynomial constant(VarTablePtr table, Rational value);
    static Polynomial variable(VarTablePtr table, std::string_view name);
    static Polynomial term(VarTablePtr table, Rational coeff, Monomial m);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // StructuralError unless constant (zero counts as constant 0).
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }
    // -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(int var) const;
    long degree_in(std::string_view name) const;
    Rational coeff(const Monomial& m) const;
    // Largest term under grlex; StructuralError on zero.
    const std::pair<const Monomial, Rational>& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial& scale(const Rational& c);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned exp) const;

    bool operator==(const Polynomial& other) const;

    // Substitutes the bound variables; the rest stay formal.
    Polynomial evaluate(const std::vector<std::pair<std::string, Rational>>& bindings) const;
    // All variables bound (or absent from the polynomial); returns the value.
    Rational evaluate_all(const std::vector<std::pair<std::string, Rational>>& bindings) const;

    // Canonical text: terms in descending graded-lex order, e.g.
    // "2*z1^2*z2 + 1/3*z2 - 4".  Unit coefficients are omitted before a
    // variable part.  Zero prints as "0".
    std::string to_string() const;
    // Parses the canonical form (and unnormalized variants of it: any
    // order of '*'-joined rational and variable-power factors).
    static Polynomial parse(VarTablePtr table, std::string_view text);

private:
    VarTablePtr table_;
    TermMap terms_;

    void add_term(const Monomial& m, const Rational& c);
    void require_compatible(const Polynomial& other) const;
};

// Division must be exact; carries the nonzero remainder otherwise.
class DivisionNotExact : public StructuralError {
public:
    DivisionNotExact(const std::string& msg, Polynomial remainder);
    const Polynomial& remainder() const { return remainder_; }

private:
    Polynomial remainder_;
};

// Quotient q with q*den == num; throws DivisionNotExact otherwise.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

} // namespace sixv
