#include "doctest.h"

#include "sixv/poly.hpp"
#include "sixv/poly_matrix.hpp"

using namespace sixv;

namespace {

Polynomial cofactor_det(const PolyMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return Polynomial::constant(m.table(), 1);
    if (n == 1) return m.at(0, 0);
    Polynomial acc = Polynomial::zero(m.table());
    for (int j = 0; j < n; ++j) {
        PolyMatrix minor(n - 1, n - 1, m.table());
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        Polynomial term = m.at(0, j) * cofactor_det(minor);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("canonical printing and parsing") {
    VarTablePtr t = VarTable::make({"z1", "z2"});
    Polynomial z1 = Polynomial::variable(t, "z1");
    Polynomial z2 = Polynomial::variable(t, "z2");
    Polynomial p = (z1.pow(2) * z2).scaled(Rational(2)) + z2.scaled(Rational(1, 3)) -
                   Polynomial::constant(t, 4);
    CHECK(p.to_string() == "2*z1^2*z2 + 1/3*z2 - 4");
    CHECK(Polynomial::parse(t, "2*z1^2*z2 + 1/3*z2 - 4") == p);
    CHECK(Polynomial::parse(t, "z2*1/3 + z1^2*2*z2 - 4") == p);
    CHECK(Polynomial::zero(t).to_string() == "0");
    CHECK(Polynomial::parse(t, "0") == Polynomial::zero(t));
    CHECK_THROWS_AS((void)Polynomial::parse(t, "2*q"), StructuralError);
}

TEST_CASE("constants, degrees, coefficients") {
    VarTablePtr t = VarTable::make({"x", "y"});
    Polynomial x = Polynomial::variable(t, "x");
    Polynomial y = Polynomial::variable(t, "y");
    Polynomial c = Polynomial::constant(t, Rational(-7, 2));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(-7, 2));
    CHECK(Polynomial::zero(t).total_degree() == -1);
    Polynomial p = x.pow(3) * y + y.pow(2);
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in("x") == 3);
    CHECK(p.degree_in("y") == 2);
    CHECK(p.degree_in(0) == 3);
    CHECK_FALSE(p.is_constant());
    CHECK_THROWS_AS((void)p.constant_value(), StructuralError);
    CHECK(p.coeff(Monomial::from_exponents({3, 1})) == Rational(1));
    CHECK(p.coeff(Monomial::from_exponents({1, 1})) == Rational(0));
    CHECK(p.leading().first == Monomial::from_exponents({3, 1}));
}

TEST_CASE("arithmetic and exact division") {
    VarTablePtr t = VarTable::make({"z1", "z2"});
    Polynomial z1 = Polynomial::variable(t, "z1");
    Polynomial z2 = Polynomial::variable(t, "z2");
    CHECK((z1 + z2).pow(2) == z1.pow(2) + (z1 * z2).scaled(Rational(2)) + z2.pow(2));
    CHECK(exact_div(z1.pow(3) - z2.pow(3), z1 - z2) == z1.pow(2) + z1 * z2 + z2.pow(2));
    CHECK_THROWS_AS((void)exact_div(z1.pow(2) + Polynomial::constant(t, 1), z1 + z2),
                    DivisionNotExact);
    try {
        (void)exact_div(z1.pow(2) + Polynomial::constant(t, 1), z1 + z2);
        FAIL("expected DivisionNotExact");
    } catch (const DivisionNotExact& e) {
        CHECK_FALSE(e.remainder().is_zero());
    }
}

TEST_CASE("evaluation binds variables exactly") {
    VarTablePtr t = VarTable::make({"x", "y"});
    Polynomial x = Polynomial::variable(t, "x");
    Polynomial y = Polynomial::variable(t, "y");
    Polynomial p = x.pow(2) * y - y.scaled(Rational(1, 2));
    CHECK(p.evaluate_all({{"x", Rational(2)}, {"y", Rational(1, 3)}}) ==
          Rational(4) * Rational(1, 3) - Rational(1, 6));
    Polynomial part = p.evaluate({{"x", Rational(2)}});
    CHECK(part == y.scaled(Rational(7, 2)));
}

TEST_CASE("distinct tables are rejected") {
    VarTablePtr t1 = VarTable::make({"x"});
    VarTablePtr t2 = VarTable::make({"y"});
    Polynomial a = Polynomial::variable(t1, "x");
    Polynomial b = Polynomial::variable(t2, "y");
    CHECK_THROWS_AS((void)(a + b), StructuralError);
    VarTablePtr t3 = VarTable::make({"x"});
    CHECK(a + Polynomial::variable(t3, "x") == a.scaled(Rational(2)));
}

TEST_CASE("term cap guards runaway products") {
    VarTablePtr t = VarTable::make({"x", "y", "z"});
    Polynomial s = Polynomial::variable(t, "x") + Polynomial::variable(t, "y") +
                   Polynomial::variable(t, "z");
    std::size_t old = term_cap();
    set_term_cap(4);
    CHECK_THROWS_AS((void)(s * s), TermCapExceeded);
    set_term_cap(old);
    CHECK(s.pow(2).term_count() == 6);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
    VarTablePtr t = VarTable::make({"x", "y"});
    Polynomial x = Polynomial::variable(t, "x");
    Polynomial y = Polynomial::variable(t, "y");
    Polynomial one = Polynomial::constant(t, 1);
    for (int n = 1; n <= 4; ++n) {
        PolyMatrix m(n, n, t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = x.pow(static_cast<unsigned>((i + j) % 3)) +
                             y.scaled(Rational(i - j)) + one.scaled(Rational(i * j + 1));
        CHECK(m.det_bareiss() == cofactor_det(m));
    }
    CHECK(PolyMatrix::identity(3, t).det_bareiss() == one);
    PolyMatrix rect(2, 3, t);
    CHECK_THROWS_AS((void)rect.det_bareiss(), StructuralError);
}

TEST_CASE("matrix product and equality") {
    VarTablePtr t = VarTable::make({"x"});
    Polynomial x = Polynomial::variable(t, "x");
    PolyMatrix a(2, 2, t);
    a.at(0, 0) = x;
    a.at(0, 1) = Polynomial::constant(t, 1);
    a.at(1, 1) = x;
    PolyMatrix b = a * a;
    CHECK(b.at(0, 0) == x.pow(2));
    CHECK(b.at(0, 1) == x.scaled(Rational(2)));
    CHECK(b.at(1, 0).is_zero());
    CHECK(b.at(1, 1) == x.pow(2));
    CHECK(a * PolyMatrix::identity(2, t) == a);
}
