#include "sixv/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace sixv {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(std::string_view text) {
    if (text.empty())
        throw StructuralError("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw StructuralError("malformed rational literal '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw StructuralError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw StructuralError("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u)
            r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw StructuralError("variable names must be nonempty");
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted)
            throw StructuralError("duplicate variable name '" + names_[i] + "'");
    }
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

const std::string& VarTable::name(int i) const {
    if (i < 0 || i >= size())
        throw StructuralError("variable index out of range");
    return names_[static_cast<std::size_t>(i)];
}

int VarTable::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int VarTable::require(std::string_view name) const {
    int i = index_of(name);
    if (i < 0)
        throw StructuralError("unknown variable '" + std::string(name) + "'");
    return i;
}

void Monomial::trim() {
    while (!exp_.empty() && exp_.back() == 0)
        exp_.pop_back();
}

Monomial Monomial::var(int index, std::uint32_t exp) {
    if (index < 0)
        throw StructuralError("variable index out of range");
    Monomial m;
    if (exp > 0) {
        m.exp_.assign(static_cast<std::size_t>(index) + 1, 0);
        m.exp_.back() = exp;
    }
    return m;
}

Monomial Monomial::from_exponents(std::vector<std::uint32_t> exps) {
    Monomial m;
    m.exp_ = std::move(exps);
    m.trim();
    return m;
}

std::uint32_t Monomial::exponent(int index) const {
    if (index < 0)
        throw StructuralError("variable index out of range");
    if (index >= width())
        return 0;
    return exp_[static_cast<std::size_t>(index)];
}

long Monomial::total_degree() const {
    long d = 0;
    for (std::uint32_t e : exp_)
        d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r;
    const auto& a = exp_;
    const auto& b = other.exp_;
    r.exp_.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.exp_.size(); ++i) {
        std::uint32_t ea = i < a.size() ? a[i] : 0;
        std::uint32_t eb = i < b.size() ? b[i] : 0;
        r.exp_[i] = ea + eb;
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (exp_.size() > other.exp_.size())
        return false;
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i])
            return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this))
        throw StructuralError("monomial division not exact");
    Monomial r;
    r.exp_ = exp_;
    for (std::size_t i = 0; i < other.exp_.size(); ++i)
        r.exp_[i] -= other.exp_[i];
    r.trim();
    return r;
}

Monomial Monomial::without(int index) const {
    Monomial r = *this;
    if (index >= 0 && index < r.width()) {
        r.exp_[static_cast<std::size_t>(index)] = 0;
        r.trim();
    }
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    long da = a.total_degree();
    long db = b.total_degree();
    if (da != db)
        return da < db ? -1 : 1;
    std::size_t n = std::max(a.exp_.size(), b.exp_.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t ea = i < a.exp_.size() ? a.exp_[i] : 0;
        std::uint32_t eb = i < b.exp_.size() ? b.exp_[i] : 0;
        if (ea != eb)
            return ea < eb ? -1 : 1;
    }
    return 0;
}

namespace {

std::atomic<std::size_t> g_term_cap{1000000};

VarTablePtr empty_table() {
    static const VarTablePtr t = VarTable::make({});
    return t;
}

void check_result_size(std::size_t bound) {
    if (bound > g_term_cap.load())
        throw TermCapExceeded("operation could produce " + std::to_string(bound) +
                              " terms, above the cap of " + std::to_string(g_term_cap.load()));
}

} // namespace

std::size_t term_cap() {
    return g_term_cap.load();
}

void set_term_cap(std::size_t cap) {
    g_term_cap.store(cap);
}

Polynomial::Polynomial() : table_(empty_table()) {}

Polynomial::Polynomial(VarTablePtr table) : table_(std::move(table)) {
    if (!table_)
        throw StructuralError("null variable table");
}

Polynomial Polynomial::constant(VarTablePtr table, Rational value) {
    Polynomial p(std::move(table));
    if (value != 0)
        p.terms_.emplace(Monomial::one(), std::move(value));
    return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::string_view name) {
    Polynomial p(std::move(table));
    int idx = p.table_->require(name);
    p.terms_.emplace(Monomial::var(idx), Rational(1));
    return p;
}

Polynomial Polynomial::term(VarTablePtr table, Rational coeff, Monomial m) {
    Polynomial p(std::move(table));
    if (m.width() > p.table_->size())
        throw StructuralError("monomial references a variable outside the table");
    if (coeff != 0)
        p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_constant())
        throw StructuralError("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

long Polynomial::total_degree() const {
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.total_degree();
}

long Polynomial::degree_in(int var) const {
    long d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<long>(m.exponent(var)));
    return d;
}

long Polynomial::degree_in(std::string_view name) const {
    return degree_in(table_->require(name));
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
    if (terms_.empty())
        throw StructuralError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void Polynomial::require_compatible(const Polynomial& other) const {
    if (table_ == other.table_)
        return;
    if (!table_->same_content(*other.table_))
        throw StructuralError("operands use different variable tables");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(table_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_compatible(other);
    check_result_size(terms_.size() + other.terms_.size());
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_compatible(other);
    check_result_size(terms_.size() + other.terms_.size());
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    check_result_size(a.terms_.size() * b.terms_.size());
    Polynomial r(a.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Rational c = ca * cb;
            r.add_term(ma.times(mb), c);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r = *this;
    r.scale(c);
    return r;
}

Polynomial Polynomial::pow(unsigned exp) const {
    Polynomial r = Polynomial::constant(table_, 1);
    Polynomial b = *this;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u)
            r = r * b;
        e >>= 1u;
        if (e > 0)
            b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    require_compatible(other);
    return terms_ == other.terms_;
}

Polynomial Polynomial::evaluate(const std::vector<std::pair<std::string, Rational>>& bindings) const {
    std::vector<std::pair<int, Rational>> bound;
    bound.reserve(bindings.size());
    for (const auto& [name, value] : bindings)
        bound.emplace_back(table_->require(name), value);

    Polynomial r(table_);
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial reduced = m;
        for (const auto& [idx, value] : bound) {
            std::uint32_t e = reduced.exponent(idx);
            if (e > 0) {
                coeff *= rational_pow(value, e);
                reduced = reduced.without(idx);
            }
        }
        r.add_term(reduced, coeff);
    }
    return r;
}

Rational Polynomial::evaluate_all(const std::vector<std::pair<std::string, Rational>>& bindings) const {
    Polynomial r = evaluate(bindings);
    if (!r.is_constant())
        throw StructuralError("evaluation left formal variables: " + r.to_string());
    return r.constant_value();
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        bool negative = c < 0;
        Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative)
                out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit = abs_c == 1;
        if (m.is_one()) {
            out << abs_c.get_str();
        } else {
            bool printed = false;
            if (!unit) {
                out << abs_c.get_str();
                printed = true;
            }
            for (int i = 0; i < m.width(); ++i) {
                std::uint32_t e = m.exponent(i);
                if (e == 0)
                    continue;
                if (printed)
                    out << "*";
                out << table_->name(i);
                if (e > 1)
                    out << "^" << e;
                printed = true;
            }
        }
    }
    return out.str();
}

namespace {

struct Parser {
    VarTablePtr table;
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw StructuralError("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        return std::stoul(std::string(text.substr(start, pos - start)));
    }

    Rational parse_rational() {
        std::string num = std::to_string(parse_uint());
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den = std::to_string(parse_uint());
            return rational_from_string(num + "/" + den);
        }
        return rational_from_string(num);
    }

    std::string parse_name() {
        skip_ws();
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected a variable name");
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    // factor := rational | name ['^' uint]
    void parse_factor(Rational& coeff, Monomial& mono) {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_rational();
            return;
        }
        std::string name = parse_name();
        int idx = table->require(name);
        std::uint32_t e = 1;
        if (peek() == '^') {
            ++pos;
            e = static_cast<std::uint32_t>(parse_uint());
        }
        mono = mono.times(Monomial::var(idx, e));
    }

    // term := factor ('*' factor)*
    void parse_term(Polynomial& acc, bool negative) {
        Rational coeff(1);
        Monomial mono;
        parse_factor(coeff, mono);
        while (peek() == '*') {
            ++pos;
            parse_factor(coeff, mono);
        }
        if (negative)
            coeff = -coeff;
        acc += Polynomial::term(table, coeff, mono);
    }

    Polynomial run() {
        Polynomial acc(table);
        bool negative = false;
        char c = peek();
        if (c == '-') {
            negative = true;
            ++pos;
        } else if (c == '+') {
            ++pos;
        }
        if (at_end())
            fail("empty input");
        parse_term(acc, negative);
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-')
                fail(std::string("expected '+' or '-', found '") + op + "'");
            ++pos;
            parse_term(acc, op == '-');
        }
        return acc;
    }
};

} // namespace

Polynomial Polynomial::parse(VarTablePtr table, std::string_view text) {
    Parser p{std::move(table), text};
    return p.run();
}

DivisionNotExact::DivisionNotExact(const std::string& msg, Polynomial remainder)
    : StructuralError(msg), remainder_(std::move(remainder)) {}

Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw StructuralError("division by the zero polynomial");
    if (den.is_constant()) {
        Rational inv = 1 / den.constant_value();
        return num.scaled(inv);
    }
    if (num.table() != den.table() && !num.table()->same_content(*den.table()))
        throw StructuralError("operands use different variable tables");

    const auto& den_lead = den.leading();
    Polynomial rem = num;
    Polynomial quot(num.table());
    while (!rem.is_zero()) {
        const auto& rem_lead = rem.leading();
        if (!den_lead.first.divides(rem_lead.first))
            throw DivisionNotExact("polynomial division leaves a remainder", rem);
        Monomial qm = rem_lead.first.divided_by(den_lead.first);
        Rational qc = rem_lead.second / den_lead.second;
        Polynomial piece = Polynomial::term(num.table(), qc, qm);
        quot += piece;
        rem -= piece * den;
    }
    return quot;
}

} // namespace sixv
