#include "sixv/alt_sign.hpp"

#include <functional>

#include "sixv/errors.hpp"

namespace sixv {

bool is_asm(const AsmMatrix& a) {
    const int n = a.n;
    if (n < 1 || static_cast<int>(a.entries.size()) != n * n) return false;
    for (int v : a.entries)
        if (v < -1 || v > 1) return false;
    for (int i = 0; i < n; ++i) {
        int sum = 0;
        for (int j = 0; j < n; ++j) {
            sum += a.entry(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int sum = 0;
        for (int i = 0; i < n; ++i) {
            sum += a.entry(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    return true;
}

std::vector<AsmMatrix> enumerate_asm(int n) {
    if (n < 1 || n > 6)
        throw StructuralError("matrix order out of the supported range 1..6");
    std::vector<AsmMatrix> out;
    AsmMatrix a;
    a.n = n;
    a.entries.assign(static_cast<std::size_t>(n * n), 0);
    std::vector<int> col_sum(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int)> place = [&](int i, int j, int row_sum) {
        if (j == n) {
            if (row_sum != 1) return;
            if (i == n - 1) {
                for (int c : col_sum)
                    if (c != 1) return;
                out.push_back(a);
            } else {
                place(i + 1, 0, 0);
            }
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            int rs = row_sum + v;
            int cs = col_sum[static_cast<std::size_t>(j)] + v;
            if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
            a.entries[static_cast<std::size_t>(i * n + j)] = v;
            col_sum[static_cast<std::size_t>(j)] = cs;
            place(i, j + 1, rs);
            col_sum[static_cast<std::size_t>(j)] = cs - v;
            a.entries[static_cast<std::size_t>(i * n + j)] = 0;
        }
    };
    place(0, 0, 0);
    return out;
}

AsmStatistics asm_statistics(const AsmMatrix& a) {
    const int n = a.n;
    AsmStatistics s;
    // prefix[k][j] = sum_{l <= j} A_kl
    std::vector<std::vector<long>> prefix(static_cast<std::size_t>(n),
                                          std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int k = 0; k < n; ++k) {
        long run = 0;
        for (int j = 0; j < n; ++j) {
            run += a.entry(k, j);
            prefix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = run;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j)
                s.nu += a.entry(i, j) * prefix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    for (int v : a.entries)
        if (v == -1) ++s.mu;
    for (int j = 0; j < n; ++j) {
        if (a.entry(0, j) == 1) break;
        ++s.rho;
    }
    return s;
}

bool is_sixvertex_dw(const SixVertexConfiguration& c) {
    const int n = c.n;
    if (n < 1) return false;
    if (static_cast<int>(c.vert.size()) != n + 1 || static_cast<int>(c.horiz.size()) != n)
        return false;
    for (const auto& layer : c.vert) {
        if (static_cast<int>(layer.size()) != n) return false;
        for (int v : layer)
            if (v != 0 && v != 1) return false;
    }
    for (const auto& line : c.horiz) {
        if (static_cast<int>(line.size()) != n + 1) return false;
        for (int v : line)
            if (v != 0 && v != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        if (c.vert[0][static_cast<std::size_t>(j)] != 0) return false;
        if (c.vert[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] != 1) return false;
    }
    for (int r = 1; r <= n; ++r) {
        const auto& line = c.horiz[static_cast<std::size_t>(r - 1)];
        if (line[0] != 1 || line[static_cast<std::size_t>(n)] != 0) return false;
        for (int j = 1; j <= n; ++j) {
            int expected = line[static_cast<std::size_t>(j - 1)] +
                           c.vert[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] -
                           c.vert[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)];
            if (line[static_cast<std::size_t>(j)] != expected) return false;
        }
    }
    return true;
}

SixVertexConfiguration asm_to_sixvertex(const AsmMatrix& a) {
    if (!is_asm(a)) throw StructuralError("not an alternating-sign matrix");
    const int n = a.n;
    SixVertexConfiguration c;
    c.n = n;
    c.vert.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n), 0));
    c.horiz.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    // vert[r] accumulates the bottom r matrix rows.
    for (int r = 1; r <= n; ++r)
        for (int j = 0; j < n; ++j)
            c.vert[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                c.vert[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)] +
                a.entry(n - r, j);
    for (int r = 1; r <= n; ++r) {
        auto& line = c.horiz[static_cast<std::size_t>(r - 1)];
        line[0] = 1;
        for (int j = 1; j <= n; ++j)
            line[static_cast<std::size_t>(j)] =
                line[static_cast<std::size_t>(j - 1)] +
                c.vert[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] -
                c.vert[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)];
    }
    if (!is_sixvertex_dw(c))
        throw StructuralError("matrix does not map to a domain-wall configuration");
    return c;
}

AsmMatrix sixvertex_to_asm(const SixVertexConfiguration& c) {
    if (!is_sixvertex_dw(c))
        throw StructuralError("not a domain-wall configuration");
    const int n = c.n;
    AsmMatrix a;
    a.n = n;
    a.entries.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.entries[static_cast<std::size_t>(i * n + j)] =
                c.vert[static_cast<std::size_t>(n - i)][static_cast<std::size_t>(j)] -
                c.vert[static_cast<std::size_t>(n - i - 1)][static_cast<std::size_t>(j)];
    if (!is_asm(a))
        throw StructuralError("configuration does not map to an alternating-sign matrix");
    return a;
}

std::vector<SixVertexConfiguration> enumerate_sixvertex_dw(int n) {
    if (n < 1 || n > 6)
        throw StructuralError("lattice order out of the supported range 1..6");
    std::vector<SixVertexConfiguration> out;
    SixVertexConfiguration c;
    c.n = n;
    c.vert.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n), 0));
    c.horiz.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int j = 0; j < n; ++j) c.vert[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = 1;

    std::function<void(int, int, int)> walk = [&](int r, int j, int aux) {
        c.horiz[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)] = aux;
        if (j == n) {
            if (aux != 0) return;
            if (r == n) {
                out.push_back(c);
            } else {
                walk(r + 1, 0, 1);
            }
            return;
        }
        int s_in = c.vert[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
        auto step = [&](int s_out, int aux_out) {
            if (r == n && s_out != 1) return;  // top boundary is all ones
            c.vert[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = s_out;
            walk(r, j + 1, aux_out);
        };
        if (aux == 0) {
            step(s_in, 0);  // a0 or b0
        } else {
            if (s_in == 0) {
                step(1, 0);  // c1 deposit
                step(0, 1);  // b1 pass
            } else {
                step(1, 1);  // a1 pass
            }
        }
        if (aux == 0 && s_in == 1) step(0, 1);  // c0 pickup
    };
    walk(1, 0, 1);
    return out;
}

namespace {

VertexCounts tally(const SixVertexConfiguration& c, int row_only) {
    VertexCounts v;
    for (int r = 1; r <= c.n; ++r) {
        if (row_only > 0 && r != row_only) continue;
        for (int j = 1; j <= c.n; ++j) {
            int ai = c.horiz[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)];
            int ao = c.horiz[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j)];
            int si = c.vert[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)];
            int so = c.vert[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)];
            if (ai == 0 && ao == 0 && si == 0 && so == 0) ++v.a0;
            else if (ai == 0 && ao == 0 && si == 1 && so == 1) ++v.b0;
            else if (ai == 1 && ao == 0 && si == 0 && so == 1) ++v.c1;
            else if (ai == 0 && ao == 1 && si == 1 && so == 0) ++v.c0;
            else if (ai == 1 && ao == 1 && si == 0 && so == 0) ++v.b1;
            else if (ai == 1 && ao == 1 && si == 1 && so == 1) ++v.a1;
            else throw StructuralError("forbidden vertex in configuration");
        }
    }
    return v;
}

} // namespace

VertexCounts vertex_type_counts(const SixVertexConfiguration& c) { return tally(c, 0); }

VertexCounts vertex_type_counts_row(const SixVertexConfiguration& c, int r) {
    if (r < 1 || r > c.n) throw StructuralError("row out of range");
    return tally(c, r);
}

Polynomial asm_generating_function(int n, const VarTablePtr& table) {
    Polynomial x = Polynomial::variable(table, "x");
    Polynomial y = Polynomial::variable(table, "y");
    Polynomial z = Polynomial::variable(table, "z");
    Polynomial sum = Polynomial::zero(table);
    for (const AsmMatrix& a : enumerate_asm(n)) {
        AsmStatistics s = asm_statistics(a);
        sum += x.pow(static_cast<unsigned>(s.nu)) * y.pow(static_cast<unsigned>(s.mu)) *
               z.pow(static_cast<unsigned>(s.rho));
    }
    return sum;
}

UFormulaReport verify_u_formula(int n) {
    UFormulaReport report;
    std::vector<AsmMatrix> all = enumerate_asm(n);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;

    {
        VarTablePtr table = VarTable::make({"u"});
        Polynomial u = Polynomial::variable(table, "u");
        Polynomial um1 = u - Polynomial::constant(table, Rational(1));
        Polynomial sum = Polynomial::zero(table);
        VarTablePtr gft = VarTable::make({"x", "y", "z"});
        Polynomial gf = asm_generating_function(n, gft);
        for (const auto& [mono, coeff] : gf.terms()) {
            Polynomial term = Polynomial::constant(table, coeff);
            term *= um1.pow(mono.exponent(0));  // x
            term *= u.pow(mono.exponent(1));    // y, and z^rho -> 1
            sum += term;
        }
        report.gf_route = sum == u.pow(static_cast<unsigned>(pairs));
    }

    {
        VarTablePtr table = VarTable::make({"v", "b"});
        Polynomial v = Polynomial::variable(table, "v");
        Polynomial b = Polynomial::variable(table, "b");
        Polynomial one = Polynomial::constant(table, Rational(1));
        Polynomial sum = Polynomial::zero(table);
        for (const AsmMatrix& a : all) {
            VertexCounts k = vertex_type_counts(asm_to_sixvertex(a));
            Polynomial w = (one - b * v).pow(static_cast<unsigned>(k.a0));
            w *= (one + b * v).pow(static_cast<unsigned>(k.b0));
            w *= v.scaled(Rational(2)).pow(static_cast<unsigned>(k.c1));
            w *= v.pow(static_cast<unsigned>(k.b1) + static_cast<unsigned>(k.a1));
            sum += w;
        }
        Polynomial target =
            v.scaled(Rational(2)).pow(static_cast<unsigned>(n) * static_cast<unsigned>(n + 1) / 2);
        report.weighted_route = sum == target;
    }

    {
        const Rational samples[][2] = {
            {Rational(1, 3), Rational(2)},
            {Rational(2, 5), Rational(-1)},
            {Rational(5), Rational(1, 7)},
        };
        bool ok = true;
        for (const auto& sample : samples) {
            const Rational& v = sample[0];
            const Rational& b = sample[1];
            Rational denom = Rational(1) + b * v;
            Rational xval = (Rational(1) - b * v) / denom;
            Rational yval = Rational(2) / denom;
            Rational sum(0);
            for (const AsmMatrix& a : all) {
                AsmStatistics s = asm_statistics(a);
                sum += rational_pow(xval, static_cast<unsigned>(s.nu)) *
                       rational_pow(yval, static_cast<unsigned>(s.mu));
            }
            if (sum != rational_pow(yval, static_cast<unsigned>(pairs))) ok = false;
        }
        report.rational_route = ok;
    }
    return report;
}

} // namespace sixv
