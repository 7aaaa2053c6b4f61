#include "sixv/intertwiners.hpp"

namespace sixv {

namespace {

Polynomial one_of(const VarTablePtr& table) {
    return Polynomial::constant(table, Rational(1));
}

} // namespace

PolyMatrix r_matrix(const Polynomial& u, const Polynomial& v, const Polynomial& t) {
    const VarTablePtr& table = u.table();
    Polynomial one = one_of(table);
    PolyMatrix r(4, 4, table);
    r.at(0, 0) = u - t * v;
    r.at(1, 1) = t * (u - v);
    r.at(1, 2) = (one - t) * u;
    r.at(2, 1) = (one - t) * v;
    r.at(2, 2) = u - v;
    r.at(3, 3) = u - t * v;
    return r;
}

PolyMatrix sixvertex_l(const Polynomial& v, const Polynomial& beta) {
    const VarTablePtr& table = v.table();
    Polynomial one = one_of(table);
    PolyMatrix l(4, 4, table);
    l.at(0, 0) = one - beta * v;
    l.at(1, 1) = one + beta * v;
    l.at(1, 2) = v.scaled(Rational(2));
    l.at(2, 1) = one;
    l.at(2, 2) = v;
    l.at(3, 3) = v;
    return l;
}

PolyMatrix tilde_l(const Polynomial& z, const Polynomial& beta) {
    const VarTablePtr& table = z.table();
    Polynomial one = one_of(table);
    PolyMatrix l(4, 4, table);
    l.at(0, 0) = one;
    l.at(1, 1) = one + (beta * z).scaled(Rational(2));
    l.at(1, 2) = z.scaled(Rational(2));
    l.at(2, 1) = one + beta * z;
    l.at(2, 2) = z;
    l.at(3, 3) = z;
    return l;
}

PolyMatrix l_hat(const Polynomial& u, const Polynomial& w, const Polynomial& beta) {
    const VarTablePtr& table = u.table();
    PolyMatrix l(4, 4, table);
    l.at(0, 0) = w - beta * u;
    l.at(1, 1) = w + beta * u;
    l.at(1, 2) = u.scaled(Rational(2));
    l.at(2, 1) = w;
    l.at(2, 2) = u;
    l.at(3, 3) = u;
    return l;
}

PolyMatrix rtilde(const Polynomial& v, const Polynomial& beta) {
    const VarTablePtr& table = v.table();
    Polynomial one = one_of(table);
    PolyMatrix r(4, 4, table);
    r.at(0, 0) = one;
    r.at(1, 1) = beta * (v - one);
    r.at(1, 2) = v;
    r.at(2, 1) = one;
    r.at(3, 3) = v;
    return r;
}

PolyMatrix rtilde_cleared(const Polynomial& x, const Polynomial& y, const Polynomial& beta) {
    const VarTablePtr& table = x.table();
    PolyMatrix r(4, 4, table);
    r.at(0, 0) = y;
    r.at(1, 1) = beta * (x - y);
    r.at(1, 2) = x;
    r.at(2, 1) = y;
    r.at(3, 3) = x;
    return r;
}

PolyMatrix l_on_aux_site(const LatticeConfig& cfg, const Polynomial& spectral) {
    validate(cfg);
    const int f = cfg.fock_cap + 1;
    PolyMatrix l(2 * f, 2 * f, cfg.table);
    for (int a_out = 0; a_out < 2; ++a_out)
        for (int n_out = 0; n_out < f; ++n_out)
            for (int a_in = 0; a_in < 2; ++a_in)
                for (int n_in = 0; n_in < f; ++n_in)
                    l.at(a_out * f + n_out, a_in * f + n_in) =
                        l_entry(cfg, spectral, n_in, n_out, a_in, a_out);
    return l;
}

PolyMatrix embed_pair(const PolyMatrix& m, int p, int q, int qubits) {
    if (m.rows() != 4 || m.cols() != 4)
        throw StructuralError("embed_pair expects a 4x4 operator");
    if (!(0 <= p && p < q && q < qubits))
        throw StructuralError("embed_pair positions out of range");
    const int dim = 1 << qubits;
    auto bit = [&](int word, int pos) { return (word >> (qubits - 1 - pos)) & 1; };
    PolyMatrix out(dim, dim, m.table());
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            bool diag = true;
            for (int b = 0; b < qubits; ++b) {
                if (b == p || b == q) continue;
                if (bit(i, b) != bit(j, b)) { diag = false; break; }
            }
            if (!diag) continue;
            out.at(i, j) = m.at(bit(i, p) * 2 + bit(i, q), bit(j, p) * 2 + bit(j, q));
        }
    }
    return out;
}

bool ybe_holds(const Polynomial& u, const Polynomial& v, const Polynomial& w,
               const Polynomial& t) {
    PolyMatrix r12 = embed_pair(r_matrix(u, v, t), 0, 1, 3);
    PolyMatrix r13 = embed_pair(r_matrix(u, w, t), 0, 2, 3);
    PolyMatrix r23 = embed_pair(r_matrix(v, w, t), 1, 2, 3);
    return r12 * r13 * r23 == r23 * r13 * r12;
}

namespace {

// (4F)x(4F) operators over aux1 (x) aux2 (x) site, index (a1*2 + a2)*F + n.
PolyMatrix embed_aux(const PolyMatrix& l, int which, int f) {
    const int dim = 4 * f;
    PolyMatrix out(dim, dim, l.table());
    for (int a1o = 0; a1o < 2; ++a1o)
        for (int a2o = 0; a2o < 2; ++a2o)
            for (int no = 0; no < f; ++no)
                for (int a1i = 0; a1i < 2; ++a1i)
                    for (int a2i = 0; a2i < 2; ++a2i)
                        for (int ni = 0; ni < f; ++ni) {
                            if (which == 0 ? (a2o != a2i) : (a1o != a1i)) continue;
                            int ao = which == 0 ? a1o : a2o;
                            int ai = which == 0 ? a1i : a2i;
                            out.at((a1o * 2 + a2o) * f + no, (a1i * 2 + a2i) * f + ni) =
                                l.at(ao * f + no, ai * f + ni);
                        }
    return out;
}

PolyMatrix embed_aux_pair(const PolyMatrix& r4, int f) {
    const int dim = 4 * f;
    PolyMatrix out(dim, dim, r4.table());
    for (int po = 0; po < 4; ++po)
        for (int pi = 0; pi < 4; ++pi)
            for (int n = 0; n < f; ++n)
                out.at(po * f + n, pi * f + n) = r4.at(po, pi);
    return out;
}

} // namespace

bool rll_holds(const PolyMatrix& r4, const PolyMatrix& lu, const PolyMatrix& lv,
               int max_col_occ) {
    if (lu.rows() != lu.cols() || lv.rows() != lv.cols() || lu.rows() != lv.rows())
        throw StructuralError("rll_holds expects square single-auxiliary operators of equal size");
    if (lu.rows() % 2 != 0) throw StructuralError("single-auxiliary operator has odd dimension");
    const int f = lu.rows() / 2;
    PolyMatrix r = embed_aux_pair(r4, f);
    PolyMatrix l1 = embed_aux(lu, 0, f);
    PolyMatrix l2 = embed_aux(lv, 1, f);
    PolyMatrix lhs = r * l1 * l2;
    PolyMatrix rhs = l2 * l1 * r;
    const int dim = 4 * f;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (max_col_occ >= 0 && j % f > max_col_occ) continue;
            if (!(lhs.at(i, j) == rhs.at(i, j))) return false;
        }
    return true;
}

bool rll_generic_holds(const Polynomial& u, const Polynomial& v,
                       const Polynomial& t, const Polynomial& beta, int n_max) {
    if (n_max < 0) throw StructuralError("n_max must be non-negative");
    const VarTablePtr& table = u.table();
    LatticeConfig cfg = make_generic(1, table, beta, t, n_max + 2);
    PolyMatrix lu = l_on_aux_site(cfg, u);
    PolyMatrix lv = l_on_aux_site(cfg, v);
    return rll_holds(r_matrix(u, v, t), lu, lv, n_max);
}

bool rtilde_exchange_holds(const Polynomial& u, const Polynomial& x,
                           const Polynomial& y, const Polynomial& beta) {
    PolyMatrix rc = embed_pair(rtilde_cleared(x, y, beta), 1, 2, 3);
    PolyMatrix laj = embed_pair(l_hat(u, x, beta), 0, 1, 3);
    PolyMatrix lak = embed_pair(l_hat(u, y, beta), 0, 2, 3);
    return rc * lak * laj == laj * lak * rc;
}

} // namespace sixv
