#pragma once

#include "sixv/lattice.hpp"
#include "sixv/poly_matrix.hpp"

namespace sixv {

// Two-line exchange matrix in the ordered pair basis 00, 01, 10, 11
// (column = incoming state):
//   [[u-tv, 0,      0,      0   ],
//    [0,    t(u-v), (1-t)u, 0   ],
//    [0,    (1-t)v, u-v,    0   ],
//    [0,    0,      0,      u-tv]].
PolyMatrix r_matrix(const Polynomial& u, const Polynomial& v, const Polynomial& t);

// 4x4 local weights on aux (x) site for the hard-core chain, basis
// 00, 01, 10, 11:
//   original:  [[1-bv,0,0,0],[0,1+bv,2v,0],[0,1,v,0],[0,0,0,v]]
//   tilde:     [[1,0,0,0],[0,1+2bz,2z,0],[0,1+bz,z,0],[0,0,0,z]]
//   hat(u;w) = w * original(u/w):
//              [[w-bu,0,0,0],[0,w+bu,2u,0],[0,w,u,0],[0,0,0,u]].
PolyMatrix sixvertex_l(const Polynomial& v, const Polynomial& beta);
PolyMatrix tilde_l(const Polynomial& z, const Polynomial& beta);
PolyMatrix l_hat(const Polynomial& u, const Polynomial& w, const Polynomial& beta);

// Site-side exchange matrix for tilde rows,
//   [[1,0,0,0],[0,b(v-1),v,0],[0,1,0,0],[0,0,0,v]],
// and its denominator-free form y * rtilde(x/y),
//   [[y,0,0,0],[0,b(x-y),x,0],[0,y,0,0],[0,0,0,x]].
PolyMatrix rtilde(const Polynomial& v, const Polynomial& beta);
PolyMatrix rtilde_cleared(const Polynomial& x, const Polynomial& y, const Polynomial& beta);

// (2F)x(2F) single-auxiliary L on aux (x) site in the configured mode and
// normalization, F = fock_cap + 1; basis index a*F + n.
PolyMatrix l_on_aux_site(const LatticeConfig& cfg, const Polynomial& spectral);

// Embeds a 4x4 two-qubit operator at positions (p, q), p < q, of a
// register of `qubits` two-state spaces (position 0 most significant).
PolyMatrix embed_pair(const PolyMatrix& m, int p, int q, int qubits);

// R12(u,v) R13(u,w) R23(v,w) == R23(v,w) R13(u,w) R12(u,v) on 2x2x2.
bool ybe_holds(const Polynomial& u, const Polynomial& v, const Polynomial& w,
               const Polynomial& t);

// R12 L1(u) L2(v) == L2(v) L1(u) R12 on aux1 (x) aux2 (x) site, where lu
// and lv are (2F)x(2F) single-auxiliary operators and r4 acts on the
// auxiliary pair.  When max_col_occ >= 0 only columns whose incoming site
// occupation is <= max_col_occ are compared: that is the exactness window
// when the site is a truncated boson.
bool rll_holds(const PolyMatrix& r4, const PolyMatrix& lu, const PolyMatrix& lv,
               int max_col_occ = -1);

// Truncated-boson instance of the relation above for generic t: the site
// keeps F = n_max + 3 levels, enough that no product starting at
// occupation <= n_max leaves the window.
bool rll_generic_holds(const Polynomial& u, const Polynomial& v,
                       const Polynomial& t, const Polynomial& beta, int n_max);

// Site-side exchange in cleared form: with RC = rtilde_cleared(x, y) and
// LH(u;w) = l_hat(u, w),
//   RC_jk LH_ak(u;y) LH_aj(u;x) == LH_aj(u;x) LH_ak(u;y) RC_jk
// on the register a (x) j (x) k.
bool rtilde_exchange_holds(const Polynomial& u, const Polynomial& x,
                           const Polynomial& y, const Polynomial& beta);

} // namespace sixv
