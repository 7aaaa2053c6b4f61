#pragma once

#include <map>
#include <string>
#include <vector>

#include "sixv/partitions.hpp"
#include "sixv/poly.hpp"

namespace sixv {

// Which deformation of the local vertex weights is in force.
enum class TMode {
    Generic,   // formal (or bound) t, bosonic site occupations up to fock_cap
    MinusOne,  // t = -1, hard-core sites (occupations 0/1)
};

// Normalization of the local L-matrix.
//
//   Original: weights in the spectral variable v.  At t = -1 the nonzero
//             entries are 1-bv, 1+bv, 2v, 1, v, v (b = beta).
//   Tilde:    t = -1 only, homogeneous only; weights in z where
//             v = z/(1+bz), scaled so every entry is a polynomial:
//             1, 1+2bz, 2z, 1+bz, z, z.
//   ZForm:    same numerators as Tilde; every entry additionally carries
//             an implicit denominator (1+bz), so a row of M sites carries
//             (1+bz)^M.  Row results are returned as the Tilde numerators
//             and callers account for the denominator power explicitly.
enum class Normalization { Original, ZForm, Tilde };

enum class RowKind { A, B, C, D };

// One horizontal line of the lattice: M sites, each a small occupation
// register, threaded by a two-state auxiliary line.  The auxiliary index
// enters on the ket side at site 1 and exits on the bra side at site M;
// site j carries the inhomogeneity w_{M+1-j} (so site 1 carries w_M).
// That ordering is pinned by the boundary-overlap tests.
struct LatticeConfig {
    int sites = 1;
    TMode t_mode = TMode::MinusOne;
    Normalization norm = Normalization::Original;
    VarTablePtr table;
    Polynomial beta;            // formal variable or bound rational constant
    Polynomial t;               // constant -1 in MinusOne mode
    std::vector<Polynomial> inhom;  // w_1..w_M; empty means homogeneous (all 1)
    // When set, every site weight is multiplied by that site's w, which
    // keeps amplitudes polynomial for formal w: a full row then carries an
    // extra factor prod_j w_j relative to the plain normalization.
    bool cleared_rows = false;
    int fock_cap = 1;           // largest per-site occupation (1 when t = -1)
};

// Six-vertex chain (t = -1), homogeneous unless inhomogeneities are
// attached afterwards.
LatticeConfig make_six_vertex(int sites, VarTablePtr table, Polynomial beta,
                              Normalization norm = Normalization::Original);

// Bosonic chain with formal or bound t.
LatticeConfig make_generic(int sites, VarTablePtr table, Polynomial beta,
                           Polynomial t, int fock_cap);

// Throws StructuralError on inconsistent field combinations (tilde at
// generic t, formal w without cleared rows, inhomogeneity count != sites,
// non-Original normalization with inhomogeneities, bad caps).
void validate(const LatticeConfig& cfg);

// Per-site occupations, site 1 first.
using BasisState = std::vector<int>;

// Finitely supported linear combination of basis states with polynomial
// amplitudes.  Zero amplitudes are pruned on insertion.
class StateVector {
public:
    explicit StateVector(VarTablePtr table);

    static StateVector vacuum(const LatticeConfig& cfg);
    static StateVector basis(const LatticeConfig& cfg, const BasisState& s);

    const VarTablePtr& table() const { return table_; }
    const std::map<BasisState, Polynomial>& amplitudes() const { return amps_; }
    // Zero polynomial when the state is absent.
    Polynomial amplitude(const BasisState& s) const;

    void add(const BasisState& s, const Polynomial& coeff);
    bool is_zero() const { return amps_.empty(); }

    StateVector scaled(const Polynomial& c) const;
    StateVector operator+(const StateVector& other) const;
    StateVector operator-(const StateVector& other) const;
    bool operator==(const StateVector& other) const { return amps_ == other.amps_; }

private:
    VarTablePtr table_;
    std::map<BasisState, Polynomial> amps_;
};

// Homogeneous local weight <aux_out, n_out| L(spectral) |aux_in, n_in>
// in the configured normalization.  Occupations must lie within the cap.
Polynomial l_entry(const LatticeConfig& cfg, const Polynomial& spectral,
                   int n_in, int n_out, int aux_in, int aux_out);

// One row operator applied to a state: A = <0|T|0>, B = <0|T|1>,
// C = <1|T|0>, D = <1|T|1> where T threads the auxiliary index through
// sites 1..M (ket-side entry at site 1).  B raises the particle number by
// one, C lowers it, A and D preserve it.  In Generic mode a forced
// deposit past the cap is a configuration error; at t = -1 the
// corresponding weight vanishes and the branch is dropped.
StateVector apply_row(const LatticeConfig& cfg, RowKind kind,
                      const Polynomial& spectral, const StateVector& in);

// <occ| B(s_N) ... B(s_1) |vacuum>: rows applied in list order, s[0] first.
Polynomial wavefunction(const LatticeConfig& cfg, const OccupationVector& occ,
                        const std::vector<Polynomial>& spectrals);

// Closed form for the Tilde-normalized wavefunction:
//   2^N prod_j z_j prod_{j<k}(z_j + z_k + 2 b z_j z_k) s_lambda(z)
// with lambda_j = x_j - N + j - 1 for the strict partition x of occ.
Polynomial wavefunction_closed(const LatticeConfig& cfg, const OccupationVector& occ,
                               const std::vector<Polynomial>& zs);

// <vacuum| C(s_N) ... C(s_1) |occ>: rows applied in list order to the ket.
Polynomial dual_wavefunction(const LatticeConfig& cfg, const OccupationVector& occ,
                             const std::vector<Polynomial>& spectrals);

// Closed form for the Tilde-normalized dual wavefunction:
//   prod_j (1 + b z_j) prod_{j<k}(z_j + z_k + 2 b z_j z_k) s_{lambda^dual}(z).
Polynomial dual_wavefunction_closed(const LatticeConfig& cfg, const OccupationVector& occ,
                                    const std::vector<Polynomial>& zs);

// Original-normalization dual wavefunction evaluated exactly at rational
// points, via the closed form with z = v/(1-bv):
//   prod_{j<k}(z_j + z_k + 2 b z_j z_k) / prod_j (1+b z_j)^{M-1} * s_{lambda^dual}(z).
Rational dual_wavefunction_closed_value(int sites, const OccupationVector& occ,
                                        const std::vector<Rational>& vs,
                                        const Rational& beta);

// <m| B(spectral) |n> by direct contraction (any mode / normalization).
Polynomial matrix_element_b(const LatticeConfig& cfg, const OccupationVector& m,
                            const OccupationVector& n, const Polynomial& spectral);

// <n| C(spectral) |m> by direct contraction.
Polynomial matrix_element_c(const LatticeConfig& cfg, const OccupationVector& n,
                            const OccupationVector& m, const Polynomial& spectral);

// Closed form of <m|B(v)|n> for generic t (Original normalization,
// homogeneous): with deposit sites p_1<...<p_r (m_p = n_p + 1), pickup
// sites q_1<...<q_{r-1} (m_q = n_q - 1) and the sentinel q_r = M+1,
//   v^{sum p - sum_{j<r} q_j} prod_j (1 - t^{n_{p_j}+1})
//     prod_j prod_{k=p_j+1}^{q_j-1} (1 - b v t^{n_k}).
// Zero when (m, n) is not admissible.
Polynomial matrix_element_b_closed_generic(const LatticeConfig& cfg,
                                           const OccupationVector& m,
                                           const OccupationVector& n,
                                           const Polynomial& spectral);

// A denominator-free identity: lhs == rhs where both sides are genuine
// polynomials, with the clearing factors recorded in the docs of the
// producing function.
struct ClearedIdentity {
    Polynomial lhs;
    Polynomial rhs;
    bool equal() const { return lhs == rhs; }
};

// t = -1 single-row B element in Tilde normalization, cleared form:
//   lhs = <m|B~(z)|n> * (1+2bz)^{#-1}
//   rhs = 2^# (1+bz)^{#-1} z^{sum y - sum x}
//           prod_{j=1}^N (1 + 2bz [x_j != y_{j+1}])
// where y, x are the strict partitions of m, n and # counts the parts of
// y absent from x.  Both sides are zero for non-admissible pairs.
ClearedIdentity matrix_element_b_cleared(const LatticeConfig& cfg,
                                         const OccupationVector& m,
                                         const OccupationVector& n,
                                         const Polynomial& z);

// t = -1 single-row C element in Tilde normalization, cleared form:
//   lhs = <n|C~(z)|m> * z * (1+2bz)^{#v-1}
//   rhs = 2^{#v-1} (1+bz)^{#v} z^{sum yv - sum xv}
//           prod_{j=1}^N (1 + 2bz [xv_j != yv_{j+1}])
// where xv, yv are the reversed complements of the strict partitions of
// n, m inside (M+1)^N resp. (M+1)^{N+1}, and #v counts the parts of yv
// absent from xv.
ClearedIdentity matrix_element_c_cleared(const LatticeConfig& cfg,
                                         const OccupationVector& n,
                                         const OccupationVector& m,
                                         const Polynomial& z);

// <vacuum| C(u_1)...C(u_n) B(v_1)...B(v_N) |vacuum> by contraction.
Polynomial scalar_product_direct(const LatticeConfig& cfg,
                                 const std::vector<Polynomial>& us,
                                 const std::vector<Polynomial>& vs);

// Determinant identity for the homogeneous scalar product in cleared
// form (a(x) = (1-bx)^M, d(x) = x^M):
//   lhs = direct * prod_{j<k}(u_j - u_k)(v_k - v_j)
//   rhs = prod_j 2 v_j * prod_{j<k}(u_j + u_k)(v_j + v_k) * det Q,
//   Q_jk = (a(u_j) d(v_k) - d(u_j) a(v_k)) / (v_k - u_j)   (exact).
ClearedIdentity scalar_product_sides(const LatticeConfig& cfg,
                                     const std::vector<Polynomial>& us,
                                     const std::vector<Polynomial>& vs);

// Vacuum row eigenfunctions over an inhomogeneity list:
// a = prod_j (1 - b v / w_j), d = prod_j (v / w_j).
Rational bethe_a_value(const Rational& v, const Rational& beta,
                       const std::vector<Rational>& ws);
Rational bethe_d_value(const Rational& v, const std::vector<Rational>& ws);

// Boundary overlap <1^{N-n} 0^{M-N+n}| C(u_1)..C(u_n) B(v_1)..B(v_N) |vac>
// with rational parameters; ws has length M (site j carries w_{M+1-j}).
Rational intermediate_scalar_direct(int sites, const std::vector<Rational>& us,
                                    const std::vector<Rational>& vs,
                                    const std::vector<Rational>& ws,
                                    const Rational& beta);

// Determinant form of the same overlap.  Throws StructuralError if the
// evaluation point makes one of the formula's denominators vanish
// (coincident spectral values, beta*u_j equal to some w, zero w, beta=0
// with n < N present in the frozen-tail factor).
Rational intermediate_scalar_determinant(int sites, const std::vector<Rational>& us,
                                         const std::vector<Rational>& vs,
                                         const std::vector<Rational>& ws,
                                         const Rational& beta);

// n = 0 closed form:
//   prod_j 2 v_j / w_{M-N+j}^j * prod_{j<k}(v_j + v_k)
//     * prod_j prod_{k=1}^{M-N} (1 - b v_j / w_k).
Rational intermediate_scalar_initial(int sites, const std::vector<Rational>& vs,
                                     const std::vector<Rational>& ws,
                                     const Rational& beta);

enum class DwbpfMode { Direct, Factorized };

// N x N domain-wall partition function <1^N| B(v_N)...B(v_1) |0^N> with
// rational inhomogeneities ws (length N, site j carries ws[N-j], i.e.
// w_{N+1-j} 1-based; empty ws means homogeneous).  Direct contracts the
// lattice; Factorized returns prod_j 2 v_j / w_j^j * prod_{j<k}(v_j + v_k).
Polynomial dwbpf(const std::vector<Polynomial>& vs, const std::vector<Rational>& ws,
                 const Polynomial& beta, DwbpfMode mode);

// Same partition function with formal inhomogeneities, returned in
// row-cleared form (every row carries an extra prod_j w_j):
//   Direct     = contraction with cleared rows,
//   Factorized = prod_j 2 v_j w_j^{N-j} * prod_{j<k}(v_j + v_k).
Polynomial dwbpf_cleared(const std::vector<Polynomial>& vs,
                         const std::vector<Polynomial>& ws,
                         const Polynomial& beta, DwbpfMode mode);

// Verifies tau(u) |Psi({v})> = Lambda(u) |Psi({v})> as a polynomial
// identity in the formal probe u, for the homogeneous t = -1 chain,
// |Psi> = prod_j B(v_j)|vac>, in the cleared form
//   (A(u)+D(u))|Psi> * prod_j (u - v_j)
//     == ((-1)^N (1-bu)^M + u^M) prod_j (u + v_j) |Psi>.
// The roots must satisfy (1/v_j - b)^M = (-1)^{N+1} exactly; otherwise a
// StructuralError reporting the residual is thrown.
bool check_eigenstate(int sites, const std::vector<Rational>& roots,
                      const Rational& beta);

} // namespace sixv
