#include "sixv/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "sixv/poly_matrix.hpp"
#include "sixv/schur.hpp"

namespace sixv {

namespace {

Polynomial poly_one(const VarTablePtr& table) {
    return Polynomial::constant(table, Rational(1));
}

bool is_minus_one_constant(const Polynomial& p) {
    return p.is_constant() && p.constant_value() == Rational(-1);
}

void require_sites(const LatticeConfig& cfg, const OccupationVector& occ, const char* what) {
    if (occ.sites() != cfg.sites) {
        std::ostringstream os;
        os << what << " has " << occ.sites() << " sites, config has " << cfg.sites;
        throw StructuralError(os.str());
    }
}

} // namespace

LatticeConfig make_six_vertex(int sites, VarTablePtr table, Polynomial beta,
                              Normalization norm) {
    LatticeConfig cfg;
    cfg.sites = sites;
    cfg.t_mode = TMode::MinusOne;
    cfg.norm = norm;
    cfg.table = table;
    cfg.beta = std::move(beta);
    cfg.t = Polynomial::constant(table, Rational(-1));
    cfg.fock_cap = 1;
    validate(cfg);
    return cfg;
}

LatticeConfig make_generic(int sites, VarTablePtr table, Polynomial beta,
                           Polynomial t, int fock_cap) {
    LatticeConfig cfg;
    cfg.sites = sites;
    cfg.t_mode = TMode::Generic;
    cfg.norm = Normalization::Original;
    cfg.table = table;
    cfg.beta = std::move(beta);
    cfg.t = std::move(t);
    cfg.fock_cap = fock_cap;
    validate(cfg);
    return cfg;
}

void validate(const LatticeConfig& cfg) {
    if (cfg.sites < 1) throw StructuralError("lattice needs at least one site");
    if (!cfg.table) throw StructuralError("lattice config has no variable table");
    if (cfg.fock_cap < 1) throw StructuralError("occupation cap must be positive");
    if (cfg.t_mode == TMode::MinusOne) {
        if (cfg.fock_cap != 1)
            throw StructuralError("t = -1 sites are hard-core (cap 1)");
        if (!is_minus_one_constant(cfg.t))
            throw StructuralError("t must be the constant -1 in MinusOne mode");
    } else {
        if (cfg.norm != Normalization::Original)
            throw StructuralError("tilde/z normalizations are defined only at t = -1");
    }
    if (cfg.norm != Normalization::Original && !cfg.inhom.empty())
        throw StructuralError("tilde/z normalizations are homogeneous only");
    if (!cfg.inhom.empty() && static_cast<int>(cfg.inhom.size()) != cfg.sites)
        throw StructuralError("inhomogeneity count must match the site count");
    if (cfg.cleared_rows && cfg.inhom.empty())
        throw StructuralError("cleared rows need inhomogeneities");
    for (const Polynomial& w : cfg.inhom) {
        if (w.is_zero()) throw StructuralError("zero inhomogeneity");
        if (w.is_constant()) continue;
        if (!cfg.cleared_rows)
            throw StructuralError("formal inhomogeneities require cleared rows");
    }
}

StateVector::StateVector(VarTablePtr table) : table_(std::move(table)) {}

StateVector StateVector::vacuum(const LatticeConfig& cfg) {
    StateVector sv(cfg.table);
    sv.add(BasisState(static_cast<std::size_t>(cfg.sites), 0), poly_one(cfg.table));
    return sv;
}

StateVector StateVector::basis(const LatticeConfig& cfg, const BasisState& s) {
    if (static_cast<int>(s.size()) != cfg.sites)
        throw StructuralError("basis state size does not match the site count");
    for (int n : s) {
        if (n < 0 || n > cfg.fock_cap)
            throw StructuralError("basis state occupation outside the cap");
    }
    StateVector sv(cfg.table);
    sv.add(s, poly_one(cfg.table));
    return sv;
}

Polynomial StateVector::amplitude(const BasisState& s) const {
    auto it = amps_.find(s);
    return it == amps_.end() ? Polynomial::zero(table_) : it->second;
}

void StateVector::add(const BasisState& s, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = amps_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) amps_.erase(it);
    }
}

StateVector StateVector::scaled(const Polynomial& c) const {
    StateVector out(table_);
    if (c.is_zero()) return out;
    for (const auto& [s, a] : amps_) out.add(s, a * c);
    return out;
}

StateVector StateVector::operator+(const StateVector& other) const {
    StateVector out = *this;
    for (const auto& [s, a] : other.amps_) out.add(s, a);
    return out;
}

StateVector StateVector::operator-(const StateVector& other) const {
    StateVector out = *this;
    for (const auto& [s, a] : other.amps_) out.add(s, -a);
    return out;
}

namespace {

// Local weight for the transition (aux_in, n_in) -> (aux_out, n_out) at a
// site carrying the inhomogeneity w.  In plain mode w must be a nonzero
// constant and the spectral argument becomes spectral/w; in cleared mode
// the whole entry is additionally multiplied by w, which keeps formal w
// polynomial.  A null w means the homogeneous w = 1.
Polynomial site_weight(const LatticeConfig& cfg, const Polynomial& spectral,
                       const Polynomial* w, int n_in, int n_out,
                       int aux_in, int aux_out) {
    const VarTablePtr& table = cfg.table;
    Polynomial zero = Polynomial::zero(table);
    int kind;  // 0 = stay(aux 0), 1 = pickup, 2 = deposit, 3 = pass(aux 1)
    if (aux_in == 0 && aux_out == 0 && n_out == n_in) kind = 0;
    else if (aux_in == 0 && aux_out == 1 && n_out == n_in - 1) kind = 1;
    else if (aux_in == 1 && aux_out == 0 && n_out == n_in + 1) kind = 2;
    else if (aux_in == 1 && aux_out == 1 && n_out == n_in) kind = 3;
    else return zero;

    if (cfg.norm != Normalization::Original) {
        // Tilde numerators (ZForm shares them; see the enum notes).
        const Polynomial& z = spectral;
        Polynomial one = poly_one(table);
        switch (kind) {
            case 0: return n_in == 0 ? one : one + (cfg.beta * z).scaled(Rational(2));
            case 1: return one + cfg.beta * z;
            case 2: return z.scaled(Rational(2));
            case 3: return z;
        }
    }

    bool cleared = cfg.cleared_rows && w != nullptr;
    Polynomial arg = spectral;
    Polynomial unit = poly_one(table);
    if (w != nullptr && !cleared) {
        Rational wv = w->constant_value();
        if (wv == 0) throw StructuralError("zero inhomogeneity");
        arg = spectral.scaled(Rational(1) / wv);
    }
    if (cleared) unit = *w;

    switch (kind) {
        case 0:  // 1 - beta * (v/w) * t^n, times w when cleared
            return unit - cfg.beta * (cleared ? spectral : arg) * cfg.t.pow(static_cast<unsigned>(n_in));
        case 1:
            return unit;
        case 2: {
            Polynomial tpow = cfg.t.pow(static_cast<unsigned>(n_in) + 1);
            return (cleared ? spectral : arg) * (poly_one(table) - tpow);
        }
        case 3:
            return cleared ? spectral : arg;
    }
    return zero;
}

} // namespace

Polynomial l_entry(const LatticeConfig& cfg, const Polynomial& spectral,
                   int n_in, int n_out, int aux_in, int aux_out) {
    validate(cfg);
    if (n_in < 0 || n_in > cfg.fock_cap || n_out < 0 || n_out > cfg.fock_cap)
        throw StructuralError("occupation outside the cap");
    if (aux_in < 0 || aux_in > 1 || aux_out < 0 || aux_out > 1)
        throw StructuralError("auxiliary index must be 0 or 1");
    return site_weight(cfg, spectral, nullptr, n_in, n_out, aux_in, aux_out);
}

StateVector apply_row(const LatticeConfig& cfg, RowKind kind,
                      const Polynomial& spectral, const StateVector& in) {
    validate(cfg);
    const int M = cfg.sites;
    const int aux_enter = (kind == RowKind::B || kind == RowKind::D) ? 1 : 0;
    const int aux_exit = (kind == RowKind::C || kind == RowKind::D) ? 1 : 0;

    StateVector out(cfg.table);
    BasisState occ;
    std::function<void(int, int, const Polynomial&)> walk =
        [&](int site, int aux, const Polynomial& weight) {
            if (site == M) {
                if (aux == aux_exit) out.add(occ, weight);
                return;
            }
            // 1-based site j = site+1 carries w_{M-site} = inhom[M-1-site].
            const Polynomial* w =
                cfg.inhom.empty() ? nullptr : &cfg.inhom[static_cast<std::size_t>(M - 1 - site)];
            const int n = occ[static_cast<std::size_t>(site)];
            auto branch = [&](int n_next, int aux_next) {
                Polynomial step = site_weight(cfg, spectral, w, n, n_next, aux, aux_next);
                if (step.is_zero()) return;
                if (n_next > cfg.fock_cap) {
                    if (cfg.t_mode == TMode::Generic)
                        throw StructuralError("occupation cap exceeded; raise fock_cap");
                    return;  // unreachable at t = -1: the weight vanished above
                }
                occ[static_cast<std::size_t>(site)] = n_next;
                walk(site + 1, aux_next, weight * step);
                occ[static_cast<std::size_t>(site)] = n;
            };
            if (aux == 0) {
                branch(n, 0);
                if (n >= 1) branch(n - 1, 1);
            } else {
                branch(n + 1, 0);
                branch(n, 1);
            }
        };

    for (const auto& [state, amp] : in.amplitudes()) {
        if (static_cast<int>(state.size()) != M)
            throw StructuralError("state size does not match the site count");
        occ = state;
        walk(0, aux_enter, amp);
    }
    return out;
}

Polynomial wavefunction(const LatticeConfig& cfg, const OccupationVector& occ,
                        const std::vector<Polynomial>& spectrals) {
    validate(cfg);
    require_sites(cfg, occ, "occupation");
    StateVector state = StateVector::vacuum(cfg);
    for (const Polynomial& s : spectrals)
        state = apply_row(cfg, RowKind::B, s, state);
    return state.amplitude(occ.counts);
}

Polynomial wavefunction_closed(const LatticeConfig& cfg, const OccupationVector& occ,
                               const std::vector<Polynomial>& zs) {
    validate(cfg);
    if (cfg.norm != Normalization::Tilde)
        throw StructuralError("the closed wavefunction form is stated in tilde normalization");
    require_sites(cfg, occ, "occupation");
    StrictPartition x = occupation_to_strict(occ);
    const int N = x.size();
    if (static_cast<int>(zs.size()) != N)
        throw StructuralError("need one spectral variable per particle");
    Polynomial result = Polynomial::constant(cfg.table, rational_pow(Rational(2), static_cast<unsigned>(N)));
    for (const Polynomial& z : zs) result *= z;
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= zs[j] + zs[k] + (cfg.beta * zs[j] * zs[k]).scaled(Rational(2));
    if (N > 0) result *= schur_bialternant_in(lambda_of_x(x, N), zs);
    return result;
}

Polynomial dual_wavefunction(const LatticeConfig& cfg, const OccupationVector& occ,
                             const std::vector<Polynomial>& spectrals) {
    validate(cfg);
    require_sites(cfg, occ, "occupation");
    StateVector state = StateVector::basis(cfg, occ.counts);
    for (const Polynomial& s : spectrals)
        state = apply_row(cfg, RowKind::C, s, state);
    return state.amplitude(BasisState(static_cast<std::size_t>(cfg.sites), 0));
}

Polynomial dual_wavefunction_closed(const LatticeConfig& cfg, const OccupationVector& occ,
                                    const std::vector<Polynomial>& zs) {
    validate(cfg);
    if (cfg.norm != Normalization::Tilde)
        throw StructuralError("the closed dual form is stated in tilde normalization");
    require_sites(cfg, occ, "occupation");
    StrictPartition x = occupation_to_strict(occ);
    const int N = x.size();
    if (static_cast<int>(zs.size()) != N)
        throw StructuralError("need one spectral variable per particle");
    Polynomial result = poly_one(cfg.table);
    for (const Polynomial& z : zs) result *= poly_one(cfg.table) + cfg.beta * z;
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= zs[j] + zs[k] + (cfg.beta * zs[j] * zs[k]).scaled(Rational(2));
    if (N > 0) {
        Partition dual = poincare_dual(lambda_of_x(x, N), cfg.sites, N);
        result *= schur_bialternant_in(dual, zs);
    }
    return result;
}

Rational dual_wavefunction_closed_value(int sites, const OccupationVector& occ,
                                        const std::vector<Rational>& vs,
                                        const Rational& beta) {
    StrictPartition x = occupation_to_strict(occ);
    const int N = x.size();
    if (static_cast<int>(vs.size()) != N)
        throw StructuralError("need one spectral value per particle");
    std::vector<Rational> zs;
    zs.reserve(vs.size());
    for (const Rational& v : vs) {
        Rational den = Rational(1) - beta * v;
        if (den == 0) throw StructuralError("evaluation point collision: 1 - beta*v = 0");
        zs.push_back(v / den);
    }
    Rational result(1);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= zs[static_cast<std::size_t>(j)] + zs[static_cast<std::size_t>(k)] +
                      Rational(2) * beta * zs[static_cast<std::size_t>(j)] * zs[static_cast<std::size_t>(k)];
    for (const Rational& z : zs) {
        Rational f = Rational(1) + beta * z;
        if (f == 0) throw StructuralError("evaluation point collision: 1 + beta*z = 0");
        result /= rational_pow(f, static_cast<unsigned>(sites - 1));
    }
    if (N > 0) {
        VarTablePtr trivial = VarTable::make({});
        std::vector<Polynomial> zvals;
        for (const Rational& z : zs) zvals.push_back(Polynomial::constant(trivial, z));
        Partition dual = poincare_dual(lambda_of_x(x, N), sites, N);
        result *= schur_bialternant_in(dual, zvals).constant_value();
    }
    return result;
}

Polynomial matrix_element_b(const LatticeConfig& cfg, const OccupationVector& m,
                            const OccupationVector& n, const Polynomial& spectral) {
    validate(cfg);
    require_sites(cfg, m, "bra occupation");
    require_sites(cfg, n, "ket occupation");
    StateVector out = apply_row(cfg, RowKind::B, spectral, StateVector::basis(cfg, n.counts));
    return out.amplitude(m.counts);
}

Polynomial matrix_element_c(const LatticeConfig& cfg, const OccupationVector& n,
                            const OccupationVector& m, const Polynomial& spectral) {
    validate(cfg);
    require_sites(cfg, n, "bra occupation");
    require_sites(cfg, m, "ket occupation");
    StateVector out = apply_row(cfg, RowKind::C, spectral, StateVector::basis(cfg, m.counts));
    return out.amplitude(n.counts);
}

Polynomial matrix_element_b_closed_generic(const LatticeConfig& cfg,
                                           const OccupationVector& m,
                                           const OccupationVector& n,
                                           const Polynomial& spectral) {
    validate(cfg);
    if (cfg.norm != Normalization::Original || !cfg.inhom.empty())
        throw StructuralError("the generic closed form is stated for the homogeneous original normalization");
    require_sites(cfg, m, "bra occupation");
    require_sites(cfg, n, "ket occupation");
    if (!admissible(m, n)) return Polynomial::zero(cfg.table);

    const int M = cfg.sites;
    std::vector<int> deposits, pickups;  // 1-based sites
    for (int j = 1; j <= M; ++j) {
        int d = m.counts[static_cast<std::size_t>(j - 1)] - n.counts[static_cast<std::size_t>(j - 1)];
        if (d == 1) deposits.push_back(j);
        else if (d == -1) pickups.push_back(j);
    }
    long exponent = 0;
    for (int p : deposits) exponent += p;
    for (int q : pickups) exponent -= q;
    Polynomial result = spectral.pow(static_cast<unsigned>(exponent));
    Polynomial one = poly_one(cfg.table);
    for (int p : deposits) {
        int occ = n.counts[static_cast<std::size_t>(p - 1)];
        result *= one - cfg.t.pow(static_cast<unsigned>(occ) + 1);
    }
    std::vector<int> ends = pickups;
    ends.push_back(M + 1);  // sentinel closing the last stretch
    for (std::size_t j = 0; j < deposits.size(); ++j) {
        for (int k = deposits[j] + 1; k < ends[j]; ++k) {
            int occ = n.counts[static_cast<std::size_t>(k - 1)];
            result *= one - cfg.beta * spectral * cfg.t.pow(static_cast<unsigned>(occ));
        }
    }
    return result;
}

namespace {

Polynomial delta_product(const LatticeConfig& cfg, const Polynomial& z,
                         const StrictPartition& lower, const StrictPartition& upper) {
    // prod_j (1 + 2bz) over positions where lower_j != upper_{j+1}.
    Polynomial result = poly_one(cfg.table);
    Polynomial bump = poly_one(cfg.table) + (cfg.beta * z).scaled(Rational(2));
    for (int j = 1; j <= lower.size(); ++j)
        if (lower.part(j) != upper.part(j + 1)) result *= bump;
    return result;
}

} // namespace

ClearedIdentity matrix_element_b_cleared(const LatticeConfig& cfg,
                                         const OccupationVector& m,
                                         const OccupationVector& n,
                                         const Polynomial& z) {
    validate(cfg);
    if (cfg.norm != Normalization::Tilde)
        throw StructuralError("the cleared B identity is stated in tilde normalization");
    if (!admissible(m, n))
        return ClearedIdentity{Polynomial::zero(cfg.table), Polynomial::zero(cfg.table)};
    StrictPartition y = occupation_to_strict(m);
    StrictPartition x = occupation_to_strict(n);
    const int fresh = new_parts_count(y, x);  // >= 1: a B row always adds a part
    Polynomial one = poly_one(cfg.table);
    Polynomial bump = one + (cfg.beta * z).scaled(Rational(2));
    Polynomial lhs = matrix_element_b(cfg, m, n, z) * bump.pow(static_cast<unsigned>(fresh - 1));
    Polynomial rhs =
        Polynomial::constant(cfg.table, rational_pow(Rational(2), static_cast<unsigned>(fresh))) *
        (one + cfg.beta * z).pow(static_cast<unsigned>(fresh - 1)) *
        z.pow(static_cast<unsigned>(y.sum() - x.sum())) * delta_product(cfg, z, x, y);
    return ClearedIdentity{lhs, rhs};
}

ClearedIdentity matrix_element_c_cleared(const LatticeConfig& cfg,
                                         const OccupationVector& n,
                                         const OccupationVector& m,
                                         const Polynomial& z) {
    validate(cfg);
    if (cfg.norm != Normalization::Tilde)
        throw StructuralError("the cleared C identity is stated in tilde normalization");
    if (!admissible(m, n))
        return ClearedIdentity{Polynomial::zero(cfg.table), Polynomial::zero(cfg.table)};
    StrictPartition xv = complement_strict(occupation_to_strict(n), cfg.sites);
    StrictPartition yv = complement_strict(occupation_to_strict(m), cfg.sites);
    const int fresh = new_parts_count(yv, xv);  // >= 1 as above
    Polynomial one = poly_one(cfg.table);
    Polynomial bump = one + (cfg.beta * z).scaled(Rational(2));
    Polynomial lhs = matrix_element_c(cfg, n, m, z) * z * bump.pow(static_cast<unsigned>(fresh - 1));
    Polynomial rhs =
        Polynomial::constant(cfg.table, rational_pow(Rational(2), static_cast<unsigned>(fresh - 1))) *
        (one + cfg.beta * z).pow(static_cast<unsigned>(fresh)) *
        z.pow(static_cast<unsigned>(yv.sum() - xv.sum())) * delta_product(cfg, z, xv, yv);
    return ClearedIdentity{lhs, rhs};
}

Polynomial scalar_product_direct(const LatticeConfig& cfg,
                                 const std::vector<Polynomial>& us,
                                 const std::vector<Polynomial>& vs) {
    validate(cfg);
    StateVector state = StateVector::vacuum(cfg);
    for (const Polynomial& v : vs) state = apply_row(cfg, RowKind::B, v, state);
    for (const Polynomial& u : us) state = apply_row(cfg, RowKind::C, u, state);
    return state.amplitude(BasisState(static_cast<std::size_t>(cfg.sites), 0));
}

ClearedIdentity scalar_product_sides(const LatticeConfig& cfg,
                                     const std::vector<Polynomial>& us,
                                     const std::vector<Polynomial>& vs) {
    validate(cfg);
    if (cfg.norm != Normalization::Original || !cfg.inhom.empty())
        throw StructuralError("the determinant identity is stated for the homogeneous original normalization");
    if (us.size() != vs.size())
        throw StructuralError("scalar product needs as many C rows as B rows");
    const int N = static_cast<int>(us.size());
    const unsigned M = static_cast<unsigned>(cfg.sites);
    const VarTablePtr& table = cfg.table;
    Polynomial one = poly_one(table);

    Polynomial lhs = scalar_product_direct(cfg, us, vs);
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            lhs *= (us[j] - us[k]) * (vs[k] - vs[j]);

    Polynomial rhs = one;
    for (const Polynomial& v : vs) rhs *= v.scaled(Rational(2));
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            rhs *= (us[j] + us[k]) * (vs[j] + vs[k]);

    std::vector<Polynomial> au, du, av, dv;
    for (const Polynomial& u : us) {
        au.push_back((one - cfg.beta * u).pow(M));
        du.push_back(u.pow(M));
    }
    for (const Polynomial& v : vs) {
        av.push_back((one - cfg.beta * v).pow(M));
        dv.push_back(v.pow(M));
    }
    PolyMatrix q(N, N, table);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            q.at(j, k) = exact_div(au[j] * dv[k] - du[j] * av[k], vs[k] - us[j]);
    rhs *= q.det_bareiss();
    return ClearedIdentity{lhs, rhs};
}

Rational bethe_a_value(const Rational& v, const Rational& beta,
                       const std::vector<Rational>& ws) {
    Rational result(1);
    for (const Rational& w : ws) {
        if (w == 0) throw StructuralError("zero inhomogeneity");
        result *= Rational(1) - beta * v / w;
    }
    return result;
}

Rational bethe_d_value(const Rational& v, const std::vector<Rational>& ws) {
    Rational result(1);
    for (const Rational& w : ws) {
        if (w == 0) throw StructuralError("zero inhomogeneity");
        result *= v / w;
    }
    return result;
}

namespace {

LatticeConfig rational_chain(int sites, const VarTablePtr& table, const Rational& beta,
                             const std::vector<Rational>& ws) {
    LatticeConfig cfg = make_six_vertex(sites, table, Polynomial::constant(table, beta));
    if (!ws.empty()) {
        if (static_cast<int>(ws.size()) != sites)
            throw StructuralError("inhomogeneity count must match the site count");
        for (const Rational& w : ws)
            cfg.inhom.push_back(Polynomial::constant(table, w));
    }
    validate(cfg);
    return cfg;
}

} // namespace

Rational intermediate_scalar_direct(int sites, const std::vector<Rational>& us,
                                    const std::vector<Rational>& vs,
                                    const std::vector<Rational>& ws,
                                    const Rational& beta) {
    const int n = static_cast<int>(us.size());
    const int N = static_cast<int>(vs.size());
    if (n > N || N > sites)
        throw StructuralError("need 0 <= #C rows <= #B rows <= sites");
    VarTablePtr trivial = VarTable::make({});
    LatticeConfig cfg = rational_chain(sites, trivial, beta, ws);
    StateVector state = StateVector::vacuum(cfg);
    for (const Rational& v : vs)
        state = apply_row(cfg, RowKind::B, Polynomial::constant(trivial, v), state);
    for (const Rational& u : us)
        state = apply_row(cfg, RowKind::C, Polynomial::constant(trivial, u), state);
    BasisState boundary(static_cast<std::size_t>(sites), 0);
    for (int j = 0; j < N - n; ++j) boundary[static_cast<std::size_t>(j)] = 1;
    return state.amplitude(boundary).constant_value();
}

Rational intermediate_scalar_determinant(int sites, const std::vector<Rational>& us,
                                         const std::vector<Rational>& vs,
                                         const std::vector<Rational>& ws,
                                         const Rational& beta) {
    const int n = static_cast<int>(us.size());
    const int N = static_cast<int>(vs.size());
    const int M = sites;
    if (n > N || N > M) throw StructuralError("need 0 <= #C rows <= #B rows <= sites");
    if (static_cast<int>(ws.size()) != M)
        throw StructuralError("the determinant form needs all inhomogeneities");
    auto collide = [](const char* what) -> Rational {
        throw StructuralError(std::string("evaluation point collision: ") + what);
    };
    for (const Rational& w : ws)
        if (w == 0) collide("w = 0");

    Rational pref(1);
    for (const Rational& v : vs) pref *= Rational(2) * v;
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k) {
            Rational d = vs[static_cast<std::size_t>(k)] - vs[static_cast<std::size_t>(j)];
            if (d == 0) collide("v_j = v_k");
            pref *= (vs[static_cast<std::size_t>(j)] + vs[static_cast<std::size_t>(k)]) / d;
        }
    for (int j = M - N + n + 1; j <= M; ++j)
        for (int k = j + 1; k <= M; ++k) {
            if (beta == 0) collide("beta = 0 with a frozen tail");
            Rational d = Rational(1) - ws[static_cast<std::size_t>(k - 1)] / ws[static_cast<std::size_t>(j - 1)];
            if (d == 0) collide("w_j = w_k in the frozen tail");
            pref /= beta * d;
        }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            Rational d = us[static_cast<std::size_t>(j)] - us[static_cast<std::size_t>(k)];
            if (d == 0) collide("u_j = u_k");
            pref *= (us[static_cast<std::size_t>(j)] + us[static_cast<std::size_t>(k)]) / d;
        }

    VarTablePtr trivial = VarTable::make({});
    PolyMatrix q(N, N, trivial);
    for (int j = 1; j <= N; ++j) {
        for (int k = 1; k <= N; ++k) {
            Rational entry;
            if (j <= n) {
                const Rational& u = us[static_cast<std::size_t>(j - 1)];
                const Rational& v = vs[static_cast<std::size_t>(k - 1)];
                Rational factor(1);
                for (int l = M - N + n + 1; l <= M; ++l) {
                    const Rational& w = ws[static_cast<std::size_t>(l - 1)];
                    Rational den = beta * u - w;
                    if (den == 0) collide("beta*u_j = w_l");
                    factor *= (beta * u + w) / den;
                }
                Rational den = v - u;
                if (den == 0) collide("v_k = u_j");
                entry = factor *
                        (bethe_a_value(u, beta, ws) * bethe_d_value(v, ws) -
                         bethe_a_value(v, beta, ws) * bethe_d_value(u, ws)) / den;
            } else {
                const Rational& v = vs[static_cast<std::size_t>(k - 1)];
                const Rational& wrow = ws[static_cast<std::size_t>(M - N + j - 1)];
                Rational prod = Rational(1) / wrow;
                for (int l = 1; l <= M; ++l) {
                    if (l == M - N + j) continue;
                    prod *= Rational(1) - beta * v / ws[static_cast<std::size_t>(l - 1)];
                }
                entry = prod;
            }
            q.at(j - 1, k - 1) = Polynomial::constant(trivial, entry);
        }
    }
    return pref * q.det_bareiss().constant_value();
}

Rational intermediate_scalar_initial(int sites, const std::vector<Rational>& vs,
                                     const std::vector<Rational>& ws,
                                     const Rational& beta) {
    const int N = static_cast<int>(vs.size());
    const int M = sites;
    if (N > M) throw StructuralError("more B rows than sites");
    if (static_cast<int>(ws.size()) != M)
        throw StructuralError("the closed form needs all inhomogeneities");
    for (const Rational& w : ws)
        if (w == 0) throw StructuralError("zero inhomogeneity");
    Rational result(1);
    for (int j = 1; j <= N; ++j)
        result *= Rational(2) * vs[static_cast<std::size_t>(j - 1)] /
                  rational_pow(ws[static_cast<std::size_t>(M - N + j - 1)], static_cast<unsigned>(j));
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= vs[static_cast<std::size_t>(j)] + vs[static_cast<std::size_t>(k)];
    for (int j = 0; j < N; ++j)
        for (int k = 1; k <= M - N; ++k)
            result *= Rational(1) - beta * vs[static_cast<std::size_t>(j)] / ws[static_cast<std::size_t>(k - 1)];
    return result;
}

namespace {

Polynomial dwbpf_contract(const LatticeConfig& cfg, const std::vector<Polynomial>& vs) {
    StateVector state = StateVector::vacuum(cfg);
    for (const Polynomial& v : vs) state = apply_row(cfg, RowKind::B, v, state);
    return state.amplitude(BasisState(static_cast<std::size_t>(cfg.sites), 1));
}

} // namespace

Polynomial dwbpf(const std::vector<Polynomial>& vs, const std::vector<Rational>& ws,
                 const Polynomial& beta, DwbpfMode mode) {
    const int N = static_cast<int>(vs.size());
    if (N == 0) throw StructuralError("the partition function needs at least one row");
    if (!ws.empty() && static_cast<int>(ws.size()) != N)
        throw StructuralError("need one inhomogeneity per site");
    const VarTablePtr& table = beta.table();
    if (mode == DwbpfMode::Direct) {
        LatticeConfig cfg = rational_chain(N, table, Rational(0), {});
        cfg.beta = beta;
        if (!ws.empty())
            for (const Rational& w : ws) cfg.inhom.push_back(Polynomial::constant(table, w));
        validate(cfg);
        return dwbpf_contract(cfg, vs);
    }
    Polynomial result = poly_one(table);
    for (int j = 1; j <= N; ++j) {
        Rational w = ws.empty() ? Rational(1) : ws[static_cast<std::size_t>(j - 1)];
        if (w == 0) throw StructuralError("zero inhomogeneity");
        result *= vs[static_cast<std::size_t>(j - 1)].scaled(Rational(2) / rational_pow(w, static_cast<unsigned>(j)));
    }
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= vs[static_cast<std::size_t>(j)] + vs[static_cast<std::size_t>(k)];
    return result;
}

Polynomial dwbpf_cleared(const std::vector<Polynomial>& vs,
                         const std::vector<Polynomial>& ws,
                         const Polynomial& beta, DwbpfMode mode) {
    const int N = static_cast<int>(vs.size());
    if (N == 0) throw StructuralError("the partition function needs at least one row");
    if (static_cast<int>(ws.size()) != N)
        throw StructuralError("need one inhomogeneity per site");
    const VarTablePtr& table = beta.table();
    if (mode == DwbpfMode::Direct) {
        LatticeConfig cfg = rational_chain(N, table, Rational(0), {});
        cfg.beta = beta;
        cfg.inhom = ws;
        cfg.cleared_rows = true;
        validate(cfg);
        return dwbpf_contract(cfg, vs);
    }
    Polynomial result = poly_one(table);
    for (int j = 1; j <= N; ++j) {
        result *= vs[static_cast<std::size_t>(j - 1)].scaled(Rational(2));
        result *= ws[static_cast<std::size_t>(j - 1)].pow(static_cast<unsigned>(N - j));
    }
    for (int j = 0; j < N; ++j)
        for (int k = j + 1; k < N; ++k)
            result *= vs[static_cast<std::size_t>(j)] + vs[static_cast<std::size_t>(k)];
    return result;
}

bool check_eigenstate(int sites, const std::vector<Rational>& roots,
                      const Rational& beta) {
    const int N = static_cast<int>(roots.size());
    const Rational target = (N % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{N+1}
    for (const Rational& v : roots) {
        if (v == 0) throw StructuralError("zero is not a valid root");
        Rational residual = rational_pow(Rational(1) / v - beta, static_cast<unsigned>(sites)) - target;
        if (residual != 0) {
            std::ostringstream os;
            os << "roots fail the on-shell condition: residual " << rational_to_string(residual)
               << " at v = " << rational_to_string(v);
            throw StructuralError(os.str());
        }
    }
    VarTablePtr table = VarTable::make({"u"});
    Polynomial u = Polynomial::variable(table, "u");
    Polynomial one = poly_one(table);
    LatticeConfig cfg = make_six_vertex(sites, table, Polynomial::constant(table, beta));

    StateVector psi = StateVector::vacuum(cfg);
    for (const Rational& v : roots)
        psi = apply_row(cfg, RowKind::B, Polynomial::constant(table, v), psi);

    StateVector tau = apply_row(cfg, RowKind::A, u, psi) + apply_row(cfg, RowKind::D, u, psi);
    Polynomial clear = one;
    Polynomial shifted = one;
    for (const Rational& v : roots) {
        clear *= u - Polynomial::constant(table, v);
        shifted *= u + Polynomial::constant(table, v);
    }
    Rational sign = (N % 2 == 0) ? Rational(1) : Rational(-1);
    Polynomial eigen =
        ((one - cfg.beta * u).pow(static_cast<unsigned>(sites)).scaled(sign) +
         u.pow(static_cast<unsigned>(sites))) * shifted;
    return tau.scaled(clear) == psi.scaled(eigen);
}

} // namespace sixv
