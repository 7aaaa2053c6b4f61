#include "sixv/schur.hpp"

#include <algorithm>
#include <numeric>

#include "sixv/poly_matrix.hpp"

namespace sixv {

SchurContext SchurContext::make(int nvars) {
    if (nvars < 1)
        throw StructuralError("a Schur context needs at least one variable");
    SchurContext ctx;
    for (int j = 1; j <= nvars; ++j)
        ctx.z_names.push_back("z" + std::to_string(j));
    ctx.beta_name = "beta";
    std::vector<std::string> names = ctx.z_names;
    names.push_back(ctx.beta_name);
    ctx.table = VarTable::make(std::move(names));
    return ctx;
}

SchurContext SchurContext::make(int nvars, const Rational& beta) {
    if (nvars < 1)
        throw StructuralError("a Schur context needs at least one variable");
    SchurContext ctx;
    for (int j = 1; j <= nvars; ++j)
        ctx.z_names.push_back("z" + std::to_string(j));
    ctx.beta_value = beta;
    ctx.table = VarTable::make(ctx.z_names);
    return ctx;
}

Polynomial SchurContext::z(int j) const {
    if (j < 1 || j > nvars())
        throw StructuralError("variable index out of range");
    return Polynomial::variable(table, z_names[static_cast<std::size_t>(j) - 1]);
}

Polynomial SchurContext::beta() const {
    if (beta_formal())
        return Polynomial::variable(table, beta_name);
    return Polynomial::constant(table, beta_value);
}

Polynomial schur_bialternant_in(const Partition& lambda, const std::vector<Polynomial>& vars) {
    int n = static_cast<int>(vars.size());
    if (n == 0)
        throw StructuralError("the bialternant needs at least one variable");
    const VarTablePtr& table = vars.front().table();
    Partition padded = lambda.padded(n);

    PolyMatrix m(n, n, table);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m.at(j, k) = vars[static_cast<std::size_t>(j)].pow(
                static_cast<unsigned>(padded.part(k + 1) + n - (k + 1)));
    Polynomial det = m.det_bareiss();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            det = exact_div(det, vars[static_cast<std::size_t>(j)] - vars[static_cast<std::size_t>(k)]);
    return det;
}

Polynomial schur_bialternant(const Partition& lambda, const SchurContext& ctx) {
    std::vector<Polynomial> vars;
    for (int j = 1; j <= ctx.nvars(); ++j)
        vars.push_back(ctx.z(j));
    return schur_bialternant_in(lambda, vars);
}

std::vector<ChainTerm> combinatorial_chain_terms(const Partition& lambda, const SchurContext& ctx) {
    int n = ctx.nvars();
    StrictPartition top = x_of_lambda(lambda, n);
    std::vector<InterlacingChain> chains = enumerate_chains(top);

    Polynomial one = ctx.constant(1);
    Polynomial beta = ctx.beta();

    std::vector<ChainTerm> terms;
    terms.reserve(chains.size());
    for (const auto& chain : chains) {
        Polynomial num = one;
        for (int k = 1; k <= n; ++k) {
            const StrictPartition& y = chain.levels[static_cast<std::size_t>(k)];
            const StrictPartition& x = chain.levels[static_cast<std::size_t>(k) - 1];
            Polynomial zk = ctx.z(k);
            Polynomial dk = one + ctx.constant(2) * beta * zk;
            long delta = y.sum() - x.sum();
            int fresh = new_parts_count(y, x);

            num *= zk.pow(static_cast<unsigned>(delta - 1));
            num *= ctx.constant(rational_pow(Rational(2), static_cast<unsigned>(fresh - 1)));
            num *= (one + beta * zk).pow(static_cast<unsigned>(fresh - 1));
            for (int j = 1; j <= k - 1; ++j)
                if (x.part(j) != y.part(j + 1))
                    num *= dk;
            // Lift to the common denominator prod_k dk^(n-1).
            num *= dk.pow(static_cast<unsigned>(n - fresh));
        }
        terms.push_back(ChainTerm{chain, std::move(num)});
    }
    return terms;
}

Polynomial schur_combinatorial(const Partition& lambda, const SchurContext& ctx) {
    int n = ctx.nvars();
    Partition padded = lambda.padded(n);

    Polynomial one = ctx.constant(1);
    Polynomial beta = ctx.beta();

    Polynomial sum(ctx.table);
    for (auto& term : combinatorial_chain_terms(padded, ctx))
        sum += term.numerator;

    for (int k = 1; k <= n; ++k) {
        Polynomial dk = one + ctx.constant(2) * beta * ctx.z(k);
        sum = exact_div(sum, dk.pow(static_cast<unsigned>(n - 1)));
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            Polynomial pair = ctx.z(j) + ctx.z(k) + ctx.constant(2) * beta * ctx.z(j) * ctx.z(k);
            sum = exact_div(sum, pair);
        }
    }
    return sum;
}

namespace {

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inversions;
    return inversions % 2;
}

} // namespace

Polynomial schur_q(const StrictPartition& x, const SchurContext& ctx) {
    int n = ctx.nvars();
    if (x.size() != n)
        throw StructuralError("schur_q needs a strict partition with exactly N parts");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    Polynomial acc(ctx.table);
    do {
        Polynomial term = ctx.constant(permutation_parity(perm) == 0 ? 1 : -1);
        for (int j = 0; j < n; ++j)
            term *= ctx.z(perm[static_cast<std::size_t>(j)] + 1)
                        .pow(static_cast<unsigned>(x.part(j + 1)));
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                term *= ctx.z(perm[static_cast<std::size_t>(j)] + 1) +
                        ctx.z(perm[static_cast<std::size_t>(k)] + 1);
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            acc = exact_div(acc, ctx.z(j) - ctx.z(k));
    return acc.scaled(rational_pow(Rational(2), static_cast<unsigned>(n)));
}

Polynomial skew_q_single(const StrictPartition& y, const StrictPartition& x, const Polynomial& z) {
    if (y.size() != x.size() + 1)
        throw StructuralError("skew Q needs |y| = |x| + 1");
    if (!interlaces(y, x))
        return Polynomial(z.table());
    int fresh = new_parts_count(y, x);
    long delta = y.sum() - x.sum();
    return z.pow(static_cast<unsigned>(delta)).scaled(rational_pow(Rational(2), static_cast<unsigned>(fresh)));
}

CauchySides cauchy_sides(int sites, int particles, CauchyIndexing indexing) {
    int m = sites;
    int n = particles;
    if (n < 1 || n > m)
        throw StructuralError("cauchy_sides needs 1 <= N <= M");

    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j)
        names.push_back("z" + std::to_string(j));
    for (int j = 1; j <= n; ++j)
        names.push_back("y" + std::to_string(j));
    VarTablePtr table = VarTable::make(std::move(names));

    std::vector<Polynomial> zs, ys;
    for (int j = 1; j <= n; ++j) {
        zs.push_back(Polynomial::variable(table, "z" + std::to_string(j)));
        ys.push_back(Polynomial::variable(table, "y" + std::to_string(j)));
    }

    Polynomial lhs(table);
    for (const Partition& lambda : partitions_in_box(n, m - n)) {
        Partition dual = poincare_dual(lambda, m, n);
        lhs += schur_bialternant_in(lambda, zs) * schur_bialternant_in(dual, ys);
    }

    Polynomial clearing = Polynomial::constant(table, 1);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            clearing *= (zs[static_cast<std::size_t>(j)] - zs[static_cast<std::size_t>(k)]) *
                        (ys[static_cast<std::size_t>(k)] - ys[static_cast<std::size_t>(j)]);

    CauchySides out{lhs * clearing, Polynomial(table), false};

    PolyMatrix q(n, n, table);
    if (indexing == CauchyIndexing::columns) {
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                q.at(j, k) = exact_div(zs[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(m)) -
                                           ys[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(m)),
                                       zs[static_cast<std::size_t>(j)] - ys[static_cast<std::size_t>(k)]);
        out.rhs_cleared = q.det_bareiss();
    } else {
        // Row-indexed numerator is not divisible by (z_j - y_k); clear the
        // Cauchy kernel with prod_{j,k}(z_j - y_k) on both sides instead.
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Polynomial entry = zs[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(m)) -
                                   ys[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(m));
                for (int k2 = 0; k2 < n; ++k2)
                    if (k2 != k)
                        entry *= zs[static_cast<std::size_t>(j)] - ys[static_cast<std::size_t>(k2)];
                q.at(j, k) = entry;
            }
        }
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.lhs_cleared *= zs[static_cast<std::size_t>(j)] - ys[static_cast<std::size_t>(k)];
        out.rhs_cleared = q.det_bareiss();
    }
    out.equal = out.lhs_cleared == out.rhs_cleared;
    return out;
}

} // namespace sixv
