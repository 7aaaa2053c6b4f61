#include <benchmark/benchmark.h>

#include "sixv/alt_sign.hpp"
#include "sixv/lattice.hpp"
#include "sixv/poly_matrix.hpp"
#include "sixv/schur.hpp"

namespace {

using namespace sixv;

void BM_poly_multiply(benchmark::State& state) {
    VarTablePtr t = VarTable::make({"x", "y", "z"});
    Polynomial s = Polynomial::variable(t, "x") + Polynomial::variable(t, "y") +
                   Polynomial::variable(t, "z") + Polynomial::constant(t, 1);
    Polynomial base = s.pow(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        Polynomial p = base * s;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_poly_multiply)->Arg(4)->Arg(8);

void BM_det_bareiss(benchmark::State& state) {
    VarTablePtr t = VarTable::make({"x", "y"});
    Polynomial x = Polynomial::variable(t, "x");
    Polynomial y = Polynomial::variable(t, "y");
    int n = static_cast<int>(state.range(0));
    PolyMatrix m(n, n, t);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = x.pow(static_cast<unsigned>((i + j) % 3)) + y.scaled(Rational(i - j)) +
                         Polynomial::constant(t, i * j + 1);
    for (auto _ : state) {
        Polynomial d = m.det_bareiss();
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_det_bareiss)->Arg(3)->Arg(5);

void BM_chain_enumeration(benchmark::State& state) {
    StrictPartition top(std::vector<int>{6, 4, 2});
    for (auto _ : state) {
        auto chains = enumerate_chains(top);
        benchmark::DoNotOptimize(chains);
    }
}
BENCHMARK(BM_chain_enumeration);

void BM_schur_combinatorial(benchmark::State& state) {
    SchurContext ctx = SchurContext::make(3);
    Partition lambda(std::vector<int>{3, 2, 1});
    for (auto _ : state) {
        Polynomial p = schur_combinatorial(lambda, ctx);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_schur_combinatorial);

void BM_wavefunction_contraction(benchmark::State& state) {
    VarTablePtr t = VarTable::make({"z1", "z2", "z3", "b"});
    LatticeConfig cfg = make_six_vertex(6, t, Polynomial::variable(t, "b"),
                                        Normalization::Tilde);
    std::vector<Polynomial> zs = {Polynomial::variable(t, "z1"),
                                  Polynomial::variable(t, "z2"),
                                  Polynomial::variable(t, "z3")};
    OccupationVector occ(std::vector<int>{1, 0, 1, 0, 1, 0});
    for (auto _ : state) {
        Polynomial p = wavefunction(cfg, occ, zs);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_wavefunction_contraction);

void BM_asm_enumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto all = enumerate_asm(n);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_asm_enumeration)->Arg(4)->Arg(5);

} // namespace
