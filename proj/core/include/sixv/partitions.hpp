#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sixv/errors.hpp"

namespace sixv {

// Weakly decreasing non-negative parts.  Trailing zeros are allowed and
// carry no meaning; equality ignores them.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const { return static_cast<int>(parts.size()); }
    // 1-based, zero beyond the stored length.
    int part(int j) const;
    long sum() const;
    Partition trimmed() const;
    Partition padded(int n) const;
    bool fits_box(int rows, int cols) const;
    bool operator==(const Partition& other) const;

    // Comma-separated parts, e.g. "3,1"; empty partition is "".
    std::string to_string() const;
    static Partition parse(std::string_view text);
};

// Strictly decreasing positive parts; possibly empty.
struct StrictPartition {
    std::vector<int> parts;

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p);

    int size() const { return static_cast<int>(parts.size()); }
    // 1-based, zero beyond the stored length.
    int part(int j) const;
    long sum() const;
    bool operator==(const StrictPartition& other) const { return parts == other.parts; }
    bool operator<(const StrictPartition& other) const { return parts < other.parts; }

    std::string to_string() const;
};

// Per-site particle counts n_1..n_M.
struct OccupationVector {
    std::vector<int> counts;

    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> c);

    int sites() const { return static_cast<int>(counts.size()); }
    int particles() const;
    bool is_strict() const;
    bool operator==(const OccupationVector& other) const { return counts == other.counts; }

    std::string to_string() const;
};

// Site indices j with count 1, in decreasing order.  NotStrictSector if
// any count exceeds 1.
StrictPartition occupation_to_strict(const OccupationVector& occ);
OccupationVector strict_to_occupation(const StrictPartition& x, int sites);

// y_j >= x_j >= y_{j+1} for all j; requires |y| = |x| + 1.
bool interlaces(const StrictPartition& y, const StrictPartition& x);

// Right-tail partial sums of m - n all lie in {0,1}.  Requires equal site
// counts and particles(m) = particles(n) + 1.  On 0/1 occupations this
// agrees with interlaces() on the corresponding strict partitions.
bool admissible(const OccupationVector& m, const OccupationVector& n);

// Count of parts of y absent from x (as sets).
int new_parts_count(const StrictPartition& y, const StrictPartition& x);

// x^(0) = empty, ..., x^(N) = top with x^(k) interlacing x^(k-1).
struct InterlacingChain {
    std::vector<StrictPartition> levels;
};

// Every chain exactly once, ordered lexicographically by the flattened
// tuple (x^(N-1), ..., x^(1)).
std::vector<InterlacingChain> enumerate_chains(const StrictPartition& top);

// lambda^dual_j = (M - N) - lambda_{N+1-j}; an involution on the
// (M-N)^N box.
Partition poincare_dual(const Partition& lambda, int sites, int particles);

// lambda_j = x_j - N + j - 1 and its inverse x_j = lambda_j + N - j + 1.
Partition lambda_of_x(const StrictPartition& x, int particles);
StrictPartition x_of_lambda(const Partition& lambda, int particles);

// Reversed complement (M+1)^N / x: part j becomes M + 1 - x_{N+1-j}.
StrictPartition complement_strict(const StrictPartition& x, int sites);

// All partitions with at most `rows` parts, each at most `cols`,
// in ascending lexicographic order of the padded part vectors.
std::vector<Partition> partitions_in_box(int rows, int cols);

// All 0/1 occupations with the given number of sites and particles,
// in ascending lexicographic order of the count vectors.
std::vector<OccupationVector> strict_occupations(int sites, int particles);

} // namespace sixv
