#include "sixv/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sixv {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw StructuralError("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw StructuralError("partition parts must be weakly decreasing");
    }
}

int Partition::part(int j) const {
    if (j < 1)
        throw StructuralError("partition parts are 1-indexed");
    return j <= size() ? parts[static_cast<std::size_t>(j) - 1] : 0;
}

long Partition::sum() const {
    long s = 0;
    for (int p : parts)
        s += p;
    return s;
}

Partition Partition::trimmed() const {
    Partition r = *this;
    while (!r.parts.empty() && r.parts.back() == 0)
        r.parts.pop_back();
    return r;
}

Partition Partition::padded(int n) const {
    if (size() > n) {
        Partition t = trimmed();
        if (t.size() > n)
            throw StructuralError("partition has more than " + std::to_string(n) + " parts");
        t.parts.resize(static_cast<std::size_t>(n), 0);
        return t;
    }
    Partition r = *this;
    r.parts.resize(static_cast<std::size_t>(n), 0);
    return r;
}

bool Partition::fits_box(int rows, int cols) const {
    Partition t = trimmed();
    return t.size() <= rows && (t.parts.empty() || t.parts.front() <= cols);
}

bool Partition::operator==(const Partition& other) const {
    return trimmed().parts == other.trimmed().parts;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out << ",";
        out << parts[i];
    }
    return out.str();
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    std::size_t end = text.size();
    while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    if (pos == end)
        return Partition();
    std::string body(text.substr(pos, end - pos));
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw StructuralError("malformed partition text '" + std::string(text) + "'");
        }
    }
    return Partition(std::move(parts));
}

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw StructuralError("strict partition parts must be positive");
        if (i > 0 && parts[i] >= parts[i - 1])
            throw StructuralError("strict partition parts must be strictly decreasing");
    }
}

int StrictPartition::part(int j) const {
    if (j < 1)
        throw StructuralError("partition parts are 1-indexed");
    return j <= size() ? parts[static_cast<std::size_t>(j) - 1] : 0;
}

long StrictPartition::sum() const {
    long s = 0;
    for (int p : parts)
        s += p;
    return s;
}

std::string StrictPartition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out << ",";
        out << parts[i];
    }
    return out.str();
}

OccupationVector::OccupationVector(std::vector<int> c) : counts(std::move(c)) {
    for (int v : counts)
        if (v < 0)
            throw StructuralError("occupation counts must be non-negative");
}

int OccupationVector::particles() const {
    int n = 0;
    for (int v : counts)
        n += v;
    return n;
}

bool OccupationVector::is_strict() const {
    for (int v : counts)
        if (v > 1)
            return false;
    return true;
}

std::string OccupationVector::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i > 0)
            out << ",";
        out << counts[i];
    }
    out << ")";
    return out.str();
}

StrictPartition occupation_to_strict(const OccupationVector& occ) {
    std::vector<int> parts;
    for (int j = occ.sites(); j >= 1; --j) {
        int c = occ.counts[static_cast<std::size_t>(j) - 1];
        if (c > 1)
            throw NotStrictSector("occupation " + occ.to_string() + " has a count above 1");
        if (c == 1)
            parts.push_back(j);
    }
    return StrictPartition(std::move(parts));
}

OccupationVector strict_to_occupation(const StrictPartition& x, int sites) {
    std::vector<int> counts(static_cast<std::size_t>(sites), 0);
    for (int p : x.parts) {
        if (p > sites)
            throw StructuralError("part " + std::to_string(p) + " exceeds the site count");
        counts[static_cast<std::size_t>(p) - 1] = 1;
    }
    return OccupationVector(std::move(counts));
}

bool interlaces(const StrictPartition& y, const StrictPartition& x) {
    if (y.size() != x.size() + 1)
        throw StructuralError("interlacing requires |y| = |x| + 1");
    for (int j = 1; j <= x.size(); ++j) {
        if (!(y.part(j) >= x.part(j) && x.part(j) >= y.part(j + 1)))
            return false;
    }
    return true;
}

bool admissible(const OccupationVector& m, const OccupationVector& n) {
    if (m.sites() != n.sites())
        throw StructuralError("admissibility requires equal site counts");
    if (m.particles() != n.particles() + 1)
        throw StructuralError("admissibility requires one extra particle in the first argument");
    int tail = 0;
    for (int j = m.sites(); j >= 1; --j) {
        tail += m.counts[static_cast<std::size_t>(j) - 1] - n.counts[static_cast<std::size_t>(j) - 1];
        if (tail < 0 || tail > 1)
            return false;
    }
    return true;
}

int new_parts_count(const StrictPartition& y, const StrictPartition& x) {
    std::set<int> xs(x.parts.begin(), x.parts.end());
    int count = 0;
    for (int p : y.parts)
        if (!xs.count(p))
            ++count;
    return count;
}

namespace {

// All x' with k-1 parts interlacing below y (k parts), ascending lex.
void lower_levels(const StrictPartition& y, std::vector<StrictPartition>& out) {
    int k = y.size();
    std::vector<int> cur(static_cast<std::size_t>(k) - 1);
    // Slot j (1-based) ranges over [y_{j+1}, min(y_j, cur[j-1]-1)].
    auto rec = [&](auto&& self, int j) -> void {
        if (j > k - 1) {
            std::vector<int> parts = cur;
            out.emplace_back(StrictPartition(std::move(parts)));
            return;
        }
        int lo = y.part(j + 1);
        if (lo < 1)
            lo = 1;
        int hi = y.part(j);
        if (j > 1)
            hi = std::min(hi, cur[static_cast<std::size_t>(j) - 2] - 1);
        for (int v = lo; v <= hi; ++v) {
            cur[static_cast<std::size_t>(j) - 1] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 1);
}

} // namespace

std::vector<InterlacingChain> enumerate_chains(const StrictPartition& top) {
    int n = top.size();
    std::vector<InterlacingChain> chains;
    std::vector<StrictPartition> levels(static_cast<std::size_t>(n) + 1);
    levels[static_cast<std::size_t>(n)] = top;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == 0) {
            chains.push_back(InterlacingChain{levels});
            return;
        }
        std::vector<StrictPartition> below;
        lower_levels(levels[static_cast<std::size_t>(k)], below);
        for (auto& x : below) {
            levels[static_cast<std::size_t>(k) - 1] = std::move(x);
            self(self, k - 1);
        }
    };
    if (n == 0) {
        chains.push_back(InterlacingChain{levels});
        return chains;
    }
    rec(rec, n);
    return chains;
}

Partition poincare_dual(const Partition& lambda, int sites, int particles) {
    int width = sites - particles;
    Partition padded = lambda.padded(particles);
    if (!padded.parts.empty() && padded.parts.front() > width)
        throw StructuralError("partition does not fit the (M-N)^N box");
    std::vector<int> dual(static_cast<std::size_t>(particles));
    for (int j = 1; j <= particles; ++j)
        dual[static_cast<std::size_t>(j) - 1] = width - padded.part(particles + 1 - j);
    return Partition(std::move(dual));
}

Partition lambda_of_x(const StrictPartition& x, int particles) {
    if (x.size() != particles)
        throw StructuralError("strict partition must have exactly N parts");
    std::vector<int> parts(static_cast<std::size_t>(particles));
    for (int j = 1; j <= particles; ++j) {
        int v = x.part(j) - particles + j - 1;
        if (v < 0)
            throw StructuralError("x is not of the form lambda + staircase");
        parts[static_cast<std::size_t>(j) - 1] = v;
    }
    return Partition(std::move(parts));
}

StrictPartition x_of_lambda(const Partition& lambda, int particles) {
    Partition padded = lambda.padded(particles);
    std::vector<int> parts(static_cast<std::size_t>(particles));
    for (int j = 1; j <= particles; ++j)
        parts[static_cast<std::size_t>(j) - 1] = padded.part(j) + particles - j + 1;
    return StrictPartition(std::move(parts));
}

StrictPartition complement_strict(const StrictPartition& x, int sites) {
    int n = x.size();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int v = sites + 1 - x.part(n + 1 - j);
        if (v < 1)
            throw StructuralError("part exceeds the site count");
        parts[static_cast<std::size_t>(j) - 1] = v;
    }
    return StrictPartition(std::move(parts));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<std::size_t>(rows), 0);
    auto rec = [&](auto&& self, int j, int hi) -> void {
        if (j > rows) {
            std::vector<int> parts = cur;
            out.emplace_back(Partition(std::move(parts)));
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur[static_cast<std::size_t>(j) - 1] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 1, cols);
    return out;
}

std::vector<OccupationVector> strict_occupations(int sites, int particles) {
    std::vector<OccupationVector> out;
    std::vector<int> cur(static_cast<std::size_t>(sites), 0);
    auto rec = [&](auto&& self, int site, int placed) -> void {
        if (site == sites) {
            if (placed == particles) {
                std::vector<int> counts = cur;
                out.emplace_back(OccupationVector(std::move(counts)));
            }
            return;
        }
        int remaining = sites - site;
        if (particles - placed > remaining)
            return;
        for (int v = 0; v <= 1 && placed + v <= particles; ++v) {
            cur[static_cast<std::size_t>(site)] = v;
            self(self, site + 1, placed + v);
        }
        cur[static_cast<std::size_t>(site)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace sixv
