#pragma once

#include <functional>
#include <vector>

#include "bigint.hpp"

namespace lisq {

// Shape families used to filter partition sums.  SkewMerged is a permutation
// family (pattern avoidance), not a shape filter, but lives in the same tag
// space because count sequences carry it.
enum class Family {
    All,
    Hook,           // (k, 1^{n-k})
    TwoRow,         // (k, n-k)
    EvenColumn,     // all column lengths even
    DoubleHook,     // (k, k, 1^{n-2k})
    DoubledTwoRow,  // (k, k, m, m)
    SkewMerged,     // avoids 2143 and 3412 (permutations only)
};

const char* family_name(Family f);

// Integer partition of n, parts weakly decreasing and positive.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int first_part() const { return parts.empty() ? 0 : parts.front(); }
    int num_parts() const { return static_cast<int>(parts.size()); }

    bool operator==(const Partition&) const = default;
};

Partition conjugate(const Partition& lam);

// Number of standard Young tableaux of shape lam: n! / prod(hooks), exact.
Big num_syt(const Partition& lam);

bool is_hook(const Partition& lam);
bool is_two_row(const Partition& lam);
bool is_even_column(const Partition& lam);

// The double mu^2 = (mu1, mu1, mu2, mu2, ...), a partition of 2n with all
// column lengths even.
Partition double_of(const Partition& mu);

// All partitions of n in the family, in reverse lexicographic order
// ((n) first, (1^n) last).  Empty when no partition matches, e.g. the
// even-column family with odd n.  The materialized vector is the splitting
// point for parallel sums over shapes.
std::vector<Partition> partitions_of(int n, Family family = Family::All);

// Streaming form of the same enumeration (same canonical order).
void for_each_partition(int n, Family family,
                        const std::function<void(const Partition&)>& fn);

}  // namespace lisq
