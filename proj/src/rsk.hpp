#pragma once

#include <utility>
#include <vector>

#include "partition.hpp"

namespace lisq {

// Permutation of [n] in one-line notation, values 1..n.  n = 0 is legal and
// every operation treats it as the empty base case.
struct Permutation {
    std::vector<int> word;

    Permutation() = default;
    explicit Permutation(std::vector<int> w);  // validates bijectivity

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word.size()); }
    bool is_involution() const;

    auto operator<=>(const Permutation&) const = default;
};

// Standard Young tableau: rows increase left to right, columns top to bottom,
// entries exactly 1..n.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> r);  // validates

    Partition shape() const;
    int size() const;

    auto operator<=>(const StandardTableau&) const = default;
};

// Robinson-Schensted row insertion: (insertion tableau P, recording tableau Q).
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& pi);

// Inverse of rsk; requires sh P = sh Q.
Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q);

// Length of the longest increasing subsequence, by patience sorting.
int lis_length(const Permutation& pi);

// Longest decreasing subsequence length (used by property tests).
int lds_length(const Permutation& pi);

// The involution <-> tableau correspondence of RS(iota) = (P, P).
Permutation tableau_to_involution(const StandardTableau& P);
StandardTableau involution_to_tableau(const Permutation& iota);  // rejects non-involutions

int ulam_distance_from_identity(const Permutation& pi);

int count_fixed_points(const Permutation& iota);  // rejects non-involutions

// All permutations of [n] in lexicographic order (test/enumeration substrate).
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_involutions(int n);

}  // namespace lisq
