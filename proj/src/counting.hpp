#pragma once

#include <vector>

#include "partition.hpp"
#include "rsk.hpp"

namespace lisq {

enum class Stat { Permutation, Involution };

// Distribution of the LIS statistic, values[k-1] = count at ell = k,
// k = 1..n.  Exact arbitrary-precision entries.
struct CountSequence {
    int n = 0;
    Stat stat = Stat::Permutation;
    Family family = Family::All;
    std::vector<Big> values;

    const Big& at(int k) const { return values.at(static_cast<size_t>(k - 1)); }
    Big total() const;
};

// Polynomial sum_k coeff[k] q^k.  The generating polynomial of a count
// sequence has constant term 0.
struct PolySeq {
    std::vector<Big> coeff;

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return degree() < 0; }
};

// ell_seq(n, F)[k] = #{pi in S_n : ell(pi) = k, sh(pi) in F}, computed as
// sum of (f^lambda)^2 over lambda in F with lambda_1 = k.  Families defined
// only for even n reject odd n.  jobs > 1 splits the shape sum across
// threads; the result is independent of the split.
CountSequence ell_seq(int n, Family family = Family::All, int jobs = 1);

// Same with f^lambda in place of its square: involution counts.
CountSequence inv_seq(int n, Family family = Family::All, int jobs = 1);

// Closed form for the double-hook involution count i_{2n,k} of shape
// (k, k, 1^{2n-2k}); zero for k outside 1..n.
Big dhook_closed_form(int n, int k);

// Closed form for the doubled-two-row involution count of shape
// (k, k, n-k, n-k); zero for k outside n/2..n.
Big d2row_closed_form(int n, int k);

// True iff no subsequence of sigma standardizes to pattern.
bool avoids(const Permutation& sigma, const Permutation& pattern);

// Brute-force bound for skew-merged enumeration (n! scan).
inline constexpr int kSkewMergedMaxN = 11;

// Distribution of ell over skew-merged permutations ({2143, 3412}-avoiders).
// Throws std::invalid_argument above kSkewMergedMaxN.
CountSequence skew_merged_seq(int n);

PolySeq gen_poly(const CountSequence& seq);

PolySeq poly_mul(const PolySeq& a, const PolySeq& b);
PolySeq poly_sub(const PolySeq& a, const PolySeq& b);

}  // namespace lisq
