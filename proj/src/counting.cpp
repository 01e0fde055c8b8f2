#include "counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace lisq {

Big CountSequence::total() const {
    Big s = 0;
    for (const Big& v : values) s += v;
    return s;
}

int PolySeq::degree() const {
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
        if (coeff[i] != 0) return i;
    return -1;
}

namespace {

bool even_only(Family f) {
    return f == Family::EvenColumn || f == Family::DoubleHook || f == Family::DoubledTwoRow;
}

// Bucket f(lambda) by lambda_1 over the family, with an optional thread split.
// Integer addition commutes, so the merge order never changes the result;
// chunks are merged in index order anyway to keep things boring.
std::vector<Big> shape_sum(int n, Family family, bool squared, int jobs) {
    const std::vector<Partition> shapes = partitions_of(n, family);
    auto accumulate = [&](size_t lo, size_t hi, std::vector<Big>& bucket) {
        for (size_t i = lo; i < hi; ++i) {
            Big f = num_syt(shapes[i]);
            if (squared) f *= f;
            bucket[static_cast<size_t>(shapes[i].first_part()) - 1] += f;
        }
    };

    std::vector<Big> out(static_cast<size_t>(n));
    if (jobs <= 1 || shapes.size() < 64) {
        accumulate(0, shapes.size(), out);
        return out;
    }
    const size_t nthreads = std::min<size_t>(static_cast<size_t>(jobs), shapes.size());
    std::vector<std::vector<Big>> partial(nthreads, std::vector<Big>(static_cast<size_t>(n)));
    std::vector<std::thread> workers;
    for (size_t t = 0; t < nthreads; ++t) {
        const size_t lo = shapes.size() * t / nthreads;
        const size_t hi = shapes.size() * (t + 1) / nthreads;
        workers.emplace_back(accumulate, lo, hi, std::ref(partial[t]));
    }
    for (auto& w : workers) w.join();
    for (const auto& bucket : partial)
        for (size_t k = 0; k < bucket.size(); ++k) out[k] += bucket[k];
    return out;
}

CountSequence make_seq(int n, Family family, Stat stat, int jobs) {
    if (n < 1) throw std::invalid_argument("sequence requires n >= 1");
    if (even_only(family) && n % 2 != 0)
        throw std::invalid_argument(std::string(family_name(family)) +
                                    " family is defined only for even n");
    CountSequence seq;
    seq.n = n;
    seq.stat = stat;
    seq.family = family;
    seq.values = shape_sum(n, family, stat == Stat::Permutation, jobs);
    return seq;
}

}  // namespace

CountSequence ell_seq(int n, Family family, int jobs) {
    if (family == Family::SkewMerged) return skew_merged_seq(n);
    return make_seq(n, family, Stat::Permutation, jobs);
}

CountSequence inv_seq(int n, Family family, int jobs) {
    if (family == Family::SkewMerged)
        throw std::invalid_argument("no involution sequence for the skm family");
    return make_seq(n, family, Stat::Involution, jobs);
}

Big dhook_closed_form(int n, int k) {
    if (k < 1 || k > n) return 0;
    const unsigned N = static_cast<unsigned>(2 * n);
    Big num = multinomial(N, {1u, static_cast<unsigned>(k - 1), static_cast<unsigned>(k),
                              static_cast<unsigned>(2 * n - 2 * k)});
    Big den = Big(2 * n - k) * (2 * n - k + 1);
    Big out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Big d2row_closed_form(int n, int k) {
    if (k > n || 2 * k < n) return 0;
    const int d = 2 * k - n;
    Big num = Big(d + 1) * (d + 2) * (d + 2) * (d + 3) *
              multinomial(static_cast<unsigned>(2 * n),
                          {static_cast<unsigned>(k), static_cast<unsigned>(k),
                           static_cast<unsigned>(n - k), static_cast<unsigned>(n - k)});
    Big den = Big(k + 1) * (k + 1) * (k + 2) * (k + 2) * (k + 3) * (n - k + 1);
    Big out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

namespace {

bool contains_from(const std::vector<int>& s, const std::vector<int>& p,
                   std::vector<size_t>& chosen, size_t start) {
    const size_t j = chosen.size();
    if (j == p.size()) return true;
    for (size_t i = start; i + (p.size() - j) <= s.size(); ++i) {
        bool consistent = true;
        for (size_t t = 0; t < j; ++t) {
            if ((s[chosen[t]] < s[i]) != (p[t] < p[j])) {
                consistent = false;
                break;
            }
        }
        if (!consistent) continue;
        chosen.push_back(i);
        if (contains_from(s, p, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool avoids(const Permutation& sigma, const Permutation& pattern) {
    if (pattern.size() == 0) return false;  // the empty pattern occurs in everything
    if (pattern.size() > sigma.size()) return true;
    std::vector<size_t> chosen;
    chosen.reserve(pattern.word.size());
    return !contains_from(sigma.word, pattern.word, chosen, 0);
}

CountSequence skew_merged_seq(int n) {
    if (n < 1) throw std::invalid_argument("sequence requires n >= 1");
    if (n > kSkewMergedMaxN)
        throw std::invalid_argument("skew-merged enumeration is brute force over n!; limit is n <= " +
                                    std::to_string(kSkewMergedMaxN));
    const Permutation p2143({2, 1, 4, 3});
    const Permutation p3412({3, 4, 1, 2});
    CountSequence seq;
    seq.n = n;
    seq.stat = Stat::Permutation;
    seq.family = Family::SkewMerged;
    seq.values.assign(static_cast<size_t>(n), 0);
    Permutation pi = Permutation::identity(n);
    do {
        if (avoids(pi, p2143) && avoids(pi, p3412))
            seq.values[static_cast<size_t>(lis_length(pi)) - 1] += 1;
    } while (std::next_permutation(pi.word.begin(), pi.word.end()));
    return seq;
}

PolySeq gen_poly(const CountSequence& seq) {
    PolySeq p;
    p.coeff.assign(static_cast<size_t>(seq.n) + 1, 0);
    for (int k = 1; k <= seq.n; ++k) p.coeff[static_cast<size_t>(k)] = seq.at(k);
    return p;
}

PolySeq poly_mul(const PolySeq& a, const PolySeq& b) {
    PolySeq out;
    if (a.coeff.empty() || b.coeff.empty()) return out;
    out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, 0);
    for (size_t i = 0; i < a.coeff.size(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (size_t j = 0; j < b.coeff.size(); ++j) out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return out;
}

PolySeq poly_sub(const PolySeq& a, const PolySeq& b) {
    PolySeq out;
    out.coeff.assign(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (size_t i = 0; i < a.coeff.size(); ++i) out.coeff[i] += a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i) out.coeff[i] -= b.coeff[i];
    return out;
}

}  // namespace lisq
