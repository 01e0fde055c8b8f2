#include "partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace lisq {

const char* family_name(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::Hook: return "hook";
        case Family::TwoRow: return "2row";
        case Family::EvenColumn: return "ecol";
        case Family::DoubleHook: return "dhook";
        case Family::DoubledTwoRow: return "d2row";
        case Family::SkewMerged: return "skm";
    }
    return "?";
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.parts.empty()) return out;
    out.parts.assign(lam.parts.front(), 0);
    for (int j = 0; j < lam.parts.front(); ++j) {
        int cnt = 0;
        for (int p : lam.parts)
            if (p >= j + 1) ++cnt;
        out.parts[j] = cnt;
    }
    return out;
}

Big num_syt(const Partition& lam) {
    const int n = lam.n();
    if (n == 0) return 1;
    const Partition conj = conjugate(lam);
    Big hooks = 1;
    for (size_t i = 0; i < lam.parts.size(); ++i) {
        for (int j = 0; j < lam.parts[i]; ++j) {
            const int arm = lam.parts[i] - j - 1;
            const int leg = conj.parts[j] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    Big f;
    mpz_divexact(f.get_mpz_t(), factorial(n).get_mpz_t(), hooks.get_mpz_t());
    return f;
}

bool is_hook(const Partition& lam) {
    for (size_t i = 1; i < lam.parts.size(); ++i)
        if (lam.parts[i] != 1) return false;
    return !lam.parts.empty();
}

bool is_two_row(const Partition& lam) { return !lam.parts.empty() && lam.parts.size() <= 2; }

bool is_even_column(const Partition& lam) {
    // Columns pair up exactly when consecutive rows pair up.
    if (lam.parts.size() % 2 != 0) return false;
    for (size_t i = 0; i + 1 < lam.parts.size(); i += 2)
        if (lam.parts[i] != lam.parts[i + 1]) return false;
    return true;
}

Partition double_of(const Partition& mu) {
    Partition out;
    out.parts.reserve(2 * mu.parts.size());
    for (int p : mu.parts) {
        out.parts.push_back(p);
        out.parts.push_back(p);
    }
    return out;
}

namespace {

// Unrestricted partitions in reverse lexicographic order: start at (n),
// repeatedly decrement the rightmost part > 1 and redistribute the tail.
void enumerate_all(int n, const std::function<void(const Partition&)>& fn) {
    std::vector<int> a = {n};
    Partition lam;
    for (;;) {
        lam.parts = a;
        fn(lam);
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            ++rem;
            a.pop_back();
        }
        if (a.empty()) return;
        a.back() -= 1;
        ++rem;
        const int m = a.back();
        while (rem > 0) {
            const int t = std::min(m, rem);
            a.push_back(t);
            rem -= t;
        }
    }
}

}  // namespace

void for_each_partition(int n, Family family,
                        const std::function<void(const Partition&)>& fn) {
    if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
    Partition lam;
    switch (family) {
        case Family::All:
            enumerate_all(n, fn);
            return;
        case Family::Hook:
            for (int k = n; k >= 1; --k) {
                lam.parts.assign(static_cast<size_t>(n - k + 1), 1);
                lam.parts[0] = k;
                fn(lam);
            }
            return;
        case Family::TwoRow:
            for (int k = n; 2 * k >= n; --k) {
                lam.parts = {k};
                if (n - k > 0) lam.parts.push_back(n - k);
                fn(lam);
            }
            return;
        case Family::EvenColumn:
            if (n % 2 != 0) return;  // odd n has a column of odd total length
            enumerate_all(n / 2, [&](const Partition& mu) { fn(double_of(mu)); });
            return;
        case Family::DoubleHook:
            if (n % 2 != 0) return;
            for (int k = n / 2; k >= 1; --k) {
                lam.parts.assign(static_cast<size_t>(2 + n - 2 * k), 1);
                lam.parts[0] = lam.parts[1] = k;
                fn(lam);
            }
            return;
        case Family::DoubledTwoRow: {
            if (n % 2 != 0) return;
            const int m = n / 2;
            for (int k = m; 2 * k >= m; --k) {
                lam.parts = {k, k};
                if (m - k > 0) {
                    lam.parts.push_back(m - k);
                    lam.parts.push_back(m - k);
                }
                fn(lam);
            }
            return;
        }
        case Family::SkewMerged:
            throw std::invalid_argument("skm is a permutation family, not a shape filter");
    }
}

std::vector<Partition> partitions_of(int n, Family family) {
    std::vector<Partition> out;
    for_each_partition(n, family, [&](const Partition& lam) { out.push_back(lam); });
    return out;
}

}  // namespace lisq
