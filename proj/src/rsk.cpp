#include "rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lisq {

Permutation::Permutation(std::vector<int> w) : word(std::move(w)) {
    std::vector<char> seen(word.size(), 0);
    for (int v : word) {
        if (v < 1 || v > static_cast<int>(word.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of [n]");
        seen[v - 1] = 1;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.word.resize(n);
    std::iota(p.word.begin(), p.word.end(), 1);
    return p;
}

bool Permutation::is_involution() const {
    for (int i = 0; i < size(); ++i)
        if (word[word[i] - 1] != i + 1) return false;
    return true;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    std::vector<char> seen(n, 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) throw std::invalid_argument("tableau has an empty row");
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw std::invalid_argument("tableau rows must weakly decrease in length");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            seen[v - 1] = 1;
            if (j > 0 && rows[i][j - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (i > 0 && rows[i - 1][j] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

Partition StandardTableau::shape() const {
    Partition lam;
    lam.parts.reserve(rows.size());
    for (const auto& row : rows) lam.parts.push_back(static_cast<int>(row.size()));
    return lam;
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    return n;
}

namespace {

// Insert v by row bumping; record the cell (r, c) where the shape grew.
std::pair<int, int> row_insert(std::vector<std::vector<int>>& rows, int v) {
    for (size_t r = 0; r < rows.size(); ++r) {
        auto it = std::upper_bound(rows[r].begin(), rows[r].end(), v);
        if (it == rows[r].end()) {
            rows[r].push_back(v);
            return {static_cast<int>(r), static_cast<int>(rows[r].size()) - 1};
        }
        std::swap(*it, v);
    }
    rows.push_back({v});
    return {static_cast<int>(rows.size()) - 1, 0};
}

}  // namespace

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& pi) {
    std::vector<std::vector<int>> p, q;
    for (int i = 0; i < pi.size(); ++i) {
        auto [r, c] = row_insert(p, pi.word[i]);
        if (r == static_cast<int>(q.size())) q.emplace_back();
        q[r].push_back(i + 1);
    }
    StandardTableau P, Q;
    P.rows = std::move(p);
    Q.rows = std::move(q);
    return {std::move(P), std::move(Q)};
}

Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q) {
    if (P.shape() != Q.shape()) throw std::invalid_argument("rsk_inverse: shape mismatch");
    const int n = P.size();
    auto rows = P.rows;

    // Position of each recording entry 1..n.
    std::vector<std::pair<int, int>> pos(n);
    for (size_t r = 0; r < Q.rows.size(); ++r)
        for (size_t c = 0; c < Q.rows[r].size(); ++c)
            pos[Q.rows[r][c] - 1] = {static_cast<int>(r), static_cast<int>(c)};

    std::vector<int> word(n);
    for (int step = n; step >= 1; --step) {
        auto [r, c] = pos[step - 1];
        int v = rows[r][c];
        rows[r].pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            // Reverse bump: replace the largest entry smaller than v.
            auto it = std::lower_bound(rows[rr].begin(), rows[rr].end(), v);
            --it;
            std::swap(*it, v);
        }
        word[step - 1] = v;
    }
    Permutation out;
    out.word = std::move(word);
    return out;
}

int lis_length(const Permutation& pi) {
    std::vector<int> tops;  // smallest top card of each pile
    for (int v : pi.word) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end())
            tops.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tops.size());
}

int lds_length(const Permutation& pi) {
    Permutation rev;
    rev.word.assign(pi.word.rbegin(), pi.word.rend());
    return lis_length(rev);
}

Permutation tableau_to_involution(const StandardTableau& P) { return rsk_inverse(P, P); }

StandardTableau involution_to_tableau(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("not an involution");
    return rsk(iota).first;
}

int ulam_distance_from_identity(const Permutation& pi) { return pi.size() - lis_length(pi); }

int count_fixed_points(const Permutation& iota) {
    if (!iota.is_involution()) throw std::invalid_argument("not an involution");
    int cnt = 0;
    for (int i = 0; i < iota.size(); ++i)
        if (iota.word[i] == i + 1) ++cnt;
    return cnt;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.word.begin(), p.word.end()));
    return out;
}

std::vector<Permutation> all_involutions(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        if (p.is_involution()) out.push_back(p);
    } while (std::next_permutation(p.word.begin(), p.word.end()));
    return out;
}

}  // namespace lisq
