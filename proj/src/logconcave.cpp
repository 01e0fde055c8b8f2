#include "logconcave.hpp"

#include <algorithm>
#include <stdexcept>

namespace lisq {

CheckResult is_log_concave(const std::vector<Big>& a) {
    const int n = static_cast<int>(a.size());
    auto at = [&](int k) -> Big {
        return (k < 1 || k > n) ? Big(0) : a[static_cast<size_t>(k - 1)];
    };
    for (int k = 1; k <= n; ++k) {
        if (at(k - 1) * at(k + 1) > at(k) * at(k)) return {false, k};
    }
    return {};
}

std::vector<Big> l_operator(const std::vector<Big>& a) {
    const int n = static_cast<int>(a.size());
    auto at = [&](int k) -> Big {
        return (k < 1 || k > n) ? Big(0) : a[static_cast<size_t>(k - 1)];
    };
    std::vector<Big> b(a.size());
    for (int k = 1; k <= n; ++k) b[static_cast<size_t>(k - 1)] = at(k) * at(k) - at(k - 1) * at(k + 1);
    return b;
}

CheckResult is_r0_factor_lc(const std::vector<Big>& a) {
    const int n = static_cast<int>(a.size());
    auto at = [&](int k) -> Big {
        return (k < 1 || k > n) ? Big(0) : a[static_cast<size_t>(k - 1)];
    };
    for (int k = 1; k <= n; ++k) {
        const Big b = at(k - 1) * at(k + 1);
        const Big c = 2 * at(k) * at(k) - 3 * b;
        if (c < 0 || c * c < 5 * b * b) return {false, k};
    }
    return {};
}

CertificateReport certify_infinite_lc(std::vector<Big> a, int max_iterations) {
    if (max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
    CertificateReport rep;
    for (int i = 0; i <= max_iterations; ++i) {
        rep.iterations_run = i;
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] < 0) {
                rep.verdict = Verdict::FailedAt;
                rep.iteration = i;
                rep.index = static_cast<int>(k) + 1;
                return rep;
            }
        }
        if (is_r0_factor_lc(a).ok) {
            rep.verdict = Verdict::Certified;
            rep.iteration = i;
            return rep;
        }
        if (i < max_iterations) a = l_operator(a);
    }
    rep.verdict = Verdict::Inconclusive;
    rep.iteration = max_iterations;
    return rep;
}

CheckResult q_log_convex_step(const PolySeq& f_prev, const PolySeq& f, const PolySeq& f_next) {
    const PolySeq diff = poly_sub(poly_mul(f_prev, f_next), poly_mul(f, f));
    for (size_t i = 0; i < diff.coeff.size(); ++i)
        if (diff.coeff[i] < 0) return {false, static_cast<int>(i)};
    return {};
}

// ---------------------------------------------------------------------------
// Exact real-rootedness via Sturm sequences over Q.
// ---------------------------------------------------------------------------

namespace {

using PolyQ = std::vector<Rat>;  // coeff[i] multiplies q^i

void trim(PolyQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

PolyQ derivative(const PolyQ& p) {
    PolyQ d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return d;
}

// Remainder of a mod b, deg(b) >= 0.
PolyQ poly_rem(PolyQ a, const PolyQ& b) {
    while (deg(a) >= deg(b)) {
        const Rat q = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient, requires b | a.
PolyQ poly_div_exact(PolyQ a, const PolyQ& b) {
    PolyQ q(a.size() - b.size() + 1, Rat(0));
    while (deg(a) >= deg(b)) {
        const Rat c = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

// Rescale by a positive rational so coefficients stay small; sign-safe.
void normalize(PolyQ& p) {
    if (p.empty()) return;
    Rat m = 0;
    for (const Rat& c : p) m = std::max(m, Rat(abs(c)));
    if (m != 0)
        for (Rat& c : p) c /= m;
}

std::vector<PolyQ> sturm_chain(const PolyQ& g) {
    std::vector<PolyQ> chain;
    chain.push_back(g);
    PolyQ d = derivative(g);
    trim(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2 && deg(chain.back()) >= 0) {
        PolyQ r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (Rat& c : r) c = -c;
        normalize(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_of(const Rat& r) { return sgn(r); }

// Sign variations of the chain at -infinity and +infinity.
int variations_at_infinity(const std::vector<PolyQ>& chain, bool negative) {
    int var = 0, prev = 0;
    for (const PolyQ& p : chain) {
        if (p.empty()) continue;
        int s = sign_of(p.back());
        if (negative && deg(p) % 2 == 1) s = -s;
        if (prev != 0 && s != 0 && s != prev) ++var;
        if (s != 0) prev = s;
    }
    return var;
}

// Distinct real roots of a nonconstant polynomial.
int distinct_real_roots(const PolyQ& g) {
    std::vector<PolyQ> chain = sturm_chain(g);
    // Last element is (a scalar multiple of) gcd(g, g'); divide it out if
    // g is not squarefree so the chain is a genuine Sturm sequence.
    const PolyQ& last = chain.back();
    PolyQ sf = g;
    if (deg(last) > 0) {
        sf = poly_div_exact(g, last);
        trim(sf);
        chain = sturm_chain(sf);
    }
    return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

// Strips q^m, returns (poly over Q, number of roots at zero stripped).
std::pair<PolyQ, int> to_polyq_stripped(const PolySeq& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    size_t low = 0;
    while (f.coeff[low] == 0) ++low;
    PolyQ g;
    for (size_t i = low; i < f.coeff.size(); ++i) g.emplace_back(f.coeff[i]);
    trim(g);
    return {std::move(g), static_cast<int>(low)};
}

int squarefree_degree(const PolyQ& g) {
    std::vector<PolyQ> chain = sturm_chain(g);
    const PolyQ& last = chain.back();
    if (deg(last) > 0) return deg(g) - deg(last);
    return deg(g);
}

}  // namespace

bool real_rooted(const PolySeq& f) {
    auto [g, zeros] = to_polyq_stripped(f);
    (void)zeros;  // roots at zero are real
    if (deg(g) <= 0) return true;
    return distinct_real_roots(g) == squarefree_degree(g);
}

int real_root_count(const PolySeq& f) {
    auto [g, zeros] = to_polyq_stripped(f);
    int count = zeros > 0 ? 1 : 0;
    if (deg(g) > 0) count += distinct_real_roots(g);
    return count;
}

}  // namespace lisq
