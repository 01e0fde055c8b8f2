#include "injections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lisq {

LatticePoint NEPath::end() const {
    LatticePoint e = start;
    for (Step s : steps)
        (s == Step::E ? e.x : e.y) += 1;
    return e;
}

std::vector<LatticePoint> NEPath::points() const {
    std::vector<LatticePoint> pts;
    pts.reserve(steps.size() + 1);
    LatticePoint cur = start;
    pts.push_back(cur);
    for (Step s : steps) {
        (s == Step::E ? cur.x : cur.y) += 1;
        pts.push_back(cur);
    }
    return pts;
}

bool NEPath::is_dyck() const {
    int north = 0, east = 0;
    for (Step s : steps) {
        (s == Step::E ? east : north) += 1;
        if (north > east) return false;
    }
    return true;
}

NEPath hook_tableau_to_path(const StandardTableau& P, LatticePoint start) {
    const Partition sh = P.shape();
    if (!is_hook(sh)) throw std::invalid_argument("hook encoding requires a hook shape");
    const int n = P.size();
    std::vector<char> in_row1(static_cast<size_t>(n) + 1, 0);
    for (int v : P.rows[0]) in_row1[static_cast<size_t>(v)] = 1;
    NEPath p;
    p.start = start;
    p.steps.reserve(static_cast<size_t>(n) - 1);
    for (int i = 1; i <= n - 1; ++i)
        p.steps.push_back(in_row1[static_cast<size_t>(i) + 1] ? Step::E : Step::N);
    return p;
}

StandardTableau hook_path_to_tableau(const NEPath& p) {
    const int n = static_cast<int>(p.steps.size()) + 1;
    std::vector<std::vector<int>> rows(1, std::vector<int>{1});
    for (int i = 1; i <= n - 1; ++i) {
        if (p.steps[static_cast<size_t>(i) - 1] == Step::E)
            rows[0].push_back(i + 1);
        else
            rows.push_back({i + 1});
    }
    return StandardTableau(std::move(rows));
}

NEPath tworow_tableau_to_path(const StandardTableau& P, LatticePoint start) {
    if (P.rows.size() > 2) throw std::invalid_argument("two-row encoding requires at most two rows");
    const int n = P.size();
    std::vector<char> in_row1(static_cast<size_t>(n) + 1, 0);
    for (int v : P.rows[0]) in_row1[static_cast<size_t>(v)] = 1;
    NEPath p;
    p.start = start;
    p.steps.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        p.steps.push_back(in_row1[static_cast<size_t>(i)] ? Step::E : Step::N);
    return p;
}

StandardTableau tworow_path_to_tableau(const NEPath& p) {
    std::vector<std::vector<int>> rows(1);
    std::vector<int> row2;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == Step::E)
            rows[0].push_back(static_cast<int>(i) + 1);
        else
            row2.push_back(static_cast<int>(i) + 1);
    }
    if (!row2.empty()) rows.push_back(std::move(row2));
    return StandardTableau(std::move(rows));
}

std::pair<NEPath, NEPath> path_swap(const NEPath& p, const NEPath& pp) {
    const std::vector<LatticePoint> ppts = p.points();
    const std::vector<LatticePoint> qpts = pp.points();
    const std::set<LatticePoint> qset(qpts.begin(), qpts.end());

    // Along an NE path x+y strictly increases, so traversal order is the
    // northeast order; scan p and keep the last shared point.
    int zi = -1;
    for (size_t i = 0; i < ppts.size(); ++i)
        if (qset.count(ppts[i])) zi = static_cast<int>(i);
    if (zi < 0) throw std::invalid_argument("path_swap: paths do not intersect");
    const LatticePoint z = ppts[static_cast<size_t>(zi)];
    const int zj = (z.x - pp.start.x) + (z.y - pp.start.y);

    NEPath q, qq;
    q.start = p.start;
    q.steps.assign(p.steps.begin(), p.steps.begin() + zi);
    q.steps.insert(q.steps.end(), pp.steps.begin() + zj, pp.steps.end());
    qq.start = pp.start;
    qq.steps.assign(pp.steps.begin(), pp.steps.begin() + zj);
    qq.steps.insert(qq.steps.end(), p.steps.begin() + zi, p.steps.end());
    return {std::move(q), std::move(qq)};
}

InvolutionPair hook_injection(int n, int k, const Permutation& iota, const Permutation& iotap) {
    if (k < 2 || k > n - 1) throw std::invalid_argument("hook_injection: empty domain for this k");
    const NEPath p = hook_tableau_to_path(involution_to_tableau(iota), {1, 0});
    const NEPath pp = hook_tableau_to_path(involution_to_tableau(iotap), {0, 1});
    auto [q, qq] = path_swap(p, pp);
    return {tableau_to_involution(hook_path_to_tableau(q)),
            tableau_to_involution(hook_path_to_tableau(qq))};
}

InvolutionPair tworow_injection(int n, int k, const Permutation& iota, const Permutation& iotap) {
    (void)n;
    (void)k;
    const NEPath p = tworow_tableau_to_path(involution_to_tableau(iota), {1, -1});
    const NEPath pp = tworow_tableau_to_path(involution_to_tableau(iotap), {0, 0});
    auto [q, qq] = path_swap(p, pp);
    // The swap must keep both paths Dyck (each against its own start line);
    // a violation here is a broken construction, not bad input.
    if (!q.is_dyck() || !qq.is_dyck())
        throw std::logic_error("tworow_injection: swapped path left the Dyck region");
    return {tableau_to_involution(tworow_path_to_tableau(q)),
            tableau_to_involution(tworow_path_to_tableau(qq))};
}

std::pair<Permutation, Permutation> lift_injection(const InvolutionPairMap& f,
                                                   const Permutation& pi,
                                                   const Permutation& pip) {
    auto [P, Q] = rsk(pi);
    auto [Pp, Qp] = rsk(pip);
    const auto [s, sp] = f(tableau_to_involution(P), tableau_to_involution(Pp));
    const auto [t, tp] = f(tableau_to_involution(Q), tableau_to_involution(Qp));
    const StandardTableau S = involution_to_tableau(s);
    const StandardTableau Sp = involution_to_tableau(sp);
    const StandardTableau T = involution_to_tableau(t);
    const StandardTableau Tp = involution_to_tableau(tp);
    if (S.shape() != T.shape() || Sp.shape() != Tp.shape())
        throw std::logic_error("lift_injection: f is not shape preserving");
    return {rsk_inverse(S, T), rsk_inverse(Sp, Tp)};
}

namespace {

std::vector<StandardTableau> hook_tableaux(int n, int k) {
    std::vector<StandardTableau> out;
    if (k < 1 || k > n) return out;
    // First row is {1} plus any (k-1)-subset of {2..n}; the column takes
    // the rest in increasing order.
    std::vector<char> pick(static_cast<size_t>(n - 1), 0);
    std::fill(pick.begin(), pick.begin() + (k - 1), 1);
    std::sort(pick.begin(), pick.end(), std::greater<char>());
    do {
        std::vector<std::vector<int>> rows(1, std::vector<int>{1});
        for (int v = 2; v <= n; ++v)
            if (pick[static_cast<size_t>(v - 2)])
                rows[0].push_back(v);
            else
                rows.push_back({v});
        out.emplace_back(std::move(rows));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<StandardTableau> tworow_tableaux(int n, int k) {
    std::vector<StandardTableau> out;
    if (k < 1 || k > n || k < n - k) return out;
    std::vector<char> pick(static_cast<size_t>(n), 0);  // 1 = second row
    std::fill(pick.begin(), pick.begin() + (n - k), 1);
    std::sort(pick.begin(), pick.end(), std::greater<char>());
    do {
        int r1 = 0, r2 = 0;
        bool ok = true;
        std::vector<std::vector<int>> rows(2);
        for (int v = 1; v <= n; ++v) {
            if (pick[static_cast<size_t>(v - 1)]) {
                ++r2;
                rows[1].push_back(v);
            } else {
                ++r1;
                rows[0].push_back(v);
            }
            if (r2 > r1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (rows[1].empty()) rows.pop_back();
        out.emplace_back(std::move(rows));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace

std::vector<Permutation> hook_involutions(int n, int k) {
    std::vector<Permutation> out;
    for (const StandardTableau& P : hook_tableaux(n, k)) out.push_back(tableau_to_involution(P));
    return out;
}

std::vector<Permutation> tworow_involutions(int n, int k) {
    std::vector<Permutation> out;
    for (const StandardTableau& P : tworow_tableaux(n, k)) out.push_back(tableau_to_involution(P));
    return out;
}

std::vector<Permutation> hook_permutations(int n, int k) {
    std::vector<Permutation> out;
    const std::vector<StandardTableau> tabs = hook_tableaux(n, k);
    for (const StandardTableau& P : tabs)
        for (const StandardTableau& Q : tabs) out.push_back(rsk_inverse(P, Q));
    return out;
}

InjectionReport verify_injection(const std::vector<PermPair>& domain,
                                 const std::function<PermPair(const PermPair&)>& map,
                                 const std::function<bool(const PermPair&)>& in_codomain) {
    InjectionReport rep;
    rep.domain_size = static_cast<long long>(domain.size());
    std::set<PermPair> image;
    for (const PermPair& d : domain) {
        const PermPair out = map(d);
        if (!in_codomain(out)) ++rep.codomain_violations;
        if (!image.insert(out).second) ++rep.collisions;
    }
    rep.image_size = static_cast<long long>(image.size());
    return rep;
}

namespace {

std::vector<PermPair> cross(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
    std::vector<PermPair> out;
    out.reserve(a.size() * b.size());
    for (const Permutation& x : a)
        for (const Permutation& y : b) out.emplace_back(x, y);
    return out;
}

Partition hook_shape(int n, int k) {
    std::vector<int> parts(static_cast<size_t>(n - k + 1), 1);
    parts[0] = k;
    return Partition(std::move(parts));
}

}  // namespace

InjectionReport verify_hook_injection(int n, int k) {
    const auto domain = cross(hook_involutions(n, k - 1), hook_involutions(n, k + 1));
    const Partition target = hook_shape(n, k);
    return verify_injection(
        domain,
        [&](const PermPair& d) { return hook_injection(n, k, d.first, d.second); },
        [&](const PermPair& o) {
            return o.first.is_involution() && o.second.is_involution() &&
                   rsk(o.first).first.shape() == target && rsk(o.second).first.shape() == target;
        });
}

InjectionReport verify_tworow_injection(int n, int k) {
    const auto domain = cross(tworow_involutions(n, k - 1), tworow_involutions(n, k + 1));
    if (domain.empty()) return {};  // vacuous: the target shape may not even exist
    std::vector<int> tparts = {k};
    if (n - k > 0) tparts.push_back(n - k);
    const Partition target(std::move(tparts));
    return verify_injection(
        domain,
        [&](const PermPair& d) { return tworow_injection(n, k, d.first, d.second); },
        [&](const PermPair& o) {
            return o.first.is_involution() && o.second.is_involution() &&
                   rsk(o.first).first.shape() == target && rsk(o.second).first.shape() == target;
        });
}

InjectionReport verify_lifted_hook_injection(int n, int k) {
    const auto domain = cross(hook_permutations(n, k - 1), hook_permutations(n, k + 1));
    const Partition target = hook_shape(n, k);
    const InvolutionPairMap f = [n, k](const Permutation& a, const Permutation& b) {
        return hook_injection(n, k, a, b);
    };
    return verify_injection(
        domain, [&](const PermPair& d) { return lift_injection(f, d.first, d.second); },
        [&](const PermPair& o) {
            return rsk(o.first).first.shape() == target && rsk(o.second).first.shape() == target;
        });
}

}  // namespace lisq
