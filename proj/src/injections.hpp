#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rsk.hpp"

namespace lisq {

struct LatticePoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

enum class Step : char { N = 'N', E = 'E' };

// Path of unit north/east steps from a fixed start point.
struct NEPath {
    LatticePoint start;
    std::vector<Step> steps;

    LatticePoint end() const;
    std::vector<LatticePoint> points() const;  // start included, length steps+1

    // Never above the slope-1 line through the start: #N <= #E on every prefix.
    bool is_dyck() const;

    auto operator<=>(const NEPath&) const = default;
};

// Hook encoding: n-1 steps, step i is E iff i+1 sits in the first row.
NEPath hook_tableau_to_path(const StandardTableau& P, LatticePoint start);
StandardTableau hook_path_to_tableau(const NEPath& p);

// Two-row encoding: n steps, step i is E iff i sits in the first row.  The
// image paths are exactly the Dyck paths.
NEPath tworow_tableau_to_path(const StandardTableau& P, LatticePoint start);
StandardTableau tworow_path_to_tableau(const NEPath& p);

// Swap tails at the last (most northeast) intersection point z; the outputs
// trade endpoints.  Throws when the paths share no lattice point.
std::pair<NEPath, NEPath> path_swap(const NEPath& p, const NEPath& pp);

using InvolutionPair = std::pair<Permutation, Permutation>;
using InvolutionPairMap = std::function<InvolutionPair(const Permutation&, const Permutation&)>;

// The hook-shape injection I_{n,k-1} x I_{n,k+1} -> (I_{n,k})^2: encode as
// paths from (1,0) and (0,1), swap at the last intersection, decode.
InvolutionPair hook_injection(int n, int k, const Permutation& iota, const Permutation& iotap);

// Two-row variant with offset starts (1,-1) and (0,0); outputs are checked
// against the Dyck constraint before decoding.
InvolutionPair tworow_injection(int n, int k, const Permutation& iota, const Permutation& iotap);

// Shape-preserving lift of an involution-pair injection f to permutations:
// RS both inputs, regroup insertion/recording tableaux, apply f twice,
// regroup back and invert RS.  A shape mismatch at the regrouping stage
// means f was not shape preserving and raises std::logic_error.
std::pair<Permutation, Permutation> lift_injection(const InvolutionPairMap& f,
                                                   const Permutation& pi,
                                                   const Permutation& pip);

// Domain enumerations for the exhaustive harnesses.
std::vector<Permutation> hook_involutions(int n, int k);    // shape (k, 1^{n-k})
std::vector<Permutation> tworow_involutions(int n, int k);  // shape (k, n-k)
std::vector<Permutation> hook_permutations(int n, int k);   // sh pi = (k, 1^{n-k})

struct InjectionReport {
    long long domain_size = 0;
    long long image_size = 0;
    long long collisions = 0;
    long long codomain_violations = 0;
    bool clean() const { return collisions == 0 && codomain_violations == 0; }
};

using PermPair = std::pair<Permutation, Permutation>;

// Runs map over every domain pair, counting image collisions and outputs
// rejected by the codomain predicate.
InjectionReport verify_injection(const std::vector<PermPair>& domain,
                                 const std::function<PermPair(const PermPair&)>& map,
                                 const std::function<bool(const PermPair&)>& in_codomain);

// Canned harnesses used by the CLI and the acceptance suite.
InjectionReport verify_hook_injection(int n, int k);
InjectionReport verify_tworow_injection(int n, int k);
InjectionReport verify_lifted_hook_injection(int n, int k);

}  // namespace lisq
