#pragma once

#include <vector>

#include "counting.hpp"

namespace lisq {

// Result of a pointwise sequence check; fail_index is the first offending
// k (1-based) when ok is false.
struct CheckResult {
    bool ok = true;
    int fail_index = 0;
};

// a_{k-1} a_{k+1} <= a_k^2 for k = 1..n with zero boundary.  An internal
// zero (a_k = 0 between positive neighbours) fails at that k; boundary
// zero-padding is harmless because the products vanish there.
CheckResult is_log_concave(const std::vector<Big>& a);

// b_k = a_k^2 - a_{k-1} a_{k+1}; intermediate iterates may go negative.
std::vector<Big> l_operator(const std::vector<Big>& a);

// Exact test of a_k^2 >= r0 a_{k-1} a_{k+1} with r0 = (3+sqrt(5))/2, done in
// integers: with b = a_{k-1} a_{k+1} and c = 2 a_k^2 - 3b the inequality
// holds iff c >= 0 and c^2 >= 5 b^2.  At c = 0 this forces b = 0.
CheckResult is_r0_factor_lc(const std::vector<Big>& a);

enum class Verdict { Certified, FailedAt, Inconclusive };

struct CertificateReport {
    Verdict verdict = Verdict::Inconclusive;
    int iteration = 0;   // L-applications performed when the verdict fired
    int index = 0;       // failing k for FailedAt
    int iterations_run = 0;
};

// Iterate the L-operator: a negative entry gives FailedAt, passing the
// r0-factor test certifies infinite log concavity, and running out of
// iterations is Inconclusive (the certificate is sufficient, not necessary).
CertificateReport certify_infinite_lc(std::vector<Big> a, int max_iterations = 100);

// Coefficientwise f_prev * f_next >= f^2; fail_index is the first power of q
// with a negative coefficient in the difference.
CheckResult q_log_convex_step(const PolySeq& f_prev, const PolySeq& f, const PolySeq& f_next);

// True iff every complex root of f is real, decided by exact Sturm sequences
// on the squarefree part.  Rejects the zero polynomial.
bool real_rooted(const PolySeq& f);

// Number of distinct real roots of f (same Sturm machinery).
int real_root_count(const PolySeq& f);

}  // namespace lisq
