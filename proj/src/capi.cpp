#include "lisq.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#include "counting.hpp"
#include "injections.hpp"
#include "logconcave.hpp"
#include "tracywidom.hpp"

using namespace lisq;

struct lisq_seq {
    CountSequence seq;
};
struct lisq_tw {
    TwTable table;
};

namespace {

bool parse_family(const char* s, Family& out) {
    const std::string f = s ? s : "";
    if (f == "all") out = Family::All;
    else if (f == "hook") out = Family::Hook;
    else if (f == "2row") out = Family::TwoRow;
    else if (f == "ecol") out = Family::EvenColumn;
    else if (f == "dhook") out = Family::DoubleHook;
    else if (f == "d2row") out = Family::DoubledTwoRow;
    else if (f == "skm") out = Family::SkewMerged;
    else return false;
    return true;
}

CountSequence compute(const char* stat, const char* family, int n, int jobs) {
    Family fam;
    if (!parse_family(family, fam)) throw std::invalid_argument("unknown family tag");
    const std::string st = stat ? stat : "";
    if (st == "ell") return ell_seq(n, fam, jobs);
    if (st == "inv") return inv_seq(n, fam, jobs);
    throw std::invalid_argument("unknown stat tag");
}

template <typename Fn>
lisq_status guard(Fn&& fn) {
    try {
        fn();
        return LISQ_OK;
    } catch (const std::out_of_range&) {
        return LISQ_ERANGE;
    } catch (const std::invalid_argument& e) {
        return std::strstr(e.what(), "limit is") ? LISQ_ELIMIT : LISQ_EINVAL;
    } catch (const std::logic_error&) {
        return LISQ_EINTERNAL;
    } catch (...) {
        return LISQ_EINTERNAL;
    }
}

}  // namespace

extern "C" {

const char* lisq_status_message(lisq_status s) {
    switch (s) {
        case LISQ_OK: return "ok";
        case LISQ_EINVAL: return "invalid argument";
        case LISQ_ELIMIT: return "above brute-force limit";
        case LISQ_ERANGE: return "out of tabulated range";
        case LISQ_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

lisq_status lisq_seq_compute(const char* stat, const char* family, int n, int jobs,
                             lisq_seq** out) {
    if (!out) return LISQ_EINVAL;
    *out = nullptr;
    return guard([&] { *out = new lisq_seq{compute(stat, family, n, jobs)}; });
}

void lisq_seq_free(lisq_seq* seq) { delete seq; }

int lisq_seq_n(const lisq_seq* seq) { return seq ? seq->seq.n : 0; }

char* lisq_seq_value(const lisq_seq* seq, int k) {
    if (!seq || k < 1 || k > seq->seq.n) return nullptr;
    const std::string s = to_decimal(seq->seq.at(k));
    char* buf = new (std::nothrow) char[s.size() + 1];
    if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

void lisq_string_free(char* s) { delete[] s; }

lisq_status lisq_seq_log_concave(const lisq_seq* seq, int* ok, int* fail_index) {
    if (!seq || !ok) return LISQ_EINVAL;
    const CheckResult r = is_log_concave(seq->seq.values);
    *ok = r.ok ? 1 : 0;
    if (fail_index) *fail_index = r.fail_index;
    return LISQ_OK;
}

lisq_status lisq_seq_certify_infinite(const lisq_seq* seq, int max_iterations, int* verdict,
                                      int* iteration, int* index) {
    if (!seq || !verdict) return LISQ_EINVAL;
    return guard([&] {
        const CertificateReport rep = certify_infinite_lc(seq->seq.values, max_iterations);
        *verdict = static_cast<int>(rep.verdict);
        if (iteration) *iteration = rep.iteration;
        if (index) *index = rep.index;
    });
}

lisq_status lisq_qlogconvex_triple(const char* stat, const char* family, int n, int jobs,
                                   int* ok, int* fail_power) {
    if (!ok || n < 2) return LISQ_EINVAL;
    return guard([&] {
        const PolySeq prev = gen_poly(compute(stat, family, n - 1, jobs));
        const PolySeq mid = gen_poly(compute(stat, family, n, jobs));
        const PolySeq next = gen_poly(compute(stat, family, n + 1, jobs));
        const CheckResult r = q_log_convex_step(prev, mid, next);
        *ok = r.ok ? 1 : 0;
        if (fail_power) *fail_power = r.fail_index;
    });
}

lisq_status lisq_real_rooted(const char* stat, const char* family, int n, int jobs, int* rooted,
                             int* real_roots) {
    if (!rooted) return LISQ_EINVAL;
    return guard([&] {
        const PolySeq p = gen_poly(compute(stat, family, n, jobs));
        *rooted = real_rooted(p) ? 1 : 0;
        if (real_roots) *real_roots = real_root_count(p);
    });
}

lisq_status lisq_inject_verify(const char* family, int n, int k, lisq_inject_report* out) {
    if (!family || !out || n < 1 || k < 1 || k > n) return LISQ_EINVAL;
    return guard([&] {
        const std::string f = family;
        InjectionReport rep;
        if (f == "hook")
            rep = verify_hook_injection(n, k);
        else if (f == "2row")
            rep = verify_tworow_injection(n, k);
        else if (f == "lift")
            rep = verify_lifted_hook_injection(n, k);
        else
            throw std::invalid_argument("unknown injection family");
        out->domain_size = rep.domain_size;
        out->image_size = rep.image_size;
        out->collisions = rep.collisions;
        out->codomain_violations = rep.codomain_violations;
    });
}

lisq_status lisq_tw_build(double x0, double x_min, double tol, lisq_tw** out) {
    if (!out) return LISQ_EINVAL;
    *out = nullptr;
    return guard([&] { *out = new lisq_tw{tw_integrate(x0, x_min, tol)}; });
}

void lisq_tw_free(lisq_tw* t) { delete t; }

lisq_status lisq_tw_cdf(const lisq_tw* t, double x, double* out) {
    if (!t || !out) return LISQ_EINVAL;
    return guard([&] { *out = tw_cdf(t->table, x); });
}

lisq_status lisq_tw_density(const lisq_tw* t, double x, double* out) {
    if (!t || !out) return LISQ_EINVAL;
    return guard([&] { *out = tw_density(t->table, x); });
}

lisq_status lisq_tw_log_density_dd(const lisq_tw* t, double x, double* out) {
    if (!t || !out) return LISQ_EINVAL;
    lisq_status st = LISQ_OK;
    const lisq_status g = guard([&] {
        const auto v = tw_log_density_dd(t->table, x);
        if (!v)
            st = LISQ_ERANGE;  // right-tail underflow guard
        else
            *out = *v;
    });
    return g != LISQ_OK ? g : st;
}

lisq_status lisq_tw_moments(const lisq_tw* t, double* mean, double* variance) {
    if (!t || !mean || !variance) return LISQ_EINVAL;
    return guard([&] {
        const auto [m, v] = tw_moments(t->table);
        *mean = m;
        *variance = v;
    });
}

lisq_status lisq_tw_max_residual(const lisq_tw* t, double lo, double hi, double* out) {
    if (!t || !out) return LISQ_EINVAL;
    return guard([&] { *out = tw_max_residual(t->table, lo, hi); });
}

lisq_status lisq_tw_scan_max(const lisq_tw* t, double lo, double hi, double* max_value,
                             double* arg_max) {
    if (!t || !max_value) return LISQ_EINVAL;
    return guard([&] {
        double worst = -1e300, wx = lo;
        for (const auto& [x, v] : tw_scan_log_density_dd(t->table, lo, hi)) {
            if (!std::isnan(v) && v > worst) {
                worst = v;
                wx = x;
            }
        }
        *max_value = worst;
        if (arg_max) *arg_max = wx;
    });
}

lisq_status lisq_tw_range(const lisq_tw* t, double* x_lo, double* x_hi, int* truncated) {
    if (!t) return LISQ_EINVAL;
    if (x_lo) *x_lo = t->table.x_lo();
    if (x_hi) *x_hi = t->table.x_hi();
    if (truncated) *truncated = t->table.truncated ? 1 : 0;
    return LISQ_OK;
}

lisq_status lisq_tw_write_csv(const lisq_tw* t, const char* path, double dx) {
    if (!t || !path || !(dx > 0)) return LISQ_EINVAL;
    return guard([&] {
        std::ofstream os(path);
        if (!os) throw std::invalid_argument("cannot open output path");
        tw_write_csv(t->table, os, dx);
    });
}

}  // extern "C"
