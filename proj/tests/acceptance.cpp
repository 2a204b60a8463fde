// Acceptance suite: every release gate runs here with its tolerance pinned
// in code. One PASS/FAIL line per criterion; exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypsum/constants.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/experiments.hpp"
#include "hypsum/hypersum.hpp"
#include "hypsum/sieves.hpp"
#include "oracles.hpp"

using namespace hypsum;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// ---- criterion 1: C_0(omega) at 1e7 reproduces 0.5918 ----------------------
Outcome criterion1() {
    auto t0 = Clock::now();
    SpfTable spf = build_spf(10000000);
    FunctionTable om = catalog("omega", spf);
    ConstantEstimate c0 = compute_Ci(om, 0, 10000000);
    double elapsed = seconds_since(t0);
    double diff = std::fabs(c0.value - 0.5918);
    bool pass = diff <= 0.0005 && elapsed <= 60.0;
    char buf[160];
    snprintf(buf, sizeof(buf), "C_0=%.8f |diff|=%.2e (<=5e-4), %.1fs (<=60s)",
             c0.value, diff, elapsed);
    return {pass, buf};
}

// ---- criterion 2: a_1, a_0 closed forms + regression oracle ----------------
Outcome criterion2() {
    auto a = compute_aj(2);
    double g0 = stieltjes(0)[0];
    double d1 = std::fabs(a[1].value - 1.0);
    double d0 = std::fabs(a[0].value - (2.0 * g0 - 1.0));

    double fit = 0.0;
    for (i64 x : {100000, 1000000, 10000000})
        fit += (double(tau2_hyperbola(x)) - double(x) * std::log(double(x))) / double(x);
    fit /= 3.0;
    double dfit = std::fabs(fit - a[0].value);

    bool pass = d1 <= 1e-10 && d0 <= 1e-10 && dfit <= 1e-3;
    char buf[200];
    snprintf(buf, sizeof(buf),
             "|a_1-1|=%.1e |a_0-(2g-1)|=%.1e (<=1e-10), |fit-a_0|=%.2e (<=1e-3)", d1,
             d0, dfit);
    return {pass, buf};
}

// ---- criterion 3: evaluator equivalence, zero tolerance --------------------
Outcome criterion3() {
    SpfTable spf = build_spf(2000);
    std::vector<FunctionTable> fs;
    fs.push_back(catalog("omega", spf));
    fs.push_back(catalog("big_omega", spf));
    fs.push_back(catalog("omega_sq", spf));
    fs.push_back(catalog("tau", spf));

    long checked = 0;
    for (int r : {1, 2, 3}) {
        FunctionTable w = sieve_tau_r(spf, r);
        PrefixSumTable prefix = build_prefix(w, r);
        for (const auto& f : fs) {
            for (i64 x = 1; x <= 2000; ++x) {
                if (!(sum_blocks(f, prefix, x).value == sum_direct(f, w, r, x).value))
                    return {false, "blocks != direct at x=" + std::to_string(x) +
                                       " r=" + std::to_string(r) + " f=" + f.name};
                ++checked;
            }
        }
    }

    for (int r : {2, 3}) {
        FunctionTable w = sieve_tau_r(spf, r);
        for (const auto& f : fs) {
            auto fv = [&](i64 q) { return f.value_int(q); };
            for (i64 x = 1; x <= 300; ++x) {
                if (sum_direct(f, w, r, x).value.num != oracle::s_brute_int(x, r, fv))
                    return {false, "direct != enumeration at x=" + std::to_string(x) +
                                       " r=" + std::to_string(r) + " f=" + f.name};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " exact equalities"};
}

// ---- criterion 4: theorem-1 validation for omega, Omega, omega^2 -----------
Outcome criterion4() {
    auto t0 = Clock::now();
    SpfTable spf = build_spf(10000000);
    PrefixSumTable prefix = build_prefix(sieve_tau_r(spf, 2), 2);
    std::vector<i64> grid{10000, 100000, 1000000, 10000000};

    std::string detail;
    bool pass = true;
    for (const char* name : {"omega", "big_omega", "omega_sq"}) {
        FunctionTable f = catalog(name, spf);
        ValidationReport rep = validate_theorem1(f, prefix, 2, grid, 2.0);
        char buf[96];
        snprintf(buf, sizeof(buf), "%s[%s tr=%.3f] ", name,
                 verdict_name(rep.verdict), rep.trend_ratio);
        detail += buf;
        pass = pass && rep.verdict == Verdict::bounded;
    }
    double elapsed = seconds_since(t0);
    pass = pass && elapsed <= 300.0;
    char buf[64];
    snprintf(buf, sizeof(buf), "%.1fs (<=300s)", elapsed);
    detail += buf;
    return {pass, detail};
}

// ---- criterion 5: Eq(3) for r=2 pointwise and r=3 trend ---------------------
Outcome criterion5() {
    SpfTable spf = build_spf(10000000);
    PrefixSumTable p2 = build_prefix(sieve_tau_r(spf, 2), 2);
    std::vector<i64> grid2{10000, 100000, 1000000, 10000000};
    ValidationReport rep2 = validate_tau_formula(2, grid2, p2);
    double worst2 = 0.0;
    for (const auto& rec : rep2.records)
        worst2 = std::max(worst2, std::fabs(rec.normalized_error));
    bool pass2 = worst2 <= 2.0;

    SpfTable spf3 = build_spf(1000000);
    PrefixSumTable p3 = build_prefix(sieve_tau_r(spf3, 3), 3);
    std::vector<i64> grid3{10000, 100000, 1000000};
    ValidationReport rep3 = validate_tau_formula(3, grid3, p3);
    bool pass3 = rep3.verdict == Verdict::bounded && rep3.trend_ratio <= 2.0;

    char buf[160];
    snprintf(buf, sizeof(buf),
             "r=2 max|norm|=%.4f (<=2.0); r=3 %s tr=%.3f (<=2.0)", worst2,
             verdict_name(rep3.verdict), rep3.trend_ratio);
    return {pass2 && pass3, buf};
}

// ---- criterion 6: Lemma-1 tail bounds hold ---------------------------------
Outcome criterion6() {
    SpfTable spf = build_spf(400000);
    FunctionTable om = catalog("omega", spf);
    std::string detail;
    bool pass = true;
    for (int i : {0, 1, 2}) {
        for (i64 N : {1000, 10000, 100000}) {
            ConstantEstimate a = compute_Ci(om, i, N);
            ConstantEstimate b = compute_Ci(om, i, 4 * N);
            double diff = std::fabs(a.value - b.value);
            if (diff > a.tail_bound) {
                pass = false;
                char buf[96];
                snprintf(buf, sizeof(buf), "i=%d N=%lld diff=%.3e > tail=%.3e ", i,
                         (long long)N, diff, a.tail_bound);
                detail += buf;
            }
        }
    }
    if (pass) detail = "9/9 instances within tail bounds";
    return {pass, detail};
}

// ---- criterion 7: mean-value hypothesis ------------------------------------
Outcome criterion7() {
    SpfTable spf = build_spf(10000000);
    std::vector<i64> grid{10000, 100000, 1000000, 10000000};
    std::string detail;
    bool pass = true;
    for (const char* name : {"omega", "big_omega", "omega_k(2)"}) {
        FunctionTable f = catalog(name, spf);
        auto pts = mean_value_check(f, grid);
        double first = pts.front().ratio, last = pts.back().ratio;
        bool ok = first > 0.0 && last > 0.0 && std::isfinite(last) &&
                  last / first <= 1.5;
        pass = pass && ok;
        char buf[96];
        snprintf(buf, sizeof(buf), "%s[tr=%.3f] ", name, last / first);
        detail += buf;
    }
    detail += "(<=1.5)";
    return {pass, detail};
}

// ---- criterion 8: multiplicative / additive property suites ----------------
Outcome criterion8() {
    SpfTable spf = build_spf(1000000);
    FunctionTable t2 = sieve_tau_r(spf, 2);
    FunctionTable t3 = sieve_tau_r(spf, 3);
    FunctionTable o2 = catalog("omega_k(2)", spf);

    std::mt19937_64 rng(20250810);
    std::uniform_int_distribution<i64> dist(1, 1000);
    long pairs = 0;
    while (pairs < 10000) {
        i64 m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        if (t2.value_int(m * n) != t2.value_int(m) * t2.value_int(n))
            return {false, "tau_2 multiplicativity failed"};
        if (t3.value_int(m * n) != t3.value_int(m) * t3.value_int(n))
            return {false, "tau_3 multiplicativity failed"};
        if (o2.value_int(m * n) != o2.value_int(m) + o2.value_int(n))
            return {false, "additive family additivity failed"};
        ++pairs;
    }

    long ppchecks = 0;
    for (int r = 1; r <= 5; ++r) {
        FunctionTable t = sieve_tau_r(spf, r);
        for (i64 p = 2; p <= 1000000; ++p) {
            if (!spf.is_prime(p)) continue;
            i64 q = p;
            int a = 1;
            while (q <= 1000000) {
                i64 binom = 1;
                for (int j = 1; j <= a; ++j) binom = binom * (j + r - 1) / j;
                if (t.value_int(q) != binom)
                    return {false, "prime power law failed at p^a=" + std::to_string(q)};
                ++ppchecks;
                if (q > 1000000 / p) break;
                q *= p;
                ++a;
            }
        }
    }
    return {true, "10000 coprime pairs, " + std::to_string(ppchecks) +
                      " prime powers (r<=5)"};
}

// ---- criterion 9: single-threaded performance floor ------------------------
Outcome criterion9() {
    auto t0 = Clock::now();
    SpfTable spf = build_spf(10000000);
    FunctionTable om = catalog("omega", spf);
    ConstantEstimate c0 = compute_Ci(om, 0, om.limit);
    ConstantEstimate c1 = compute_Ci(om, 1, om.limit);
    PrefixSumTable prefix = build_prefix(sieve_tau_r(spf, 2), 2);
    SumResult s = sum_blocks(om, prefix, 10000000);

    std::vector<i64> grid{10000, 100000, 1000000, 10000000};
    ValidationReport rep = validate_theorem1(om, prefix, 2, grid, 2.0);
    std::ostringstream report;
    emit_report(rep, ReportFormat::csv, report);

    double elapsed = seconds_since(t0);
    bool pass = elapsed <= 120.0 && report.str().size() > 0 &&
                c0.tail_bound > 0 && c1.tail_bound > 0;
    char buf[160];
    snprintf(buf, sizeof(buf), "S_{omega,2}(1e7)=%s, %.1fs (<=120s)",
             i128_to_string(s.value.num).c_str(), elapsed);
    return {pass, buf};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Entry> entries = {
        {1, "constant reproduction C~0.5918", criterion1},
        {2, "classical coefficients a_1, a_0", criterion2},
        {3, "evaluator equivalence (exact)", criterion3},
        {4, "theorem-1 validation bounded", criterion4},
        {5, "tau summatory formula bounded", criterion5},
        {6, "series tail bounds valid", criterion6},
        {7, "mean-value hypothesis bounded", criterion7},
        {8, "multiplicative/additive suites", criterion8},
        {9, "performance floor", criterion9},
    };

    int failures = 0;
    for (auto& e : entries) {
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        if (!out.pass) ++failures;
        printf("criterion %d [%-34s]: %s  %s\n", e.id, e.title,
               out.pass ? "PASS" : "FAIL", out.detail.c_str());
        fflush(stdout);
    }
    printf("%d/%zu criteria passed\n", int(entries.size()) - failures,
           entries.size());
    return failures;
}
