#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

// Smallest-prime-factor table for 2..limit. Backbone for every other sieve:
// factoring any n <= limit is a chain of spf lookups.
struct SpfTable {
    i64 limit = 0;
    std::vector<std::uint32_t> spf;  // spf[n] for n >= 2; entries 0,1 unused

    std::uint32_t at(i64 n) const;
    bool is_prime(i64 n) const { return n >= 2 && at(n) == n; }
};

SpfTable build_spf(i64 limit);

// One arithmetic function tabulated on [1, limit] with exact rational values.
// `den` is empty for integer-valued functions (denominator 1 everywhere);
// otherwise den[n] pairs with num[n] and both are kept in canonical reduced
// form. alpha is a growth exponent valid for f(n) = O(n^alpha); beta the
// exponent in sum_{n<=x} f(n) = O(x (log log x)^beta). Tables that are only
// ever used as summation weights carry the not-applicable sentinel instead.
struct FunctionTable {
    static constexpr double kNotApplicable = -1.0;

    std::string name;
    i64 limit = 0;
    std::vector<i64> num;  // index 0 unused
    std::vector<i64> den;  // empty -> all denominators 1
    double alpha = kNotApplicable;
    double beta = kNotApplicable;

    bool integer_valued() const { return den.empty(); }
    bool has_alpha() const { return alpha >= 0.0; }
    bool has_beta() const { return beta >= 0.0; }

    i64 value_int(i64 n) const;  // requires integer_valued()
    Rat value(i64 n) const;
    void check_index(i64 n) const;
};

// tau_r(n): number of ordered r-tuples with product n. Multiplicative with
// tau_r(p^a) = C(a+r-1, r-1). Values that would exceed 64 bits raise
// OverflowError during construction. alpha/beta are sentinels: these tables
// act as weights, not as the summed function f.
FunctionTable sieve_tau_r(const SpfTable& spf, int r);

// Additive family f(n) = sum of g(a) over maximal prime powers p^a || n.
// Requires g(0) = 0 (so f(1) = 0). g is evaluated once per exponent
// 0..floor(log2(limit)) and memoized. alpha is fixed at 1/2, valid for any g
// growing at most like 2^(a/2); beta is supplied by the caller.
FunctionTable sieve_additive(const SpfTable& spf, const std::function<Rat(int)>& g,
                             std::string name, double beta);

// Named function catalog:
//   omega, big_omega, omega_k(k), omega_sq, tau_tau, big_omega_tau,
//   omega_over_p, big_omega_over_p, tau
FunctionTable catalog(const std::string& name, const SpfTable& spf);
std::vector<std::string> catalog_names();

struct MeanValuePoint {
    i64 x;
    Rat128 sum;    // exact partial sum of f over [1, x]
    double ratio;  // sum / (x * (log log x)^beta)
};

// Exact partial sums of f on an ascending grid, each normalized by the
// claimed mean-value envelope. Every x must be >= 3 so log log x > 0.
std::vector<MeanValuePoint> mean_value_check(const FunctionTable& f,
                                             std::span<const i64> x_grid);

}  // namespace hypsum
