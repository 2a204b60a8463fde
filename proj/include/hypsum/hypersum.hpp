#pragma once
#include <string>
#include <vector>

#include "hypsum/rational.hpp"
#include "hypsum/sieves.hpp"

namespace hypsum {

// Cumulative sums of an integer-valued weight table, sums[n] = sum_{m<=n} w(m).
// Gives O(1) range counts for the block evaluator. Rational-valued weights
// have no consumer here and are rejected at construction.
struct PrefixSumTable {
    i64 limit = 0;
    int r = 0;  // tau order when built from tau_r, 0 otherwise
    std::string weight_name;
    std::vector<i64> sums;  // sums[0] = 0

    i64 at(i64 n) const;
};

PrefixSumTable build_prefix(const FunctionTable& weights, int r);

// One exact evaluation of S_{f,r}(x) = sum over n1*...*nr <= x of
// f(floor(x / (n1*...*nr))), recorded with the method that produced it.
struct SumResult {
    i64 x = 0;
    int r = 0;
    std::string f_name;
    Rat128 value;
    enum class Method { direct, blocks } method = Method::direct;
};

const char* method_name(SumResult::Method m);

// Direct form: sum over n <= x of tau_r(n) * f(floor(x/n)).
SumResult sum_direct(const FunctionTable& f, const FunctionTable& tau_weights, int r,
                     i64 x);

// Block form: same value, O(sqrt x) blocks of constant quotient q = floor(x/n),
// each contributing f(q) * (T_r(x/q) - T_r(x/(q+1))) via the prefix table.
SumResult sum_blocks(const FunctionTable& f, const PrefixSumTable& prefix, i64 x);

// T_r(floor(y)); T_r steps only at integers so a real argument is floored.
i64 tau_r_partial(const PrefixSumTable& prefix, double y);

// T_2(y) by the Dirichlet hyperbola identity, no table:
//   T_2(y) = 2 * sum_{n<=sqrt(y)} floor(y/n) - floor(sqrt(y))^2
i64 tau2_hyperbola(i64 y);

// The maximal intervals [n_lo, n_hi] of [1, x] on which floor(x/n) is the
// constant q. Visited in increasing n, so q strictly decreases.
struct QuotientBlock {
    i64 q;
    i64 n_lo;
    i64 n_hi;
};

template <class F>
inline void walk_quotient_blocks(i64 x, F&& fn) {
    for (i64 n = 1; n <= x;) {
        i64 q = x / n;
        i64 hi = x / q;
        fn(QuotientBlock{q, n, hi});
        n = hi + 1;
    }
}

std::vector<QuotientBlock> quotient_blocks(i64 x);

}  // namespace hypsum
