#include "hypsum/hypersum.hpp"

#include <cmath>
#include <limits>

#include "hypsum/errors.hpp"

namespace hypsum {

i64 PrefixSumTable::at(i64 n) const {
    if (n < 0 || n > limit) throw RangeError("prefix table: n outside [0, limit]");
    return sums[size_t(n)];
}

PrefixSumTable build_prefix(const FunctionTable& weights, int r) {
    if (!weights.integer_valued())
        throw ContractError("build_prefix: weight table must be integer-valued");
    PrefixSumTable t;
    t.limit = weights.limit;
    t.r = r;
    t.weight_name = weights.name;
    t.sums.assign(size_t(weights.limit) + 1, 0);
    i64 acc = 0;
    for (i64 n = 1; n <= weights.limit; ++n) {
        acc = checked_add_i64(acc, weights.num[size_t(n)]);
        t.sums[size_t(n)] = acc;
    }
    return t;
}

const char* method_name(SumResult::Method m) {
    return m == SumResult::Method::direct ? "direct" : "blocks";
}

SumResult sum_direct(const FunctionTable& f, const FunctionTable& tau_weights, int r,
                     i64 x) {
    if (x < 1) throw DomainError("sum_direct: x must be >= 1");
    if (x > f.limit || x > tau_weights.limit)
        throw RangeError("sum_direct: x exceeds a table limit");
    if (!tau_weights.integer_valued())
        throw ContractError("sum_direct: weights must be integer-valued");

    SumResult res;
    res.x = x;
    res.r = r;
    res.f_name = f.name;
    res.method = SumResult::Method::direct;

    if (f.integer_valued()) {
        i128 acc = 0;
        for (i64 n = 1; n <= x; ++n)
            acc = checked_add(
                acc, checked_mul(i128(tau_weights.num[size_t(n)]),
                                 i128(f.num[size_t(x / n)])));
        res.value = Rat128(acc);
    } else {
        Rat128 acc;
        for (i64 n = 1; n <= x; ++n)
            acc.add_scaled(f.value(x / n), tau_weights.num[size_t(n)]);
        res.value = acc;
    }
    return res;
}

SumResult sum_blocks(const FunctionTable& f, const PrefixSumTable& prefix, i64 x) {
    if (x < 1) throw DomainError("sum_blocks: x must be >= 1");
    if (x > f.limit || x > prefix.limit)
        throw RangeError("sum_blocks: x exceeds a table limit");

    SumResult res;
    res.x = x;
    res.r = prefix.r;
    res.f_name = f.name;
    res.method = SumResult::Method::blocks;

    if (f.integer_valued()) {
        i128 acc = 0;
        walk_quotient_blocks(x, [&](const QuotientBlock& b) {
            i64 cnt = prefix.sums[size_t(b.n_hi)] - prefix.sums[size_t(b.n_lo) - 1];
            acc = checked_add(acc, checked_mul(i128(cnt), i128(f.num[size_t(b.q)])));
        });
        res.value = Rat128(acc);
    } else {
        Rat128 acc;
        walk_quotient_blocks(x, [&](const QuotientBlock& b) {
            i64 cnt = prefix.sums[size_t(b.n_hi)] - prefix.sums[size_t(b.n_lo) - 1];
            acc.add_scaled(f.value(b.q), cnt);
        });
        res.value = acc;
    }
    return res;
}

i64 tau_r_partial(const PrefixSumTable& prefix, double y) {
    if (y < 0.0) throw DomainError("tau_r_partial: negative argument");
    i64 m = i64(std::floor(y));
    if (m > prefix.limit) throw RangeError("tau_r_partial: argument exceeds table");
    return prefix.sums[size_t(m)];
}

i64 tau2_hyperbola(i64 y) {
    if (y < 0) throw DomainError("tau2_hyperbola: negative argument");
    if (y == 0) return 0;
    i64 s = i64(std::sqrt(double(y)));
    while (i128(s + 1) * (s + 1) <= y) ++s;
    while (i128(s) * s > y) --s;
    i128 acc = 0;
    for (i64 n = 1; n <= s; ++n) acc += y / n;
    i128 total = 2 * acc - i128(s) * s;
    if (total > std::numeric_limits<i64>::max())
        throw OverflowError("tau2_hyperbola: result exceeds 64 bits");
    return i64(total);
}

std::vector<QuotientBlock> quotient_blocks(i64 x) {
    if (x < 1) throw DomainError("quotient_blocks: x must be >= 1");
    std::vector<QuotientBlock> out;
    walk_quotient_blocks(x, [&](const QuotientBlock& b) { out.push_back(b); });
    return out;
}

}  // namespace hypsum
