#include "hypsum/sieves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hypsum/errors.hpp"

namespace hypsum {

std::uint32_t SpfTable::at(i64 n) const {
    if (n < 2 || n > limit) throw RangeError("spf: n outside [2, limit]");
    return spf[size_t(n)];
}

SpfTable build_spf(i64 limit) {
    if (limit < 2) throw DomainError("build_spf: limit must be >= 2");
    if (limit > i64(1) << 31)
        throw ResourceError("build_spf: limit beyond supported sieve range");
    SpfTable t;
    t.limit = limit;
    try {
        t.spf.assign(size_t(limit) + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("build_spf: allocation failed");
    }
    // linear sieve: each composite is crossed once by its smallest prime
    std::vector<std::uint32_t> primes;
    for (i64 i = 2; i <= limit; ++i) {
        if (t.spf[size_t(i)] == 0) {
            t.spf[size_t(i)] = std::uint32_t(i);
            primes.push_back(std::uint32_t(i));
        }
        for (std::uint32_t p : primes) {
            if (p > t.spf[size_t(i)] || i * p > limit) break;
            t.spf[size_t(i * p)] = p;
        }
    }
    return t;
}

void FunctionTable::check_index(i64 n) const {
    if (n < 1 || n > limit) throw RangeError("function table: n outside [1, limit]");
}

i64 FunctionTable::value_int(i64 n) const {
    check_index(n);
    if (!integer_valued()) throw ContractError("value_int on rational-valued table");
    return num[size_t(n)];
}

Rat FunctionTable::value(i64 n) const {
    check_index(n);
    Rat r;
    r.num = num[size_t(n)];
    r.den = den.empty() ? 1 : den[size_t(n)];
    return r;
}

namespace {

// n = p^a * rest with p = spf(n), p does not divide rest
struct LeadSplit {
    i64 rest;
    int exp;
};

inline LeadSplit split_leading(const SpfTable& spf, i64 n) {
    i64 p = spf.spf[size_t(n)];
    i64 m = n / p;
    int a = 1;
    while (m % p == 0) {
        m /= p;
        ++a;
    }
    return {m, a};
}

int max_exponent(i64 limit) {
    int b = 0;
    while ((i64(1) << (b + 1)) <= limit) ++b;
    return b;  // floor(log2(limit))
}

}  // namespace

FunctionTable sieve_tau_r(const SpfTable& spf, int r) {
    if (r < 1) throw DomainError("sieve_tau_r: r must be >= 1");
    const i64 N = spf.limit;

    // tau_r(p^a) = C(a+r-1, r-1), precomputed for all exponents that occur.
    // Overflow of the 64-bit value word is an error, not a wrap.
    const int amax = max_exponent(N);
    std::vector<i64> ppow(size_t(amax) + 1);
    ppow[0] = 1;
    for (int a = 1; a <= amax; ++a) {
        i128 v = i128(ppow[size_t(a) - 1]) * (a + r - 1) / a;  // exact: C(a+r-1,r-1)
        if (v > std::numeric_limits<i64>::max())
            throw OverflowError("sieve_tau_r: tau_r(2^" + std::to_string(a) +
                                ") exceeds 64 bits for r=" + std::to_string(r));
        ppow[size_t(a)] = i64(v);
    }

    FunctionTable f;
    f.name = "tau_r" + std::to_string(r);
    f.limit = N;
    f.num.assign(size_t(N) + 1, 0);
    f.num[1] = 1;
    for (i64 n = 2; n <= N; ++n) {
        auto [rest, a] = split_leading(spf, n);
        f.num[size_t(n)] = checked_mul_i64(f.num[size_t(rest)], ppow[size_t(a)]);
    }
    return f;
}

FunctionTable sieve_additive(const SpfTable& spf, const std::function<Rat(int)>& g,
                             std::string name, double beta) {
    if (!(g(0) == Rat(0)))
        throw ContractError("sieve_additive: g(0) must be 0");
    const i64 N = spf.limit;
    const int amax = max_exponent(N);

    std::vector<Rat> gv(size_t(amax) + 1);
    bool all_int = true;
    for (int a = 0; a <= amax; ++a) {
        gv[size_t(a)] = g(a);
        all_int = all_int && gv[size_t(a)].is_integer();
    }

    FunctionTable f;
    f.name = std::move(name);
    f.limit = N;
    f.alpha = 0.5;
    f.beta = beta;
    f.num.assign(size_t(N) + 1, 0);
    if (all_int) {
        for (i64 n = 2; n <= N; ++n) {
            auto [rest, a] = split_leading(spf, n);
            f.num[size_t(n)] = checked_add_i64(f.num[size_t(rest)], gv[size_t(a)].num);
        }
    } else {
        f.den.assign(size_t(N) + 1, 1);
        for (i64 n = 2; n <= N; ++n) {
            auto [rest, a] = split_leading(spf, n);
            Rat v = Rat(f.num[size_t(rest)], f.den[size_t(rest)]) + gv[size_t(a)];
            f.num[size_t(n)] = v.num;
            f.den[size_t(n)] = v.den;
        }
    }
    return f;
}

namespace {

Rat ipow_rat(i64 base, int e) {
    i64 v = 1;
    for (int i = 0; i < e; ++i) v = checked_mul_i64(v, base);
    return Rat(v);
}

FunctionTable build_omega_k(const SpfTable& spf, int k) {
    auto g = [k](int a) -> Rat { return a == 0 ? Rat(0) : ipow_rat(a, k); };
    std::string nm = k == 0 ? "omega" : (k == 1 ? "big_omega" : "omega_k(" + std::to_string(k) + ")");
    return sieve_additive(spf, g, nm, 1.0);
}

// f(n) = h(tau(n)) for an already-built integer table h
FunctionTable compose_with_tau(const SpfTable& spf, const FunctionTable& h,
                               std::string name, double beta) {
    FunctionTable tau = sieve_tau_r(spf, 2);
    FunctionTable f;
    f.name = std::move(name);
    f.limit = spf.limit;
    f.alpha = 0.5;
    f.beta = beta;
    f.num.assign(size_t(spf.limit) + 1, 0);
    for (i64 n = 1; n <= spf.limit; ++n)
        f.num[size_t(n)] = h.num[size_t(tau.num[size_t(n)])];  // tau(n) <= n
    return f;
}

// f(n) = base(n) / p(n), p(n) = smallest prime factor; f(1) = 0
FunctionTable divide_by_spf(const SpfTable& spf, const FunctionTable& base,
                            std::string name) {
    FunctionTable f;
    f.name = std::move(name);
    f.limit = spf.limit;
    f.alpha = 0.5;
    f.beta = 1.0;
    f.num.assign(size_t(spf.limit) + 1, 0);
    f.den.assign(size_t(spf.limit) + 1, 1);
    for (i64 n = 2; n <= spf.limit; ++n) {
        Rat v(base.num[size_t(n)], i64(spf.spf[size_t(n)]));
        f.num[size_t(n)] = v.num;
        f.den[size_t(n)] = v.den;
    }
    return f;
}

}  // namespace

FunctionTable catalog(const std::string& name, const SpfTable& spf) {
    if (name == "omega") return build_omega_k(spf, 0);
    if (name == "big_omega") return build_omega_k(spf, 1);
    if (name.rfind("omega_k(", 0) == 0 && name.back() == ')') {
        std::string ks = name.substr(8, name.size() - 9);
        if (ks.empty() || ks.find_first_not_of("0123456789") != std::string::npos)
            throw LookupError("catalog: bad omega_k argument in '" + name + "'");
        int k = std::stoi(ks);
        if (k > 13) throw DomainError("catalog: omega_k supports k <= 13");
        return build_omega_k(spf, k);
    }
    if (name == "omega_sq") {
        FunctionTable w = build_omega_k(spf, 0);
        FunctionTable f;
        f.name = "omega_sq";
        f.limit = spf.limit;
        f.alpha = 0.5;
        f.beta = 2.0;
        f.num.assign(w.num.size(), 0);
        for (i64 n = 1; n <= spf.limit; ++n)
            f.num[size_t(n)] = checked_mul_i64(w.num[size_t(n)], w.num[size_t(n)]);
        return f;
    }
    if (name == "tau_tau") {
        FunctionTable tau = sieve_tau_r(spf, 2);
        return compose_with_tau(spf, tau, "tau_tau", 1.0);
    }
    if (name == "big_omega_tau") {
        FunctionTable om = build_omega_k(spf, 1);
        return compose_with_tau(spf, om, "big_omega_tau", 1.0);
    }
    if (name == "omega_over_p")
        return divide_by_spf(spf, build_omega_k(spf, 0), "omega_over_p");
    if (name == "big_omega_over_p")
        return divide_by_spf(spf, build_omega_k(spf, 1), "big_omega_over_p");
    if (name == "tau") {
        FunctionTable f = sieve_tau_r(spf, 2);
        f.name = "tau";
        f.alpha = 0.5;  // tau(n) = O(n^eps)
        f.beta = FunctionTable::kNotApplicable;  // mean value is x log x
        return f;
    }
    throw LookupError("catalog: unknown function '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"omega",       "big_omega",     "omega_k(k)",      "omega_sq", "tau_tau",
            "big_omega_tau", "omega_over_p", "big_omega_over_p", "tau"};
}

std::vector<MeanValuePoint> mean_value_check(const FunctionTable& f,
                                             std::span<const i64> x_grid) {
    if (!f.has_beta())
        throw ContractError("mean_value_check: table declares no mean-value exponent");
    for (i64 x : x_grid) {
        if (x < 3) throw DomainError("mean_value_check: grid x must be >= 3");
        if (x > f.limit) throw RangeError("mean_value_check: grid exceeds table");
    }
    std::vector<i64> grid(x_grid.begin(), x_grid.end());
    std::sort(grid.begin(), grid.end());

    std::vector<MeanValuePoint> out;
    out.reserve(grid.size());
    Rat128 acc;
    i64 n = 1;
    for (i64 x : grid) {
        for (; n <= x; ++n) acc.add(f.value(n));
        double env = double(x) * std::pow(std::log(std::log(double(x))), f.beta);
        out.push_back({x, acc, acc.to_double() / env});
    }
    return out;
}

}  // namespace hypsum
