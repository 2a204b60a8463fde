#pragma once
#include <cstdint>
#include <string>

#include "hypsum/errors.hpp"

namespace hypsum {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

std::string i128_to_string(i128 v);
i128 i128_from_string(const std::string& s);

// Checked 128-bit ops. Overflow throws, never wraps.
i128 checked_add(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);
i64 checked_mul_i64(i64 a, i64 b);
i64 checked_add_i64(i64 a, i64 b);

i128 gcd128(i128 a, i128 b);

// Exact rational with 64-bit numerator/denominator, always stored in
// canonical form: gcd(num, den) = 1, den >= 1. Integer values carry den = 1.
struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d);  // normalizes; d = 0 throws DomainError

    bool is_integer() const { return den == 1; }
    double to_double() const { return double(num) / double(den); }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
};

std::string to_string(const Rat& r);

// Wide accumulator for exact sums: 128-bit numerator/denominator, canonical
// form as above. Mixed-denominator accumulation keeps the running value
// reduced; if the reduced value still does not fit, that is a detected
// OverflowError (relevant only for the rational-valued function families).
struct Rat128 {
    i128 num = 0;
    i128 den = 1;

    Rat128() = default;
    Rat128(i128 n) : num(n), den(1) {}
    Rat128(i128 n, i128 d);

    bool is_integer() const { return den == 1; }
    double to_double() const;

    void add(const Rat& r);            // this += r
    void add_scaled(const Rat& r, i64 k);  // this += r * k
    void add(const Rat128& r);

    friend bool operator==(const Rat128& a, const Rat128& b) {
        return a.num == b.num && a.den == b.den;
    }
};

std::string to_string(const Rat128& r);

}  // namespace hypsum
