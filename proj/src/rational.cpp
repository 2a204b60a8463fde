#include "hypsum/rational.hpp"

#include <algorithm>
#include <limits>

namespace hypsum {

namespace {
constexpr i128 I128_MAX = (i128(1) << 126) - 1 + (i128(1) << 126);  // 2^127 - 1
constexpr i64 I64_MAX = std::numeric_limits<i64>::max();
}  // namespace

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? u128(0) - u128(v) : u128(v);
    std::string s;
    while (x > 0) {
        s.push_back(char('0' + int(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

i128 i128_from_string(const std::string& s) {
    if (s.empty()) throw DomainError("i128_from_string: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw DomainError("i128_from_string: no digits");
    u128 x = 0;
    constexpr u128 lim = (u128(1) << 127);  // |value| <= 2^127 handled below
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw DomainError("i128_from_string: bad digit");
        u128 d = u128(c - '0');
        if (x > (lim - d) / 10) throw OverflowError("i128_from_string: overflow");
        x = x * 10 + d;
    }
    if (!neg && x > u128(I128_MAX)) throw OverflowError("i128_from_string: overflow");
    if (neg && x > u128(I128_MAX) + 1) throw OverflowError("i128_from_string: overflow");
    return neg ? i128(u128(0) - x) : i128(x);
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit add overflow");
    return r;
}

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit mul overflow");
    return r;
}

i64 checked_mul_i64(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit mul overflow");
    return r;
}

i64 checked_add_i64(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit add overflow");
    return r;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rat::Rat(i64 n, i64 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = i64(gcd128(n, d));
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

namespace {
Rat make_rat_from_128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > I64_MAX || n < -i128(I64_MAX) - 1 || d > I64_MAX)
        throw OverflowError("rational exceeds 64-bit after reduction");
    Rat r;
    r.num = i64(n);
    r.den = i64(d);
    return r;
}
}  // namespace

Rat operator+(const Rat& a, const Rat& b) {
    return make_rat_from_128(i128(a.num) * b.den + i128(b.num) * a.den,
                             i128(a.den) * b.den);
}

Rat operator-(const Rat& a, const Rat& b) {
    return make_rat_from_128(i128(a.num) * b.den - i128(b.num) * a.den,
                             i128(a.den) * b.den);
}

Rat operator*(const Rat& a, const Rat& b) {
    return make_rat_from_128(i128(a.num) * b.num, i128(a.den) * b.den);
}

std::string to_string(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rat128::Rat128(i128 n, i128 d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

double Rat128::to_double() const {
    // Split into high/low 64-bit halves to keep the conversion exact-ish for
    // magnitudes beyond double's 2^53 window.
    auto cvt = [](i128 v) {
        bool neg = v < 0;
        u128 x = neg ? u128(0) - u128(v) : u128(v);
        double hi = double(u64(x >> 64));
        double lo = double(u64(x));
        double r = hi * 18446744073709551616.0 + lo;
        return neg ? -r : r;
    };
    return cvt(num) / cvt(den);
}

void Rat128::add(const Rat& r) {
    add(Rat128(i128(r.num), i128(r.den)));
}

void Rat128::add_scaled(const Rat& r, i64 k) {
    if (r.den == 1) {
        // integer fast path: num/den stays canonical (den may be > 1)
        num = checked_add(num, checked_mul(checked_mul(i128(r.num), i128(k)), den));
        return;
    }
    add(Rat128(checked_mul(i128(r.num), i128(k)), i128(r.den)));
}

void Rat128::add(const Rat128& r) {
    if (r.num == 0) return;
    if (den == r.den) {
        num = checked_add(num, r.num);
        if (den != 1) {
            i128 g = gcd128(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
        return;
    }
    i128 g = gcd128(den, r.den);
    i128 rb = r.den / g;
    i128 nden = checked_mul(den, rb);
    i128 a = checked_mul(num, rb);
    i128 b = checked_mul(r.num, den / g);
    i128 nnum = checked_add(a, b);
    i128 g2 = gcd128(nnum, nden);
    if (g2 > 1) {
        nnum /= g2;
        nden /= g2;
    }
    num = nnum;
    den = nden;
}

std::string to_string(const Rat128& r) {
    if (r.den == 1) return i128_to_string(r.num);
    return i128_to_string(r.num) + "/" + i128_to_string(r.den);
}

}  // namespace hypsum
