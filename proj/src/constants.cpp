#include "hypsum/constants.hpp"

#include <cmath>

#include "hypsum/errors.hpp"

namespace hypsum {

LaurentSeries::LaurentSeries(int pole_order, int valid_order)
    : pole_(pole_order), valid_(valid_order) {
    if (pole_ < 0 || valid_ < -pole_)
        throw DomainError("laurent series: bad truncation window");
    c_.assign(size_t(valid_ + pole_) + 1, 0.0);
}

LaurentSeries LaurentSeries::one(int valid_order) {
    LaurentSeries s(0, valid_order);
    s.c_[0] = 1.0;
    return s;
}

LaurentSeries LaurentSeries::zeta_expansion(int valid_order) {
    if (valid_order > kStieltjesMax)
        throw UnsupportedError("zeta expansion limited by stieltjes table");
    LaurentSeries s(1, valid_order);
    s.set_coeff(-1, 1.0);
    auto g = stieltjes(valid_order < 0 ? 0 : valid_order);
    double fact = 1.0;
    for (int k = 0; k <= valid_order; ++k) {
        if (k > 0) fact *= k;
        s.set_coeff(k, (k % 2 == 0 ? 1.0 : -1.0) * g[size_t(k)] / fact);
    }
    return s;
}

LaurentSeries LaurentSeries::inv_one_plus_eps(int valid_order) {
    LaurentSeries s(0, valid_order);
    for (int m = 0; m <= valid_order; ++m) s.set_coeff(m, m % 2 == 0 ? 1.0 : -1.0);
    return s;
}

double LaurentSeries::coeff(int k) const {
    if (k > valid_)
        throw InternalError("laurent series: coefficient past truncation order");
    if (k < -pole_) return 0.0;
    return c_[size_t(k + pole_)];
}

void LaurentSeries::set_coeff(int k, double v) {
    if (k < -pole_ || k > valid_)
        throw InternalError("laurent series: coefficient outside window");
    c_[size_t(k + pole_)] = v;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
    // A product coefficient at eps^m is complete only while every contributing
    // pair sits inside both windows: K = min(Ka - pb, Kb - pa).
    int pole = pole_ + rhs.pole_;
    int valid = std::min(valid_ - rhs.pole_, rhs.valid_ - pole_);
    LaurentSeries out(pole, valid);
    for (int i = -pole_; i <= valid_; ++i) {
        if (c_[size_t(i + pole_)] == 0.0) continue;
        for (int j = -rhs.pole_; j <= rhs.valid_; ++j) {
            int m = i + j;
            if (m > valid) continue;
            out.c_[size_t(m + pole)] += c_[size_t(i + pole_)] * rhs.c_[size_t(j + rhs.pole_)];
        }
    }
    return out;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
    int pole = std::max(pole_, rhs.pole_);
    int valid = std::min(valid_, rhs.valid_);
    LaurentSeries out(pole, valid);
    for (int k = -pole; k <= valid; ++k) {
        double v = 0.0;
        if (k >= -pole_ && k <= valid_) v += c_[size_t(k + pole_)];
        if (k >= -rhs.pole_ && k <= rhs.valid_) v += rhs.c_[size_t(k + rhs.pole_)];
        out.c_[size_t(k + pole)] = v;
    }
    return out;
}

LaurentSeries LaurentSeries::pow(int e) const {
    if (e < 1) throw DomainError("laurent pow: exponent must be >= 1");
    LaurentSeries out = *this;
    for (int i = 1; i < e; ++i) out = out * *this;
    return out;
}

LaurentSeries LaurentSeries::inverse() const {
    // 1/A where A = a_lead * eps^(-p) * (1 + u), u of valtuation >= 1:
    // solve B coefficients by forward substitution against A*B = 1.
    double lead = c_[0];
    if (lead == 0.0) throw DomainError("laurent inverse: zero leading coefficient");
    int terms = valid_ + pole_;  // number of coefficients beyond the lead
    // B has pole order -(-pole) = pole_ negated: leading exponent +pole_.
    LaurentSeries out(-pole_ < 0 ? 0 : -pole_, pole_ + terms);
    // Work with raw arrays relative to leading exponents.
    std::vector<double> b(size_t(terms) + 1, 0.0);
    b[0] = 1.0 / lead;
    for (int m = 1; m <= terms; ++m) {
        double s = 0.0;
        for (int k = 1; k <= m; ++k) s += c_[size_t(k)] * b[size_t(m - k)];
        b[size_t(m)] = -s / lead;
    }
    for (int m = 0; m <= terms; ++m) out.set_coeff(pole_ + m, b[size_t(m)]);
    return out;
}

namespace {
// mpmath stieltjes(k), 30 significant digits
constexpr double kStieltjes[kStieltjesMax + 1] = {
    0.577215664901532860606512090082,
    -0.0728158454836767248605863758749,
    -0.00969036319287231848453038603521,
    0.00205383442030334586616004654275,
    0.00232537006546730005746817017753,
    0.000793323817301062701753334877444,
    -0.000238769345430199609872421841908,
    -0.000527289567057751046074097505479,
    -0.000352123353803039509602052165001,
};
}  // namespace

std::vector<double> stieltjes(int k_max) {
    if (k_max < 0) throw DomainError("stieltjes: negative order");
    if (k_max > kStieltjesMax)
        throw UnsupportedError("stieltjes: table covers k <= " +
                               std::to_string(kStieltjesMax));
    return std::vector<double>(kStieltjes, kStieltjes + k_max + 1);
}

ConstantEstimate compute_Ci(const FunctionTable& f, int i, i64 N) {
    if (i < 0) throw DomainError("compute_Ci: i must be >= 0");
    if (N < 1) throw DomainError("compute_Ci: N must be >= 1");
    if (i >= 1 && N < 2)
        throw DomainError("compute_Ci: N >= 2 required when i >= 1");
    if (N > f.limit) throw RangeError("compute_Ci: N exceeds table limit");
    if (!f.has_alpha())
        throw ContractError("compute_Ci: table declares no growth exponent");
    const double alpha = f.alpha;

    // term_d = f(d) * ((log d)^i / d - (log(d+1))^i / (d+1)), with the
    // d = 1, i = 0 term using (log 1)^0 = 1. Plain ascending long double
    // accumulation; the terms decay like (log d)^i / d^2.
    const i64 win_lo = N / 2;  // window (N/2, N] for the empirical constant
    long double acc = 0.0L;
    long double kmax = 0.0L;
    for (i64 d = 1; d <= N; ++d) {
        long double fd = f.integer_valued()
                             ? (long double)f.num[size_t(d)]
                             : (long double)f.num[size_t(d)] / f.den[size_t(d)];
        long double ld = logl((long double)d);
        long double ld1 = logl((long double)d + 1.0L);
        long double pi_d = i == 0 ? 1.0L : powl(ld, i);
        long double pi_d1 = i == 0 ? 1.0L : powl(ld1, i);
        long double term = fd * (pi_d / d - pi_d1 / (d + 1));
        acc += term;
        if (d > win_lo) {
            long double scaled = fabsl(term) * powl((long double)d, 2.0L - alpha);
            if (i > 0) scaled /= powl(ld, i);
            if (scaled > kmax) kmax = scaled;
        }
    }

    // integral_N^inf (log t)^i t^(alpha-2) dt by parts:
    //   I_0 = N^(alpha-1) / (1-alpha)
    //   I_j = ((log N)^j N^(alpha-1) + j I_{j-1}) / (1-alpha)
    const double c = 1.0 - alpha;
    const double L = std::log(double(N));
    double integral = std::pow(double(N), alpha - 1.0) / c;
    for (int j = 1; j <= i; ++j)
        integral = (std::pow(L, j) * std::pow(double(N), alpha - 1.0) + j * integral) / c;

    ConstantEstimate est;
    est.label = "C_" + std::to_string(i) + "(" + f.name + ")";
    est.value = double(acc);
    est.truncation_N = N;
    est.tail_bound = 2.0 * double(kmax) * integral;
    est.alpha_used = alpha;
    return est;
}

std::vector<ConstantEstimate> compute_aj(int r) {
    if (r < 1) throw DomainError("compute_aj: r must be >= 1");
    if (r > kStieltjesMax)
        throw UnsupportedError("compute_aj: r limited by stieltjes table");

    LaurentSeries zeta = LaurentSeries::zeta_expansion(kStieltjesMax);
    LaurentSeries num = zeta.pow(r);
    LaurentSeries inv = LaurentSeries::inv_one_plus_eps(kStieltjesMax + r);
    LaurentSeries c = num * inv;
    if (c.valid_order() < -1)
        throw InternalError("compute_aj: truncation cannot reach the residue");

    // residue of zeta(1+eps)^r x^(1+eps) / (1+eps) at eps = 0 equals
    // x * sum_j (log x)^j * c_{-1-j} / j!
    std::vector<ConstantEstimate> out;
    double fact = 1.0;
    for (int j = 0; j < r; ++j) {
        if (j > 0) fact *= j;
        ConstantEstimate e;
        e.label = "a_" + std::to_string(j) + "(r=" + std::to_string(r) + ")";
        e.value = c.coeff(-1 - j) / fact;
        e.truncation_N = c.valid_order();
        e.tail_bound = 0.0;  // closed form; only double rounding remains
        e.alpha_used = 0.0;
        out.push_back(std::move(e));
    }
    return out;
}

namespace {
double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int j = 1; j <= k; ++j) v = v * (n - k + j) / j;
    return v;
}
}  // namespace

MainTermPolynomial assemble_main_term(int r, std::span<const ConstantEstimate> a,
                                      std::span<const ConstantEstimate> C) {
    if (r < 1) throw DomainError("assemble_main_term: r must be >= 1");
    if (i64(a.size()) != r)
        throw ContractError("assemble_main_term: need exactly r coefficients a_j");
    if (i64(C.size()) < r)
        throw ContractError("assemble_main_term: need C_0..C_{r-1}");

    MainTermPolynomial poly;
    poly.r = r;
    poly.b.assign(size_t(r), 0.0);
    for (int k = 0; k < r; ++k) {
        double s = 0.0;
        for (int j = k; j < r; ++j) {
            double sign = (j - k) % 2 == 0 ? 1.0 : -1.0;
            s += binomial(j, j - k) * sign * a[size_t(j)].value * C[size_t(j - k)].value;
        }
        poly.b[size_t(k)] = s;
    }
    poly.a_inputs.assign(a.begin(), a.end());
    poly.c_inputs.assign(C.begin(), C.end());
    return poly;
}

double eval_main_term(const MainTermPolynomial& poly, i64 x) {
    if (x < 2) throw DomainError("eval_main_term: x must be >= 2");
    double lx = std::log(double(x));
    double acc = 0.0;
    for (size_t k = poly.b.size(); k-- > 0;) acc = acc * lx + poly.b[k];
    return double(x) * acc;
}

}  // namespace hypsum
