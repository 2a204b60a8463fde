#pragma once
#include <span>
#include <string>
#include <vector>

#include "hypsum/rational.hpp"
#include "hypsum/sieves.hpp"

namespace hypsum {

// Truncated Laurent expansion in eps = s - 1. Coefficients cover
// eps^(-pole_order) .. eps^(valid_order); arithmetic tracks how far the
// truncation stays trustworthy, so reading past it is an error rather than
// a silent zero.
class LaurentSeries {
  public:
    LaurentSeries(int pole_order, int valid_order);

    static LaurentSeries one(int valid_order);
    // zeta(1+eps) = 1/eps + sum_{k>=0} (-1)^k gamma_k eps^k / k!
    static LaurentSeries zeta_expansion(int valid_order);
    // 1/(1+eps) = sum_{m>=0} (-1)^m eps^m
    static LaurentSeries inv_one_plus_eps(int valid_order);

    int pole_order() const { return pole_; }
    int valid_order() const { return valid_; }

    double coeff(int k) const;        // throws InternalError past valid_order
    void set_coeff(int k, double v);  // within the declared window only

    LaurentSeries operator*(const LaurentSeries& rhs) const;
    LaurentSeries operator+(const LaurentSeries& rhs) const;
    LaurentSeries pow(int e) const;   // e >= 1
    LaurentSeries inverse() const;    // leading coefficient must be nonzero

  private:
    int pole_;   // p >= 0
    int valid_;  // K >= -p
    std::vector<double> c_;  // c_[k + pole_] = coefficient of eps^k
};

// Stieltjes constants gamma_0..gamma_k from a built-in table good to at
// least 12 decimal digits. Supported up to k = 8.
std::vector<double> stieltjes(int k_max);
inline constexpr int kStieltjesMax = 8;

// A numerically computed constant together with the truncation point it was
// computed at and a rigorous bound on the truncation error.
struct ConstantEstimate {
    std::string label;
    double value = 0.0;
    i64 truncation_N = 0;
    double tail_bound = 0.0;
    double alpha_used = 0.0;
};

// C_i(f) = sum_{d>=1} f(d) * ((log d)^i / d - (log(d+1))^i / (d+1)),
// truncated at N. The tail bound is
//   K * integral_N^inf (log t)^i / t^(2-alpha) dt
// with the integral in closed form (incomplete-gamma recursion) and K an
// empirical bound on |term_d| * d^(2-alpha) / (log d)^i over d in (N/2, N],
// inflated by a factor of 2. Convention: (log d)^0 = 1 including d = 1.
ConstantEstimate compute_Ci(const FunctionTable& f, int i, i64 N);

// Coefficients a_0..a_{r-1} of the polynomial P with
// T_r(x) = x * P(log x) + error:  a_j = (1/j!) * [eps^(-1-j)] of
// zeta(1+eps)^r / (1+eps). Exact modulo double rounding; r <= 8.
std::vector<ConstantEstimate> compute_aj(int r);

// Main-term polynomial: S_{f,r}(x) ~ x * sum_k b[k] (log x)^k with
//   b[k] = sum_{j=k}^{r-1} C(j, j-k) (-1)^(j-k) a_j C_{j-k}
struct MainTermPolynomial {
    int r = 0;
    std::vector<double> b;  // b[k] multiplies x * (log x)^k
    std::vector<ConstantEstimate> a_inputs;
    std::vector<ConstantEstimate> c_inputs;
};

MainTermPolynomial assemble_main_term(int r, std::span<const ConstantEstimate> a,
                                      std::span<const ConstantEstimate> C);

double eval_main_term(const MainTermPolynomial& poly, i64 x);

}  // namespace hypsum
