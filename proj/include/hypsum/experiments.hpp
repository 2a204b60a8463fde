#pragma once
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hypsum/constants.hpp"
#include "hypsum/hypersum.hpp"
#include "hypsum/rational.hpp"
#include "hypsum/sieves.hpp"

namespace hypsum {

// One grid point of an asymptotic validation: the exact sum, the main term,
// and the error normalized by the claimed envelope.
struct ExperimentRecord {
    i64 x = 0;
    int r = 0;
    std::string f_name;
    Rat128 exact;
    double main_term = 0.0;
    double error = 0.0;             // exact - main_term
    double normalized_error = 0.0;  // error / envelope(x)
    double envelope = 0.0;          // envelope value at x
    std::string envelope_name;
};

enum class Verdict { bounded, growing, inconclusive };
const char* verdict_name(Verdict v);

struct TrendAssessment {
    double max_normalized = 0.0;
    double trend_ratio = 0.0;  // |normalized| at largest x over smallest x
    Verdict verdict = Verdict::inconclusive;
};

// bounded iff trend_ratio <= threshold AND the max |normalized| over the top
// half of the grid is at most threshold times the max over the bottom half.
// Fewer than two points cannot show a trend -> inconclusive.
TrendAssessment assess_trend(std::span<const double> normalized, double threshold);

struct ReportConfig {
    std::string kind;  // theorem1 | tau_formula | single_sum
    std::string f_name;
    int r = 0;
    std::vector<i64> grid;
    i64 limit = 0;
    double threshold = 2.0;
    double beta = 0.0;
    i64 ci_truncation_N = 0;
    std::vector<ConstantEstimate> constants;  // a_j and C_i actually used
};

struct ValidationReport {
    std::vector<ExperimentRecord> records;  // ascending x
    double max_normalized = 0.0;
    double trend_ratio = 0.0;
    Verdict verdict = Verdict::inconclusive;
    ReportConfig config;
};

inline constexpr double kDefaultTrendThreshold = 2.0;

// S_{f,r}(x) against the double-sum main term built from a_j and C_i
// (C_i truncated at N = f.limit), normalized by x (log x)^(r-2) (log log x)^beta.
ValidationReport validate_theorem1(const FunctionTable& f,
                                   const PrefixSumTable& tau_prefix, int r,
                                   std::span<const i64> x_grid,
                                   double threshold = kDefaultTrendThreshold);

// T_r(x) against x * sum_j a_j (log x)^j, normalized by
// x^(1-1/r) (log x)^max(r-2,0).
ValidationReport validate_tau_formula(int r, std::span<const i64> x_grid,
                                      const PrefixSumTable& prefix,
                                      double threshold = kDefaultTrendThreshold);

// S_f(x) (r = 1, weights identically 1) against C_0 x, normalized by x^(3/4).
ValidationReport validate_single_sum(const FunctionTable& f,
                                     const FunctionTable& ones,
                                     std::span<const i64> x_grid,
                                     double threshold = kDefaultTrendThreshold);

enum class ReportFormat { csv, json };

void emit_report(const ValidationReport& report, ReportFormat format,
                 std::ostream& out);

// Inverse of the JSON emit; used by tooling and round-trip tests.
ValidationReport parse_report_json(std::istream& in);

}  // namespace hypsum
