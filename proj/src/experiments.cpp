#include "hypsum/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "hypsum/errors.hpp"

namespace hypsum {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void check_grid(std::span<const i64> grid, i64 limit, i64 min_x) {
    if (grid.empty()) return;
    for (size_t k = 0; k < grid.size(); ++k) {
        if (k > 0 && grid[k] <= grid[k - 1])
            throw ContractError("grid must be strictly ascending");
        if (grid[k] < min_x)
            throw ContractError("grid x below minimum " + std::to_string(min_x));
        if (grid[k] > limit) throw RangeError("grid exceeds table limit");
    }
}

void finalize(ValidationReport& rep, double threshold) {
    std::vector<double> norm;
    norm.reserve(rep.records.size());
    for (const auto& rec : rep.records) norm.push_back(rec.normalized_error);
    TrendAssessment a = assess_trend(norm, threshold);
    rep.max_normalized = a.max_normalized;
    rep.trend_ratio = a.trend_ratio;
    rep.verdict = a.verdict;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::bounded:
            return "bounded";
        case Verdict::growing:
            return "growing";
        default:
            return "inconclusive";
    }
}

TrendAssessment assess_trend(std::span<const double> normalized, double threshold) {
    TrendAssessment a;
    for (double v : normalized) a.max_normalized = std::max(a.max_normalized, std::fabs(v));
    if (normalized.size() < 2) {
        a.verdict = Verdict::inconclusive;
        a.trend_ratio = 0.0;
        return a;
    }
    double first = std::fabs(normalized.front());
    double last = std::fabs(normalized.back());
    if (first == 0.0)
        a.trend_ratio = last == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    else
        a.trend_ratio = last / first;

    size_t half = normalized.size() / 2;
    double max_bottom = 0.0, max_top = 0.0;
    for (size_t k = 0; k < half; ++k) max_bottom = std::max(max_bottom, std::fabs(normalized[k]));
    for (size_t k = half; k < normalized.size(); ++k)
        max_top = std::max(max_top, std::fabs(normalized[k]));

    bool ok = a.trend_ratio <= threshold && max_top <= threshold * max_bottom;
    if (max_top == 0.0 && max_bottom == 0.0) ok = a.trend_ratio <= threshold;
    a.verdict = ok ? Verdict::bounded : Verdict::growing;
    return a;
}

ValidationReport validate_theorem1(const FunctionTable& f,
                                   const PrefixSumTable& tau_prefix, int r,
                                   std::span<const i64> x_grid, double threshold) {
    if (r < 2)
        throw DomainError("validate_theorem1: requires r >= 2");
    if (!f.has_beta())
        throw ContractError("validate_theorem1: table declares no mean-value exponent");
    check_grid(x_grid, std::min(f.limit, tau_prefix.limit), 16);

    auto a = compute_aj(r);
    std::vector<ConstantEstimate> C;
    for (int i = 0; i < r; ++i) C.push_back(compute_Ci(f, i, f.limit));
    MainTermPolynomial poly = assemble_main_term(r, a, C);

    ValidationReport rep;
    rep.config.kind = "theorem1";
    rep.config.f_name = f.name;
    rep.config.r = r;
    rep.config.grid.assign(x_grid.begin(), x_grid.end());
    rep.config.limit = f.limit;
    rep.config.threshold = threshold;
    rep.config.beta = f.beta;
    rep.config.ci_truncation_N = f.limit;
    rep.config.constants = a;
    rep.config.constants.insert(rep.config.constants.end(), C.begin(), C.end());

    std::string env_name = "x*log(x)^" + std::to_string(r - 2) + "*loglog(x)^" +
                           fmt_double(f.beta);
    for (i64 x : x_grid) {
        ExperimentRecord rec;
        rec.x = x;
        rec.r = r;
        rec.f_name = f.name;
        rec.exact = sum_blocks(f, tau_prefix, x).value;
        rec.main_term = eval_main_term(poly, x);
        rec.error = rec.exact.to_double() - rec.main_term;
        rec.envelope = double(x) * std::pow(std::log(double(x)), r - 2) *
                       std::pow(std::log(std::log(double(x))), f.beta);
        rec.normalized_error = rec.error / rec.envelope;
        rec.envelope_name = env_name;
        rep.records.push_back(std::move(rec));
    }
    finalize(rep, threshold);
    return rep;
}

ValidationReport validate_tau_formula(int r, std::span<const i64> x_grid,
                                      const PrefixSumTable& prefix, double threshold) {
    if (r < 2) throw DomainError("validate_tau_formula: requires r >= 2");
    if (prefix.r != r)
        throw ContractError("validate_tau_formula: prefix table is not tau_r");
    check_grid(x_grid, prefix.limit, 16);

    auto a = compute_aj(r);

    ValidationReport rep;
    rep.config.kind = "tau_formula";
    rep.config.f_name = prefix.weight_name;
    rep.config.r = r;
    rep.config.grid.assign(x_grid.begin(), x_grid.end());
    rep.config.limit = prefix.limit;
    rep.config.threshold = threshold;
    rep.config.beta = 0.0;
    rep.config.ci_truncation_N = 0;
    rep.config.constants = a;

    const int logpow = std::max(r - 2, 0);
    const double expo = 1.0 - 1.0 / double(r);
    std::string env_name = "x^" + fmt_double(expo) + "*log(x)^" + std::to_string(logpow);
    for (i64 x : x_grid) {
        ExperimentRecord rec;
        rec.x = x;
        rec.r = r;
        rec.f_name = prefix.weight_name;
        rec.exact = Rat128(i128(prefix.at(x)));
        double lx = std::log(double(x));
        double main = 0.0;
        for (size_t j = a.size(); j-- > 0;) main = main * lx + a[j].value;
        rec.main_term = double(x) * main;
        rec.error = rec.exact.to_double() - rec.main_term;
        rec.envelope = std::pow(double(x), expo) * std::pow(lx, logpow);
        rec.normalized_error = rec.error / rec.envelope;
        rec.envelope_name = env_name;
        rep.records.push_back(std::move(rec));
    }
    finalize(rep, threshold);
    return rep;
}

ValidationReport validate_single_sum(const FunctionTable& f, const FunctionTable& ones,
                                     std::span<const i64> x_grid, double threshold) {
    check_grid(x_grid, std::min(f.limit, ones.limit), 16);

    ConstantEstimate C0 = compute_Ci(f, 0, f.limit);

    ValidationReport rep;
    rep.config.kind = "single_sum";
    rep.config.f_name = f.name;
    rep.config.r = 1;
    rep.config.grid.assign(x_grid.begin(), x_grid.end());
    rep.config.limit = f.limit;
    rep.config.threshold = threshold;
    rep.config.beta = f.beta;
    rep.config.ci_truncation_N = f.limit;
    rep.config.constants = {C0};

    for (i64 x : x_grid) {
        ExperimentRecord rec;
        rec.x = x;
        rec.r = 1;
        rec.f_name = f.name;
        rec.exact = sum_direct(f, ones, 1, x).value;
        rec.main_term = C0.value * double(x);
        rec.error = rec.exact.to_double() - rec.main_term;
        rec.envelope = std::pow(double(x), 0.75);
        rec.normalized_error = rec.error / rec.envelope;
        rec.envelope_name = "x^0.75";
        rep.records.push_back(std::move(rec));
    }
    finalize(rep, threshold);
    return rep;
}

namespace {

using nlohmann::json;

json config_to_json(const ReportConfig& c) {
    json constants = json::array();
    for (const auto& e : c.constants)
        constants.push_back({{"label", e.label},
                             {"value", e.value},
                             {"truncation_N", e.truncation_N},
                             {"tail_bound", e.tail_bound},
                             {"alpha_used", e.alpha_used}});
    return {{"kind", c.kind},          {"f", c.f_name},
            {"r", c.r},                {"grid", c.grid},
            {"limit", c.limit},        {"threshold", c.threshold},
            {"beta", c.beta},          {"ci_truncation_N", c.ci_truncation_N},
            {"constants", constants}};
}

ReportConfig config_from_json(const json& j) {
    ReportConfig c;
    c.kind = j.at("kind").get<std::string>();
    c.f_name = j.at("f").get<std::string>();
    c.r = j.at("r").get<int>();
    c.grid = j.at("grid").get<std::vector<i64>>();
    c.limit = j.at("limit").get<i64>();
    c.threshold = j.at("threshold").get<double>();
    c.beta = j.at("beta").get<double>();
    c.ci_truncation_N = j.at("ci_truncation_N").get<i64>();
    for (const auto& e : j.at("constants")) {
        ConstantEstimate est;
        est.label = e.at("label").get<std::string>();
        est.value = e.at("value").get<double>();
        est.truncation_N = e.at("truncation_N").get<i64>();
        est.tail_bound = e.at("tail_bound").get<double>();
        est.alpha_used = e.at("alpha_used").get<double>();
        c.constants.push_back(std::move(est));
    }
    return c;
}

}  // namespace

void emit_report(const ValidationReport& report, ReportFormat format,
                 std::ostream& out) {
    if (format == ReportFormat::csv) {
        out << "x,r,f,exact_num,exact_den,main_term,error,normalized_error,envelope\n";
        for (const auto& rec : report.records) {
            out << rec.x << ',' << rec.r << ',' << rec.f_name << ','
                << i128_to_string(rec.exact.num) << ',' << i128_to_string(rec.exact.den)
                << ',' << fmt_double(rec.main_term) << ',' << fmt_double(rec.error)
                << ',' << fmt_double(rec.normalized_error) << ','
                << fmt_double(rec.envelope) << '\n';
        }
        if (!out) throw IoError("emit_report: write failed");
        return;
    }

    json records = json::array();
    for (const auto& rec : report.records)
        records.push_back({{"x", rec.x},
                           {"r", rec.r},
                           {"f", rec.f_name},
                           {"exact_num", i128_to_string(rec.exact.num)},
                           {"exact_den", i128_to_string(rec.exact.den)},
                           {"main_term", rec.main_term},
                           {"error", rec.error},
                           {"normalized_error", rec.normalized_error},
                           {"envelope", rec.envelope},
                           {"envelope_name", rec.envelope_name}});
    json j = {{"config", config_to_json(report.config)},
              {"records", records},
              {"max_normalized", report.max_normalized},
              {"trend_ratio", report.trend_ratio},
              {"verdict", verdict_name(report.verdict)}};
    out << j.dump(2) << '\n';
    if (!out) throw IoError("emit_report: write failed");
}

ValidationReport parse_report_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError(std::string("parse_report_json: ") + e.what());
    }
    ValidationReport rep;
    rep.config = config_from_json(j.at("config"));
    for (const auto& rj : j.at("records")) {
        ExperimentRecord rec;
        rec.x = rj.at("x").get<i64>();
        rec.r = rj.at("r").get<int>();
        rec.f_name = rj.at("f").get<std::string>();
        rec.exact.num = i128_from_string(rj.at("exact_num").get<std::string>());
        rec.exact.den = i128_from_string(rj.at("exact_den").get<std::string>());
        rec.main_term = rj.at("main_term").get<double>();
        rec.error = rj.at("error").get<double>();
        rec.normalized_error = rj.at("normalized_error").get<double>();
        rec.envelope = rj.at("envelope").get<double>();
        rec.envelope_name = rj.at("envelope_name").get<std::string>();
        rep.records.push_back(std::move(rec));
    }
    rep.max_normalized = j.at("max_normalized").get<double>();
    rep.trend_ratio = j.at("trend_ratio").get<double>();
    std::string v = j.at("verdict").get<std::string>();
    rep.verdict = v == "bounded"  ? Verdict::bounded
                  : v == "growing" ? Verdict::growing
                                   : Verdict::inconclusive;
    return rep;
}

}  // namespace hypsum
