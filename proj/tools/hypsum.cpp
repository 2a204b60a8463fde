// Command-line front end: sieve tables (with on-disk caching), exact
// hyperbolic sums, asymptotic constants, main-term polynomials, and grid
// validation reports.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypsum/constants.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/experiments.hpp"
#include "hypsum/hypersum.hpp"
#include "hypsum/sieves.hpp"
#include "hypsum/table_io.hpp"

namespace fs = std::filesystem;
using namespace hypsum;

namespace {

struct CacheOpts {
    std::string dir;
    bool disabled = false;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("HYPSUM_CACHE")) return env;
    return ".hypsum-cache";
}

std::string sanitize_key(const std::string& name) {
    std::string out;
    for (char c : name)
        out.push_back((std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_');
    return out;
}

fs::path cache_file(const CacheOpts& cache, const std::string& name, i64 limit) {
    return fs::path(cache.dir) / (sanitize_key(name) + "-" + std::to_string(limit) + ".hsv1");
}

// Build (or load from cache) a catalog function table at the given limit.
FunctionTable get_function(const std::string& name, i64 limit, const CacheOpts& cache,
                           const SpfTable*& spf_slot, std::optional<SpfTable>& spf_store) {
    fs::path file = cache_file(cache, name, limit);
    if (!cache.disabled && fs::exists(file)) {
        FunctionTable t = load_table(file);
        if (t.limit == limit) {
            // format carries values only; metadata comes from the catalog
            SpfTable tiny = build_spf(2);
            FunctionTable meta = catalog(name, tiny);
            t.name = meta.name;
            t.alpha = meta.alpha;
            t.beta = meta.beta;
            return t;
        }
    }
    if (!spf_store || spf_store->limit < limit) spf_store.emplace(build_spf(limit));
    spf_slot = &*spf_store;
    FunctionTable t = catalog(name, *spf_store);
    if (!cache.disabled) {
        fs::create_directories(cache.dir);
        save_table(t, file);
    }
    return t;
}

FunctionTable get_tau_table(int r, i64 limit, const CacheOpts& cache,
                            std::optional<SpfTable>& spf_store) {
    std::string name = "tau_r" + std::to_string(r);
    fs::path file = cache_file(cache, name, limit);
    if (!cache.disabled && fs::exists(file)) {
        FunctionTable t = load_table(file);
        if (t.limit == limit) {
            t.name = name;
            return t;
        }
    }
    if (!spf_store || spf_store->limit < limit) spf_store.emplace(build_spf(limit));
    FunctionTable t = sieve_tau_r(*spf_store, r);
    if (!cache.disabled) {
        fs::create_directories(cache.dir);
        save_table(t, file);
    }
    return t;
}

std::vector<i64> parse_grid(const std::string& s) {
    std::vector<i64> grid;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) throw DomainError("grid: empty entry");
        char* end = nullptr;
        long double v = strtold(tok.c_str(), &end);
        if (end == nullptr || *end != '\0')
            throw DomainError("grid: cannot parse '" + tok + "'");
        if (v < 1.0L || v > 9.2e18L) throw DomainError("grid: value out of range");
        i64 iv = (i64)v;
        if ((long double)iv != v)
            throw DomainError("grid: non-integral value '" + tok + "'");
        grid.push_back(iv);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

std::ostream& open_output(const std::string& out_path, std::ofstream& file_stream) {
    if (out_path.empty()) return std::cout;
    file_stream.open(out_path, std::ios::trunc);
    if (!file_stream) throw IoError("cannot open output file " + out_path);
    return file_stream;
}

int cmd_sieve(const std::string& f_name, i64 limit, const CacheOpts& cache) {
    std::optional<SpfTable> spf;
    const SpfTable* slot = nullptr;
    FunctionTable t = get_function(f_name, limit, cache, slot, spf);
    std::cout << "table " << t.name << " limit " << t.limit;
    if (t.has_alpha()) std::cout << " alpha " << t.alpha;
    if (t.has_beta()) std::cout << " beta " << t.beta;
    std::cout << "\nfirst values:";
    for (i64 n = 1; n <= std::min<i64>(t.limit, 12); ++n)
        std::cout << ' ' << to_string(t.value(n));
    std::cout << '\n';
    return 0;
}

int cmd_sum(const std::string& f_name, int r, i64 x, const std::string& method,
            const CacheOpts& cache) {
    if (r < 1) throw DomainError("sum: r must be >= 1");
    std::optional<SpfTable> spf;
    const SpfTable* slot = nullptr;
    FunctionTable f = get_function(f_name, x, cache, slot, spf);
    FunctionTable w = get_tau_table(r, x, cache, spf);

    std::optional<SumResult> res_d, res_b;
    if (method == "direct" || method == "both") res_d = sum_direct(f, w, r, x);
    if (method == "blocks" || method == "both") {
        PrefixSumTable prefix = build_prefix(w, r);
        res_b = sum_blocks(f, prefix, x);
    }
    if (res_d && res_b && !(res_d->value == res_b->value))
        throw InternalError("sum: direct and block evaluations disagree");

    const SumResult& res = res_d ? *res_d : *res_b;
    std::cout << "S_{" << f_name << "," << r << "}(" << x
              << ") = " << to_string(res.value) << "  method: "
              << (res_d && res_b ? "direct+blocks (equal)"
                                 : method_name(res.method))
              << '\n';
    return 0;
}

int cmd_constants(const std::string& f_name, int i, i64 N, const CacheOpts& cache) {
    std::optional<SpfTable> spf;
    const SpfTable* slot = nullptr;
    FunctionTable f = get_function(f_name, N, cache, slot, spf);
    ConstantEstimate est = compute_Ci(f, i, N);
    std::cout << est.label << " = " << est.value << "  (N=" << est.truncation_N
              << ", tail bound " << est.tail_bound << ", alpha " << est.alpha_used
              << ")\n";
    return 0;
}

int cmd_main_term(const std::string& f_name, int r, i64 N, const CacheOpts& cache) {
    std::optional<SpfTable> spf;
    const SpfTable* slot = nullptr;
    FunctionTable f = get_function(f_name, N, cache, slot, spf);
    auto a = compute_aj(r);
    std::vector<ConstantEstimate> C;
    for (int i = 0; i < r; ++i) C.push_back(compute_Ci(f, i, N));
    MainTermPolynomial poly = assemble_main_term(r, a, C);
    for (const auto& e : a)
        std::cout << e.label << " = " << e.value << '\n';
    for (const auto& e : C)
        std::cout << e.label << " = " << e.value << "  (tail " << e.tail_bound << ")\n";
    for (int k = r - 1; k >= 0; --k)
        std::cout << "b_" << k << " = " << poly.b[size_t(k)]
                  << "   [coefficient of x*(log x)^" << k << "]\n";
    return 0;
}

int cmd_validate(const std::string& kind, const std::string& f_name, int r,
                 const std::vector<i64>& grid, i64 limit, double threshold,
                 const std::string& format, const std::string& out_path,
                 const CacheOpts& cache) {
    if (grid.empty()) throw DomainError("validate: empty grid");
    std::optional<SpfTable> spf;
    const SpfTable* slot = nullptr;

    ValidationReport rep;
    if (kind == "theorem1") {
        FunctionTable f = get_function(f_name, limit, cache, slot, spf);
        FunctionTable w = get_tau_table(r, limit, cache, spf);
        PrefixSumTable prefix = build_prefix(w, r);
        rep = validate_theorem1(f, prefix, r, grid, threshold);
    } else if (kind == "tau") {
        FunctionTable w = get_tau_table(r, limit, cache, spf);
        PrefixSumTable prefix = build_prefix(w, r);
        rep = validate_tau_formula(r, grid, prefix, threshold);
    } else if (kind == "single") {
        FunctionTable f = get_function(f_name, limit, cache, slot, spf);
        FunctionTable ones = get_tau_table(1, limit, cache, spf);
        rep = validate_single_sum(f, ones, grid, threshold);
    } else {
        throw DomainError("validate: unknown kind '" + kind + "'");
    }

    std::ofstream file_stream;
    std::ostream& out = open_output(out_path, file_stream);
    emit_report(rep, format == "json" ? ReportFormat::json : ReportFormat::csv, out);
    out.flush();
    std::cerr << "verdict: " << verdict_name(rep.verdict)
              << "  max_normalized: " << rep.max_normalized
              << "  trend_ratio: " << rep.trend_ratio << '\n';
    return rep.verdict == Verdict::growing ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyperbolic sums, asymptotic constants and validation"};
    app.require_subcommand(1);

    std::string f_name = "omega";
    std::string method = "both";
    std::string kind = "theorem1";
    std::string format = "csv";
    std::string grid_str;
    std::string out_path;
    std::string cache_dir = default_cache_dir();
    bool no_cache = false;
    int r = 2;
    int ci_index = 0;
    i64 x = 0;
    i64 limit = 0;
    double threshold = kDefaultTrendThreshold;

    auto add_cache_opts = [&](CLI::App* sub) {
        sub->add_option("--cache", cache_dir, "cache directory for sieve tables");
        sub->add_flag("--no-cache", no_cache, "ignore and do not write the table cache");
    };

    auto* sieve = app.add_subcommand("sieve", "build and cache a function table");
    sieve->add_option("--f", f_name, "catalog function name")->required();
    sieve->add_option("--limit", limit, "tabulation limit")->required();
    add_cache_opts(sieve);

    auto* sum = app.add_subcommand("sum", "exact S_{f,r}(x)");
    sum->add_option("--f", f_name, "catalog function name")->required();
    sum->add_option("--r", r, "number of factors in the hyperbola")->required();
    sum->add_option("--x", x, "summation limit")->required();
    sum->add_option("--method", method, "direct | blocks | both")
        ->check(CLI::IsMember({"direct", "blocks", "both"}));
    add_cache_opts(sum);

    auto* consts = app.add_subcommand("constants", "series constant C_i(f)");
    consts->add_option("--f", f_name, "catalog function name")->required();
    consts->add_option("--i", ci_index, "log power i")->required();
    consts->add_option("--N", limit, "truncation point")->required();
    add_cache_opts(consts);

    auto* mt = app.add_subcommand("main-term", "a_j, C_i and main-term coefficients");
    mt->add_option("--f", f_name, "catalog function name")->required();
    mt->add_option("--r", r, "number of factors")->required();
    mt->add_option("--N", limit, "C_i truncation point (default 1e6)");
    add_cache_opts(mt);

    auto* val = app.add_subcommand("validate", "grid validation report");
    val->add_option("--kind", kind, "theorem1 | tau | single")
        ->check(CLI::IsMember({"theorem1", "tau", "single"}));
    val->add_option("--f", f_name, "catalog function name");
    val->add_option("--r", r, "number of factors");
    val->add_option("--grid", grid_str, "comma list, scientific shorthand ok")->required();
    val->add_option("--limit", limit, "table limit (default: max of grid)");
    val->add_option("--threshold", threshold, "trend threshold for the verdict");
    val->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    val->add_option("--out", out_path, "write report here instead of stdout");
    add_cache_opts(val);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    CacheOpts cache{cache_dir, no_cache};
    try {
        if (sieve->parsed()) return cmd_sieve(f_name, limit, cache);
        if (sum->parsed()) return cmd_sum(f_name, r, x, method, cache);
        if (consts->parsed()) return cmd_constants(f_name, ci_index, limit, cache);
        if (mt->parsed()) return cmd_main_term(f_name, r, limit > 0 ? limit : 1000000, cache);
        if (val->parsed()) {
            std::vector<i64> grid = parse_grid(grid_str);
            i64 lim = limit > 0 ? limit : grid.back();
            if (lim < grid.back())
                throw DomainError("validate: limit below largest grid point");
            return cmd_validate(kind, f_name, r, grid, lim, threshold, format,
                                out_path, cache);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
