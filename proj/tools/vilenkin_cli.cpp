// Command-line front end: lebesgue | diverge | strong | validate.
// Config is JSON; results go to CSV (default) or JSON. Exit codes:
// 0 success, 2 config error, 3 validation failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vilenkin/counterexample.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/operators.hpp"
#include "vilenkin/table.hpp"
#include "vilenkin/validate.hpp"

namespace {

using nlohmann::json;
using namespace vilenkin;

constexpr const char* kVersion = "1.0.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int depth_override = -1;
    std::int64_t nmax_override = -1;
    std::string phi_override;
    std::string alphas_override;
};

json load_config(const CommonOpts& opts) {
    json cfg = json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw ConfigError("cannot open config file: " + opts.config_path);
        try {
            in >> cfg;
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
    }
    if (opts.depth_override > 0) {
        cfg["radix"]["depth"] = opts.depth_override;
        if (!cfg["radix"].contains("const") && !cfg["radix"].contains("m"))
            cfg["radix"]["const"] = 2;
    }
    if (opts.nmax_override > 0) cfg["lebesgue"]["n_max"] = opts.nmax_override;
    if (!opts.phi_override.empty()) cfg["diverge"]["phi"] = opts.phi_override;
    if (!opts.alphas_override.empty()) {
        std::vector<int> alphas;
        std::stringstream ss(opts.alphas_override);
        std::string item;
        while (std::getline(ss, item, ',')) alphas.push_back(std::stoi(item));
        cfg["diverge"]["alphas"] = alphas;
    }
    return cfg;
}

RadixRef parse_radix(const json& cfg, int default_depth = 14) {
    try {
        if (!cfg.contains("radix")) return RadixSystem::constant(2, default_depth);
        const json& r = cfg["radix"];
        if (r.contains("m")) return RadixSystem::of(r["m"].get<std::vector<int>>());
        const int q = r.value("const", 2);
        const int depth = r.value("depth", default_depth);
        return RadixSystem::constant(q, depth);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad radix spec: ") + e.what());
    }
}

PhiFunction parse_phi(const json& spec) {
    if (spec.is_string()) return PhiFunction::from_name(spec.get<std::string>());
    if (spec.is_object()) {
        const std::string kind = spec.value("kind", "one");
        if (kind == "const") return PhiFunction::constant(spec.value("value", 1.0));
        if (kind == "table") {
            std::map<std::int64_t, double> tab;
            for (const auto& [k, v] : spec["values"].items())
                tab[std::stoll(k)] = v.get<double>();
            return PhiFunction::table(std::move(tab));
        }
        return PhiFunction::from_name(kind);
    }
    throw ConfigError("bad phi spec");
}

std::string config_hash(const json& cfg) {
    const std::size_t h = std::hash<std::string>{}(cfg.dump());
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016zx", h);
    return buf;
}

void fill_meta(ResultTable& table, const json& cfg,
               std::chrono::steady_clock::time_point start) {
    table.set_meta("config_hash", config_hash(cfg));
    table.set_meta("version", kVersion);
    table.set_meta("kernels", kernels::active().name);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    table.set_meta("wall_ms", std::to_string(ms));
}

void emit(const ResultTable& table, const CommonOpts& opts) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path);
        if (!file) throw ConfigError("cannot open output file: " + opts.out_path);
        out = &file;
    }
    if (opts.format == "json") table.write_json(*out);
    else if (opts.format == "csv") table.write_csv(*out);
    else throw ConfigError("format must be csv or json");
}

int run_lebesgue(const CommonOpts& opts) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(opts);
    const RadixRef rs = parse_radix(cfg);
    const json lcfg = cfg.value("lebesgue", json::object());
    const std::int64_t n_max = lcfg.value("n_max", std::int64_t{1024});
    int d = rs->depth();
    while (d > 1 && rs->modulus(d - 1) >= n_max) --d;  // smallest grid resolving n_max

    KernelScan scan;
    try {
        scan = lebesgue_scan(rs, d, n_max);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }

    std::vector<std::int64_t> grid;
    if (lcfg.contains("grid")) {
        grid = lcfg["grid"].get<std::vector<std::int64_t>>();
    } else if (n_max <= 1024) {
        for (std::int64_t n = 1; n <= n_max; ++n) grid.push_back(n);
    } else {
        // powers of two and the moduli M_j
        for (std::int64_t n = 1; n <= n_max; n *= 2) grid.push_back(n);
        for (int j = 0; j <= rs->depth() && rs->modulus(j) <= n_max; ++j)
            grid.push_back(rs->modulus(j));
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    }

    ResultTable table({"n", "L_n", "A_n", "A_over_ln_n", "L_over_ln_n"});
    for (std::int64_t n : grid) {
        if (n < 1 || n > n_max) throw ConfigError("grid value outside [1, n_max]");
        const double L = scan.L[static_cast<std::size_t>(n)];
        const double A = scan.A[static_cast<std::size_t>(n)];
        const double ln = n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
        table.add_row({n, L, A, n >= 2 ? A / ln : 0.0, n >= 2 ? L / ln : 0.0});
    }
    fill_meta(table, cfg, start);
    emit(table, opts);
    return 0;
}

CounterexampleConfig parse_counterexample(const json& cfg, const RadixRef& rs) {
    const json dcfg = cfg.value("diverge", json::object());
    CounterexampleConfig ce;
    ce.rs = rs;
    ce.depth = rs->depth();
    ce.alphas = dcfg.value("alphas", std::vector<int>{3, 7, 12});
    // drop default checkpoints that do not fit a shallow system
    if (!dcfg.contains("alphas"))
        std::erase_if(ce.alphas, [&](int a) { return a >= ce.depth; });
    ce.phi = dcfg.contains("phi") ? parse_phi(dcfg["phi"]) : PhiFunction::sqrt_log();
    ce.cond1_threshold = dcfg.value("cond1_threshold", 2.0);
    try {
        ce.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return ce;
}

int run_diverge(const CommonOpts& opts) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(opts);
    const RadixRef rs = parse_radix(cfg);
    const CounterexampleConfig ce = parse_counterexample(cfg, rs);
    const DivergenceLedger ledger = divergence_experiment(ce);

    ResultTable table({"k", "alpha", "M_alpha", "lambda", "n", "Q", "in_block_mean",
                       "B", "sum_lambda", "proxy_norm"});
    for (const auto& row : ledger.rows)
        table.add_row({std::int64_t{row.k}, std::int64_t{row.alpha}, row.m_alpha,
                       row.lambda, row.n, row.q, row.in_block_mean, row.lower_bound,
                       ledger.sum_lambda, ledger.proxy_norm});
    if (ledger.rows.size() > 1)
        table.set_meta("q_increasing", ledger.q_increasing ? "true" : "false");
    table.set_meta("phi", ce.phi.name());
    fill_meta(table, cfg, start);
    emit(table, opts);
    return 0;
}

struct StrongFunction {
    CylinderFunction f;
    double h1_upper = std::numeric_limits<double>::quiet_NaN();
};

StrongFunction parse_function(const json& spec, const json& cfg, const RadixRef& rs) {
    const std::string kind = spec.value("kind", "character");
    if (kind == "character") {
        const std::int64_t index = spec.value("index", std::int64_t{5});
        return {refine(character(rs, index), rs->depth()), std::numeric_limits<double>::quiet_NaN()};
    }
    if (kind == "constant") {
        const double value = spec.value("value", 1.0);
        return {CylinderFunction::constant(rs, rs->depth(), Complex{value, 0.0}),
                std::abs(value)};  // value * unit atom
    }
    if (kind == "zero")
        return {CylinderFunction::zero(rs, rs->depth()), 0.0};
    if (kind == "counterexample") {
        const CounterexampleConfig ce = parse_counterexample(cfg, rs);
        auto [f, dec] = assemble_f(ce);
        return {std::move(f), h1_upper_bound(dec)};
    }
    if (kind == "random_atoms") {
        const int count = spec.value("count", 4);
        std::mt19937_64 rng(spec.value("seed", std::uint64_t{1}));
        std::uniform_int_distribution<int> pick(1, rs->depth() - 1);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        AtomicDecomposition dec;
        dec.rs = rs;
        dec.depth = rs->depth();
        for (int i = 0; i < count; ++i)
            dec.terms.emplace_back(Complex{coef(rng), coef(rng)},
                                   atom_k(rs, pick(rng), rs->depth()));
        return {dec.assemble(), h1_upper_bound(dec)};
    }
    throw ConfigError("unknown function kind: " + kind);
}

int run_strong(const CommonOpts& opts) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(opts);
    const RadixRef rs = parse_radix(cfg, 8);
    const json scfg = cfg.value("strong", json::object());
    const StrongFunction sf =
        parse_function(scfg.value("function", json::object()), cfg, rs);
    std::vector<std::int64_t> grid =
        scfg.value("n_grid", std::vector<std::int64_t>{4, 16, 64, 256, 1024});

    ResultTable table({"n", "G", "T_log", "T_unif", "R"});
    const bool zero = lp_norm(sf.f, 2.0) == 0.0;
    for (std::int64_t n : grid) {
        if (n < 2) throw ConfigError("strong n grid values must be >= 2");
        const double g = zero ? 0.0 : strong_mean_gat(sf.f, n);
        const double t_log = zero ? 0.0 : strong_sum_normalized(sf.f, n, StrongWeight::Log);
        const double t_unif =
            zero ? 0.0 : strong_sum_normalized(sf.f, n, StrongWeight::Uniform);
        const double r = sf.h1_upper > 0.0 ? t_log / sf.h1_upper : 0.0;
        table.add_row({n, g, t_log, t_unif,
                       std::isnan(sf.h1_upper) ? ResultTable::Cell{std::string("")}
                                               : ResultTable::Cell{r}});
    }
    fill_meta(table, cfg, start);
    emit(table, opts);
    return 0;
}

int run_validate(const CommonOpts& opts, bool corrupt) {
    const auto start = std::chrono::steady_clock::now();
    const json cfg = load_config(opts);
    const RadixRef rs = parse_radix(cfg, 6);
    const int d = rs->depth();
    const auto results = run_identity_suite(rs, d, corrupt ? 1e-6 : 0.0);

    ResultTable table({"identity", "max_residual", "tolerance", "pass"});
    std::string failed;
    for (const auto& r : results) {
        table.add_row({r.name, r.residual, r.tol, std::string(r.pass ? "yes" : "no")});
        if (!r.pass && failed.empty()) failed = r.name;
    }
    fill_meta(table, cfg, start);
    emit(table, opts);
    if (!failed.empty()) {
        json err = {{"error", "validation_failure"}, {"identity", failed}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return 0;
}

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--config", opts.config_path, "JSON config file");
    sub->add_option("--out", opts.out_path, "output path (default stdout)");
    sub->add_option("--format", opts.format, "csv|json")->default_str("csv");
    sub->add_option("--depth", opts.depth_override, "override radix depth");
    sub->add_option("--nmax", opts.nmax_override, "override lebesgue n_max");
    sub->add_option("--phi", opts.phi_override, "override phi kind");
    sub->add_option("--alphas", opts.alphas_override, "override alphas, comma separated");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vilenkin-system Fourier analysis experiments"};
    app.require_subcommand(1);

    CommonOpts lopts, dopts, sopts, vopts;
    bool corrupt = false;
    add_common(app.add_subcommand("lebesgue", "Dirichlet kernel L1-norm scan"), lopts);
    add_common(app.add_subcommand("diverge", "divergence ledger for the atom-sum function"), dopts);
    add_common(app.add_subcommand("strong", "strong (logarithmic) means of partial sums"), sopts);
    auto* vsub = app.add_subcommand("validate", "exact-identity suite");
    add_common(vsub, vopts);
    vsub->add_flag("--corrupt", corrupt, "perturb a kernel (negative-control test mode)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("lebesgue")) return run_lebesgue(lopts);
        if (app.got_subcommand("diverge")) return run_diverge(dopts);
        if (app.got_subcommand("strong")) return run_strong(sopts);
        if (app.got_subcommand("validate")) return run_validate(vopts, corrupt);
    } catch (const ConfigError& e) {
        nlohmann::json err = {{"error", "config_error"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", "internal_error"}, {"detail", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
