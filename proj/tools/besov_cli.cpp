#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "besov/dyadic.hpp"
#include "besov/errors.hpp"
#include "besov/experiments.hpp"
#include "besov/io.hpp"
#include "besov/params.hpp"
#include "besov/smoothness.hpp"
#include "besov/wavelet.hpp"

namespace {

using besov::Characterization;
using besov::Grid;
using besov::NormBreakdown;
using besov::SampledFunction;
using besov::SmoothnessParams;
using nlohmann::json;
namespace ex = besov::experiments;

Grid parse_grid(const std::string& text) {
    int d = 0, W = 0, r = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d,%d,%d%c", &d, &W, &r, &extra) != 3)
        throw besov::invalid_params_error("--grid expects 'd,W,r' (e.g. 1,64,6), got '" + text + "'");
    return Grid(d, W, r);
}

std::vector<double> parse_heights(const std::string& text) {
    std::vector<double> out;
    std::string item;
    for (std::stringstream ss(text); std::getline(ss, item, ',');) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw besov::invalid_params_error("--heights expects comma-separated numbers, got '" +
                                              item + "'");
        }
    }
    if (out.empty()) throw besov::invalid_params_error("--heights is empty");
    return out;
}

NormBreakdown compute_breakdown(const SampledFunction& f, Characterization ch,
                                const SmoothnessParams& params) {
    switch (ch) {
        case Characterization::fourier: return besov::besov_norm_fourier(f, params);
        case Characterization::difference: return besov::besov_norm_difference(f, params);
        case Characterization::wavelet: return besov::besov_norm_wavelet(f, params);
    }
    throw besov::invalid_params_error("unreachable characterization");
}

void print_breakdown_text(const NormBreakdown& b) {
    std::printf("characterization: %s\n", besov::to_string(b.characterization).c_str());
    std::printf("grid: d=%d W=%d r=%d (%lld samples)\n", b.grid.d, b.grid.W, b.grid.r,
                static_cast<long long>(b.grid.size()));
    std::printf("s=%g p=%g q=%g", b.s, b.p, b.q);
    if (b.m > 0) std::printf(" m=%d", b.m);
    std::printf("\ntotal: %.17g\n", b.total);
    if (b.has_side_term) std::printf("side term: %.17g\n", b.side_term);
    for (const auto& t : b.terms) {
        if (t.orientation > 0)
            std::printf("  level %d orientation %d: %.17g\n", t.k, t.orientation, t.value);
        else
            std::printf("  k %d: %.17g\n", t.k, t.value);
    }
    for (const auto& n : b.notes) std::printf("  note: %s\n", n.c_str());
}

int cmd_norm(const std::string& file, const std::string& ch_name, const std::string& compare_name,
             const SmoothnessParams& params, bool as_json) {
    SampledFunction f = besov::read_function(file);
    Characterization ch = besov::characterization_from_string(ch_name);
    NormBreakdown b = compute_breakdown(f, ch, params);
    if (compare_name.empty()) {
        if (as_json)
            std::printf("%s\n", b.to_json().c_str());
        else
            print_breakdown_text(b);
        return 0;
    }
    Characterization ch2 = besov::characterization_from_string(compare_name);
    NormBreakdown b2 = compute_breakdown(f, ch2, params);
    double ratio = b2.total > 0.0 ? b.total / b2.total : besov::infinity;
    if (as_json) {
        json j;
        j["first"] = json::parse(b.to_json());
        j["second"] = json::parse(b2.to_json());
        j["ratio_first_over_second"] = ratio;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("%s total: %.17g\n", besov::to_string(ch).c_str(), b.total);
        std::printf("%s total: %.17g\n", besov::to_string(ch2).c_str(), b2.total);
        std::printf("ratio %s/%s: %.17g\n", besov::to_string(ch).c_str(),
                    besov::to_string(ch2).c_str(), ratio);
    }
    return 0;
}

int cmd_compare(const std::string& file, const SmoothnessParams& params, bool as_json) {
    SampledFunction f = besov::read_function(file);
    const Characterization chs[] = {Characterization::fourier, Characterization::difference,
                                    Characterization::wavelet};
    double totals[3];
    for (int i = 0; i < 3; ++i) totals[i] = compute_breakdown(f, chs[i], params).total;
    if (as_json) {
        json j;
        for (int i = 0; i < 3; ++i) j["totals"][besov::to_string(chs[i])] = totals[i];
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k) {
                std::string key =
                    besov::to_string(chs[i]) + "_over_" + besov::to_string(chs[k]);
                j["ratios"][key] = totals[k] > 0.0 ? totals[i] / totals[k] : besov::infinity;
            }
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        for (int i = 0; i < 3; ++i)
            std::printf("%-10s %.17g\n", besov::to_string(chs[i]).c_str(), totals[i]);
        for (int i = 0; i < 3; ++i)
            for (int k = i + 1; k < 3; ++k)
                std::printf("%s/%s: %.6g\n", besov::to_string(chs[i]).c_str(),
                            besov::to_string(chs[k]).c_str(),
                            totals[k] > 0.0 ? totals[i] / totals[k] : besov::infinity);
    }
    return 0;
}

struct ExperimentConfig {
    std::string suite;
    ex::SuiteOptions opts;
};

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw besov::io_error("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw besov::invalid_params_error("config '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw besov::invalid_params_error("config must be a JSON object");
    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "suite") {
            cfg.suite = value.get<std::string>();
        } else if (key == "seed") {
            cfg.opts.seed = value.get<uint64_t>();
        } else if (key == "out") {
            cfg.opts.out_dir = value.get<std::string>();
        } else if (key == "budget") {
            int b = value.get<int>();
            if (b < 1) throw besov::invalid_params_error("config budget must be >= 1");
            cfg.opts.budget_random = b;
        } else {
            throw besov::invalid_params_error("config key '" + key +
                                              "' is not recognized (suite, seed, out, budget)");
        }
    }
    if (cfg.suite.empty()) throw besov::invalid_params_error("config needs a 'suite' name");
    return cfg;
}

int run_suites(const std::string& suite, const ex::SuiteOptions& opts) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = ex::suite_names();
    } else {
        auto all = ex::suite_names();
        if (std::find(all.begin(), all.end(), suite) == all.end()) {
            std::string msg = "unknown suite '" + suite + "'; available: all";
            for (const auto& s : all) msg += " " + s;
            throw besov::invalid_params_error(msg);
        }
        names.push_back(suite);
    }
    bool all_pass = true;
    for (const auto& name : names) {
        ex::SuiteReport rep = ex::run_suite(name, opts);
        all_pass = all_pass && rep.pass;
        std::printf("[%s] %s (%zu rows, %zu fits, %zu intervals, %zu criteria)\n",
                    rep.pass ? "PASS" : "FAIL", name.c_str(), rep.rows.size(), rep.fits.size(),
                    rep.ratios.size(), rep.criteria.size());
        if (!rep.pass) {
            for (const auto& f : rep.fits)
                if (!f.pass)
                    std::printf("  fit %s: slope %.4g vs %.4g +- %.2g (r2 %.4g)\n", f.name.c_str(),
                                f.fitted, f.expected, f.tol, f.r2);
            for (const auto& c : rep.ratios)
                if (!c.pass)
                    std::printf("  interval %s: [%.4g, %.4g] outside [%.4g, %.4g]\n",
                                c.name.c_str(), c.lo, c.hi, c.bound_lo, c.bound_hi);
            for (const auto& c : rep.criteria)
                if (!c.pass) std::printf("  criterion %s: %s\n", c.name.c_str(), c.details.c_str());
        }
        if (!opts.out_dir.empty())
            std::printf("  wrote %s/%s.{csv,json}\n", opts.out_dir.c_str(), name.c_str());
    }
    return all_pass ? 0 : 1;
}

int cmd_extremal(const std::string& kind, const Grid& grid, int count,
                 const std::string& heights_text, int level_lo, double s, double p,
                 const std::string& out, const std::string& out_g) {
    std::vector<double> heights;
    if (!heights_text.empty())
        heights = parse_heights(heights_text);
    else
        heights.assign(size_t(count), 1.0);
    json j;
    if (kind == "bump-train") {
        ex::Extremal e = ex::bump_train(grid, heights);
        besov::write_function(out, e.f);
        j["kind"] = e.spec.kind;
        j["count"] = e.spec.count;
        j["spacing"] = e.spec.spacing;
        j["notes"] = e.spec.notes;
        j["file"] = out;
    } else if (kind == "lacunary") {
        ex::Extremal e = ex::lacunary_series(grid, level_lo, int(heights.size()), heights, s, p);
        besov::write_function(out, e.f);
        j["kind"] = e.spec.kind;
        j["count"] = e.spec.count;
        j["levels"] = {e.spec.level_lo, e.spec.level_hi};
        j["s"] = s;
        j["p"] = p;
        j["notes"] = e.spec.notes;
        j["file"] = out;
    } else if (kind == "multiplier-pair") {
        if (out_g.empty())
            throw besov::invalid_params_error("multiplier-pair also needs --out-g for the g factor");
        ex::MultiplierPairResult e = ex::multiplier_pair(grid, level_lo, count, s, p);
        besov::write_function(out, e.f);
        besov::write_function(out_g, e.g);
        j["kind"] = e.spec.kind;
        j["count"] = e.spec.count;
        j["levels"] = {e.spec.level_lo, e.spec.level_hi};
        j["s"] = s;
        j["p"] = p;
        j["notes"] = e.spec.notes;
        j["file_f"] = out;
        j["file_g"] = out_g;
    } else {
        throw besov::invalid_params_error("unknown extremal kind '" + kind +
                                          "'; available: bump-train lacunary multiplier-pair");
    }
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
}

int cmd_gen(const Grid& grid, uint64_t seed, const std::string& out_dir) {
    std::vector<SampledFunction> fam = ex::standard_family(grid, seed);
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < fam.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "%s/family-%02zu.bsvf", out_dir.c_str(), i);
        besov::write_function(name, fam[i]);
    }
    std::printf("wrote %zu functions to %s (seed %llu, grid %d,%d,%d)\n", fam.size(),
                out_dir.c_str(), static_cast<unsigned long long>(seed), grid.d, grid.W, grid.r);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Besov quasi-norms on the torus"};
    app.require_subcommand(1);

    std::string file, ch_name = "difference", compare_name, grid_text = "1,64,6";
    std::string config_path, suite, out, out_g, heights_text, kind;
    double s = 1.5, p = 2.0, q = 1.0;
    int m = 0, count = 4, level_lo = 4, budget = 0;
    uint64_t seed = ex::default_seed;
    bool as_json = false;
    bool have_seed = false, have_out = false;

    CLI::App* c_norm = app.add_subcommand("norm", "Besov norm of a stored function");
    c_norm->add_option("file", file, "sampled function (.bsvf)")->required();
    c_norm->add_option("--char", ch_name, "fourier | difference | wavelet");
    c_norm->add_option("--compare", compare_name, "second characterization; reports the ratio");
    c_norm->add_option("--s", s, "smoothness")->required();
    c_norm->add_option("--p", p, "integrability (inf allowed)")->required();
    c_norm->add_option("--q", q, "fine index (inf allowed)")->required();
    c_norm->add_option("--m", m, "difference order (default: smallest integer > s)");
    c_norm->add_flag("--json", as_json, "emit JSON");

    CLI::App* c_cmp = app.add_subcommand("compare", "all three characterizations side by side");
    c_cmp->add_option("file", file, "sampled function (.bsvf)")->required();
    c_cmp->add_option("--s", s, "smoothness")->required();
    c_cmp->add_option("--p", p, "integrability")->required();
    c_cmp->add_option("--q", q, "fine index")->required();
    c_cmp->add_option("--m", m, "difference order");
    c_cmp->add_flag("--json", as_json, "emit JSON");

    CLI::App* c_exp = app.add_subcommand("experiment", "run a named suite and write reports");
    c_exp->add_option("config", config_path, "JSON config {suite, seed, out, budget}");
    c_exp->add_option("--suite", suite, "suite name or 'all' (overrides config)");
    auto* seed_opt = c_exp->add_option("--seed", seed, "RNG seed (overrides config)");
    auto* out_opt = c_exp->add_option("--out", out, "report directory (overrides config)");
    c_exp->add_option("--budget", budget, "random candidates for the coefficient-sup search");

    CLI::App* c_ext = app.add_subcommand("extremal", "generate an extremal family member");
    c_ext->add_option("kind", kind, "bump-train | lacunary | multiplier-pair")->required();
    c_ext->add_option("--grid", grid_text, "d,W,r (default 1,64,6)");
    c_ext->add_option("--count", count, "bumps / active levels");
    c_ext->add_option("--heights", heights_text, "comma-separated amplitudes (default: all 1)");
    c_ext->add_option("--level-lo", level_lo, "first active wavelet level");
    c_ext->add_option("--s", s, "smoothness for the amplitude normalization");
    c_ext->add_option("--p", p, "integrability for the amplitude normalization");
    c_ext->add_option("--out", out, "output .bsvf path")->required();
    c_ext->add_option("--out-g", out_g, "output path for the plateau factor (multiplier-pair)");

    CLI::App* c_gen = app.add_subcommand("gen", "write the seeded standard family to disk");
    c_gen->add_option("--grid", grid_text, "d,W,r (default 1,64,6)");
    c_gen->add_option("--seed", seed, "RNG seed");
    c_gen->add_option("--out", out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    have_seed = seed_opt->count() > 0;
    have_out = out_opt->count() > 0;

    try {
        SmoothnessParams params{s, p, q, m};
        if (c_norm->parsed()) return cmd_norm(file, ch_name, compare_name, params, as_json);
        if (c_cmp->parsed()) return cmd_compare(file, params, as_json);
        if (c_exp->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = load_config(config_path);
            if (!suite.empty()) cfg.suite = suite;
            if (cfg.suite.empty())
                throw besov::invalid_params_error(
                    "experiment needs a suite, via config file or --suite");
            if (have_seed) cfg.opts.seed = seed;
            if (have_out) cfg.opts.out_dir = out;
            if (cfg.opts.out_dir.empty()) cfg.opts.out_dir = "reports";
            if (budget > 0) cfg.opts.budget_random = budget;
            return run_suites(cfg.suite, cfg.opts);
        }
        if (c_ext->parsed())
            return cmd_extremal(kind, parse_grid(grid_text), count, heights_text, level_lo, s, p,
                                out, out_g);
        if (c_gen->parsed()) return cmd_gen(parse_grid(grid_text), seed, out);
    } catch (const besov::invalid_params_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const besov::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
