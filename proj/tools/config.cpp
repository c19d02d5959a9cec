#include "config.hpp"

#include <fstream>

namespace lseries::tool {

namespace {

template <class T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<T>();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError("invalid config: " + what);
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    require(j.contains("function") && j.at("function").contains("name"), "function.name is required");
    cfg.function.name = j.at("function").at("name").get<std::string>();
    cfg.function.params = j.at("function").value("params", nlohmann::json::object());

    require(j.contains("domain") && j.at("domain").contains("kind"), "domain.kind is required");
    cfg.domain.kind = j.at("domain").at("kind").get<std::string>();
    cfg.domain.inner = get_or(j.at("domain"), "inner", std::vector<double>{});
    cfg.domain.outer = get_or(j.at("domain"), "outer", std::vector<double>{});

    cfg.cover_depth = get_or(j, "cover_depth", 1);
    cfg.box = get_or(j, "box", 16);
    cfg.grid = get_or(j, "grid", 0);
    cfg.orders = get_or(j, "orders", std::vector<int>{0, 1, 2});
    cfg.epsilons = get_or(j, "epsilons", std::vector<double>{1e-6});
    cfg.trials = get_or(j, "trials", 20);
    cfg.random_sets = get_or(j, "random_sets", 100);
    cfg.seed = get_or(j, "seed", static_cast<std::uint64_t>(1));
    cfg.out_dir = get_or(j, "out_dir", std::string{});
    if (j.contains("sampling")) {
        cfg.sampling.radial = get_or(j.at("sampling"), "radial", 32);
        cfg.sampling.angular = get_or(j.at("sampling"), "angular", 16);
    }
    cfg.workers = get_or(j, "workers", 1);

    if (j.contains("coeffs")) {
        const auto& c = j.at("coeffs");
        cfg.coeffs.oracle_tol = get_or(c, "oracle_tol", cfg.coeffs.oracle_tol);
        cfg.coeffs.radius_scales = get_or(c, "radius_scales", cfg.coeffs.radius_scales);
        cfg.coeffs.shift_trials = get_or(c, "shift_trials", cfg.coeffs.shift_trials);
        cfg.coeffs.shift_tol = get_or(c, "shift_tol", cfg.coeffs.shift_tol);
        cfg.coeffs.exactness_tol = get_or(c, "exactness_tol", cfg.coeffs.exactness_tol);
    }
    if (j.contains("tails")) {
        const auto& t = j.at("tails");
        cfg.tails.final_tail_tol = get_or(t, "final_tail_tol", cfg.tails.final_tail_tol);
        cfg.tails.fit_from = get_or(t, "fit_from", cfg.tails.fit_from);
        cfg.tails.fit_to = get_or(t, "fit_to", cfg.tails.fit_to);
        cfg.tails.expected_ratio = get_or(t, "expected_ratio", cfg.tails.expected_ratio);
        cfg.tails.ratio_rel_tol = get_or(t, "ratio_rel_tol", cfg.tails.ratio_rel_tol);
        cfg.tails.error_tol = get_or(t, "error_tol", cfg.tails.error_tol);
        cfg.tails.error_tol_box = get_or(t, "error_tol_box", cfg.tails.error_tol_box);
    }
    if (j.contains("bounds")) {
        const auto& b = j.at("bounds");
        cfg.bounds.delta = get_or(b, "delta", cfg.bounds.delta);
        cfg.bounds.sum_box = get_or(b, "sum_box", cfg.bounds.sum_box);
        cfg.bounds.increment_tol_factor = get_or(b, "increment_tol_factor", cfg.bounds.increment_tol_factor);
    }
    if (j.contains("permute")) {
        cfg.permute.prefix_tol = get_or(j.at("permute"), "prefix_tol", cfg.permute.prefix_tol);
    }

    require(cfg.cover_depth >= 1 && cfg.cover_depth <= 12, "cover_depth must be in [1,12]");
    require(cfg.box >= 0 && cfg.box <= 128, "box must be in [0,128]");
    require(cfg.grid == 0 || cfg.grid >= 2 * cfg.box + 1, "grid must be 0 or >= 2*box+1");
    require(!cfg.orders.empty(), "orders must be nonempty");
    for (int k : cfg.orders) require(k >= 0 && k <= 8, "orders entries must be in [0,8]");
    for (double e : cfg.epsilons) require(e > 0.0, "epsilons must be positive");
    require(cfg.trials >= 0 && cfg.trials <= 10000, "trials must be in [0,10000]");
    require(cfg.random_sets >= 0 && cfg.random_sets <= 100000, "random_sets must be in [0,100000]");
    require(cfg.sampling.radial >= 2, "sampling.radial must be >= 2");
    require(cfg.sampling.angular >= 1, "sampling.angular must be >= 1");
    require(cfg.workers >= 1 && cfg.workers <= 256, "workers must be in [1,256]");
    require(cfg.domain.kind == "polydisc" || cfg.domain.kind == "annulus-product" ||
                cfg.domain.kind == "hartogs-triangle",
            "unknown domain.kind '" + cfg.domain.kind + "'");
    return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["function"] = {{"name", cfg.function.name}, {"params", cfg.function.params}};
    j["domain"] = {{"kind", cfg.domain.kind}, {"inner", cfg.domain.inner}, {"outer", cfg.domain.outer}};
    j["cover_depth"] = cfg.cover_depth;
    j["box"] = cfg.box;
    j["grid"] = cfg.grid;
    j["orders"] = cfg.orders;
    j["epsilons"] = cfg.epsilons;
    j["trials"] = cfg.trials;
    j["random_sets"] = cfg.random_sets;
    j["seed"] = cfg.seed;
    j["out_dir"] = cfg.out_dir;
    j["sampling"] = {{"radial", cfg.sampling.radial}, {"angular", cfg.sampling.angular}};
    j["workers"] = cfg.workers;
    j["coeffs"] = {{"oracle_tol", cfg.coeffs.oracle_tol},
                   {"radius_scales", cfg.coeffs.radius_scales},
                   {"shift_trials", cfg.coeffs.shift_trials},
                   {"shift_tol", cfg.coeffs.shift_tol},
                   {"exactness_tol", cfg.coeffs.exactness_tol}};
    j["tails"] = {{"final_tail_tol", cfg.tails.final_tail_tol}, {"fit_from", cfg.tails.fit_from},
                  {"fit_to", cfg.tails.fit_to},                 {"expected_ratio", cfg.tails.expected_ratio},
                  {"ratio_rel_tol", cfg.tails.ratio_rel_tol},   {"error_tol", cfg.tails.error_tol},
                  {"error_tol_box", cfg.tails.error_tol_box}};
    j["bounds"] = {{"delta", cfg.bounds.delta},
                   {"sum_box", cfg.bounds.sum_box},
                   {"increment_tol_factor", cfg.bounds.increment_tol_factor}};
    j["permute"] = {{"prefix_tol", cfg.permute.prefix_tol}};
    return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return config_from_json(j);
}

DomainSpec domain_from_config(const DomainConfig& d) {
    if (d.kind == "polydisc") {
        if (d.outer.empty()) throw ConfigError("polydisc domain needs outer radii");
        return PolydiscSpec{d.outer};
    }
    if (d.kind == "annulus-product") {
        if (d.outer.empty() || d.inner.size() != d.outer.size())
            throw ConfigError("annulus-product domain needs matching inner/outer radii");
        return AnnulusProductSpec{d.inner, d.outer};
    }
    if (d.kind == "hartogs-triangle") return HartogsTriangleSpec{};
    throw ConfigError("unknown domain kind '" + d.kind + "'");
}

}  // namespace lseries::tool
