#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "lseries/geometry.hpp"
#include "lseries/seminorms.hpp"

namespace lseries::tool {

/// Error in the experiment configuration; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A function family by name plus its parameters, kept as raw JSON so
/// nested combinators (sum/product/scaled) round-trip untouched.
struct FunctionSpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
};

struct DomainConfig {
    std::string kind;  // polydisc | annulus-product | hartogs-triangle
    std::vector<double> inner;
    std::vector<double> outer;
};

struct CoeffsOptions {
    double oracle_tol = 1e-10;
    std::vector<double> radius_scales{1.0};  // multipliers on the default torus radii
    int shift_trials = 0;
    double shift_tol = 1e-9;
    double exactness_tol = 1e-14;  // finite expansions at m = 2*box+1
};

struct TailsOptions {
    double final_tail_tol = 1e-6;
    int fit_from = -1;  // box range for the log-linear fit; -1 disables
    int fit_to = -1;
    double expected_ratio = 0.0;
    double ratio_rel_tol = 0.1;
    double error_tol = 0.0;  // 0 disables the single-box error gate
    int error_tol_box = -1;
};

struct BoundsOptions {
    double delta = 1e-8;
    int sum_box = 100;
    double increment_tol_factor = 1e-3;
};

struct PermuteOptions {
    double prefix_tol = 1e-10;
};

struct ExperimentConfig {
    FunctionSpec function;
    DomainConfig domain;
    int cover_depth = 1;
    int box = 16;
    int grid = 0;  // 0 = smallest power of two >= max(2*box+1, 32)
    std::vector<int> orders{0, 1, 2};
    std::vector<double> epsilons{1e-6};
    int trials = 20;
    int random_sets = 100;
    std::uint64_t seed = 1;
    std::string out_dir;
    SamplingSpec sampling{32, 16};
    int workers = 1;
    CoeffsOptions coeffs;
    TailsOptions tails;
    BoundsOptions bounds;
    PermuteOptions permute;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::filesystem::path& path);

DomainSpec domain_from_config(const DomainConfig& d);

}  // namespace lseries::tool
