#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zpr {

struct Measurement {
    std::string name;
    double measured = 0;
    double tolerance = 0;
    bool pass = false;
};

struct CheckResult {
    int id = 0;
    std::string title;
    std::vector<Measurement> items;
    double seconds = 0;

    bool pass() const;
    // Item with the largest measured/tolerance ratio among failures, else overall.
    const Measurement* worst() const;
    std::string summary_line() const;
};

struct ValidationOptions {
    std::uint64_t seed = 1;
    long mc_seeds = 1000;
    int workers = 0;
    bool run_monte_carlo = true;
    double sigma_scale = 1.0;  // negative control: perturbs Stefan-Boltzmann sigma
};

constexpr int criterion_count = 12;

const char* criterion_title(int id);
CheckResult run_criterion(int id, const ValidationOptions& opt = {});
std::vector<CheckResult> run_all(const ValidationOptions& opt = {});

}  // namespace zpr
