#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zf/bounds.hpp"
#include "zf/reduction.hpp"

namespace zf {

enum class Suite { main, normal, epsilon, charfn, osculation, reduction, all };

std::optional<Suite> parse_suite(const std::string& name);
const char* suite_name(Suite s);

struct HarnessConfig {
    Suite suite = Suite::all;
    int trials = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    Exec exec = Exec::parallel;
};

// Reports in a fixed order that depends only on the config. trials < 1 throws BadInput.
// An instance that throws becomes a failing report named after the error.
std::vector<BoundReport> run_suite(const HarnessConfig& cfg);

bool all_pass(const std::vector<BoundReport>& reports);

}  // namespace zf
