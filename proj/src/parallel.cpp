#include "zf/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace zf {

int worker_threads() {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("ZETA_FORGE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
    }
    return std::max(1, n);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
    return std::mt19937_64(seq);
}

DiscreteLaw random_standardized_law(std::mt19937_64& rng, int min_atoms, int max_atoms) {
    std::uniform_int_distribution<int> count(min_atoms, max_atoms);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    std::gamma_distribution<double> gam(1.0, 1.0);
    const int k = count(rng);
    std::vector<std::pair<double, double>> pairs(static_cast<std::size_t>(k));
    double total = 0.0;
    for (auto& [x, m] : pairs) {
        x = pos(rng);
        m = gam(rng) + 1e-12;
        total += m;
    }
    for (auto& pm : pairs) pm.second /= total;
    return standardize(merge_unchecked(std::move(pairs)));
}

}  // namespace zf
