#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zf {

struct TableRow {
    std::string section;  // "table" or "example"
    std::string label;
    double rho = 0.0;
    double B = 0.0;
    int n_min = 0;
};

// Table rows at the 12 tabulated rho, then the exponential, uniform, Bernoulli
// ladder, Poisson and geometric examples.
std::vector<TableRow> improvement_table();

inline constexpr double kTableRhos[12] = {1.01, 1.10, 1.18, 1.24, 1.30, 1.52,
                                          1.66, 1.77, 1.94, 2.17, 2.33, 2.519};
inline constexpr double kBernoulliLadder[6] = {0.45, 0.38, 0.34, 0.31, 0.2, 0.1};
inline constexpr double kPoissonLambdas[4] = {1, 2, 4, 8};

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace zf
