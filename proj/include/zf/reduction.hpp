#pragma once

#include <functional>
#include <vector>

#include "zf/laws.hpp"

namespace zf {

using Constraint = std::function<double(double)>;

struct ConvexDecomposition {
    std::vector<double> weights;
    std::vector<DiscreteLaw> parts;  // each on at most k+1 atoms of the original support
};

// Splits law into a mixture of laws on <= k+1 atoms, each with the same E f_i.
ConvexDecomposition extreme_point_decompose(const DiscreteLaw& law,
                                            const std::vector<Constraint>& constraints);
// One law on <= k+1 atoms with the same E f_i.
DiscreteLaw richter_reduce(const DiscreteLaw& law, const std::vector<Constraint>& constraints);

// Largest atomwise mass error of sum_i w_i parts_i against law.
double reconstruction_error(const DiscreteLaw& law, const ConvexDecomposition& dec);

enum class Exec { serial, parallel };

struct ThreePointLaw {
    double a = 0.0, b = 0.0, c = 0.0;
    double pa = 0.0, pb = 0.0, pc = 0.0;
};

struct ExtremalSearchResult {
    double rho = 1.0;
    double sup_value = 0.0;
    DiscreteLaw witness;
    double bound = 0.0;         // B(rho)/6
    double corner_value = 0.0;  // zeta_3 at the two-point law
    long nodes = 0;
    long skipped = 0;           // nodes with no probability solution
    bool certified = false;     // sup <= bound + 1e-6 and |corner - bound| <= 1e-6
};

// Standardized law on a < b < c; throws InfeasibleParameters when a mass is negative.
ThreePointLaw three_point_masses(double a, double b, double c);

// Grid of density x density over the outer atoms; the middle atom solves nu_3 = rho.
ExtremalSearchResult extremal_three_point_search(double rho, int density, Exec exec = Exec::parallel);

}  // namespace zf
