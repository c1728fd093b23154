#pragma once

namespace zf {

// Attached to rho >= 1: the two-point law P_rho has masses q at -sqrt(p/q)
// and p at sqrt(q/p), lattice span h, third moment B.
struct ExtremalParams {
    double rho = 1.0;
    double p = 0.5;
    double h = 2.0;
    double B = 0.0;
    double A = 0.0;
};

ExtremalParams extremal_params(double rho);
double B_of_rho(double rho);
double A_of_rho(double rho);

struct ClassicalConstants {
    double C_E;
    double rho_E;
    double rho_0;
    double p_E;
};

ClassicalConstants classical_constants();

enum class GFunction { g0, g1, g2 };

double g_function(GFunction which, double rho);

// g2(rho) < C_E * rho exactly for rho above this value.
double g2_crossover();

}  // namespace zf
