#pragma once

namespace zf {

double normal_pdf(double t);
// 1 - Phi(t), accurate in the upper tail.
double normal_sf(double t);

// T_k(t) = E (Z - t)_+^{k-1} / (k-1)! for Z ~ N(0,1), k in 1..5.
// T_{k+1}' = -T_k and T_{k+1}(t) = integral of T_k over [t, inf).
double normal_tail(int k, double t);

}  // namespace zf
