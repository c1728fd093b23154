#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zf/bounds.hpp"

namespace zf {

// 12 significant digits, "C" locale, inf/nan spelled out.
std::string format_real(double x);

// Header: bound_name,n,rho_summary,lhs,rhs,margin,status
void write_csv(std::ostream& os, const std::vector<BoundReport>& reports);
void write_csv_file(const std::string& path, const std::vector<BoundReport>& reports);

}  // namespace zf
