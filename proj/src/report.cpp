#include "zf/report.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <sstream>

#include "zf/error.hpp"

namespace zf {

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(12);
    os << x;
    return os.str();
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
    os << "bound_name,n,rho_summary,lhs,rhs,margin,status\n";
    for (const auto& r : reports)
        os << quote(r.bound_name) << ',' << r.n << ',' << quote(r.rho_summary) << ',' << format_real(r.lhs)
           << ',' << format_real(r.rhs) << ',' << format_real(r.margin) << ',' << (r.pass ? "pass" : "fail")
           << '\n';
}

void write_csv_file(const std::string& path, const std::vector<BoundReport>& reports) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IOFailure, "cannot write " + path);
    write_csv(out, reports);
    if (!out) throw Error(ErrorCode::IOFailure, "write failed for " + path);
}

}  // namespace zf
