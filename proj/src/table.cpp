#include "zf/table.hpp"

#include "zf/bounds.hpp"
#include "zf/extremal.hpp"
#include "zf/laws.hpp"
#include "zf/report.hpp"

namespace zf {

namespace {

TableRow row(std::string section, std::string label, double rho) {
    return {std::move(section), std::move(label), rho, B_of_rho(rho), improvement_n_min(rho)};
}

std::string fmt(double x) { return format_real(x); }

}  // namespace

std::vector<TableRow> improvement_table() {
    std::vector<TableRow> rows;
    for (double r : kTableRhos) rows.push_back(row("table", "rho<=" + fmt(r), r));
    rows.push_back(row("example", "exponential", catalog_rho(Catalog::exponential)));
    rows.push_back(row("example", "uniform", catalog_rho(Catalog::uniform)));
    for (double p : kBernoulliLadder)
        rows.push_back(row("example", "bernoulli p=" + fmt(p), catalog_rho(Catalog::bernoulli, p)));
    for (double l : kPoissonLambdas)
        rows.push_back(row("example", "poisson lambda=" + fmt(l), catalog_rho(Catalog::poisson, l)));
    rows.push_back(row("example", "geometric p=0.1", catalog_rho(Catalog::geometric, 0.1)));
    return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "section,label,rho,B_rho,n_min\n";
    for (const auto& r : rows)
        os << r.section << ',' << r.label << ',' << format_real(r.rho) << ',' << format_real(r.B) << ','
           << r.n_min << '\n';
}

}  // namespace zf
