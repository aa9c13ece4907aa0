#include "takagi/csv.hpp"

#include <map>

namespace takagi {

std::string csv_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

void write_pl_csv(std::ostream& os, const PiecewiseLinearFunction& pl, int precision,
                  bool exact_columns) {
  os << (exact_columns ? "x,y,x_exact,y_exact\n" : "x,y\n");
  for (std::size_t t = 0; t < pl.grid_size(); ++t) {
    Rational x = pl.grid_x(t);
    Rational y = pl.value_at_grid(t);
    os << decimal_string(x, precision) << "," << decimal_string(y, precision);
    if (exact_columns) os << "," << csv_rational(x) << "," << csv_rational(y);
    os << "\n";
  }
}

void write_verify_header(std::ostream& os) { os << "n,m,i,y,count,bound,ok\n"; }

void write_verify_row(std::ostream& os, const VerifyCsvRow& row) {
  os << row.n << "," << row.m << "," << (row.column + 1) << "," << csv_rational(row.y) << ","
     << row.count.get_str() << "," << row.bound.get_str() << "," << (row.ok ? "true" : "false")
     << "\n";
}

void write_localized_header(std::ostream& os) { os << "x0,n,m,lower,upper,theorem_bound\n"; }

void write_localized_row(std::ostream& os, const LocalizedCsvRow& row) {
  os << csv_rational(row.x0) << "," << row.n << "," << row.m << "," << row.lower.get_str() << ","
     << row.upper.get_str() << "," << row.bound.get_str() << "\n";
}

void write_box_table_csv(std::ostream& os, const BoxDimResult& result) {
  os << "N,lower,upper,refinement\n";
  for (const auto& p : result.table) {
    os << p.N << "," << p.lower.get_str() << "," << p.upper.get_str() << "," << p.refinement
       << "\n";
  }
}

void write_profile_csv(std::ostream& os, const AssouadProfile& profile) {
  os << "m,max_lower,max_upper,bound\n";
  std::map<unsigned, std::pair<Int, Int>> best;  // m -> (lower, upper)
  std::map<unsigned, Int> bounds;
  for (const auto& row : profile.rows) {
    auto& slot = best[row.m];
    if (row.max_lower > slot.first) slot.first = row.max_lower;
    if (row.max_upper > slot.second) slot.second = row.max_upper;
    bounds[row.m] = row.bound;
  }
  for (const auto& [m, lu] : best) {
    os << m << ",";
    if (profile.has_lower) os << lu.first.get_str();
    os << ",";
    if (profile.has_upper) os << lu.second.get_str();
    os << "," << bounds[m].get_str() << "\n";
  }
}

void write_profile_detail_csv(std::ostream& os, const AssouadProfile& profile) {
  os << "n,m,max_lower,max_upper,bound\n";
  for (const auto& row : profile.rows) {
    os << row.n << "," << row.m << ",";
    if (profile.has_lower) os << row.max_lower.get_str();
    os << ",";
    if (profile.has_upper) os << row.max_upper.get_str();
    os << "," << row.bound.get_str() << "\n";
  }
}

void write_cells_csv(std::ostream& os, const SegmentWalkResult& walk) {
  os << "col,row\n";
  for (const auto& cell : walk.cells()) os << cell.first << "," << cell.second << "\n";
}

}  // namespace takagi
