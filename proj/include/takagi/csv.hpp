#pragma once

#include <ostream>
#include <string>

#include "takagi/counting.hpp"
#include "takagi/dimension.hpp"
#include "takagi/oracle.hpp"
#include "takagi/piecewise_linear.hpp"

namespace takagi {

// "p/q" (or plain integer) rendering; exact, so CSV bytes are reproducible.
std::string csv_rational(const Rational& x);

// header x,y with decimal values; optionally appends exact p/q columns
void write_pl_csv(std::ostream& os, const PiecewiseLinearFunction& pl, int precision,
                  bool exact_columns);

// header n,m,i,y,count,bound,ok (i is the 1-based window column)
struct VerifyCsvRow {
  unsigned n, m;
  std::size_t column;  // 0-based; written as i = column + 1
  Rational y;
  Int count, bound;
  bool ok;
};
void write_verify_header(std::ostream& os);
void write_verify_row(std::ostream& os, const VerifyCsvRow& row);

// header x0,n,m,lower,upper,theorem_bound
struct LocalizedCsvRow {
  Rational x0;
  unsigned n, m;
  Int lower, upper, bound;
};
void write_localized_header(std::ostream& os);
void write_localized_row(std::ostream& os, const LocalizedCsvRow& row);

// header N,lower,upper,refinement
void write_box_table_csv(std::ostream& os, const BoxDimResult& result);

// header m,max_lower,max_upper,bound (maxima over n per m); absent sides
// render as empty fields
void write_profile_csv(std::ostream& os, const AssouadProfile& profile);

// header n,m,max_lower,max_upper,bound, one row per profile entry
void write_profile_detail_csv(std::ostream& os, const AssouadProfile& profile);

// header col,row: the oracle's visited-cell dump for golden comparisons
void write_cells_csv(std::ostream& os, const SegmentWalkResult& walk);

}  // namespace takagi
