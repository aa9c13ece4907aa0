#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/counting.hpp"
#include "takagi/csv.hpp"

namespace takagi {

struct VerifyOptions {
  unsigned n_max = 6;
  unsigned m_max = 5;
  unsigned workers = 1;
  BuildLimits limits{};
};

struct VerifyOutcome {
  std::size_t windows = 0;
  std::size_t violations = 0;
};

// Exhaustive windowed-count scan: for every n <= n_max, 1 <= m <= m_max and
// every width-b^-n column, the strip S_{n+m} restricted to the column and to
// [y - eta b^-n, y + eta b^-n] is counted at scale b^-(n+m) and compared
// against ceil((10 eta + m eta + 4) b^m). The y centers run over the
// column's own level-n grid values with offsets {0, +-eta b^-n,
// +-2 eta b^-n}, which exercises every sub-level-set configuration the
// bound has to survive. Rows are streamed to `os` when given.
VerifyOutcome verify_window_counts(const CoefficientSequence& seq, const VerifyOptions& options,
                                   std::ostream* os);

// Localized scan: for every n <= n_max, m <= m_max and every x0 on the
// level-(n+1) grid, the upper count over the three covering columns must
// stay within ceil(3 (10 eta + m eta + 4) b^m); also checks lower <= upper.
VerifyOutcome verify_localized_counts(const CoefficientSequence& seq,
                                      const VerifyOptions& options, std::ostream* os);

struct PropertySuite {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct PropertyOptions {
  unsigned n_cap = 12;
  std::size_t samples = 1000;
  std::uint64_t seed = 12345;
};

// Randomized invariant suites: strip containment at exact b-adic points,
// exact midpoint linearity of H_n cells, the n*eta / m*eta Lipschitz
// bounds, the per-column count inequality, telescoping of partial sums,
// and certified-value bracketing.
std::vector<PropertySuite> verify_lemma_properties(const CoefficientSequence& seq,
                                                   const PropertyOptions& options = {});

}  // namespace takagi
