#pragma once

#include <string>

#include "takagi/coefficients.hpp"

namespace takagi {

// Sequence description as it appears in config files and CLI flags. All
// numeric fields hold exact literals ("7/10", "0.7", "1e-3"); nothing is
// ever rounded on the way in.
struct SequenceSpec {
  int base = 2;
  std::string kind = "geometric";  // geometric | signed_power | explicit
  std::string a = "1/2";           // geometric ratio
  std::string signs = "alternating";  // alternating | seeded:<u64> | +-... pattern
  std::string head;                // comma-separated rationals for explicit kind
  std::string tail_ratio = "0";
};

// Flat key = value text; '#' starts a comment. Recognized keys: base, kind,
// a, signs, head, tail_ratio. Unknown keys are an error so that a config
// typo cannot silently change an experiment.
SequenceSpec load_sequence_file(const std::string& path);

SignRule parse_sign_rule(const std::string& text);

CoefficientSequence make_sequence(const SequenceSpec& spec);

}  // namespace takagi
