#include "takagi/config.hpp"

#include <fstream>
#include <sstream>

#include "takagi/errors.hpp"

namespace takagi {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

SequenceSpec load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  SequenceSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "base") {
      try {
        spec.base = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) + ": bad base: " + value);
      }
    } else if (key == "kind") {
      spec.kind = value;
    } else if (key == "a") {
      spec.a = value;
    } else if (key == "signs") {
      spec.signs = value;
    } else if (key == "head") {
      spec.head = value;
    } else if (key == "tail_ratio") {
      spec.tail_ratio = value;
    } else {
      throw ParseError(path + ":" + std::to_string(lineno) + ": unknown key: " + key);
    }
  }
  return spec;
}

SignRule parse_sign_rule(const std::string& text) {
  if (text == "alternating") return SignRule::alternating();
  if (text.rfind("seeded:", 0) == 0) {
    std::string num = text.substr(7);
    try {
      return SignRule::seeded(std::stoull(num));
    } catch (const std::exception&) {
      throw ParseError("bad seed in sign rule: " + text);
    }
  }
  std::vector<int> pattern;
  for (char c : text) {
    if (c == '+')
      pattern.push_back(+1);
    else if (c == '-')
      pattern.push_back(-1);
    else
      throw ParseError("sign rule must be 'alternating', 'seeded:<u64>', or a +- pattern: " +
                       text);
  }
  if (pattern.empty()) throw ParseError("empty sign rule");
  return SignRule::literal(std::move(pattern));
}

CoefficientSequence make_sequence(const SequenceSpec& spec) {
  if (spec.kind == "geometric") {
    return CoefficientSequence::geometric(spec.base, parse_rational(spec.a));
  }
  if (spec.kind == "signed_power") {
    return CoefficientSequence::signed_power(spec.base, parse_sign_rule(spec.signs));
  }
  if (spec.kind == "explicit") {
    std::vector<Rational> head;
    std::stringstream ss(spec.head);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) head.push_back(parse_rational(item));
    }
    return CoefficientSequence::explicit_list(spec.base, std::move(head),
                                              parse_rational(spec.tail_ratio));
  }
  throw ParseError("unknown sequence kind: " + spec.kind +
                   " (expected geometric, signed_power, or explicit)");
}

}  // namespace takagi
