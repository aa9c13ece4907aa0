#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "takagi/config.hpp"
#include "takagi/csv.hpp"
#include "takagi/errors.hpp"
#include "takagi/piecewise_linear.hpp"
#include "takagi/svg_render.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

TEST_CASE("rational parsing accepts exact forms") {
  CHECK(parse_rational("7/10") == rat(7, 10));
  CHECK(parse_rational("0.7") == rat(7, 10));
  CHECK(parse_rational("-3/8") == rat(-3, 8));
  CHECK(parse_rational("1e-6") == rat(1, 1000000));
  CHECK(parse_rational("2.5e2") == rat(250));
  CHECK(parse_rational(".5") == rat(1, 2));
  CHECK(parse_rational("2/4") == rat(1, 2));  // canonical
  CHECK(parse_rational(" 42 ") == rat(42));
  CHECK(parse_rational("+0.125") == rat(1, 8));
}

TEST_CASE("rational parsing rejects anything inexact or malformed") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "0x1p3", "nan", "inf", "1e", "--2", "1/-2"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("decimal rendering is exact and deterministic") {
  CHECK(decimal_string(rat(2, 3), 6) == "0.666667");
  CHECK(decimal_string(rat(-1, 8), 3) == "-0.125");
  CHECK(decimal_string(rat(1, 2), 0) == "1");  // half away from zero
  CHECK(decimal_string(rat(-1, 1000), 2) == "0.00");
  CHECK(decimal_string(rat(5), 2) == "5.00");
  CHECK(decimal_string(rat(0), 4) == "0.0000");
}

TEST_CASE("csv rational form") {
  CHECK(csv_rational(rat(3, 4)) == "3/4");
  CHECK(csv_rational(rat(-3, 4)) == "-3/4");
  CHECK(csv_rational(rat(7)) == "7");
  CHECK(csv_rational(rat(4, 2)) == "2");
}

TEST_CASE("sign rule parsing") {
  CHECK(parse_sign_rule("alternating").sign(1) == -1);
  CHECK(parse_sign_rule("++-").sign(2) == -1);
  CHECK(parse_sign_rule("++-").sign(3) == +1);
  CHECK(parse_sign_rule("seeded:17").sign(4) == SignRule::seeded(17).sign(4));
  CHECK_THROWS_AS(parse_sign_rule(""), ParseError);
  CHECK_THROWS_AS(parse_sign_rule("abc"), ParseError);
  CHECK_THROWS_AS(parse_sign_rule("seeded:x"), ParseError);
}

TEST_CASE("sequence config files") {
  std::string path = "takagi_test_config.tmp";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "base = 2\n"
        << "kind = geometric\n"
        << "a = 7/10   # trailing comment\n";
  }
  SequenceSpec spec = load_sequence_file(path);
  CHECK(spec.base == 2);
  CHECK(spec.kind == "geometric");
  CHECK(spec.a == "7/10");
  auto seq = make_sequence(spec);
  CHECK(seq.coeff(1) == rat(7, 10));
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << "bogus = 1\n";
  }
  CHECK_THROWS_AS(load_sequence_file(path), ParseError);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_sequence_file("does_not_exist.cfg"), ParseError);
}

TEST_CASE("sequence construction from specs") {
  SequenceSpec sp;
  sp.base = 2;
  sp.kind = "signed_power";
  sp.signs = "alternating";
  CHECK(make_sequence(sp).coeff(1) == rat(-1, 2));

  sp.kind = "explicit";
  sp.head = "1, 0, 1/4";
  sp.tail_ratio = "0";
  CHECK(make_sequence(sp).coeff(2) == rat(1, 4));

  sp.kind = "mystery";
  CHECK_THROWS_AS(make_sequence(sp), ParseError);
}

TEST_CASE("piecewise-linear CSV") {
  auto H1 = build_partial_sum(classical(), 1);
  std::ostringstream os;
  write_pl_csv(os, H1, 3, false);
  CHECK(os.str() ==
        "x,y\n"
        "0.000,0.000\n"
        "0.250,0.250\n"
        "0.500,0.500\n"
        "0.750,0.250\n"
        "1.000,0.000\n");

  std::ostringstream exact;
  write_pl_csv(exact, H1, 2, true);
  CHECK(exact.str().find("1/4,1/4") != std::string::npos);
}

TEST_CASE("figure rendering is deterministic and layered") {
  RenderOptions opts;
  opts.n = 3;
  opts.samples = 64;
  auto a = render_figure(classical(), opts);
  auto b = render_figure(classical(), opts);
  CHECK(a.svg == b.svg);
  CHECK(a.csv == b.csv);
  CHECK(a.svg.find("<svg") != std::string::npos);
  CHECK(a.svg.find("<polygon") != std::string::npos);
  std::size_t first = a.svg.find("<polyline");
  REQUIRE(first != std::string::npos);
  CHECK(a.svg.find("<polyline", first + 1) != std::string::npos);
  CHECK(a.csv.rfind("x,center,radius\n", 0) == 0);

  RenderOptions flat = opts;
  flat.n = 0;
  auto zero_fig = render_figure(CoefficientSequence::explicit_list(2, {}, Rational(0)), flat);
  CHECK(zero_fig.svg.find("<polygon") != std::string::npos);
}
