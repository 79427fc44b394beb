#include <doctest.h>

#include "dynsu2/parser.hpp"
#include "dynsu2/report.hpp"
#include "dynsu2/tables.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0x9a55e;

std::string strip_wall(std::string s) {
  size_t p = s.find("\"wall_ms\"");
  if (p == std::string::npos) return s;
  size_t e = s.find('\n', p);
  s.erase(p, e - p + 1);
  return s;
}
}  // namespace

TEST_CASE("parse and normalize the determinant relation") {
  AlgElement e = parse_element("alpha*delta");
  AlgElement expect = unit(Mode::SL2);
  Mono gb;
  gb.g = 1;
  gb.b = 1;
  expect.insert(gb, Scalar::q() * aux_F("lambda"));
  CHECK(alg_equal(e, expect, 15, kSeed));
  CHECK(render(e).find("gamma*beta") != std::string::npos);
}

TEST_CASE("parse literals and powers") {
  CHECK(alg_equal(parse_element("1"), unit(Mode::SL2), 5, kSeed));
  CHECK(render(parse_element("1")) == "1");
  AlgElement e = parse_element("q^2*gamma^2 - 1/2");
  CHECK(e.terms.size() == 2);
  AlgElement f = parse_element("f[lambda]((q^2*lambda^2 - q^-2)/(q^2*lambda^2 - 1))*beta");
  AlgElement expect = scale(gen_elem(Gen::Beta, Mode::SL2), aux_F("lambda"));
  CHECK(alg_equal(f, expect, 15, kSeed));
}

TEST_CASE("parse errors carry a column") {
  CHECK_THROWS_AS(parse_element("alpha*("), ParseError);
  CHECK_THROWS_AS(parse_element("alpha + omega"), ParseError);
  try {
    parse_element("alpha*(");
  } catch (const ParseError& e) {
    CHECK(e.column >= 6);
  }
}

TEST_CASE("reports are deterministic modulo wall time") {
  SuiteOptions opts;
  opts.bound = 1;
  opts.seed = 77;
  SuiteReport a = run_suite("qdyb", opts);
  SuiteReport b = run_suite("qdyb", opts);
  CHECK(strip_wall(a.to_json()) == strip_wall(b.to_json()));
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.passed());
}

TEST_CASE("point parsing and table export") {
  Point p = parse_point("q=1/3,lambda=2/5,mu=7/9");
  CHECK(p.q == Rat(1, 3));
  CHECK(p.vars.at("lambda") == Rat(2, 5));
  CHECK_THROWS_AS(parse_point("lambda=2/5"), DomainError);
  CHECK_THROWS_AS(parse_point("q=1"), DomainError);
  // moments at a point are exact rationals
  std::string csv = table_moments(1, p, TableFormat::Csv);
  CHECK(csv.find("k,value") == 0);
  CHECK(csv.find("0,1\n") != std::string::npos);
  std::string j = table_matelem(1, MatBackend::Factored, std::nullopt, TableFormat::Json);
  CHECK(j.find("\"schema\"") != std::string::npos);
  CHECK(j.find("delta") != std::string::npos);
}

TEST_CASE("suite registry matches the CLI contract") {
  std::vector<std::string> expect = {"qdyb",      "rll",        "hopf",      "bialgebroid",
                                     "qseries",   "matelem",    "unitarity", "racah-orth",
                                     "cg-corep",  "cg-dynrep",  "biedenharn", "addition",
                                     "haar",      "schur"};
  CHECK(suite_registry().size() == expect.size());
  for (const auto& name : expect) CHECK(is_suite_name(name));
  CHECK(is_suite_name("all"));
  CHECK_FALSE(is_suite_name("nosuch"));
}
