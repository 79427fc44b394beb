#include <doctest.h>

#include "dynsu2/formulas.hpp"
#include "dynsu2/qseries.hpp"

using namespace dynsu2;

namespace {
PRat rq(long a, long b) { return PRat(Rat(a, b)); }
}  // namespace

TEST_CASE("qpoch basics") {
  PRat q = rq(1, 3), a = rq(2, 5);
  PRat base = q * q;
  CHECK(qs::qpoch(a, base, 0) == PRat(1));
  // (a; q^2)_2 = (1-a)(1-a q^2)
  CHECK(qs::qpoch(a, base, 2) == (PRat(1) - a) * (PRat(1) - a * base));
  // negative index inverse relation
  for (long n = 1; n <= 4; ++n)
    CHECK(qs::qpoch(a, base, -n) * qs::qpoch(a * qs::fpow(base, -n), base, n) == PRat(1));
}

TEST_CASE("qbinom boundary and range") {
  PRat base = rq(1, 4);
  CHECK(qs::qbinom(5, 0, base) == PRat(1));
  CHECK(qs::qbinom(5, 5, base) == PRat(1));
  CHECK_THROWS_AS(qs::qbinom(3, 4, base), DomainError);
}

TEST_CASE("awmonomial degree one") {
  // h_1(x, a; q) = 1 - 2 a x + a^2
  PRat x = rq(3, 7), a = rq(1, 2), base = rq(1, 3);
  CHECK(qs::awmono(1, x, a, base) == PRat(1) - PRat(2) * a * x + a * a);
  auto poly = qs::awmono_xipoly(1, a, base);
  // as a polynomial in Xi = 2x
  CHECK(poly[0] + poly[1] * PRat(2) * x == qs::awmono(1, x, a, base));
}

TEST_CASE("qracah trivial values") {
  PRat q = rq(2, 5), a = rq(1, 7), b = rq(3, 4), c = rq(-2, 3), d = rq(5, 9);
  CHECK(qs::qracah(0, 2, a, b, c, d, q) == PRat(1));
  // x = 0 truncates the sum to its first term
  CHECK(qs::qracah(3, 0, a, b, c, d, q) == PRat(1));
}

TEST_CASE("askey-wilson via xi matches the coefficient expansion") {
  PRat q = rq(1, 3), base = q * q;
  PRat a = rq(2, 7), b = rq(-1, 2), c = rq(3, 5), d = rq(4, 9), xi = rq(5, 3);
  PRat x = (xi + PRat(1) / xi) / PRat(2);
  for (long n = 0; n <= 4; ++n) {
    auto poly = qs::askey_wilson_xipoly(n, a, b, c, d, base);
    PRat val = qs::poly_eval(poly, PRat(2) * x);  // coefficients of Xi = 2x
    CHECK(val == qs::askey_wilson_xi(n, xi, a, b, c, d, base));
  }
}

TEST_CASE("little q-jacobi at n=0") {
  CHECK(qs::little_qjacobi(0, rq(1, 2), rq(1, 3), rq(1, 5), rq(1, 7)) == PRat(1));
}

TEST_CASE("PRat guards division") {
  CHECK_THROWS_AS(PRat(1) / PRat(0), PoleAtPoint);
}

TEST_CASE("tfun vanishes below the ladder") {
  PRat q = rq(1, 3), ul = rq(2, 5), uw = rq(3, 7);
  CHECK(fml::tfun_qracah(2, 2, 0, 1, q, ul, uw) == PRat(0));
  CHECK(fml::tfun_qracah(0, 0, 0, 3, q, ul, uw) == PRat(1));
}
