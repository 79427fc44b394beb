#include <doctest.h>

#include "dynsu2/algebra.hpp"
#include "dynsu2/diffop.hpp"
#include "dynsu2/scalar.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0x7357;
}

TEST_CASE("eval substitutes exactly") {
  // q * u_lambda^2 at q = 1/2, u_lambda = 3
  Scalar s = Scalar::q() * Scalar::var("lambda").pow(2);
  Point p;
  p.q = Rat(1, 2);
  p.vars["lambda"] = Rat(3);
  CHECK(eval(s, p) == Rat(9, 2));
}

TEST_CASE("eval reports poles") {
  Scalar s = Scalar(1) / (Scalar::var("lambda").pow(2) * qpow(2) - Scalar(1));
  Point p;
  p.q = Rat(1, 2);
  p.vars["lambda"] = Rat(2);
  CHECK_THROWS_AS(eval(s, p), PoleAtPoint);
}

TEST_CASE("F matches its closed form at random points") {
  // F(lambda) = (q^{2(lambda+1)} - q^{-2}) / (q^{2(lambda+1)} - 1)
  Scalar f = aux_F("lambda");
  Scalar byhand = (qexp(2, {{"lambda", 2}}) - qexp(-2)) / (qexp(2, {{"lambda", 2}}) - Scalar(1));
  CHECK(is_zero(f - byhand, 20, kSeed));
}

TEST_CASE("shift is the q-exponential substitution") {
  Scalar s = Scalar::var("lambda").pow(2);
  CHECK(is_zero(shift(s, "lambda", 1) - qpow(2) * s, 20, kSeed));
  // group law
  Sampler smp(kSeed);
  Scalar t = aux_F("lambda") + Scalar::var("lambda").pow(3) * qpow(-1);
  CHECK(is_zero(shift(shift(t, "lambda", 2), "lambda", -3) - shift(t, "lambda", -1), 20, kSeed));
  // F(lambda-1) relates to G: G = F(lambda)/F(lambda-1)
  CHECK(is_zero(aux_G("lambda") - aux_F("lambda") / aux_F("lambda", -1), 20, kSeed));
}

TEST_CASE("lemma-hi relations are is_zero") {
  VarNames v;
  Scalar q = Scalar::q();
  CHECK(is_zero(q * aux_F("lambda") + qpow(-1) / aux_F("lambda", -1) - (q + qpow(-1)), 20,
                kSeed));
  CHECK(is_zero(aux_H(v) - (q * aux_F("lambda") - qpow(-1) / aux_F("mu", -1)), 20, kSeed));
  CHECK(is_zero(aux_H(v) - (q * aux_F("mu") - qpow(-1) / aux_F("lambda", -1)), 20, kSeed));
  CHECK(is_zero(aux_I(v) - q * (aux_F("lambda") - aux_F("mu")), 20, kSeed));
  CHECK(is_zero(aux_G("mu") - aux_G("lambda") - aux_H(v) * aux_I(v), 20, kSeed));
  CHECK_FALSE(is_zero(Scalar::var("lambda") - Scalar::var("mu"), 20, kSeed));
}

TEST_CASE("field laws at sampled points") {
  Sampler smp(kSeed);
  Scalar a = aux_F("lambda"), b = aux_H(VarNames{}), c = Scalar::var("mu").pow(2) - qpow(1);
  CHECK(is_zero((a + b) + c - (a + (b + c)), 20, kSeed));
  CHECK(is_zero(a * (b + c) - (a * b + a * c), 20, kSeed));
  CHECK(is_zero(a * a.inv() - Scalar(1), 20, kSeed));
  CHECK(is_zero(shift(a * b, "lambda", 1) - shift(a, "lambda", 1) * shift(b, "lambda", 1), 20,
                kSeed));
}

TEST_CASE("bar is the identity involution") {
  Scalar s = aux_F("lambda") + qpow(2) * Scalar::var("mu");
  CHECK(bar(s).node() == s.node());
  CHECK(is_zero(bar(bar(s)) - s, 5, kSeed));
}

TEST_CASE("difference operators") {
  DiffOp tm1 = DiffOp::shift_op(-1);
  Scalar u2 = Scalar::var("lambda").pow(2);
  CHECK(is_zero(tm1.apply(u2) - qpow(-2) * u2, 20, kSeed));
  // compose of inverse shifts is the identity
  DiffOp id = DiffOp::shift_op(1) * DiffOp::shift_op(-1);
  CHECK(diffop_equal(id, DiffOp::shift_op(0), 20, kSeed));
  // antipode is an involution on f T_a
  DiffOp d = DiffOp::term(aux_F("lambda"), 2) + DiffOp::term(qpow(1), 0);
  CHECK(diffop_equal(d.antipode().antipode(), d, 20, kSeed));
  // S(f T_a) = (T_{-a} f) T_{-a}
  DiffOp s = DiffOp::term(u2, 3).antipode();
  CHECK(s.terms().size() == 1);
  CHECK(s.terms().begin()->first == -3);
  CHECK(is_zero(s.terms().begin()->second - qpow(-6) * u2, 20, kSeed));
}

TEST_CASE("sampling is reproducible by seed") {
  Sampler a(42), b(42);
  for (int i = 0; i < 10; ++i) CHECK(a.sample_u() == b.sample_u());
}
