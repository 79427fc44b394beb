#pragma once

#include <map>
#include <string>

#include "dynsu2/scalar.hpp"

namespace dynsu2 {

/// Finite difference operator sum f_i T_{b_i} on one-variable functions.
/// Terms with equal shift are merged.  The coefficient functions live in the
/// named variable (the single dynamical variable of D_h).
class DiffOp {
 public:
  explicit DiffOp(std::string var = "lambda") : var_(std::move(var)) {}
  static DiffOp shift_op(int a, std::string var = "lambda");
  static DiffOp term(const Scalar& f, int a, std::string var = "lambda");

  const std::map<int, Scalar>& terms() const { return terms_; }
  const std::string& var() const { return var_; }

  DiffOp& operator+=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);  // composition
  DiffOp operator-() const;

  Scalar apply(const Scalar& g) const;  // sum f_i T_{b_i} g
  Scalar apply_to_one() const;          // the function eps(a)1
  DiffOp antipode() const;              // S(f T_a) = (T_{-a} f) T_{-a}
  DiffOp star() const;                  // (f T_a)* = (T_{-a} bar f) T_{-a}

  bool zero_test(int trials, uint64_t seed) const;

 private:
  std::string var_;
  std::map<int, Scalar> terms_;
};

bool diffop_equal(const DiffOp& a, const DiffOp& b, int trials, uint64_t seed);

}  // namespace dynsu2
