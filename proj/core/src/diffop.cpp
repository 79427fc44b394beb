#include "dynsu2/diffop.hpp"

namespace dynsu2 {

DiffOp DiffOp::shift_op(int a, std::string var) { return term(Scalar(1), a, std::move(var)); }

DiffOp DiffOp::term(const Scalar& f, int a, std::string var) {
  DiffOp d(std::move(var));
  if (!f.is_const_zero()) d.terms_[a] = f;
  return d;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [a, f] : o.terms_) {
    auto it = terms_.find(a);
    if (it == terms_.end())
      terms_.emplace(a, f);
    else
      it->second += f;
  }
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  // (f T_s)(g T_t) = f (T_s g) T_{s+t}
  DiffOp r(a.var_);
  for (const auto& [s, f] : a.terms_)
    for (const auto& [t, g] : b.terms_) {
      Scalar c = f * shift(g, a.var_, s);
      auto it = r.terms_.find(s + t);
      if (it == r.terms_.end())
        r.terms_.emplace(s + t, c);
      else
        it->second += c;
    }
  return r;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(var_);
  for (const auto& [a, f] : terms_) r.terms_.emplace(a, -f);
  return r;
}

Scalar DiffOp::apply(const Scalar& g) const {
  Scalar r;
  for (const auto& [a, f] : terms_) r += f * shift(g, var_, a);
  return r;
}

Scalar DiffOp::apply_to_one() const {
  Scalar r;
  for (const auto& [a, f] : terms_) r += f;
  return r;
}

DiffOp DiffOp::antipode() const {
  DiffOp r(var_);
  for (const auto& [a, f] : terms_) r.terms_[-a] = shift(f, var_, -a);
  return r;
}

DiffOp DiffOp::star() const {
  DiffOp r(var_);
  for (const auto& [a, f] : terms_) r.terms_[-a] = shift(bar(f), var_, -a);
  return r;
}

bool DiffOp::zero_test(int trials, uint64_t seed) const {
  int i = 0;
  for (const auto& [a, f] : terms_)
    if (!is_zero(f, trials, splitmix64(seed + static_cast<uint64_t>(++i)))) return false;
  return true;
}

bool diffop_equal(const DiffOp& a, const DiffOp& b, int trials, uint64_t seed) {
  DiffOp d = a + (-b);
  return d.zero_test(trials, seed);
}

}  // namespace dynsu2
