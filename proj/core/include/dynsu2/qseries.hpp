#pragma once

#include <array>
#include <vector>

#include "dynsu2/scalar.hpp"

namespace dynsu2 {

/// Exact rational with checked division, so pointwise identity evaluation
/// reports PoleAtPoint instead of crashing in GMP.
struct PRat {
  Rat v;
  PRat() : v(0) {}
  PRat(int n) : v(n) {}
  PRat(long n) : v(n) {}
  PRat(Rat r) : v(std::move(r)) { v.canonicalize(); }
  friend PRat operator+(const PRat& a, const PRat& b) { return PRat(Rat(a.v + b.v)); }
  friend PRat operator-(const PRat& a, const PRat& b) { return PRat(Rat(a.v - b.v)); }
  friend PRat operator*(const PRat& a, const PRat& b) { return PRat(Rat(a.v * b.v)); }
  friend PRat operator/(const PRat& a, const PRat& b) {
    if (b.v == 0) throw PoleAtPoint("division by zero in pointwise evaluation");
    return PRat(Rat(a.v / b.v));
  }
  PRat operator-() const { return PRat(Rat(-v)); }
  PRat& operator+=(const PRat& o) { v += o.v; return *this; }
  PRat& operator*=(const PRat& o) { v *= o.v; return *this; }
  bool operator==(const PRat& o) const { return v == o.v; }
};

namespace qs {

template <class F>
F fpow(const F& x, long e) {
  if (e == 0) return F(1);
  F base = e > 0 ? x : F(1) / x;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  F acc(1);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

/// (a; base)_k, with the negative-index convention (a;q)_{-n} = 1/(a q^{-n};q)_n.
template <class F>
F qpoch(const F& a, const F& base, long k) {
  if (k >= 0) {
    F acc(1), aq = a;
    for (long j = 0; j < k; ++j) {
      acc = acc * (F(1) - aq);
      aq = aq * base;
    }
    return acc;
  }
  return F(1) / qpoch<F>(a * fpow(base, k), base, -k);
}

template <class F>
F qpoch_many(std::initializer_list<F> as, const F& base, long k) {
  F acc(1);
  for (const F& a : as) acc = acc * qpoch(a, base, k);
  return acc;
}

/// (base; base)_n.
template <class F>
F qfact(const F& base, long n) {
  return qpoch(base, base, n);
}

/// Gaussian binomial [n k] in the given base.
template <class F>
F qbinom(long n, long k, const F& base) {
  if (k < 0 || k > n) throw DomainError("qbinom index out of range");
  if (k == 0 || k == n) return F(1);
  return qfact(base, n) / (qfact(base, k) * qfact(base, n - k));
}

/// Askey-Wilson monomial h_k(x, a; base) = prod_j (1 - 2 a base^j x + a^2 base^{2j}).
template <class F>
F awmono(long k, const F& x, const F& a, const F& base) {
  F acc(1), aq = a;
  for (long j = 0; j < k; ++j) {
    acc = acc * (F(1) - F(2) * aq * x + aq * aq);
    aq = aq * base;
  }
  return acc;
}

/// Terminating 4phi3 with numerator (base^{-n}, num...), argument z.
template <class F>
F phi43(long n, const std::array<F, 3>& num, const std::array<F, 3>& den, const F& base,
        const F& z) {
  if (n < 0) throw DomainError("phi43 termination order must be >= 0");
  F sum(0), term(1);
  F a0 = fpow(base, -n);
  std::array<F, 3> np = num, dp = den;
  F qp = base, a0p = a0;
  for (long k = 0;; ++k) {
    sum = sum + term;
    if (k == n) break;
    F f = (F(1) - a0p) * z;
    for (const F& x : np) f = f * (F(1) - x);
    F g = F(1) - qp;
    for (const F& x : dp) g = g * (F(1) - x);
    term = term * f / g;
    a0p = a0p * base;
    for (auto& x : np) x = x * base;
    for (auto& x : dp) x = x * base;
    qp = qp * base;
  }
  return sum;
}

/// Terminating very-well-poised r+1 W r: sum_k (1-a q^{2k})/(1-a) *
/// (a, b_1..b_m; q)_k / (q, aq/b_1..aq/b_m; q)_k * z^k, cut at k = n
/// (one of the b_i is q^{-n} by construction at every call site).
template <class F, size_t M>
F wseries(long n, const F& a, const std::array<F, M>& bs, const F& base, const F& z) {
  F sum(0);
  for (long k = 0; k <= n; ++k) {
    F t = (F(1) - a * fpow(base, 2 * k)) / (F(1) - a);
    t = t * qpoch(a, base, k) / qfact(base, k) * fpow(z, k);
    for (const F& b : bs) t = t * qpoch(b, base, k) / qpoch(a * base / b, base, k);
    sum = sum + t;
  }
  return sum;
}

/// 8W7(a; base^{-n}, b0..b3; base, z).
template <class F>
F w87(long n, const F& a, const std::array<F, 4>& b, const F& base, const F& z) {
  std::array<F, 5> bs = {fpow(base, -n), b[0], b[1], b[2], b[3]};
  return wseries<F, 5>(n, a, bs, base, z);
}

/// 6W5(a; b0, b1, base^{-n}; base, z).
template <class F>
F w65(long n, const F& a, const std::array<F, 2>& b, const F& base, const F& z) {
  std::array<F, 3> bs = {b[0], b[1], fpow(base, -n)};
  return wseries<F, 3>(n, a, bs, base, z);
}

/// q-Racah polynomial R_n(mu(x); a, b, c, d; base) for integer x >= 0,
/// with mu(x) = base^{-x} + c d base^{x+1} formed internally.
template <class F>
F qracah(long n, long x, const F& a, const F& b, const F& c, const F& d, const F& base) {
  if (n < 0 || x < 0) throw DomainError("qracah indices must be >= 0");
  long top = n < x ? n : x;
  F sum(0), term(1);
  for (long k = 0;; ++k) {
    sum = sum + term;
    if (k == top) break;
    F bk = fpow(base, k);
    F f = (F(1) - fpow(base, -n) * bk) * (F(1) - a * b * fpow(base, n + 1) * bk) *
          (F(1) - fpow(base, -x) * bk) * (F(1) - c * d * fpow(base, x + 1) * bk);
    F g = (F(1) - base * bk) * (F(1) - a * base * bk) * (F(1) - b * d * base * bk) *
          (F(1) - c * base * bk);
    term = term * f * base / g;
  }
  return sum;
}

/// Little q-Jacobi polynomial p_n(x; a, b; base).
template <class F>
F little_qjacobi(long n, const F& x, const F& a, const F& b, const F& base) {
  F sum(0), term(1);
  for (long k = 0;; ++k) {
    sum = sum + term;
    if (k == n) break;
    F bk = fpow(base, k);
    F f = (F(1) - fpow(base, -n) * bk) * (F(1) - a * b * fpow(base, n + 1) * bk) * base * x;
    F g = (F(1) - base * bk) * (F(1) - a * base * bk);
    term = term * f / g;
  }
  return sum;
}

/// h_k(Xi/2, a; base) as a polynomial in Xi: each factor is
/// (1 + a^2 base^{2j}) - (a base^j) Xi.
template <class F>
std::vector<F> awmono_xipoly(long k, const F& a, const F& base) {
  std::vector<F> poly{F(1)};
  F aq = a;
  for (long j = 0; j < k; ++j) {
    std::vector<F> next(poly.size() + 1, F(0));
    F c0 = F(1) + aq * aq, c1 = -aq;
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] = next[i] + poly[i] * c0;
      next[i + 1] = next[i + 1] + poly[i] * c1;
    }
    poly = std::move(next);
    aq = aq * base;
  }
  return poly;
}

/// Askey-Wilson p_n(Xi/2; a, b, c, d; base) as a polynomial in Xi.
template <class F>
std::vector<F> askey_wilson_xipoly(long n, const F& a, const F& b, const F& c, const F& d,
                                   const F& base) {
  std::vector<F> poly(static_cast<size_t>(n) + 1, F(0));
  F pref = qpoch_many<F>({a * b, a * c, a * d}, base, n) / fpow(a, n);
  F term(1);
  for (long k = 0;; ++k) {
    auto hk = awmono_xipoly(k, a, base);
    for (size_t i = 0; i < hk.size(); ++i) poly[i] = poly[i] + pref * term * hk[i];
    if (k == n) break;
    F bk = fpow(base, k);
    F f = (F(1) - fpow(base, -n) * bk) * (F(1) - a * b * c * d * fpow(base, n - 1) * bk) * base;
    F g = (F(1) - base * bk) * (F(1) - a * b * bk) * (F(1) - a * c * bk) * (F(1) - a * d * bk);
    term = term * f / g;
  }
  return poly;
}

/// Askey-Wilson polynomial evaluated with x = (xi + 1/xi)/2 kept formal:
/// the h_k factors become (a xi; base)_k (a/xi; base)_k.
template <class F>
F askey_wilson_xi(long n, const F& xi, const F& a, const F& b, const F& c, const F& d,
                  const F& base) {
  F pref = qpoch_many<F>({a * b, a * c, a * d}, base, n) / fpow(a, n);
  F sum(0), term(1);
  for (long k = 0;; ++k) {
    sum = sum + term * qpoch(a * xi, base, k) * qpoch(a / xi, base, k);
    if (k == n) break;
    F bk = fpow(base, k);
    F f = (F(1) - fpow(base, -n) * bk) * (F(1) - a * b * c * d * fpow(base, n - 1) * bk) * base;
    F g = (F(1) - base * bk) * (F(1) - a * b * bk) * (F(1) - a * c * bk) * (F(1) - a * d * bk);
    term = term * f / g;
  }
  return pref * sum;
}

template <class F>
F poly_eval(const std::vector<F>& poly, const F& x) {
  F acc(0);
  for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

template <class F>
std::vector<F> poly_mul(const std::vector<F>& p, const std::vector<F>& q) {
  std::vector<F> r(p.size() + q.size() - 1, F(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] = r[i + j] + p[i] * q[j];
  return r;
}

}  // namespace qs
}  // namespace dynsu2
