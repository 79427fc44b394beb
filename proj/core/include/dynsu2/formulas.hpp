#pragma once

// Closed forms for matrix-element, Clebsch-Gordan and orthogonality
// identities, templated over the coefficient field so the same expressions
// serve symbolic Scalars and exact pointwise evaluation.  Conventions:
// base q^2 throughout, ul = q^lambda, um = q^mu, uw = q^omega.

#include <algorithm>
#include <array>

#include "dynsu2/qseries.hpp"

namespace dynsu2 {
namespace fml {

using qs::fpow;
using qs::qbinom;
using qs::qpoch;
using qs::qracah;

template <class F>
F sgn(long k) {
  return (k % 2 == 0) ? F(1) : F(-1);
}

// Normalizing function Gamma^N_k(lambda) of the corepresentation V_N.
template <class F>
F gamma_corep(long N, long k, const F& q, const F& ul) {
  F p = q * q;
  return qbinom(N, k, p) * qpoch(fpow(q, 2 * (k - N - 1)) / (ul * ul), p, k) /
         qpoch(F(1) / (ul * ul), p, k);
}

// C^N_k(lambda, mu) with S(gamma^{N-k} alpha^k)^* = C^N_k alpha^k beta^{N-k}.
template <class F>
F unl_c(long N, long k, const F& q, const F& ul, const F& um) {
  F front = (F(1) - fpow(q, -2) / (ul * ul)) / (F(1) - fpow(q, 2 * (N - 1)) / (ul * ul));
  return front * fpow(q, k * (k - N)) * qpoch(F(1) / (um * um), q * q, k) /
         qpoch(fpow(q, 2 * (k - N - 1)) / (um * um), q * q, k);
}

// Action coefficients of the dynamical representation pi^omega.
template <class F>
F rep_A(long k, const F& q, const F& ul, const F& uw) {
  F r = (ul * ul) / (uw * uw);
  return fpow(q, -k) * (F(1) - fpow(q, 2 * (1 - k)) * r) / (F(1) - fpow(q, 2 * (1 - 2 * k)) * r);
}

template <class F>
F rep_B(long k, const F& q, const F& ul, const F& uw) {
  if (k <= 0) return F(0);
  return (F(1) - fpow(q, 2 * k)) * (F(1) - fpow(q, 2 * (k - 1)) * uw * uw) /
         ((F(1) - q * q * ul * ul) * (F(1) - fpow(q, 2 * (2 * k - 3)) * uw * uw / (ul * ul)));
}

template <class F>
F rep_D(long k, const F& q, const F& ul, const F& uw) {
  (void)uw;
  return fpow(q, k) * (F(1) - fpow(q, 2 * (1 - k)) * ul * ul) / (F(1) - q * q * ul * ul);
}

// Normalizing function Gamma^omega_k(lambda) of pi^omega.
template <class F>
F gamma_rep(long k, const F& q, const F& ul, const F& uw) {
  F p = q * q;
  return qpoch(p, p, k) * qpoch(uw * uw, p, k) /
         (qpoch(fpow(q, 2 * (1 - k)) * ul * ul, p, k) *
          qpoch(fpow(q, 2 * (k - 1)) * uw * uw / (ul * ul), p, k));
}

// T^{omega N}_{kjm}(lambda), q-Racah form; the negative-index Pochhammer
// convention covers N < j + k.  Zero when m + j - k < 0.
template <class F>
F tfun_qracah(long N, long k, long j, long m, const F& q, const F& ul, const F& uw) {
  if (m + j - k < 0) return F(0);
  F p = q * q;
  F ul2 = ul * ul, uw2 = uw * uw;
  F pre = sgn<F>(j + k) * fpow(ul, 2 * k) *
          fpow(q, 2 * k + m * (N - k - j) + (k - j) * (N - j + 1));
  pre = pre * qbinom(N, j, p);
  pre = pre * qpoch(fpow(q, 2 * (1 + k - j - m)) * ul2, p, N - k - j) *
        qpoch(fpow(q, -2 * (m + j)), p, k) * qpoch(fpow(q, -2 * (m + j - 1)) / uw2, p, k);
  pre = pre / (qpoch(fpow(q, 2 * (1 - j)) * ul2, p, N - j) *
               qpoch(fpow(q, 2 * (2 + N - 2 * j - 2 * m)) * ul2 / uw2, p, k));
  F rr = qracah(j, k, fpow(q, -2 * (N + 1)), fpow(q, -2) / ul2, fpow(q, -2 * (m + j + 1)),
                fpow(q, 2 * (1 - m - j)) * ul2 / uw2, p);
  return pre * rr;
}

// T^{omega N}_{kjm}(lambda), Askey-Wilson form per (k,j) domain.
template <class F>
F tfun_aw(long N, long k, long j, long m, const F& q, const F& ul, const F& uw) {
  if (m + j - k < 0) return F(0);
  F p = q * q;
  F ul2 = ul * ul, uw2 = uw * uw;
  F xi = uw / q;  // Omega = (q^{omega-1} + q^{1-omega})/2
  if (k <= j && k + j <= N) {
    F pre = sgn<F>(j) * fpow(ul, 2 * k) * fpow(uw, -k) *
            fpow(q, k * (3 + N + k - 3 * j - 3 * m) + (m - j) * (N - j) - j);
    pre = pre * qpoch(p, p, N - k) * qpoch(fpow(q, 2 * (1 + k - j - m)) * ul2, p, N - k - j);
    pre = pre / (qpoch(p, p, j) * qpoch(p, p, N - j) *
                 qpoch(fpow(q, 2 * (1 - j)) * ul2, p, N - j) *
                 qpoch(fpow(q, 2 * (2 + N - 2 * j - 2 * m)) * ul2 / uw2, p, k));
    return pre * qs::askey_wilson_xi(k, xi, fpow(q, 1 + 2 * (m + j - k)) * uw,
                                     fpow(q, 1 - 2 * m) / uw,
                                     fpow(q, 3 + 2 * (N - 2 * j - m)) * ul2 / uw,
                                     fpow(q, -1 - 2 * (k - j - m)) * uw / ul2, p);
  }
  if (k <= j) {  // N <= k + j
    F pre = sgn<F>(N - k) * fpow(ul, 2 * (N - j)) * fpow(uw, -(N - j)) *
            fpow(q, (N - j) * (3 + N + k - 4 * j - m) + k * (1 - m) - N);
    pre = pre * qpoch(fpow(q, 2 * (2 + N - 2 * j - m)) * ul2 / uw2, p, k + j - N);
    pre = pre / (qpoch(p, p, N - j) * qpoch(fpow(q, 2 * (1 - j)) * ul2, p, N - j) *
                 qpoch(fpow(q, 2 * (2 + N - 2 * j - 2 * m)) * ul2 / uw2, p, k));
    return pre * qs::askey_wilson_xi(N - j, xi, fpow(q, 1 + 2 * (m + j - k)) * uw,
                                     fpow(q, 1 - 2 * m) / uw,
                                     fpow(q, 3 + 2 * (k - j - m)) * ul2 / uw,
                                     fpow(q, -1 - 2 * (N - 2 * j - m)) * uw / ul2, p);
  }
  if (k + j <= N) {  // j <= k
    F pre = sgn<F>(k) * fpow(ul, 2 * k) * fpow(uw, -j) *
            fpow(q, k * (3 + N - j - m) - j * (1 + N + 3 * m) + m * N);
    pre = pre * qpoch(fpow(q, 2 * (1 + k - j - m)) * ul2, p, N - k - j) *
          qpoch(fpow(q, -2 * m), p, k - j) * qpoch(fpow(q, -2 * (m - 1)) / uw2, p, k - j);
    pre = pre / (qpoch(p, p, j) * qpoch(fpow(q, 2 * (1 - j)) * ul2, p, N - j) *
                 qpoch(fpow(q, 2 * (2 + N - 2 * j - 2 * m)) * ul2 / uw2, p, k));
    return pre * qs::askey_wilson_xi(j, xi, fpow(q, 1 + 2 * m) * uw,
                                     fpow(q, 1 - 2 * (m + j - k)) / uw,
                                     fpow(q, 3 + 2 * (N - 2 * j - m)) * ul2 / uw,
                                     fpow(q, -1 - 2 * (k - j - m)) * uw / ul2, p);
  }
  {  // j <= k, N <= k + j
    F pre = sgn<F>(N - j) * fpow(ul, 2 * (N - j)) * fpow(uw, -(N - j) + (k - j)) *
            fpow(q, (N - j) * (2 + N + k - 4 * j - m) + (k - j) * (1 + j - k + 2 * m) - m * k);
    pre = pre * qpoch(p, p, k) * qpoch(fpow(q, -2 * m), p, k - j) *
          qpoch(fpow(q, -2 * (m - 1)) / uw2, p, k - j) *
          qpoch(fpow(q, 2 * (2 + N - 2 * j - m)) * ul2 / uw2, p, k + j - N);
    pre = pre / (qpoch(p, p, j) * qpoch(p, p, N - j) *
                 qpoch(fpow(q, 2 * (1 - j)) * ul2, p, N - j) *
                 qpoch(fpow(q, 2 * (2 + N - 2 * j - 2 * m)) * ul2 / uw2, p, k));
    return pre * qs::askey_wilson_xi(N - k, xi, fpow(q, 1 + 2 * m) * uw,
                                     fpow(q, 1 - 2 * (m + j - k)) / uw,
                                     fpow(q, 3 + 2 * (k - j - m)) * ul2 / uw,
                                     fpow(q, -1 - 2 * (N - 2 * j - m)) * uw / ul2, p);
  }
}

// Clebsch-Gordan coefficient C^{MN,M+N-2s}_{jk,j+k-s}(lambda), finite-sum form.
template <class F>
F cg_w(long M, long N, long s, long j, long k, const F& q, const F& ul) {
  F p = q * q;
  F ul2 = ul * ul;
  long lo = std::max({0L, s - j, k + s - N});
  long hi = std::min({s, k, M - j});
  F sum(0);
  for (long m = lo; m <= hi; ++m) {
    F t = qbinom(M - s, j + m - s, p) * qbinom(N - s, k - m, p) * qbinom(s, m, p) /
          (qbinom(M, j, p) * qbinom(N, k, p));
    t = t * sgn<F>(s + m) *
        fpow(q, (N - k - s) * (j - s) - s + m * (1 + 2 * j + 2 * N + 3 * m - 2 * k - 4 * s));
    t = t * qpoch(fpow(q, 2 * (j + k + s - M - N - 1)) / ul2, p, j + m - s) *
        qpoch(fpow(q, 2 * (2 * j + k + m - s - M)) / ul2, p, s - m) *
        qpoch(fpow(q, 2 * (j + m - s)) / ul2, p, s - m);
    t = t / (qpoch(fpow(q, 2 * (j + m - M - 1)) / ul2, p, j + m - s) *
             qpoch(fpow(q, 2 * (2 * j + 2 * m - s - M)) / ul2, p, s - m) *
             qpoch(fpow(q, 2 * (2 * j + m - s - M - 1)) / ul2, p, s - m));
    sum = sum + t;
  }
  return sum;
}

// The same coefficient as a single balanced 4phi3.
template <class F>
F cg_p(long M, long N, long s, long j, long k, const F& q, const F& ul) {
  F p = q * q;
  F ul2 = ul * ul;
  F pre = fpow(q, (j - s) * (N - k) + s * j) * qpoch(fpow(q, -2 * (j + k)), p, s) *
          qpoch(fpow(q, 2 * (j + k - M - N - 1)) / ul2, p, j) /
          (qpoch(fpow(q, -2 * N), p, s) * qpoch(fpow(q, 2 * (j - M - 1)) / ul2, p, j));
  std::array<F, 3> num = {fpow(q, 2 * (s - M - N - 1)), fpow(q, -2 * j),
                          fpow(q, 2 * (j - M - 1)) / ul2};
  std::array<F, 3> den = {fpow(q, -2 * M), fpow(q, -2 * (j + k)),
                          fpow(q, 2 * (j + k - M - N - 1)) / ul2};
  return pre * qs::phi43(s, num, den, p, p);
}

// Special value C^{MN,M+N-2s}_{jk,0} for j + k = s.
template <class F>
F cg_bottom(long M, long N, long s, long j, long k, const F& q, const F& ul) {
  F p = q * q;
  F ul2 = ul * ul;
  (void)s;
  return sgn<F>(j) * fpow(q, k * (N - (j + k)) - j) * qpoch(p, p, j + k) * qpoch(p, p, M - j) *
         qpoch(p, p, N - k) * qpoch(F(1) / ul2, p, j) /
         (qpoch(p, p, M) * qpoch(p, p, N) * qpoch(fpow(q, 2 * (j - M - 1)) / ul2, p, j));
}

// Z_s of the CG orthogonality, independent of lambda.
template <class F>
F z_const(long M, long N, long s, const F& q) {
  F p = q * q;
  return sgn<F>(s) * fpow(q, -s * (s + 1)) * qpoch(p, p, s) *
         qpoch(fpow(q, 2 * (s - M - N - 1)), p, s) /
         (qpoch(fpow(q, -2 * M), p, s) * qpoch(fpow(q, -2 * N), p, s));
}

// Discrete weight, q-Racah value and norm of the orthogonality relation
// obtained by evaluating the first matrix-element orthogonality in pi^omega.
template <class F>
F rk_weight(long M, long N, long j, const F& q, const F& ul, const F& uw) {
  F p = q * q;
  F r = ul * ul / (uw * uw);  // q^{2(lambda-omega)}
  F head = (F(1) - fpow(q, 2 * (1 - 2 * M) + 4 * j) * r) / (F(1) - fpow(q, 2 * (1 - 2 * M)) * r);
  F t = qpoch(fpow(q, 2 * (1 - 2 * M)) * r, p, j) * qpoch(fpow(q, -2 * N), p, j) *
        qpoch(fpow(q, -2 * M), p, j) * qpoch(fpow(q, 2 * (1 - M)) / (uw * uw), p, j);
  t = t / (qpoch(p, p, j) * qpoch(fpow(q, 2 * (2 + N - 2 * M)) * r, p, j) *
           qpoch(fpow(q, 2 * (2 - M)) * r, p, j) * qpoch(fpow(q, 2 * (1 - M)) * ul * ul, p, j));
  return head * t * fpow(ul, 2 * j) * fpow(q, 2 * j * (N + 1));
}

template <class F>
F rk_racah(long M, long N, long n, long j, const F& q, const F& ul, const F& uw) {
  F p = q * q;
  return qracah(n, j, fpow(q, -2 * (N + 1)), fpow(q, -2) / (ul * ul), fpow(q, -2 * (M + 1)),
                fpow(q, 2 * (1 - M)) * ul * ul / (uw * uw), p);
}

template <class F>
F rk_norm(long M, long N, long k, const F& q, const F& ul, const F& uw) {
  F p = q * q;
  F ul2 = ul * ul;
  F w2l = uw * uw / ul2;  // q^{2(omega-lambda)}
  F t = qpoch(fpow(q, 2 * (2 * M - N - 1)) * w2l, p, N) * qpoch(fpow(q, -2 * N) / ul2, p, N) /
        (qpoch(fpow(q, 2 * (M - N - 1)) * w2l, p, N) * qpoch(fpow(q, 2 * (M - N)) / ul2, p, N));
  t = t * (F(1) - fpow(q, -2 * (N + 1)) / ul2) /
      (F(1) - fpow(q, -2 * (N + 1) + 4 * k) / ul2);
  t = t * qpoch(p, p, k) * qpoch(F(1) / ul2, p, k) * qpoch(fpow(q, 2 * (M - N)) / ul2, p, k) *
      qpoch(fpow(q, 2 * (M - N - 1)) * w2l, p, k);
  t = t / (qpoch(fpow(q, -2 * (N + 1)) / ul2, p, k) * qpoch(fpow(q, -2 * N), p, k) *
           qpoch(fpow(q, -2 * M), p, k) * qpoch(fpow(q, 2 * (1 - M)) / (uw * uw), p, k));
  return t * fpow(ul * ul / (uw * uw), k) * fpow(q, 2 * k * (1 - 2 * M));
}

// Dynamical CG coefficient C^{w1+w2+2s, w1 w2}_{k,lm}(lambda), three routes.
// L = l + m = s + k throughout.
template <class F>
F cgdyn_racah(long s, long k, long l, long m, const F& q, const F& ul, const F& u1, const F& u2) {
  long L = l + m;
  F p = q * q;
  F ul2 = ul * ul, u12 = u1 * u1, u22 = u2 * u2;
  F pre = sgn<F>(m) * fpow(q, s * k) / fpow(ul, s) * fpow(u1 * u2, 2 * m) *
          fpow(q, m * (3 * L - 1));
  pre = pre * qpoch(F(1) / ul2, p, m) * qpoch(fpow(q, 2 * (1 - L)) / u12, p, m) *
        qpoch(fpow(q, -2 * L), p, m) *
        qpoch(fpow(q, 2 * (2 - s - L)) * ul2 / (u12 * u22), p, s);
  pre = pre / (qpoch(p, p, m) * qpoch(u22, p, m) *
               qpoch(fpow(q, 2 * (L - 1)) * u12 * u22 / ul2, p, m));
  F rr = qracah(m, k, fpow(q, -2) / ul2, u22 / (q * q), fpow(q, -2 * (L + 1)),
                fpow(q, 2 * (1 - L)) / (u12 * u22), p);
  return pre * rr;
}

template <class F>
F cgdyn_alt(long s, long k, long l, long m, const F& q, const F& ul, const F& u1, const F& u2) {
  long L = l + m;
  F p = q * q;
  F ul2 = ul * ul, u12 = u1 * u1, u22 = u2 * u2;
  F pre = sgn<F>(s) * fpow(ul, s) * fpow(q, s * (1 - L) + 2 * l * (1 - L) - l * m) /
          fpow(u1 * u2, 2 * l);
  pre = pre * qbinom(L, m, p);
  pre = pre * qpoch(F(1) / ul2, p, m) * qpoch(fpow(q, 2 * (1 - L)) / u12, p, m) *
        qpoch(u22, p, L) * qpoch(fpow(q, 2 * (m + L - 1)) * u12 * u22 / ul2, p, l);
  pre = pre / (qpoch(F(1) / ul2, p, k) * qpoch(fpow(q, 2 * (1 - L)) / u12, p, k) *
               qpoch(u22, p, m) * qpoch(u22, p, s));
  F rr = qracah(l, k, fpow(q, 2 * (1 - 2 * L)) * ul2 / (u12 * u22), u12 / (q * q),
                fpow(q, -2 * (L + 1)), fpow(q, 2 * (1 - L)) / (u12 * u22), p);
  return pre * rr;
}

template <class F>
F cgdyn_third(long s, long k, long l, long m, const F& q, const F& ul, const F& u1,
              const F& u2) {
  long L = l + m;
  (void)k;
  F p = q * q;
  F ul2 = ul * ul, u12 = u1 * u1, u22 = u2 * u2;
  F pre = fpow(q, s * (l + m - s) - l * m) / fpow(ul, s);
  // q^{s(k-lambda)} with k = L - s
  pre = pre * qpoch(fpow(q, 2 * (2 - s - L)) * ul2 / (u12 * u22), p, s) * qbinom(L, m, p);
  F rr = qracah(s, m, u22 / (q * q), u12 / (q * q), fpow(q, -2 * (L + 1)),
                fpow(q, 2 * (L - 1)) * u22 / ul2, p);
  return pre * rr;
}

// Coefficient v_k of the Xi-eigenvector v(y;p) in H^{w1} (x) H^{w2}.
template <class F>
F eigvec_coeff(long y, long pdeg, long k, const F& q, const F& ul, const F& u1, const F& u2) {
  F p = q * q;
  F ul2 = ul * ul, u12 = u1 * u1, u22 = u2 * u2;
  F pre = sgn<F>(k) * fpow(u1 * u2, 2 * k) * fpow(q, k * (3 * pdeg - 1));
  pre = pre * qpoch(F(1) / ul2, p, k) * qpoch(fpow(q, 2 * (1 - pdeg)) / u12, p, k) *
        qpoch(fpow(q, -2 * pdeg), p, k);
  pre = pre / (qpoch(p, p, k) * qpoch(u22, p, k) *
               qpoch(fpow(q, 2 * (pdeg - 1)) * u12 * u22 / ul2, p, k));
  F rr = qracah(k, pdeg - y, fpow(q, -2) / ul2, u22 / (q * q), fpow(q, -2 * (pdeg + 1)),
                fpow(q, 2 * (1 - pdeg)) / (u12 * u22), p);
  return pre * rr;
}

// Intertwiner scaling phi_k of Theorem's C e_k = phi_k v(s; s+k).
template <class F>
F intertwiner_phi(long s, long k, const F& q, const F& ul, const F& u1, const F& u2) {
  return fpow(q, s * k) / fpow(ul, s) *
         qpoch(fpow(q, 2 * (2 - 2 * s - k)) * ul * ul / (u1 * u1 * u2 * u2), q * q, s);
}

// Biedenharn-Elliott pentagon, both sides, generic base.  `regN >= 0` marks
// the substitution a = base^{-(N+1)}; for N < k1 + k2 both sides are the
// regularized versions (multiplied through by (a base; base)_{k1+k2}).
template <class F>
F pi_lhs(long k1, long k2, long m1, long m2, long m3, const F& a, const F& b, const F& c,
         const F& d, const F& p, long regN) {
  bool reg = regN >= 0 && regN < k1 + k2;
  F t = qpoch(a * p, p, k1) * qpoch(fpow(p, -(m1 + m2)), p, k1) *
        qpoch(b * d * fpow(p, 1 - m3), p, k1) * qpoch(a * b * fpow(p, 2 * k1 + 2), p, k2) *
        qpoch(b * c * p * p, p, k1 + k2);
  t = t / (qpoch(b * p, p, k1) * qpoch(b * c * d * p * p, p, k1) *
           qpoch(fpow(p, -(m1 + m2 + m3)), p, k1) * qpoch(c * p, p, k2));
  if (!reg) t = t / qpoch(a * p, p, k1 + k2);
  t = t * fpow(b * fpow(p, 1 + k1), -k2);
  t = t * qracah(k1, m1, a, b, fpow(p, -(m1 + m2 + 1)), d * fpow(p, -m3), p);
  t = t * qracah(k2, m1 + m2 - k1, a * b * fpow(p, 2 * k1 + 1), c,
                 fpow(p, -(m1 + m2 + m3 - k1 + 1)), b * d * fpow(p, 1 + k1), p);
  return t;
}

template <class F>
F pi_rhs(long k1, long k2, long m1, long m2, long m3, const F& a, const F& b, const F& c,
         const F& d, const F& p, long regN) {
  bool reg = regN >= 0 && regN < k1 + k2;
  long lo = reg ? std::max(0L, k1 + k2 - regN) : 0L;
  long hi = std::min(k1 + k2, m2 + m3);
  F sum(0);
  for (long l = lo; l <= hi; ++l) {
    F t = qpoch(b * c * p, p, l) * qpoch(fpow(p, -(k1 + k2)), p, l) *
          qpoch(fpow(p, -(m2 + m3)), p, l) * qpoch(a * b * c * fpow(p, k1 + k2 + 2), p, l) *
          qpoch(b * p, p, l) * qpoch(b * c * d * fpow(p, 2) * fpow(p, m1), p, l);
    t = t / (qpoch(p, p, l) * qpoch(b * c * fpow(p, k1 + k2 + 2), p, l) *
             qpoch(fpow(p, -(m1 + m2 + m3)), p, l) * qpoch(c * p, p, l) *
             qpoch(b * c * d * p * p, p, l));
    if (reg) {
      t = t * sgn<F>(l) * fpow(p, -l * (l - 1) / 2 + l * (k1 + k2 - regN - 1)) *
          qpoch(fpow(p, -regN), p, k1 + k2 - l);
    } else {
      t = t / qpoch(fpow(p, -(k1 + k2)) / a, p, l);
    }
    t = t * (F(1) - b * c * fpow(p, 2 * l + 1)) / (F(1) - b * c * p);
    t = t * fpow(a * b * fpow(p, 1 + m1), -l);
    t = t * qracah(k1, l, b, a, fpow(p, -(k1 + k2 + 1)), b * c * fpow(p, k1 + k2 + 1), p);
    t = t * qracah(l, m2, b, c, fpow(p, -(m2 + m3 + 1)), b * d * fpow(p, 1 + m1), p);
    t = t * qracah(k1 + k2 - l, m1, a, b * c * fpow(p, 2 * l + 1),
                   fpow(p, -(m1 + m2 + m3 - l + 1)), d * fpow(p, -l), p);
    sum = sum + t;
  }
  return sum;
}

// Schur orthogonality value h(t^M_{jk} (t^N_{lm})^*) from the closed form.
template <class F>
F sop_value(long M, long N, long j, long k, long l, long m, const F& q, const F& ul,
            const F& um) {
  if (M != N || j != l || k != m) return F(0);
  F p = q * q;
  F ul2 = ul * ul, um2 = um * um;
  F t = fpow(q, 2 * (M - k)) * (F(1) - p) / (F(1) - fpow(q, 2 * (M + 1)));
  t = t * qpoch(p, p, j) * qpoch(F(1) / ul2, p, j) * qpoch(p, p, M - j) *
      qpoch(fpow(q, -2 * (1 + M - k)) / um2, p, M - k);
  t = t / (qpoch(fpow(q, -2 * (M + 1 - j)) / ul2, p, j) * qpoch(p, p, k) * qpoch(p, p, M - k) *
           qpoch(fpow(q, -2 * (M - 2 * k)) / um2, p, M - k));
  return t;
}

// Right side of the four-parameter Askey-Wilson orthogonality from the Haar
// functional (final display of the harmonic-analysis development).
template <class F>
F aw4_norm(long j, long k, long m, const F& q, const F& ul, const F& um) {
  F p = q * q;
  F t = (F(1) - p) / (F(1) - fpow(q, 2 * (2 * j + k + m + 1)));
  t = t * qpoch(p, p, j) * qpoch(p, p, j + k) * qpoch(p, p, j + m) / qpoch(p, p, j + k + m);
  t = t * qpoch(F(1) / (ul * ul), p, j) * qpoch(fpow(q, 4) * ul * ul, p, j + k + m) *
      qpoch(F(1) / (um * um), p, j + k) * qpoch(fpow(q, 4) * um * um, p, j + m);
  return t;
}

}  // namespace fml
}  // namespace dynsu2
