#include <algorithm>

#include "dynsu2/dynrep.hpp"
#include "dynsu2/haar.hpp"
#include "dynsu2/report.hpp"
#include "suite_util.hpp"

namespace dynsu2 {

namespace {

using detail::VarMap;
using qs::fpow;
using qs::qpoch;

// Askey-Wilson value at Omega_w = (q^{w-1} + q^{1-w})/2, xi = uw/q
PRat aw_at(long n, const PRat& uw, const PRat& a, const PRat& b, const PRat& c, const PRat& d,
           const PRat& p, const PRat& q) {
  return qs::askey_wilson_xi(n, uw / q, a, b, c, d, p);
}

}  // namespace

SuiteReport verify_biedenharn(const SuiteOptions& opts) {
  Suite suite("biedenharn", opts);
  int b = std::min(suite.bound_or(3), 3);

  // (add2): coefficient identity of the pentagon derivation
  for (int N = 0; N <= b; ++N) {
    suite.add("add2", "eq-add2", "N=" + std::to_string(N), [N, b](uint64_t seed, int points) {
      uint64_t i = 0;
      for (long k = 0; k <= N; ++k)
        for (long j = 0; j <= N; ++j)
          for (long m = 0; m <= b; ++m)
            for (long x = 0; x <= b; ++x)
              for (long y = 0; y <= b; ++y) {
                long s = k + x + y - m - j;
                if (s < 0 || s > b) continue;
                bool ok = detail::pointwise(
                    {"lambda", "omega1", "omega2"}, points, splitmix64(seed + ++i),
                    [N, k, j, m, x, y, s](const PRat& q, const VarMap& mm) {
                      PRat ul = mm.at("lambda"), u1 = mm.at("omega1"), u2 = mm.at("omega2");
                      PRat uw = u1 * u2 * fpow(q, 2 * s);  // omega1 + omega2 + 2s
                      PRat lhs(0);
                      if (m + j - k >= 0) {
                        lhs = fml::cgdyn_racah(s, m + j - k, x, y, q, ul, u1, u2) *
                              fml::tfun_qracah(N, k, j, m, q, ul, uw);
                      }
                      PRat rhs(0);
                      for (long l = std::max(0L, j - y); l <= std::min<long>(N, x + k); ++l) {
                        long sp = s + m - (x + k - l) - (y + l - j);  // = 0 by construction
                        (void)sp;
                        PRat c = fml::cgdyn_racah(s, m, x + k - l, y + l - j, q,
                                                  fpow(q, N - 2 * j) * ul, u1, u2);
                        PRat t1 = fml::tfun_qracah(N, k, l, x + k - l, q,
                                                   fpow(q, -2 * y) * ul / u2, u1);
                        PRat t2 = fml::tfun_qracah(N, l, j, y + l - j, q, ul, u2);
                        rhs = rhs + c * t1 * t2;
                      }
                      return lhs - rhs;
                    });
                if (!ok) return false;
              }
      return true;
    });
  }

  // (pi) under the stated substitution, with the a = q^{-N-1} regularization
  for (int N = 0; N <= b; ++N) {
    suite.add("pi", "eq-pi", "N=" + std::to_string(N), [N, b](uint64_t seed, int points) {
      uint64_t i = 0;
      for (long k1 = 0; k1 <= std::min<long>(N, b); ++k1)
        for (long k2 = 0; k2 <= b; ++k2)
          for (long m1 = 0; m1 <= N; ++m1)
            for (long m2 = 0; m2 <= b; ++m2)
              for (long m3 = 0; m3 <= b; ++m3) {
                if (k1 > m1 + m2 || k1 + k2 > m1 + m2 + m3) continue;
                bool ok = detail::pointwise(
                    {"lambda", "omega1", "omega2"}, points, splitmix64(seed + ++i),
                    [N, k1, k2, m1, m2, m3](const PRat& q, const VarMap& mm) {
                      PRat ul = mm.at("lambda"), u1 = mm.at("omega1"), u2 = mm.at("omega2");
                      PRat p = q * q;
                      PRat a = fpow(p, -(N + 1));
                      PRat bb = ul * ul / (u1 * u1 * u2 * u2) *
                                fpow(q, 2 * (N + 1 - 2 * m1 - 2 * m2 - 2 * m3));
                      PRat cc = u1 * u1 / (q * q);
                      PRat dd = fpow(q, -2 * (1 + N - m1 - m2 - m3)) / (ul * ul);
                      return fml::pi_lhs(k1, k2, m1, m2, m3, a, bb, cc, dd, p, N) -
                             fml::pi_rhs(k1, k2, m1, m2, m3, a, bb, cc, dd, p, N);
                    });
                if (!ok) return false;
              }
      return true;
    });
  }
  // (pi) with fully generic parameters (no termination substitution)
  suite.add("pi-generic", "eq-pi", "k,m<=2", [](uint64_t seed, int points) {
    uint64_t i = 0;
    for (long k1 = 0; k1 <= 2; ++k1)
      for (long k2 = 0; k2 <= 2; ++k2)
        for (long m1 = 0; m1 <= 2; ++m1)
          for (long m2 = 0; m2 <= 2; ++m2)
            for (long m3 = 0; m3 <= 2; ++m3) {
              if (k1 > m1 + m2 || k1 + k2 > m1 + m2 + m3) continue;
              bool ok = detail::pointwise(
                  {"a", "b", "c", "d"}, points, splitmix64(seed + ++i),
                  [k1, k2, m1, m2, m3](const PRat& q, const VarMap& mm) {
                    return fml::pi_lhs(k1, k2, m1, m2, m3, mm.at("a"), mm.at("b"), mm.at("c"),
                                       mm.at("d"), q, -1) -
                           fml::pi_rhs(k1, k2, m1, m2, m3, mm.at("a"), mm.at("b"), mm.at("c"),
                                       mm.at("d"), q, -1);
                  });
              if (!ok) return false;
            }
    return true;
  });

  // (conv): the corepresentation CG formula evaluated in pi^omega
  for (int M = 0; M <= b; ++M)
    for (int N = 0; N <= b; ++N) {
      suite.add("conv", "eq-conv", detail::idx({M, N}), [M, N, b](uint64_t seed, int points) {
        uint64_t i = 0;
        for (long s = 0; s <= std::min(M, N); ++s)
          for (long m = 0; m <= M; ++m)
            for (long n = 0; n <= N; ++n)
              for (long p = 0; p <= std::min<long>(M + N - 2 * s, b); ++p)
                for (long j = 0; j <= b; ++j) {
                  bool ok = detail::pointwise(
                      {"lambda", "omega"}, points, splitmix64(seed + ++i),
                      [M, N, s, m, n, p, j](const PRat& q, const VarMap& mm) {
                        PRat ul = mm.at("lambda"), uw = mm.at("omega");
                        PRat lhs(0);
                        for (long k = std::max(0L, p + s - static_cast<long>(N));
                             k <= std::min<long>(M, p + s); ++k) {
                          long l = p + s - k;
                          if (j + l - n < 0) continue;
                          lhs = lhs + fml::cg_p(M, N, s, k, l, q, ul) *
                                          fml::tfun_qracah(M, m, k, j + l - n, q, ul, uw) *
                                          fml::tfun_qracah(N, n, l, j, q,
                                                           fpow(q, M - 2 * k) * ul, uw);
                        }
                        PRat rhs(0);
                        long mn = m + n - s;
                        if (mn >= 0 && mn <= M + N - 2 * s) {
                          PRat ulsh =
                              fpow(q, -2 * (j + p + s - m - n)) * ul / uw;
                          rhs = fml::cg_p(M, N, s, m, n, q, ulsh) *
                                fml::tfun_qracah(M + N - 2 * s, mn, p, j, q, ul, uw);
                        }
                        return lhs - rhs;
                      });
                  if (!ok) return false;
                }
        return true;
      });
      suite.add("p2", "eq-p2", detail::idx({M, N}), [M, N, b](uint64_t seed, int points) {
        uint64_t i = 0;
        for (long k = 0; k <= M; ++k)
          for (long x = 0; x <= M; ++x)
            for (long l = 0; l <= N; ++l)
              for (long y = 0; y <= N; ++y)
                for (long j = 0; j <= b; ++j) {
                  bool ok = detail::pointwise(
                      {"lambda", "omega"}, points, splitmix64(seed + ++i),
                      [M, N, k, x, l, y, j](const PRat& q, const VarMap& mm) {
                        PRat ul = mm.at("lambda"), uw = mm.at("omega");
                        PRat lhs(0);
                        if (j + y - l >= 0)
                          lhs = fml::tfun_qracah(M, k, x, j + y - l, q, ul, uw) *
                                fml::tfun_qracah(N, l, y, j, q, fpow(q, M - 2 * x) * ul, uw);
                        PRat rhs(0);
                        long smax = std::min({static_cast<long>(M), static_cast<long>(N),
                                              k + l, M + N - k - l, x + y, M + N - x - y});
                        for (long s = 0; s <= smax; ++s) {
                          PRat g = fml::gamma_corep(M, x, q, ul) *
                                   fml::gamma_corep(N, y, q, fpow(q, M - 2 * x) * ul) /
                                   fml::gamma_corep(M + N - 2 * s, x + y - s, q, ul);
                          PRat ulsh = fpow(q, -2 * (j + x + y - k - l)) * ul / uw;
                          rhs = rhs + g / fml::z_const<PRat>(M, N, s, q) *
                                          fml::cg_p(M, N, s, k, l, q, ulsh) *
                                          fml::cg_p(M, N, s, x, y, q, ul) *
                                          fml::tfun_qracah(M + N - 2 * s, k + l - s,
                                                           x + y - s, j, q, ul, uw);
                        }
                        return lhs - rhs;
                      });
                  if (!ok) return false;
                }
        return true;
      });
    }
  return suite.run();
}

SuiteReport verify_addition(const SuiteOptions& opts) {
  Suite suite("addition", opts);
  int b = std::min(suite.bound_or(2), 2);

  suite.add("spherical", "sec6.2-addition", "k,x,m,y<=" + std::to_string(b),
            [b](uint64_t seed, int points) {
    uint64_t i = 0;
    for (long k = 0; k <= b; ++k)
      for (long x = 0; x <= b; ++x)
        for (long y = 0; y <= b; ++y)
          for (long m = 0; m <= x + y && m <= b; ++m) {
            long L = x + y, s = L - m;
            bool ok = detail::pointwise(
                {"lambda", "omega1", "omega2"}, points, splitmix64(seed + ++i),
                [k, x, y, m, L, s](const PRat& q, const VarMap& mm) {
                  PRat ul = mm.at("lambda"), u1 = mm.at("omega1"), u2 = mm.at("omega2");
                  PRat p = q * q;
                  PRat ul2 = ul * ul, u12 = u1 * u1, u22 = u2 * u2;
                  auto R = [&](long n, long xx) {
                    return qs::qracah(n, xx, fpow(q, 2 * (1 - 2 * L)) * ul2 / (u12 * u22),
                                      u12 / p, fpow(q, -2 * (L + 1)),
                                      fpow(q, 2 * (1 - L)) / (u12 * u22), p);
                  };
                  // Omega (xi = u1 u2 q^{2s-1}), Omega_1 (xi = u1/q),
                  // Omega_2 (xi = u2/q)
                  PRat lhs = fpow(q, -k) * qpoch(p, p, k) *
                             qpoch(fpow(q, 2 * (2 - 2 * y)) * ul2 / u22, p, k) *
                             qpoch(fpow(q, 2 * (2 * y)) * u22 / ul2, p, k) * R(x, m);
                  lhs = lhs *
                        qs::askey_wilson_xi(
                            k, u1 * u2 * fpow(q, 2 * s - 1),
                            fpow(q, 1 + 2 * L) * u1 * u2, fpow(q, 1 - 2 * L) / (u1 * u2),
                            fpow(q, 3 - 2 * L) * ul2 / (u1 * u2),
                            fpow(q, -1 + 2 * L) * u1 * u2 / ul2, p);
                  PRat rhs =
                      R(x, m) *
                      aw_at(k, u1, fpow(q, 1 + 2 * x) * u1, fpow(q, 1 - 2 * x) / u1,
                            fpow(q, 3 - 2 * (x + 2 * y)) * ul2 / (u22 * u1),
                            fpow(q, -1 + 2 * (x + 2 * y)) * u22 * u1 / ul2, p, q) *
                      aw_at(k, u2, fpow(q, 1 + 2 * y) * u2, fpow(q, 1 - 2 * y) / u2,
                            fpow(q, 3 - 2 * y) * ul2 / u2, fpow(q, -1 + 2 * y) * u2 / ul2, p,
                            q);
                  for (long l = 1; l <= std::min(k, y); ++l) {
                    PRat t = qpoch(p, p, k + l) * qpoch(p, p, y) /
                             (qpoch(p, p, k - l) * qpoch(p, p, y - l));
                    t = t * (PRat(1) - fpow(q, 2 * (1 - 2 * y + 2 * l)) * ul2 / u22) /
                        (PRat(1) - fpow(q, 2 * (1 - 2 * y)) * ul2 / u22);
                    t = t * fpow(u1, l) * fpow(u2, 3 * l) / fpow(ul, 2 * l) *
                        fpow(q, l * (2 * k + 2 * x + 4 * y - 4));
                    t = t * qpoch(fpow(q, 2 * (1 - y)) / u22, p, l) *
                        qpoch(fpow(q, 2 * (2 - x - 2 * y)) * ul2 / (u12 * u22), p, l) *
                        qpoch(fpow(q, 2 * (1 - x - 2 * y)) * ul2 / u22, p, l) *
                        qpoch(fpow(q, 2 * (1 - k - 2 * y)) * ul2 / u22, p, l) /
                        qpoch(fpow(q, 2 * (2 + k - 2 * y)) * ul2 / u22, p, l);
                    t = t * R(x + l, m);
                    t = t * aw_at(k - l, u1, fpow(q, 1 + 2 * (x + l)) * u1,
                                  fpow(q, 1 - 2 * x) / u1,
                                  fpow(q, 3 - 2 * (x + 2 * y - l)) * ul2 / (u22 * u1),
                                  fpow(q, -1 + 2 * (x + 2 * y)) * u22 * u1 / ul2, p, q);
                    t = t * aw_at(k - l, u2, fpow(q, 1 + 2 * y) * u2,
                                  fpow(q, 1 - 2 * (y - l)) / u2,
                                  fpow(q, 3 - 2 * (y - l)) * ul2 / u2,
                                  fpow(q, -1 + 2 * y) * u2 / ul2, p, q);
                    rhs = rhs + t;
                  }
                  for (long l = 1; l <= std::min(k, x); ++l) {
                    PRat t = qpoch(p, p, k + l) * qpoch(p, p, x) /
                             (qpoch(p, p, k - l) * qpoch(p, p, x - l));
                    t = t * (PRat(1) - fpow(q, 2 * (2 * y + 2 * l - 1)) * u22 / ul2) /
                        (PRat(1) - fpow(q, 2 * (2 * y - 1)) * u22 / ul2);
                    t = t * fpow(u1, l) / fpow(u2, l) * fpow(ul, 2 * l) *
                        fpow(q, l * (2 * k - 2 * y));
                    t = t * qpoch(fpow(q, 2 * y) / ul2, p, l) *
                        qpoch(fpow(q, 2 * (1 - x)) / u12, p, l) *
                        qpoch(fpow(q, 2 * (y - 1)) * u22 / ul2, p, l) *
                        qpoch(fpow(q, 2 * (2 * y - k - 1)) * u22 / ul2, p, l) /
                        qpoch(fpow(q, 2 * (k + 2 * y)) * u22 / ul2, p, l);
                    t = t * R(x - l, m);
                    t = t * aw_at(k - l, u1, fpow(q, 1 + 2 * x) * u1,
                                  fpow(q, 1 - 2 * (x - l)) / u1,
                                  fpow(q, 3 - 2 * (x + 2 * y)) * ul2 / (u22 * u1),
                                  fpow(q, -1 + 2 * (x + 2 * y + l)) * u22 * u1 / ul2, p, q);
                    t = t * aw_at(k - l, u2, fpow(q, 1 + 2 * (y + l)) * u2,
                                  fpow(q, 1 - 2 * y) / u2, fpow(q, 3 - 2 * y) * ul2 / u2,
                                  fpow(q, -1 + 2 * (y + l)) * u2 / ul2, p, q);
                    rhs = rhs + t;
                  }
                  return lhs - rhs;
                });
            if (!ok) return false;
          }
    return true;
  });

  suite.add("little-qjacobi", "koornwinder-limit", "z<=2", [b](uint64_t seed, int points) {
    uint64_t i = 0;
    for (long k = 0; k <= b; ++k)
      for (long x = 0; x <= b; ++x)
        for (long m = 0; m <= b; ++m)
          for (long z = 0; z <= 2; ++z) {
            bool ok = detail::pointwise(
                {}, points, splitmix64(seed + ++i),
                [k, x, m, z](const PRat& q, const VarMap&) {
                  PRat p = q * q;
                  auto lj = [&](long n, const PRat& arg, const PRat& a, const PRat& bb) {
                    return qs::little_qjacobi(n, arg, a, bb, p);
                  };
                  PRat qm = fpow(q, 2 * m);
                  PRat lhs = lj(x, qm, fpow(q, 2 * z), PRat(0)) * lj(k, qm, PRat(1), PRat(1));
                  PRat rhs = lj(x, qm, fpow(q, 2 * z), PRat(0)) *
                             lj(k, fpow(q, 2 * x), PRat(1), PRat(1)) *
                             lj(k, fpow(q, 2 * (x + z)), PRat(1), PRat(1));
                  for (long l = 1; l <= k; ++l) {
                    PRat t = qpoch(p, p, k + l) * qpoch(fpow(q, 2 * (1 + z)), p, x + l) /
                             (qpoch(p, p, k - l) * qpoch(fpow(q, 2 * (1 + z)), p, x) *
                              qpoch(p, p, l) * qpoch(p, p, l));
                    t = t * fpow(q, 2 * l * (x + l - k));
                    t = t * lj(x + l, qm, fpow(q, 2 * z), PRat(0)) *
                        lj(k - l, fpow(q, 2 * x), fpow(q, 2 * l), fpow(q, 2 * l)) *
                        lj(k - l, fpow(q, 2 * (x + z)), fpow(q, 2 * l), fpow(q, 2 * l));
                    rhs = rhs + t;
                  }
                  for (long l = 1; l <= std::min(k, x); ++l) {
                    PRat t = qpoch(p, p, k + l) * qpoch(p, p, x) /
                             (qpoch(p, p, k - l) * qpoch(p, p, x - l) * qpoch(p, p, l) *
                              qpoch(p, p, l));
                    t = t * fpow(q, 2 * l * (x + z - k + 1));
                    t = t * lj(x - l, qm, fpow(q, 2 * z), PRat(0)) *
                        lj(k - l, fpow(q, 2 * (x - l)), fpow(q, 2 * l), fpow(q, 2 * l)) *
                        lj(k - l, fpow(q, 2 * (x + z - l)), fpow(q, 2 * l), fpow(q, 2 * l));
                    rhs = rhs + t;
                  }
                  return lhs - rhs;
                });
            if (!ok) return false;
          }
    return true;
  });
  return suite.run();
}

SuiteReport verify_haar_suite(const SuiteOptions& opts) {
  Suite suite("haar", opts);
  int b = std::min(suite.bound_or(3), 3);

  suite.add("h-normalized", "eq-h", "h(1)=1", [](uint64_t seed, int points) {
    return is_zero(haar(unit(Mode::SL2)) - Scalar(1), points, seed);
  });
  for (int N = 0; N <= b; ++N) {
    suite.add("h-matelem", "eq-h", "N=" + std::to_string(N), [N](uint64_t seed, int points) {
      uint64_t i = 0;
      for (int k = 0; k <= N; ++k)
        for (int j = 0; j <= N; ++j) {
          Scalar v = haar(matelem(N, k, j));
          Scalar expect = N == 0 ? Scalar(1) : Scalar();
          if (!is_zero(v - expect, points, splitmix64(seed + ++i))) return false;
        }
      return true;
    });
  }
  suite.add("moments", "eq-h", "d<=4", [](uint64_t seed, int points) {
    auto m = moments(4);
    if (!is_zero(m[0] - Scalar(1), points, splitmix64(seed))) return false;
    for (int k = 1; k <= 4; ++k) {
      XiPoly pk = haar_pk(k);
      Scalar acc;
      for (size_t j = 0; j < pk.c.size(); ++j) acc += pk.c[j] * m[j];
      if (!is_zero(acc, points, splitmix64(seed + static_cast<uint64_t>(k)))) return false;
    }
    return true;
  });
  // left and right invariance: named elements from the examples plus randoms
  for (int i = 0; i < 8; ++i) {
    suite.add("invariance", "sec7-invariance",
              i == 0 ? "gamma*beta" : (i == 1 ? "t^2_11" : "random" + std::to_string(i)),
              [i, b](uint64_t seed, int points) {
      Sampler s(splitmix64(seed ^ 0x1777) + static_cast<uint64_t>(i));
      AlgElement a(Mode::SL2, VarNames{});
      if (i == 0) {
        Mono gb;
        gb.g = 1;
        gb.b = 1;
        a = mono_elem(gb, Mode::SL2);
      } else if (i == 1) {
        a = matelem(2, 1, 1);
      } else {
        a = detail::random_elem(s, Mode::SL2, b, 2);
      }
      TensorElement t = coproduct(a);
      Scalar ha = haar(a);
      // left: h(a) = sum_i c_i(lambda, mu, mu) h(m_i'')(mu, mu) m_i'
      AlgElement left(Mode::SL2, VarNames{});
      AlgElement right(Mode::SL2, VarNames{});
      for (const auto& [mm, c] : t.terms) {
        Scalar h2 = haar(mono_elem(mm.second, Mode::SL2));
        Scalar h2sub = subst(h2, {{"lambda", Scalar::var("mu")}, {"mu", Scalar::var("mu")}});
        Scalar csub = subst(c, {{"rho", Scalar::var("mu")}});
        left.insert(mm.first, csub * h2sub);
        Scalar h1 = haar(mono_elem(mm.first, Mode::SL2));
        Scalar h1sub =
            subst(h1, {{"lambda", Scalar::var("lambda")}, {"mu", Scalar::var("lambda")}});
        Scalar csub2 = subst(c, {{"rho", Scalar::var("lambda")}});
        right.insert(mm.second, csub2 * h1sub);
      }
      AlgElement expect = scale(unit(Mode::SL2), ha);
      return alg_equal(left, expect, points, splitmix64(seed)) &&
             alg_equal(right, expect, points, splitmix64(seed + 1));
    });
  }
  suite.add("h-prealgebra", "sec7", "random", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 5; ++i) {
      AlgElement a = detail::random_elem(s, Mode::SL2, 2, 2);
      Scalar f = detail::random_coeff(s, VarNames{});
      if (!is_zero(haar(scale(a, f)) - f * haar(a), points,
                   splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    }
    return true;
  });
  suite.add("h-star", "sec7", "F00 random", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 5; ++i) {
      AlgElement x(Mode::SL2, VarNames{});
      for (int g = 0; g <= 2; ++g) {
        Mono m;
        m.g = g;
        m.b = g;
        x.insert(m, detail::random_coeff(s, VarNames{}));
      }
      if (!is_zero(haar(star(x)) - bar(haar(x)), points,
                   splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    }
    return true;
  });
  suite.add("xi-roundtrip", "lemma-ccr", "random", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 4; ++i) {
      XiPoly p;
      for (int d = 0; d <= 2; ++d) p.c.push_back(detail::random_coeff(s, VarNames{}));
      XiPoly back = to_xi_poly(p.to_alg());
      uint64_t j = 0;
      for (size_t d = 0; d < std::max(p.c.size(), back.c.size()); ++d)
        if (!is_zero(p.coeff(d) - back.coeff(d), points, splitmix64(seed + ++j))) return false;
    }
    return true;
  });
  suite.add("strict-mode", "sec7", "alpha", [](uint64_t seed, int points) {
    (void)seed;
    (void)points;
    try {
      to_xi_poly(gen_elem(Gen::Alpha, Mode::SL2), true);
      return false;
    } catch (const NotDegreeZero&) {
      return true;
    }
  });
  return suite.run();
}

SuiteReport verify_schur(const SuiteOptions& opts) {
  Suite suite("schur", opts);
  int b = std::min(suite.bound_or(2), 2);
  for (int M = 0; M <= b; ++M)
    for (int N = 0; N <= b; ++N) {
      suite.add("sop", "thm-sop", detail::idx({M, N}), [M, N](uint64_t seed, int points) {
        uint64_t i = 0;
        for (int j = 0; j <= M; ++j)
          for (int k = 0; k <= M; ++k)
            for (int l = 0; l <= N; ++l)
              for (int m = 0; m <= N; ++m) {
                Scalar v = haar(mul(matelem(M, j, k), star(matelem(N, l, m))));
                Scalar expect = fml::sop_value<Scalar>(M, N, j, k, l, m, Scalar::q(),
                                                       Scalar::var("lambda"),
                                                       Scalar::var("mu"));
                if (!is_zero(v - expect, points, splitmix64(seed + ++i))) return false;
              }
        return true;
      });
    }
  // the product expansion behind the four-parameter orthogonality
  suite.add("product-expansion", "sec7-product", "j,l,k,m<=1", [](uint64_t seed, int points) {
    Scalar q = Scalar::q(), ul = Scalar::var("lambda"), um = Scalar::var("mu");
    Scalar q2 = qpow(2);
    uint64_t i = 0;
    for (int j = 0; j <= 1; ++j)
      for (int l = 0; l <= 1; ++l)
        for (int k = 0; k <= 1; ++k)
          for (int m = 0; m <= 1; ++m) {
            AlgElement lhs = mul(matelem(2 * j + k + m, j, j + k),
                                 star(matelem(2 * l + k + m, l, l + k)));
            auto poch = [&](const Scalar& x, long n) { return qs::qpoch<Scalar>(x, q2, n); };
            Scalar pref = fml::sgn<Scalar>(m) * (ul / um).pow(j + l) *
                          qpow((j + l) * (1 + k) - m * (1 + m)) * um.pow(-2 * m) *
                          poch(Scalar(1) / (um * um), k - m) /
                          (poch(Scalar(1) / (um * um), j + k) *
                           poch(Scalar(1) / (um * um), l + k));
            pref *= qs::qfact<Scalar>(q2, j + k + m) * qs::qfact<Scalar>(q2, l + k + m) /
                    (qs::qfact<Scalar>(q2, j + k) * qs::qfact<Scalar>(q2, j + m) *
                     qs::qfact<Scalar>(q2, l + k) * qs::qfact<Scalar>(q2, l + m));
            pref *= poch(qpow(4) * ul * ul, k + m) /
                    (poch(qpow(4) * ul * ul, j + k + m) * poch(qpow(4) * ul * ul, l + k + m));
            auto pkm = [&](int deg) {
              return XiPoly(qs::askey_wilson_xipoly<Scalar>(
                  deg, q * um / ul, qpow(1 + 2 * k) * ul / um, qpow(3 + 2 * m) * ul * um,
                  qpow(-1) / (ul * um), q2));
            };
            XiPoly prod = XiPoly(qs::awmono_xipoly<Scalar>(k, q * ul / um, q2)) *
                          XiPoly(qs::awmono_xipoly<Scalar>(m, qpow(3) * ul * um, q2)) *
                          pkm(j) * pkm(l);
            AlgElement rhs = scale(prod.to_alg(), pref);
            if (!alg_equal(lhs, rhs, points, splitmix64(seed + ++i))) return false;
          }
    return true;
  });
  // four-parameter Askey-Wilson orthogonality through the moment table
  suite.add("aw4-orthogonality", "sec7-final-display", "j,l,k,m<=" + std::to_string(b),
            [b](uint64_t seed, int points) {
    Scalar q = Scalar::q(), ul = Scalar::var("lambda"), um = Scalar::var("mu");
    Scalar q2 = qpow(2);
    uint64_t i = 0;
    for (int j = 0; j <= b; ++j)
      for (int l = 0; l <= b; ++l)
        for (int k = 0; k <= b; ++k)
          for (int m = 0; m <= b; ++m) {
            auto pkm = [&](int deg) {
              return XiPoly(qs::askey_wilson_xipoly<Scalar>(
                  deg, q * um / ul, qpow(1 + 2 * k) * ul / um, qpow(3 + 2 * m) * ul * um,
                  qpow(-1) / (ul * um), q2));
            };
            XiPoly integrand = pkm(j) * pkm(l) *
                               XiPoly(qs::awmono_xipoly<Scalar>(k, q * ul / um, q2)) *
                               XiPoly(qs::awmono_xipoly<Scalar>(m, qpow(3) * ul * um, q2));
            auto mom = moments(static_cast<int>(integrand.degree()));
            Scalar lhs;
            for (size_t d = 0; d < integrand.c.size(); ++d) lhs += integrand.c[d] * mom[d];
            Scalar rhs = j == l ? fml::aw4_norm<Scalar>(j, k, m, q, ul, um) : Scalar();
            if (!is_zero(lhs - rhs, points, splitmix64(seed + ++i))) return false;
          }
    return true;
  });
  return suite.run();
}

}  // namespace dynsu2
