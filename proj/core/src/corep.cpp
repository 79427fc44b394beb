#include "dynsu2/corep.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace dynsu2 {

namespace {

// t^N_{kj} from the double-restricted sum over the M(2) monomials
// gamma^{j-l} delta^{N-k-j+l} alpha^l beta^{k-l}.
AlgElement matelem_comb(int N, int k, int j, Mode mode) {
  VarNames v;
  Scalar q2 = qpow(2);
  Scalar um2 = Scalar::var(v.r).pow(2);
  AlgElement out(mode, v);
  for (long l = std::max(0L, static_cast<long>(j + k - N)); l <= std::min(j, k); ++l) {
    Scalar c = qs::qbinom<Scalar>(N - k, j - l, q2) * qs::qbinom<Scalar>(k, l, q2);
    c *= qpow(static_cast<long>(j) * (j + 2 * k - N) + l * (3 * l - 3 * k - 3 * j + N));
    c *= qs::qpoch<Scalar>(qpow(2 * (j - N - 1)) / um2, q2, j - l) /
         qs::qpoch<Scalar>(qpow(2 * (j + k - l - N - 1)) / um2, q2, j - l);
    GenWord w;
    w.push_back(WordItem::of(c));
    for (long i = 0; i < j - l; ++i) w.push_back(WordItem::of(Gen::Gamma));
    for (long i = 0; i < N - k - j + l; ++i) w.push_back(WordItem::of(Gen::Delta));
    for (long i = 0; i < l; ++i) w.push_back(WordItem::of(Gen::Alpha));
    for (long i = 0; i < k - l; ++i) w.push_back(WordItem::of(Gen::Beta));
    AlgElement part = normalize(w, mode, v);
    for (const auto& [m, cc] : part.terms) out.insert(m, cc);
  }
  return out;
}

// The commuting block P_k of t^N_{kj} = gamma^{j-k} delta^{N-k-j} P_k in the
// domain k <= j, k + j <= N, reduced from the very-well-poised 8W7 by the
// tr2 transformation.  The xi-paired Pochhammers of the prefactor cancel
// exactly (h_k(x, beta)/h_k(x, alphabar) is the scalar
// alphabar^{-2k} base^{-k(k-1)}), so the result is a genuine polynomial
// in Xi.
XiPoly matelem_P_dom1(int N, int k, int j) {
  VarNames v;
  Scalar q2 = qpow(2);
  Scalar ul = Scalar::var(v.l), um = Scalar::var(v.r);
  Scalar ul2 = ul.pow(2), um2 = um.pow(2);
  auto poch = [&](const Scalar& x, long n) { return qs::qpoch<Scalar>(x, q2, n); };

  Scalar s1 = qs::qbinom<Scalar>(N - k, j, q2) *
              qpow(static_cast<long>(k) * (2 + 3 * j - N) + static_cast<long>(j) * (j - N)) *
              um.pow(2 * k);
  s1 *= poch(qpow(-2 * (j + 1)) / um2, k) /
        (poch(qpow(-2) / um2, k) * poch(qpow(4) * ul2, k) *
         poch(qpow(2 * (1 - N + j)) * um2, k));

  // tr2 data: a = q^{2(mu+1-k)}, b = q^{-2j}, c = q^{2(mu+1-N+j)},
  // z = q^{2(N-k-lambda)}, alphabar = q^{mu-lambda+1-2k}
  Scalar aq = qpow(2 * (2 - k)) * um2;          // a * q^2
  Scalar bb = qpow(-2 * j);
  Scalar zz = qpow(2 * (N - k)) / ul2;
  Scalar abar = qpow(1 - 2 * k) * um / ul;
  Scalar s2 =
      poch(aq, k) * poch(bb, k) * poch(q2 / zz, k) / poch(qpow(2 * (N + 1 - k - j)), k);
  s2 *= fml::sgn<Scalar>(k) * qpow(-static_cast<long>(k) * (k + 1)) * zz.pow(k);
  s2 = s2 / (abar.pow(2 * k) * qpow(2 * static_cast<long>(k) * (k - 1)));

  // terminating 4phi3 with the xi pair in the numerator only
  Scalar E = qpow(2 * (N - k + 1));
  Scalar A = qpow(1 + 2 * (j - k)) * um / ul;
  Scalar AB = qpow(2 * (1 + j - k));
  Scalar AC = qpow(2 * (2 + j - k)) * um2;
  Scalar AD = qpow(2 * (N - 2 * k)) / ul2;
  XiPoly series{{Scalar(1)}};
  Scalar term(1);
  for (long i = 1; i <= k; ++i) {
    term *= (Scalar(1) - qpow(-2 * static_cast<long>(k)) * qpow(2 * (i - 1))) *
            (Scalar(1) - E * qpow(2 * (i - 1))) * q2;
    term /= (Scalar(1) - qpow(2 * i)) * (Scalar(1) - AB * qpow(2 * (i - 1))) *
            (Scalar(1) - AC * qpow(2 * (i - 1))) * (Scalar(1) - AD * qpow(2 * (i - 1)));
    series += XiPoly(qs::awmono_xipoly<Scalar>(i, A, q2)).scaled(term);
  }
  return series.scaled(s1 * s2);
}

AlgElement matelem_fact(int N, int k, int j) {
  VarNames v;
  if (k <= j && k + j <= N) {
    GenWord w;
    for (int i = 0; i < j - k; ++i) w.push_back(WordItem::of(Gen::Gamma));
    for (int i = 0; i < N - k - j; ++i) w.push_back(WordItem::of(Gen::Delta));
    AlgElement P = matelem_P_dom1(N, k, j).to_alg(v);
    return w.empty() ? P : mul(normalize(w, Mode::SL2, v), P);
  }
  if (j <= k && k + j >= N) {
    // (t^N_{kj})^* = (-q)^{k-j} t^N_{N-k,N-j} maps this domain to the first
    AlgElement base = matelem_fact(N, N - k, N - j);
    return scale(star(base), fml::sgn<Scalar>(k - j) * qpow(k - j));
  }
  if (k <= j) {
    // N <= k + j: the Phi symmetry lowers to the first domain
    int kp = N - j, jp = N - k;
    Scalar q2 = qpow(2);
    Scalar factor = qs::qbinom<Scalar>(N, kp, q2) * qpow(static_cast<long>(kp) * (kp - N)) /
                    (qs::qbinom<Scalar>(N, jp, q2) * qpow(static_cast<long>(jp) * (jp - N)));
    return scale(phi_auto(matelem_fact(N, kp, jp)), factor);
  }
  // j <= k, k + j <= N: star of the previous domain
  AlgElement base = matelem_fact(N, N - k, N - j);
  return scale(star(base), fml::sgn<Scalar>(k - j) * qpow(k - j));
}

}  // namespace

XiPoly matelem_block(int N, int k, int j) {
  if (!(k <= j && k + j <= N)) throw IndexOutOfRange("matelem_block needs k <= j, k + j <= N");
  return matelem_P_dom1(N, k, j);
}

const AlgElement& matelem(int N, int k, int j, MatBackend backend, Mode mode) {
  if (k < 0 || j < 0 || k > N || j > N) throw IndexOutOfRange("matelem index out of range");
  if (backend == MatBackend::Factored && mode != Mode::SL2)
    throw DomainError("factored matrix elements live in SL2 mode");
  static std::map<std::tuple<int, int, int, int, int>, AlgElement> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(N, k, j, static_cast<int>(backend), static_cast<int>(mode));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgElement e = backend == MatBackend::Combinatorial ? matelem_comb(N, k, j, mode)
                                                      : matelem_fact(N, k, j);
  return cache.emplace(key, std::move(e)).first->second;
}

Scalar gamma_corep(int N, int k, const std::string& var) {
  if (k < 0 || k > N) throw IndexOutOfRange("gamma_corep index out of range");
  return fml::gamma_corep<Scalar>(N, k, Scalar::q(), Scalar::var(var));
}

Scalar cg(int M, int N, int s, int j, int k, CgBackend backend, const std::string& var) {
  if (s < 0 || s > std::min(M, N) || j < 0 || j > M || k < 0 || k > N)
    throw IndexOutOfRange("cg index out of range");
  long l = static_cast<long>(j) + k - s;
  if (l < 0 || l > M + N - 2 * s) return Scalar();
  if (backend == CgBackend::W)
    return fml::cg_w<Scalar>(M, N, s, j, k, Scalar::q(), Scalar::var(var));
  return fml::cg_p<Scalar>(M, N, s, j, k, Scalar::q(), Scalar::var(var));
}

Scalar zconst(int M, int N, int s) {
  if (s < 0 || s > std::min(M, N)) throw IndexOutOfRange("zconst index out of range");
  return fml::z_const<Scalar>(M, N, s, Scalar::q());
}

int coeff_rank(const std::vector<AlgElement>& rows, uint64_t seed) {
  // union of monomials -> columns; exact Gaussian elimination at a sample point
  std::set<Mono> monos;
  std::set<std::string> vars;
  for (const auto& r : rows)
    for (const auto& [m, c] : r.terms) {
      monos.insert(m);
      auto vs = variables(c);
      vars.insert(vs.begin(), vs.end());
    }
  std::vector<Mono> cols(monos.begin(), monos.end());
  Sampler sampler(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Point p = sampler.point_for(vars);
    try {
      std::vector<std::vector<Rat>> mat;
      for (const auto& r : rows) {
        std::vector<Rat> row(cols.size(), Rat(0));
        for (const auto& [m, c] : r.terms) {
          size_t idx = static_cast<size_t>(
              std::lower_bound(cols.begin(), cols.end(), m) - cols.begin());
          row[idx] = eval(c, p);
        }
        mat.push_back(std::move(row));
      }
      int rank = 0;
      size_t col = 0;
      for (; col < cols.size() && rank < static_cast<int>(mat.size()); ++col) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < mat.size() && mat[piv][col] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[static_cast<size_t>(rank)], mat[piv]);
        for (size_t r2 = static_cast<size_t>(rank) + 1; r2 < mat.size(); ++r2) {
          if (mat[r2][col] == 0) continue;
          Rat f = mat[r2][col] / mat[static_cast<size_t>(rank)][col];
          for (size_t c2 = col; c2 < cols.size(); ++c2)
            mat[r2][c2] -= f * mat[static_cast<size_t>(rank)][c2];
        }
        ++rank;
      }
      return rank;
    } catch (const PoleAtPoint&) {
      continue;
    }
  }
  throw SamplingExhausted("coeff_rank: no pole-free point found");
}

}  // namespace dynsu2
