#include "dynsu2/dynrep.hpp"

namespace dynsu2 {

namespace {
constexpr uint64_t kPurgeSeed = 0x64796e7265707631ULL;

Scalar repA(int k, const std::string& omega) {
  return fml::rep_A<Scalar>(k, Scalar::q(), Scalar::var("lambda"), Scalar::var(omega));
}
Scalar repB(int k, const std::string& omega) {
  return fml::rep_B<Scalar>(k, Scalar::q(), Scalar::var("lambda"), Scalar::var(omega));
}
Scalar repD(int k, const std::string& omega) {
  return fml::rep_D<Scalar>(k, Scalar::q(), Scalar::var("lambda"), Scalar::var(omega));
}

void purge_map(std::map<int, Scalar>& m) {
  uint64_t i = 0;
  for (auto it = m.begin(); it != m.end();) {
    if (is_zero(it->second, kDefaultTrials, splitmix64(kPurgeSeed + ++i)))
      it = m.erase(it);
    else
      ++it;
  }
}

}  // namespace

RepVector RepVector::basis(int k, std::string omega) {
  RepVector v;
  v.omega = std::move(omega);
  v.c.emplace(k, Scalar(1));
  return v;
}

void RepVector::insert(int k, const Scalar& s) {
  auto it = c.find(k);
  if (it == c.end())
    c.emplace(k, s);
  else
    it->second += s;
}

namespace {

// apply one generator to g e_k; returns (k', coefficient)
std::pair<int, Scalar> act_gen(Gen gen, int k, const Scalar& g, const std::string& omega) {
  switch (gen) {
    case Gen::Alpha: return {k, repA(k, omega) * shift(g, "lambda", -1)};
    case Gen::Beta:
      if (k == 0) return {0, Scalar()};
      return {k - 1, repB(k, omega) * shift(g, "lambda", 1)};
    case Gen::Gamma: return {k + 1, -qpow(-1) * shift(g, "lambda", -1)};
    default: return {k, repD(k, omega) * shift(g, "lambda", 1)};
  }
}

}  // namespace

RepVector act(const AlgElement& x, const RepVector& v) {
  RepVector out;
  out.omega = v.omega;
  Scalar uo = Scalar::var(v.omega);
  for (const auto& [m, coeff] : x.terms) {
    auto word = m.word(x.mode);
    for (const auto& [k0, g0] : v.c) {
      int k = k0;
      Scalar g = g0;
      bool dead = false;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto [k1, g1] = act_gen(*it, k, g, v.omega);
        if (g1.is_const_zero()) {
          dead = true;
          break;
        }
        k = k1;
        g = g1;
      }
      if (dead) continue;
      // moment maps: mu_l(f) shifts lambda by -omega-2k, mu_r(f) multiplies
      Scalar cc = subst(coeff, {{x.vars.l, qpow(-2 * k) * Scalar::var("lambda") / uo},
                                {x.vars.r, Scalar::var("lambda")}});
      out.insert(k, cc * g);
    }
  }
  purge_map(out.c);
  return out;
}

RepVector act_word(const GenWord& w, const RepVector& v) {
  RepVector out;
  out.omega = v.omega;
  Scalar uo = Scalar::var(v.omega);
  for (const auto& [k0, g0] : v.c) {
    int k = k0;
    Scalar g = g0;
    bool dead = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (it->is_gen) {
        auto [k1, g1] = act_gen(it->g, k, g, v.omega);
        if (g1.is_const_zero()) {
          dead = true;
          break;
        }
        k = k1;
        g = g1;
      } else {
        Scalar cc = subst(it->c, {{"lambda", qpow(-2 * k) * Scalar::var("lambda") / uo},
                                  {"mu", Scalar::var("lambda")}});
        g = cc * g;
      }
    }
    if (!dead) out.insert(k, g);
  }
  purge_map(out.c);
  return out;
}

bool repvec_equal(const RepVector& a, const RepVector& b, int trials, uint64_t seed) {
  RepVector d = a;
  for (const auto& [k, s] : b.c) d.insert(k, -s);
  uint64_t i = 0;
  for (const auto& [k, s] : d.c)
    if (!is_zero(s, trials, splitmix64(seed + ++i))) return false;
  return true;
}

Scalar tfun(int N, int k, int j, int m, TfunBackend backend) {
  if (k < 0 || j < 0 || k > N || j > N || m < 0)
    throw IndexOutOfRange("tfun index out of range");
  Scalar q = Scalar::q(), ul = Scalar::var("lambda"), uw = Scalar::var("omega");
  return backend == TfunBackend::QRacah ? fml::tfun_qracah<Scalar>(N, k, j, m, q, ul, uw)
                                        : fml::tfun_aw<Scalar>(N, k, j, m, q, ul, uw);
}

Scalar gamma_rep(int k) {
  if (k < 0) throw IndexOutOfRange("gamma_rep index out of range");
  return fml::gamma_rep<Scalar>(k, Scalar::q(), Scalar::var("lambda"), Scalar::var("omega"));
}

void TensorRepVector::insert(int k1, int k2, const Scalar& s) {
  auto key = std::make_pair(k1, k2);
  auto it = c.find(key);
  if (it == c.end())
    c.emplace(key, s);
  else
    it->second += s;
}

TensorRepVector TensorRepVector::basis(int k1, int k2) {
  TensorRepVector v;
  v.c.emplace(std::make_pair(k1, k2), Scalar(1));
  return v;
}

TensorRepVector tensor_act(const AlgElement& x, const TensorRepVector& v) {
  TensorRepVector out;
  out.w1 = v.w1;
  out.w2 = v.w2;
  Scalar u1 = Scalar::var(v.w1), u2 = Scalar::var(v.w2);
  TensorElement dx = coproduct(x);
  for (const auto& [mm, coeff] : dx.terms) {
    auto wordL = mm.first.word(x.mode);
    auto wordR = mm.second.word(x.mode);
    for (const auto& [kk, g0] : v.c) {
      // left slot acts on a bare basis vector, right slot on g0 e_{k2}
      int k1 = kk.first;
      Scalar f1 = Scalar(1);
      bool dead = false;
      for (auto it = wordL.rbegin(); it != wordL.rend(); ++it) {
        auto [k1n, f1n] = act_gen(*it, k1, f1, v.w1);
        if (f1n.is_const_zero()) {
          dead = true;
          break;
        }
        k1 = k1n;
        f1 = f1n;
      }
      if (dead) continue;
      int k2 = kk.second;
      Scalar f2 = g0;
      for (auto it = wordR.rbegin(); it != wordR.rend(); ++it) {
        auto [k2n, f2n] = act_gen(*it, k2, f2, v.w2);
        if (f2n.is_const_zero()) {
          dead = true;
          break;
        }
        k2 = k2n;
        f2 = f2n;
      }
      if (dead) continue;
      // coefficient lines: lambda -> T_{-w1-w2-2(k1+k2)}, rho -> T_{-w2-2k2},
      // mu -> multiplication; left-slot output crosses the right weight.
      Scalar cc = subst(coeff,
                        {{"lambda", qpow(-2 * (k1 + k2)) * Scalar::var("lambda") / (u1 * u2)},
                         {"rho", qpow(-2 * k2) * Scalar::var("lambda") / u2},
                         {"mu", Scalar::var("lambda")}});
      Scalar f1s = subst(f1, {{"lambda", qpow(-2 * k2) * Scalar::var("lambda") / u2}});
      out.insert(k1, k2, cc * f1s * f2);
    }
  }
  // purge
  uint64_t i = 0;
  for (auto it = out.c.begin(); it != out.c.end();) {
    if (is_zero(it->second, kDefaultTrials, splitmix64(kPurgeSeed + ++i)))
      it = out.c.erase(it);
    else
      ++it;
  }
  return out;
}

TensorRepVector trv_scale(const TensorRepVector& v, const Scalar& g) {
  TensorRepVector out = v;
  for (auto& [kk, s] : out.c) s *= g;
  return out;
}

bool trv_equal(const TensorRepVector& a, const TensorRepVector& b, int trials, uint64_t seed) {
  TensorRepVector d = a;
  for (const auto& [kk, s] : b.c) d.insert(kk.first, kk.second, -s);
  uint64_t i = 0;
  for (const auto& [kk, s] : d.c)
    if (!is_zero(s, trials, splitmix64(seed + ++i))) return false;
  return true;
}

TensorRepVector eigvec(int y, int p) {
  if (y < 0 || y > p) throw IndexOutOfRange("eigvec needs 0 <= y <= p");
  TensorRepVector v;
  Scalar q = Scalar::q(), ul = Scalar::var("lambda");
  Scalar u1 = Scalar::var(v.w1), u2 = Scalar::var(v.w2);
  for (int k = 0; k <= p; ++k)
    v.insert(p - k, k, fml::eigvec_coeff<Scalar>(y, p, k, q, ul, u1, u2));
  return v;
}

Scalar cg_dyn(int s, int k, int l, int m, CgDynBackend backend) {
  if (s < 0 || k < 0 || l < 0 || m < 0 || l + m != s + k)
    throw IndexOutOfRange("cg_dyn needs l + m = s + k, all >= 0");
  Scalar q = Scalar::q(), ul = Scalar::var("lambda");
  Scalar u1 = Scalar::var("omega1"), u2 = Scalar::var("omega2");
  switch (backend) {
    case CgDynBackend::Racah: return fml::cgdyn_racah<Scalar>(s, k, l, m, q, ul, u1, u2);
    case CgDynBackend::Alt: return fml::cgdyn_alt<Scalar>(s, k, l, m, q, ul, u1, u2);
    default: return fml::cgdyn_third<Scalar>(s, k, l, m, q, ul, u1, u2);
  }
}

TensorRepVector dyn_intertwiner_image(int s, int k) {
  Scalar phi = fml::intertwiner_phi<Scalar>(s, k, Scalar::q(), Scalar::var("lambda"),
                                            Scalar::var("omega1"), Scalar::var("omega2"));
  return trv_scale(eigvec(s, s + k), phi);
}

}  // namespace dynsu2
