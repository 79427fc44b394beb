#include <algorithm>

#include "dynsu2/corep.hpp"
#include "dynsu2/report.hpp"
#include "suite_util.hpp"

namespace dynsu2 {

namespace {

int pair_index(int s1, int s2) {  // s in {+1, -1}
  return (s1 == 1 ? 0 : 2) + (s2 == 1 ? 0 : 1);
}

int wt(int idx) { return idx == 0 ? 1 : -1; }  // weight of e_0 = e_+, e_1 = e_-

using Shifter = std::function<Scalar(const Scalar&, int)>;

// column of the operator built from R legs applied to a basis vector of
// V (x) V (x) V; keys are (i,j,k) with i,j,k in {0,1}
using Col = std::map<std::array<int, 3>, Scalar>;

Col apply_leg(const RMatrix& R, const Shifter& sh, const Col& in, int slot1, int slot2,
              int dyn_slot) {
  Col out;
  for (const auto& [b, val] : in) {
    int ain = b[static_cast<size_t>(slot1)], bin = b[static_cast<size_t>(slot2)];
    int col = pair_index(wt(ain), wt(bin));
    for (int row = 0; row < 4; ++row) {
      const Scalar& ent = R.e[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (ent.is_const_zero()) continue;
      Scalar v = ent;
      if (dyn_slot >= 0) v = sh(v, -wt(b[static_cast<size_t>(dyn_slot)]));
      std::array<int, 3> nb = b;
      nb[static_cast<size_t>(slot1)] = row / 2;
      nb[static_cast<size_t>(slot2)] = row % 2;
      auto it = out.find(nb);
      if (it == out.end())
        out.emplace(nb, v * val);
      else
        it->second += v * val;
    }
  }
  return out;
}

}  // namespace

SuiteReport verify_qdyb(const SuiteOptions& opts) {
  Suite suite("qdyb", opts);
  const bool rational = opts.variant == "rational";
  const std::string var = "lambda";
  RMatrix R = rational ? RMatrix::rational(var) : RMatrix::dynamical(var);
  Shifter sh;
  if (rational)
    sh = [var](const Scalar& s, int a) {
      return subst(s, {{var, Scalar::var(var) + Scalar(a)}});
    };
  else
    sh = [var](const Scalar& s, int a) { return shift(s, var, a); };

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        suite.add("qdyb", "sec1-qdyb", detail::idx({a, b, c}), [=](uint64_t seed, int points) {
          Col basis{{{a, b, c}, Scalar(1)}};
          // R12(l-h3) R13(l) R23(l-h1), rightmost first
          Col lhs = apply_leg(R, sh, basis, 1, 2, 0);
          lhs = apply_leg(R, sh, lhs, 0, 2, -1);
          lhs = apply_leg(R, sh, lhs, 0, 1, 2);
          Col rhs = apply_leg(R, sh, basis, 0, 1, -1);
          rhs = apply_leg(R, sh, rhs, 0, 2, 1);
          rhs = apply_leg(R, sh, rhs, 1, 2, -1);
          for (const auto& [key, val] : rhs) {
            auto it = lhs.find(key);
            if (it == lhs.end())
              lhs.emplace(key, -val);
            else
              it->second -= val;
          }
          uint64_t i = 0;
          for (const auto& [key, val] : lhs)
            if (!is_zero(val, points, splitmix64(seed + ++i))) return false;
          return true;
        });
      }
  return suite.run();
}

SuiteReport verify_rll(const SuiteOptions& opts) {
  Suite suite("rll", opts);
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1})
        for (int d : {1, -1}) {
          suite.add("rll", "eq-rll", detail::idx({a, b, c, d}), [=](uint64_t seed, int points) {
            VarNames v;
            RMatrix Rl = RMatrix::dynamical(v.l);
            RMatrix Rr = RMatrix::dynamical(v.r);
            auto L = [&](int s1, int s2) {
              Gen g = s1 == 1 ? (s2 == 1 ? Gen::Alpha : Gen::Beta)
                              : (s2 == 1 ? Gen::Gamma : Gen::Delta);
              return gen_elem(g, Mode::M2, v);
            };
            AlgElement lhs(Mode::M2, v), rhs(Mode::M2, v);
            for (int x : {1, -1})
              for (int y : {1, -1}) {
                // R^{xy}_{ac}(lambda) L_{xb} L_{yd}
                const Scalar& cl = Rl.e[static_cast<size_t>(pair_index(a, c))]
                                       [static_cast<size_t>(pair_index(x, y))];
                if (!cl.is_const_zero()) lhs = lhs + scale(mul(L(x, b), L(y, d)), cl);
                // R^{bd}_{xy}(mu) L_{cy} L_{ax}
                const Scalar& cr = Rr.e[static_cast<size_t>(pair_index(x, y))]
                                       [static_cast<size_t>(pair_index(b, d))];
                if (!cr.is_const_zero()) rhs = rhs + scale(mul(L(c, y), L(a, x)), cr);
              }
            return alg_equal(lhs, rhs, points, seed);
          });
        }
  return suite.run();
}

SuiteReport verify_bialgebroid(const SuiteOptions& opts) {
  Suite suite("bialgebroid", opts);
  int bound = suite.bound_or(4);
  auto monos = detail::monos_up_to(Mode::SL2, bound);
  for (const auto& m : monos) {
    suite.add("coassoc", "sec2.1-coassociativity", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      return tensor3_equal(coassoc_left(e), coassoc_right(e), points, seed);
    });
    suite.add("counit-left", "sec2.1-counit-axiom", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      return alg_equal(counit_collapse_left(coproduct(e)), e, points, seed);
    });
    suite.add("counit-right", "sec2.1-counit-axiom", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      return alg_equal(counit_collapse_right(coproduct(e)), e, points, seed);
    });
  }
  // Delta and eps are algebra homomorphisms: random products, both modes
  for (int i = 0; i < 6; ++i) {
    suite.add("delta-multiplicative", "def-frm-coproduct", "random" + std::to_string(i),
              [i](uint64_t seed, int points) {
                Sampler s(splitmix64(seed ^ 0xabcdef) + static_cast<uint64_t>(i));
                AlgElement a = detail::random_elem(s, Mode::SL2, 2, 2);
                AlgElement b = detail::random_elem(s, Mode::SL2, 2, 2);
                return tensor_equal(coproduct(mul(a, b)),
                                    tensor_mul(coproduct(a), coproduct(b)), points, seed);
              });
    suite.add("counit-multiplicative", "def-frm-counit", "random" + std::to_string(i),
              [i](uint64_t seed, int points) {
                Sampler s(splitmix64(seed ^ 0x123457) + static_cast<uint64_t>(i));
                AlgElement a = detail::random_elem(s, Mode::SL2, 2, 2);
                AlgElement b = detail::random_elem(s, Mode::SL2, 2, 2);
                return diffop_equal(counit(mul(a, b)), counit(a) * counit(b), points, seed);
              });
  }
  // coefficient placement: Delta(f(lambda) g(mu)) = f(lambda) (x) g(mu)
  suite.add("moment-placement", "eq-ro", "f,g", [](uint64_t seed, int points) {
    Scalar f = aux_F("lambda"), g = Scalar::var("mu").pow(2) + qpow(3);
    AlgElement e = scale(unit(Mode::SL2), f * g);
    TensorElement t = coproduct(e);
    TensorElement expect;
    expect.mode = Mode::SL2;
    expect.insert(Mono{}, Mono{}, f * g);
    return tensor_equal(t, expect, points, seed);
  });
  // hat tensor structures: counit legs of the hat coproduct and the
  // multiplication intertwiner (m is an h-coalgebroid homomorphism)
  Sampler s0(opts.seed ^ 0x9999);
  auto small_monos = detail::monos_up_to(Mode::SL2, 2);
  for (int i = 0; i < 4; ++i) {
    Mono m1 = small_monos[s0.next_u64() % small_monos.size()];
    Mono m2 = small_monos[s0.next_u64() % small_monos.size()];
    std::string ix = m1.str() + "(x)" + m2.str();
    suite.add("hat-counit", "prop-cat", ix, [m1, m2](uint64_t seed, int points) {
      HatTensor h = hat(mono_elem(m1, Mode::SL2), mono_elem(m2, Mode::SL2));
      TildeOfHat dh = hat_coproduct(h);
      return hat_equal(hat_counit_collapse_left(dh), h, points, splitmix64(seed)) &&
             hat_equal(hat_counit_collapse_right(dh), h, points, splitmix64(seed + 1));
    });
    suite.add("mult-intertwines", "prop-crt", ix, [m1, m2](uint64_t seed, int points) {
      HatTensor h = hat(mono_elem(m1, Mode::SL2), mono_elem(m2, Mode::SL2));
      TensorElement lhs = coproduct(mul_out(h));
      TensorElement rhs = mul_out_pairs(hat_coproduct(h));
      return tensor_equal(lhs, rhs, points, seed);
    });
  }
  // sigma23 on scalar-free monomials is the middle flip, and the dual
  // placement of a pure-rho probe is immaterial
  suite.add("sigma23-flip", "lemma-l23", "monomials", [](uint64_t seed, int points) {
    AlgElement a = gen_elem(Gen::Gamma, Mode::SL2), b = gen_elem(Gen::Alpha, Mode::SL2);
    AlgElement c = gen_elem(Gen::Beta, Mode::SL2), d = gen_elem(Gen::Delta, Mode::SL2);
    HatOfTilde in = hat_of_tensors(tensor_of(a, b), tensor_of(c, d));
    TildeOfHat out = sigma23(in);
    if (out.terms.size() != 1) return false;
    const auto& [key, val] = *out.terms.begin();
    Mono ma, mb, mc, md;
    ma.g = 1;
    mb.a = 1;
    mc.b = 1;
    md.d = 1;
    bool shape = key == std::make_tuple(ma, mc, mb, md);
    return shape && is_zero(val - Scalar(1), points, seed);
  });
  // the (mtr2)-derived relation mu_r c = a mu_r = b mu_l = mu_l d: a probe on
  // the inner rho2 line commutes with sigma23 whether it is read through the
  // C-slot (mu_r) or the D-slot (mu_l) placement; the two conversions differ
  // by shifts that agree exactly when the tensor gradings match.
  suite.add("sigma23-probe", "lemma-l23", "probe", [](uint64_t seed, int points) {
    Scalar g = Scalar::var("rho2").pow(2) * qpow(1) + Scalar(Rat(2, 3));
    Scalar grho = rename(g, {{"rho2", "rho"}});
    for (Gen ga : {Gen::Alpha, Gen::Gamma})
      for (Gen gb : {Gen::Alpha, Gen::Beta}) {  // inner bidegrees must match
        TensorElement t1 = tensor_of(gen_elem(ga, Mode::SL2), gen_elem(gb, Mode::SL2));
        TensorElement t2 =
            tensor_of(gen_elem(Gen::Beta, Mode::SL2), gen_elem(Gen::Delta, Mode::SL2));
        HatOfTilde in = hat_of_tensors(t1, t2);
        HatOfTilde probed = in;
        for (auto& [mm, cc] : probed.terms) cc = g * cc;
        TildeOfHat lhs = sigma23(probed);
        TildeOfHat rhs = sigma23(in);
        for (auto& [mm, cc] : rhs.terms) {
          auto [bl, br] = std::get<2>(mm).bidegree();  // output slot 3 = the B factor
          (void)br;
          cc = shift(grho, "rho", -bl) * cc;  // mu_l^D placement routed through B
        }
        uint64_t i = 0;
        for (const auto& [mm, cc] : lhs.terms) {
          auto it = rhs.terms.find(mm);
          Scalar diff = it == rhs.terms.end() ? cc : cc - it->second;
          if (!is_zero(diff, points, splitmix64(seed + ++i))) return false;
        }
      }
    return true;
  });
  return suite.run();
}

SuiteReport verify_hopf(const SuiteOptions& opts) {
  Suite suite("hopf", opts);
  int bound = suite.bound_or(3);
  auto monos = detail::monos_up_to(Mode::SL2, bound);
  for (const auto& m : monos) {
    bool eps_nonzero = (m.b == 0 && m.g == 0 && m.d == 0) || (m.a == 0 && m.b == 0 && m.g == 0);
    suite.add("antipode-idS", "eq-anti", m.str(), [m, eps_nonzero](uint64_t seed, int points) {
      AlgElement lhs = conv_id_S(m, Mode::SL2);
      AlgElement rhs = eps_nonzero ? unit(Mode::SL2) : AlgElement(Mode::SL2, VarNames{});
      return alg_equal(lhs, rhs, points, seed);
    });
    suite.add("antipode-Sid", "eq-anti", m.str(), [m, eps_nonzero](uint64_t seed, int points) {
      AlgElement lhs = conv_S_id(m, Mode::SL2);
      AlgElement rhs = eps_nonzero ? unit(Mode::SL2) : AlgElement(Mode::SL2, VarNames{});
      return alg_equal(lhs, rhs, points, seed);
    });
    suite.add("S-grading", "eq-c1", m.str(), [m](uint64_t seed, int points) {
      AlgElement s = antipode(mono_elem(m, Mode::SL2));
      auto [wl, wr] = m.bidegree();
      uint64_t i = 0;
      for (const auto& [mm, c] : s.terms) {
        if (is_zero(c, points, splitmix64(seed + ++i))) continue;
        if (mm.bidegree() != std::pair<int, int>{-wr, -wl}) return false;
      }
      return true;
    });
    suite.add("deltaS", "eq-aprop", m.str(), [m](uint64_t seed, int points) {
      return tensor_equal(coproduct(antipode(mono_elem(m, Mode::SL2))),
                          sigma_SS_delta(m, Mode::SL2), points, seed);
    });
    suite.add("epsS", "eq-aprop", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      return diffop_equal(counit(antipode(e)), counit(e).antipode(), points, seed);
    });
    suite.add("star-delta", "star-bialgebroid", m.str(), [m](uint64_t seed, int points) {
      return tensor_equal(coproduct(star(mono_elem(m, Mode::SL2))),
                          star_star_delta(m, Mode::SL2), points, seed);
    });
    suite.add("star-eps", "star-bialgebroid", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      return diffop_equal(counit(star(e)), counit(e).star(), points, seed);
    });
    suite.add("SstarSstar", "lemma-sal", m.str(), [m](uint64_t seed, int points) {
      AlgElement e = mono_elem(m, Mode::SL2);
      AlgElement r = antipode(star(antipode(star(e))));
      return alg_equal(r, e, points, seed);
    });
  }
  // representative independence of the antipode convolutions (pure-rho probe)
  for (const auto& m : detail::monos_up_to(Mode::SL2, std::min(bound, 2))) {
    suite.add("anti-representative", "lemma-cl", m.str(), [m](uint64_t seed, int points) {
      Scalar g = qpow(1) * Scalar::var("rho").pow(2) + Scalar(Rat(3, 5));
      AlgElement l1 = conv_id_S_probe(m, Mode::SL2, g, true);
      AlgElement l2 = conv_id_S_probe(m, Mode::SL2, g, false);
      AlgElement r1 = conv_S_id_probe(m, Mode::SL2, g, true);
      AlgElement r2 = conv_S_id_probe(m, Mode::SL2, g, false);
      return alg_equal(l1, l2, points, splitmix64(seed)) &&
             alg_equal(r1, r2, points, splitmix64(seed + 1));
    });
  }
  // the L-matrix form of the antipode axiom on generators
  suite.add("L-matrix", "def-frsl2-antipode-display", "2x2", [](uint64_t seed, int points) {
    auto G = [&](Gen g) { return gen_elem(g, Mode::SL2); };
    auto S = [&](Gen g) { return antipode(gen_elem(g, Mode::SL2)); };
    AlgElement one = unit(Mode::SL2);
    std::vector<AlgElement> checks = {
        mul(S(Gen::Alpha), G(Gen::Alpha)) + mul(S(Gen::Beta), G(Gen::Gamma)) - one,
        mul(S(Gen::Alpha), G(Gen::Beta)) + mul(S(Gen::Beta), G(Gen::Delta)),
        mul(S(Gen::Gamma), G(Gen::Alpha)) + mul(S(Gen::Delta), G(Gen::Gamma)),
        mul(S(Gen::Gamma), G(Gen::Beta)) + mul(S(Gen::Delta), G(Gen::Delta)) - one,
        mul(G(Gen::Alpha), S(Gen::Alpha)) + mul(G(Gen::Beta), S(Gen::Gamma)) - one,
        mul(G(Gen::Alpha), S(Gen::Beta)) + mul(G(Gen::Beta), S(Gen::Delta)),
        mul(G(Gen::Gamma), S(Gen::Alpha)) + mul(G(Gen::Delta), S(Gen::Gamma)),
        mul(G(Gen::Gamma), S(Gen::Beta)) + mul(G(Gen::Delta), S(Gen::Delta)) - one,
    };
    uint64_t i = 0;
    for (const auto& c : checks)
      if (!alg_is_zero(c, points, splitmix64(seed + ++i))) return false;
    return true;
  });
  // S(mu_l(f)) = mu_r(f) and back
  suite.add("S-moment-swap", "eq-sm", "F", [](uint64_t seed, int points) {
    Scalar f = aux_F("lambda");
    AlgElement e = antipode(embed_l(f, Mode::SL2));
    return alg_equal(e, embed_r(rename(f, {{"lambda", "mu"}}), Mode::SL2), points, seed);
  });
  // S(f T_a) on the counit side (difference operator antipode round trip)
  suite.add("diffop-antipode", "prop-al-SDh", "FT", [](uint64_t seed, int points) {
    DiffOp d = DiffOp::term(aux_F("lambda"), 2) + DiffOp::term(qpow(3), -1);
    return diffop_equal(d.antipode().antipode(), d, points, seed);
  });
  return suite.run();
}

SuiteReport verify_kernel(const SuiteOptions& opts) {
  Suite suite("kernel", opts);
  int nwords = opts.exhaustive ? 100 : 50;
  // confluence: two rewrite strategies agree on random words
  suite.add("confluence", "lemma-bl-diamond", std::to_string(nwords) + " words",
            [nwords](uint64_t seed, int points) {
              Sampler s(seed);
              for (int i = 0; i < nwords; ++i) {
                Mode mode = i % 3 == 0 ? Mode::M2 : Mode::SL2;
                GenWord w = detail::random_word(s, 2 + static_cast<int>(s.next_u64() % 5), true);
                AlgElement a = normalize(w, mode, {}, RewriteStrategy::Leftmost);
                AlgElement b = normalize(w, mode, {}, RewriteStrategy::Rightmost);
                if (!alg_equal(a, b, points, splitmix64(seed + static_cast<uint64_t>(i))))
                  return false;
              }
              return true;
            });
  suite.add("idempotent", "normalize", "30 words", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 30; ++i) {
      Mode mode = i % 2 ? Mode::M2 : Mode::SL2;
      GenWord w = detail::random_word(s, 2 + static_cast<int>(s.next_u64() % 5), true);
      AlgElement a = normalize(w, mode);
      if (!alg_equal(a, normalize(a), points, splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    }
    return true;
  });
  suite.add("linear", "normalize", "20 pairs", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 20; ++i) {
      GenWord w1 = detail::random_word(s, 2 + static_cast<int>(s.next_u64() % 4), true);
      GenWord w2 = detail::random_word(s, 2 + static_cast<int>(s.next_u64() % 4), true);
      Scalar c = detail::random_coeff(s, VarNames{});
      // normalize(c*w1 + w2) = c*normalize(w1) + normalize(w2): prepend c
      GenWord cw1 = w1;
      cw1.insert(cw1.begin(), WordItem::of(c));
      AlgElement lhs = normalize(cw1, Mode::SL2) + normalize(w2, Mode::SL2);
      AlgElement rhs = scale(normalize(w1, Mode::SL2), c) + normalize(w2, Mode::SL2);
      if (!alg_equal(lhs, rhs, points, splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    }
    return true;
  });
  suite.add("associative", "mul", "30 triples", [](uint64_t seed, int points) {
    Sampler s(seed);
    for (int i = 0; i < 30; ++i) {
      AlgElement a = detail::random_elem(s, Mode::SL2, 2, 2);
      AlgElement b = detail::random_elem(s, Mode::SL2, 2, 2);
      AlgElement c = detail::random_elem(s, Mode::SL2, 2, 2);
      if (!alg_equal(mul(mul(a, b), c), mul(a, mul(b, c)), points,
                     splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    }
    return true;
  });
  suite.add("bidegree-additive", "bigrading", "random", [](uint64_t seed, int points) {
    (void)points;
    Sampler s(seed);
    for (int i = 0; i < 20; ++i) {
      Mono m1 = detail::monos_up_to(Mode::SL2, 3)[s.next_u64() % 20];
      Mono m2 = detail::monos_up_to(Mode::SL2, 3)[s.next_u64() % 20];
      auto [l1, r1] = m1.bidegree();
      auto [l2, r2] = m2.bidegree();
      AlgElement p = mul(mono_elem(m1, Mode::SL2), mono_elem(m2, Mode::SL2));
      for (const auto& [m, c] : p.terms)
        if (m.bidegree() != std::pair<int, int>{l1 + l2, r1 + r2}) return false;
    }
    return true;
  });
  // Lemma-bl independence witness: words gamma^k delta^l alpha^m beta^n of
  // fixed total degree have full-rank normal forms
  for (int N = 0; N <= 4; ++N) {
    suite.add("bl-rank", "lemma-bl", "N=" + std::to_string(N), [N](uint64_t seed, int points) {
      (void)points;
      std::vector<AlgElement> rows;
      for (int k = 0; k <= N; ++k)
        for (int l = 0; k + l <= N; ++l)
          for (int m = 0; k + l + m <= N; ++m) {
            int n = N - k - l - m;
            GenWord w;
            for (int i = 0; i < k; ++i) w.push_back(WordItem::of(Gen::Gamma));
            for (int i = 0; i < l; ++i) w.push_back(WordItem::of(Gen::Delta));
            for (int i = 0; i < m; ++i) w.push_back(WordItem::of(Gen::Alpha));
            for (int i = 0; i < n; ++i) w.push_back(WordItem::of(Gen::Beta));
            rows.push_back(normalize(w, Mode::SL2));
          }
      return coeff_rank(rows, seed) == static_cast<int>(rows.size());
    });
  }
  // centrality of the determinant (M2) and Xi (SL2)
  suite.add("central-c", "lemma-lc", "4 generators", [](uint64_t seed, int points) {
    AlgElement c = det_c(1, Mode::M2);
    for (Gen g : {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta}) {
      AlgElement x = gen_elem(g, Mode::M2);
      if (!alg_equal(mul(c, x), mul(x, c), points, splitmix64(seed + static_cast<int>(g))))
        return false;
    }
    return true;
  });
  suite.add("central-xi", "lemma-lx", "4 generators", [](uint64_t seed, int points) {
    AlgElement xi = xi_elem(0);
    for (Gen g : {Gen::Alpha, Gen::Beta, Gen::Gamma, Gen::Delta}) {
      AlgElement x = gen_elem(g, Mode::SL2);
      if (!alg_equal(mul(xi, x), mul(x, xi), points, splitmix64(seed + static_cast<int>(g))))
        return false;
    }
    return true;
  });
  suite.add("det-equal", "lemma-lc", "4 expressions", [](uint64_t seed, int points) {
    AlgElement c0 = det_c(0, Mode::M2);
    for (int i = 1; i < 4; ++i)
      if (!alg_equal(c0, det_c(i, Mode::M2), points, splitmix64(seed + static_cast<uint64_t>(i))))
        return false;
    return true;
  });
  suite.add("xi-equal", "eq-xi", "2 expressions", [](uint64_t seed, int points) {
    return alg_equal(xi_elem(0), xi_elem(1), points, seed);
  });
  // Lemma-ccr closed forms against the kernel, k <= 3
  for (int k = 0; k <= 3; ++k) {
    suite.add("ccr", "lemma-ccr", "k=" + std::to_string(k), [k](uint64_t seed, int points) {
      auto word_elem = [&](std::vector<Gen> w) {
        GenWord gw;
        for (Gen g : w) gw.push_back(WordItem::of(g));
        return normalize(gw, Mode::SL2);
      };
      std::vector<Gen> ad, da, bg, gb;
      for (int i = 0; i < k; ++i) ad.push_back(Gen::Alpha);
      for (int i = 0; i < k; ++i) ad.push_back(Gen::Delta);
      for (int i = 0; i < k; ++i) da.push_back(Gen::Delta);
      for (int i = 0; i < k; ++i) da.push_back(Gen::Alpha);
      for (int i = 0; i < k; ++i) bg.push_back(Gen::Beta);
      for (int i = 0; i < k; ++i) bg.push_back(Gen::Gamma);
      for (int i = 0; i < k; ++i) gb.push_back(Gen::Gamma);
      for (int i = 0; i < k; ++i) gb.push_back(Gen::Beta);
      struct Case {
        CcrKind kind;
        std::vector<Gen>* w;
      } cases[] = {{CcrKind::AlphaDelta, &ad},
                   {CcrKind::DeltaAlpha, &da},
                   {CcrKind::BetaGamma, &bg},
                   {CcrKind::GammaBeta, &gb}};
      uint64_t i = 0;
      for (const auto& cs : cases) {
        AlgElement lhs = word_elem(*cs.w);
        AlgElement rhs = ccr_form(cs.kind, k).to_alg();
        if (!alg_equal(lhs, rhs, points, splitmix64(seed + ++i))) return false;
      }
      return true;
    });
  }
  // Eq-hd right-hand side normalizes to 1
  for (int s = 0; s <= 3; ++s) {
    suite.add("hd", "eq-hd", "s=" + std::to_string(s), [s](uint64_t seed, int points) {
      VarNames v;
      Scalar q2 = qpow(2);
      Scalar um2 = Scalar::var(v.r).pow(2);
      AlgElement rhs(Mode::SL2, v);
      for (int m = 0; m <= s; ++m) {
        Scalar c = qs::qbinom<Scalar>(s, m, q2) * fml::sgn<Scalar>(s - m) *
                   qpow((2 * m + 1) * (m - s));
        c *= qs::qpoch<Scalar>(Scalar(1) / um2, q2, s - m) /
             qs::qpoch<Scalar>(qpow(-2 * (m + 1)) / um2, q2, s - m);
        GenWord w;
        w.push_back(WordItem::of(c));
        for (int i = 0; i < s - m; ++i) w.push_back(WordItem::of(Gen::Gamma));
        for (int i = 0; i < m; ++i) w.push_back(WordItem::of(Gen::Delta));
        for (int i = 0; i < m; ++i) w.push_back(WordItem::of(Gen::Alpha));
        for (int i = 0; i < s - m; ++i) w.push_back(WordItem::of(Gen::Beta));
        rhs = rhs + normalize(w, Mode::SL2, v);
      }
      return alg_equal(rhs, unit(Mode::SL2, v), points, seed);
    });
  }
  // Xi round trip through the gamma^l beta^l expansion
  suite.add("xi-roundtrip", "lemma-ccr", "j<=3", [](uint64_t seed, int points) {
    for (int j = 0; j <= 3; ++j) {
      AlgElement x = xi_power_elem(j);
      AlgElement direct = j == 0 ? unit(Mode::SL2) : xi_elem(0);
      for (int i = 1; i < j; ++i) direct = mul(direct, xi_elem(0));
      if (!alg_equal(x, direct, points, splitmix64(seed + static_cast<uint64_t>(j))))
        return false;
    }
    return true;
  });
  return suite.run();
}

SuiteReport verify_qseries(const SuiteOptions& opts) {
  Suite suite("qseries", opts);
  int bound = std::min(suite.bound_or(4), 4);
  using detail::VarMap;

  for (int n = 1; n <= bound; ++n) {
    suite.add("nps", "eq-nps", "n=" + std::to_string(n), [n](uint64_t seed, int points) {
      return detail::pointwise({"a"}, points, seed, [n](const PRat& q, const VarMap& m) {
        PRat base = q * q, a = m.at("a");
        return qs::qpoch(a, base, -n) * qs::qpoch(a * qs::fpow(base, -n), base, n) - PRat(1);
      });
    });
  }
  for (int n = 0; n <= bound; ++n) {
    suite.add("tr1", "eq-tr1", "n=" + std::to_string(n), [n](uint64_t seed, int points) {
      return detail::pointwise({"a", "b", "c", "d", "e"}, points, seed,
                               [n](const PRat& q, const VarMap& m) {
        PRat a = m.at("a"), b = m.at("b"), c = m.at("c"), d = m.at("d"), e = m.at("e");
        PRat z = a * a * qs::fpow(q, n + 2) / (b * c * d * e);
        PRat lhs = qs::w87(n, a, {b, c, d, e}, q, z);
        PRat pre = qs::qpoch_many({a * q, a * q / (b * c), a * q / (b * d), a * q / (b * e)}, q,
                                  n) /
                   qs::qpoch_many({a * q / b, a * q / c, a * q / d, a * q / e}, q, n) *
                   qs::fpow(b, n);
        PRat rhs = pre * qs::phi43(n,
                                   {b, b * qs::fpow(q, -n) / a, q / z},
                                   {b * c * qs::fpow(q, -n) / a, b * d * qs::fpow(q, -n) / a,
                                    b * e * qs::fpow(q, -n) / a},
                                   q, q);
        return lhs - rhs;
      });
    });
    suite.add("tr2", "eq-tr2", "n=" + std::to_string(n), [n](uint64_t seed, int points) {
      return detail::pointwise({"a", "b", "c", "d", "e"}, points, seed,
                               [n](const PRat& q, const VarMap& m) {
        PRat a = m.at("a"), b = m.at("b"), c = m.at("c"), d = m.at("d"), e = m.at("e");
        PRat z = a * a * qs::fpow(q, n + 2) / (b * c * d * e);
        PRat lhs = qs::w87(n, a, {b, c, d, e}, q, z);
        PRat zn = fml::sgn<PRat>(n) * qs::fpow(q, -n * (n + 1) / 2) * qs::fpow(z, n);
        PRat pre = qs::qpoch_many({a * q, b, q / z}, q, n) /
                   qs::qpoch_many({a * q / c, a * q / d, a * q / e}, q, n) * zn;
        PRat rhs = pre * qs::phi43(n,
                                   {a * q / (b * c), a * q / (b * d), a * q / (b * e)},
                                   {qs::fpow(q, 1 - n) / b, a * q / b, qs::fpow(q, -n) * z}, q,
                                   q);
        return lhs - rhs;
      });
    });
    suite.add("w65", "gr-II.20", "n=" + std::to_string(n), [n](uint64_t seed, int points) {
      return detail::pointwise({"a", "b", "c"}, points, seed,
                               [n](const PRat& q, const VarMap& m) {
        PRat a = m.at("a"), b = m.at("b"), c = m.at("c");
        PRat z = a * qs::fpow(q, n + 1) / (b * c);
        PRat lhs = qs::w65(n, a, {b, c}, q, z);
        PRat rhs = qs::qpoch(a * q, q, n) * qs::qpoch(a * q / (b * c), q, n) /
                   (qs::qpoch(a * q / b, q, n) * qs::qpoch(a * q / c, q, n));
        return lhs - rhs;
      });
    });
  }
  // the hd-shaped 6W5 instance with the formal xi as a sampled variable
  suite.add("w65-hd", "proof-of-hd", "s<=3", [](uint64_t seed, int points) {
    for (long s = 0; s <= 3; ++s) {
      bool ok = detail::pointwise({"lambda", "mu", "xi"}, points, splitmix64(seed + s),
                                  [s](const PRat& q, const VarMap& m) {
        PRat p = q * q;
        PRat ul = m.at("lambda"), um = m.at("mu"), xi = m.at("xi");
        PRat a = qs::fpow(q, 2) * um * um * qs::fpow(p, -s);
        PRat b1 = qs::fpow(q, 3) * ul * um * xi;
        PRat b2 = qs::fpow(q, 3) * ul * um / xi;
        PRat z = qs::fpow(q, -2) / (ul * ul);
        PRat w = qs::w65(s, a, {b1, b2}, p, z);
        PRat pre = qs::qpoch(q * ul / um * xi, p, s) * qs::qpoch(q * ul / (um * xi), p, s) /
                   (qs::qpoch(qs::fpow(q, -2) / (um * um), p, s) *
                    qs::qpoch(qs::fpow(q, 4) * ul * ul, p, s));
        return pre * w - PRat(1);
      });
      if (!ok) return false;
    }
    return true;
  });
  // q-Racah symmetries
  suite.add("rso", "eq-rso", "n,x<=4", [bound](uint64_t seed, int points) {
    for (long n = 0; n <= bound; ++n)
      for (long x = 0; x <= bound; ++x) {
        bool ok = detail::pointwise(
            {"a", "b", "c", "d"}, points, splitmix64(seed + static_cast<uint64_t>(5 * n + x)),
            [n, x](const PRat& q, const VarMap& m) {
              PRat a = m.at("a"), b = m.at("b"), c = m.at("c"), d = m.at("d");
              return qs::qracah(n, x, a, b, c, d, q) -
                     qs::qracah(x, n, a, d * c / a, c, b * a / c, q);
            });
        if (!ok) return false;
      }
    return true;
  });
  for (int N = 0; N <= std::min(bound, 3); ++N) {
    suite.add("rs1", "eq-rs1", "N=" + std::to_string(N), [N](uint64_t seed, int points) {
      for (long n = 0; n <= N; ++n)
        for (long x = 0; x <= N; ++x) {
          bool ok = detail::pointwise(
              {"a", "b", "d"}, points, splitmix64(seed + static_cast<uint64_t>(5 * n + x)),
              [n, x, N](const PRat& q, const VarMap& m) {
                PRat a = m.at("a"), b = m.at("b"), d = m.at("d");
                PRat c = qs::fpow(q, -N - 1);
                PRat lhs = qs::qracah(n, x, a, b, c, d, q);
                PRat pre = qs::fpow(d, n) * qs::qpoch(b * q, q, n) * qs::qpoch(a * q / d, q, n) /
                           (qs::qpoch(a * q, q, n) * qs::qpoch(b * d * q, q, n));
                PRat rhs = pre * qs::qracah(N - x, n, b, c / (b * d), c,
                                            qs::fpow(q, N + 1) * a * b, q);
                return lhs - rhs;
              });
          if (!ok) return false;
        }
      return true;
    });
    suite.add("rs2", "eq-rs2", "N=" + std::to_string(N), [N](uint64_t seed, int points) {
      for (long n = 0; n <= N; ++n)
        for (long x = 0; x <= N; ++x) {
          bool ok = detail::pointwise(
              {"a", "b", "d"}, points, splitmix64(seed + static_cast<uint64_t>(5 * n + x)),
              [n, x, N](const PRat& q, const VarMap& m) {
                PRat a = m.at("a"), b = m.at("b"), d = m.at("d");
                PRat c = qs::fpow(q, -N - 1);
                PRat lhs = qs::qracah(n, x, a, b, c, d, q);
                PRat pre = qs::fpow(d * qs::fpow(q, x - N), x) *
                           qs::qpoch(a * qs::fpow(q, 1 + N - x) / d, q, x) *
                           qs::qpoch(b * qs::fpow(q, 1 + N - x), q, x) /
                           (qs::qpoch(a * q, q, x) * qs::qpoch(b * d * q, q, x));
                PRat rhs = pre * qs::qracah(N - n, x, d * c / a, c / (b * d), c, d, q);
                return lhs - rhs;
              });
          if (!ok) return false;
        }
      return true;
    });
  }
  // degree: interpolation through n+2 nodes mu(x)
  for (int n = 1; n <= bound; ++n) {
    suite.add("qracah-degree", "eq-defqracah", "n=" + std::to_string(n),
              [n](uint64_t seed, int points) {
      int reps = std::min(points, 5);
      Sampler sampler(seed);
      for (int rep = 0; rep < reps; ++rep) {
        for (int tries = 0;; ++tries) {
          try {
            PRat q(sampler.sample_q());
            PRat a(sampler.sample_u()), b(sampler.sample_u()), c(sampler.sample_u()),
                d(sampler.sample_u());
            std::vector<PRat> xs, ys;
            for (long x = 0; x <= n + 1; ++x) {
              xs.push_back(qs::fpow(q, -x) + c * d * qs::fpow(q, x + 1));
              ys.push_back(qs::qracah(static_cast<long>(n), x, a, b, c, d, q));
            }
            // divided differences: the (n+1)-st must vanish, the n-th not
            std::vector<PRat> dd = ys;
            for (size_t order = 1; order < xs.size(); ++order) {
              for (size_t i = xs.size() - 1; i >= order; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order]);
              if (order == static_cast<size_t>(n) && dd[order] == PRat(0)) return false;
            }
            if (!(dd[static_cast<size_t>(n) + 1] == PRat(0))) return false;
            break;
          } catch (const PoleAtPoint&) {
            if (tries > kRetryBudget) throw;
          }
        }
      }
      return true;
    });
  }
  // full parameter symmetry of Askey-Wilson polynomials
  for (int n = 0; n <= bound; ++n) {
    suite.add("aw-symmetry", "eq-defaw", "n=" + std::to_string(n),
              [n](uint64_t seed, int points) {
      return detail::pointwise({"a", "b", "c", "d", "xi"}, points, seed,
                               [n](const PRat& q, const VarMap& m) {
        PRat a = m.at("a"), b = m.at("b"), c = m.at("c"), d = m.at("d"), xi = m.at("xi");
        PRat base = qs::askey_wilson_xi(n, xi, a, b, c, d, q);
        PRat diff(0);
        diff = diff + (qs::askey_wilson_xi(n, xi, b, a, c, d, q) - base);
        diff = diff + (qs::askey_wilson_xi(n, xi, c, b, a, d, q) - base);
        diff = diff + (qs::askey_wilson_xi(n, xi, d, b, c, a, q) - base);
        diff = diff + (qs::askey_wilson_xi(n, xi, a, c, b, d, q) - base);
        diff = diff + (qs::askey_wilson_xi(n, xi, a, d, c, b, q) - base);
        return diff;
      });
    });
  }
  // Pascal identities in base q^2
  suite.add("pascal", "proof-of-mep", "k,l<=5", [](uint64_t seed, int points) {
    return detail::pointwise({}, points, seed, [](const PRat& q, const VarMap&) {
      PRat p = q * q;
      PRat diff(0);
      for (long k = 0; k <= 5; ++k)
        for (long l = 0; l <= k + 1; ++l) {
          PRat lhs = qs::qbinom(k + 1, l, p);
          PRat t1 = l >= 1 ? qs::qbinom(k, l - 1, p) : PRat(0);
          PRat t2 = l <= k ? qs::qbinom(k, l, p) : PRat(0);
          diff = diff + (lhs - (qs::fpow(p, k - l + 1) * t1 + t2));
          diff = diff + (lhs - (t1 + qs::fpow(p, l) * t2));
        }
      return diff;
    });
  });
  suite.add("phi43-empty", "sec2.3", "n=0", [](uint64_t seed, int points) {
    return detail::pointwise({"a"}, points, seed, [](const PRat& q, const VarMap& m) {
      return qs::phi43(0, {m.at("a"), m.at("a"), m.at("a")}, {m.at("a"), m.at("a"), m.at("a")},
                       q, q) -
             PRat(1);
    });
  });
  return suite.run();
}

}  // namespace dynsu2
