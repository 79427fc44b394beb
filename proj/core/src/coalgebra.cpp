#include "dynsu2/coalgebra.hpp"

#include <mutex>

namespace dynsu2 {

namespace {
constexpr uint64_t kPurgeSeed = 0x636f616c67656272ULL;

void purge(std::map<std::pair<Mono, Mono>, Scalar>& terms) {
  uint64_t i = 0;
  for (auto it = terms.begin(); it != terms.end();) {
    if (is_zero(it->second, kDefaultTrials, splitmix64(kPurgeSeed + ++i)))
      it = terms.erase(it);
    else
      ++it;
  }
}

}  // namespace

void TensorElement::insert(const Mono& m1, const Mono& m2, const Scalar& c) {
  auto key = std::make_pair(m1, m2);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else
    it->second += c;
}

void Tensor3Element::insert(const Mono& m1, const Mono& m2, const Mono& m3, const Scalar& c) {
  auto key = std::make_tuple(m1, m2, m3);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else
    it->second += c;
}

void HatTensor::insert(const Mono& m1, const Mono& m2, const Scalar& c) {
  auto key = std::make_pair(m1, m2);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else
    it->second += c;
}

void TildeOfHat::insert(const Mono& a, const Mono& b, const Mono& c, const Mono& d,
                        const Scalar& s) {
  auto key = std::make_tuple(a, b, c, d);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, s);
  else
    it->second += s;
}

void HatOfTilde::insert(const Mono& a, const Mono& b, const Mono& c, const Mono& d,
                        const Scalar& s) {
  auto key = std::make_tuple(a, b, c, d);
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, s);
  else
    it->second += s;
}

namespace {

struct GenPair {
  Gen l, r;
};

const std::vector<GenPair>& delta_table(Gen g) {
  using G = Gen;
  static const std::vector<GenPair> a{{G::Alpha, G::Alpha}, {G::Beta, G::Gamma}};
  static const std::vector<GenPair> b{{G::Alpha, G::Beta}, {G::Beta, G::Delta}};
  static const std::vector<GenPair> c{{G::Gamma, G::Alpha}, {G::Delta, G::Gamma}};
  static const std::vector<GenPair> d{{G::Gamma, G::Beta}, {G::Delta, G::Delta}};
  switch (g) {
    case G::Alpha: return a;
    case G::Beta: return b;
    case G::Gamma: return c;
    default: return d;
  }
}

}  // namespace

std::vector<SplitTerm> coproduct_split(const Mono& m, Mode mode) {
  static std::map<std::pair<Mono, int>, std::vector<SplitTerm>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({m, static_cast<int>(mode)});
    if (it != cache.end()) return it->second;
  }
  std::vector<SplitTerm> acc{{Scalar(1), Mono{}, Scalar(1), Mono{}}};
  for (Gen g : m.word(mode)) {
    std::vector<SplitTerm> next;
    for (const auto& t : acc)
      for (const auto& [gl, gr] : delta_table(g)) {
        // multiply slot-wise: (lc lm)(gl) and (rc rm)(gr)
        AlgElement L = mul(scale(mono_elem(t.lm, mode, kLeftSlot), t.lc),
                           gen_elem(gl, mode, kLeftSlot));
        AlgElement R = mul(scale(mono_elem(t.rm, mode, kRightSlot), t.rc),
                           gen_elem(gr, mode, kRightSlot));
        for (const auto& [lm2, lc2] : L.terms)
          for (const auto& [rm2, rc2] : R.terms) next.push_back({lc2, lm2, rc2, rm2});
      }
    acc = std::move(next);
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(std::make_pair(m, static_cast<int>(mode)), std::move(acc))
      .first->second;
}

TensorElement coproduct(const AlgElement& x) {
  TensorElement out;
  out.mode = x.mode;
  for (const auto& [m, c] : x.terms)
    for (const auto& t : coproduct_split(m, x.mode)) out.insert(t.lm, t.rm, c * t.lc * t.rc);
  purge(out.terms);
  return out;
}

TensorElement tensor_of(const AlgElement& x, const AlgElement& y) {
  TensorElement out;
  out.mode = x.mode;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      if (mx.bidegree().second != my.bidegree().first)
        throw IncompatibleGrading("tensor factors have mismatched inner bidegree");
      out.insert(mx, my, rename(cx, {{"mu", "rho"}}) * rename(cy, {{"lambda", "rho"}}));
    }
  purge(out.terms);
  return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  out.mode = a.mode;
  for (const auto& [ma, ca] : a.terms) {
    auto [wl1, wr1] = ma.first.bidegree();
    auto [wl2, wr2] = ma.second.bidegree();
    for (const auto& [mb, cb] : b.terms) {
      Scalar c2 = cb;
      if (wl1) c2 = shift(c2, "lambda", -wl1);
      if (wr1) c2 = shift(c2, "rho", -wr1);
      if (wr2) c2 = shift(c2, "mu", -wr2);
      Scalar c = ca * c2;
      GenWord lw, rw;
      for (Gen g : ma.first.word(a.mode)) lw.push_back(WordItem::of(g));
      for (Gen g : mb.first.word(a.mode)) lw.push_back(WordItem::of(g));
      for (Gen g : ma.second.word(a.mode)) rw.push_back(WordItem::of(g));
      for (Gen g : mb.second.word(a.mode)) rw.push_back(WordItem::of(g));
      AlgElement L = normalize(lw, a.mode, kLeftSlot);
      AlgElement R = normalize(rw, a.mode, kRightSlot);
      for (const auto& [lm, lc] : L.terms)
        for (const auto& [rm, rc] : R.terms) out.insert(lm, rm, c * lc * rc);
    }
  }
  purge(out.terms);
  return out;
}

Tensor3Element coassoc_left(const AlgElement& x) {
  Tensor3Element out;
  out.mode = x.mode;
  for (const auto& [m, c] : x.terms)
    for (const auto& t : coproduct_split(m, x.mode)) {
      Scalar outer = c * rename(t.lc, {{"rho", "rho2"}}) * rename(t.rc, {{"rho", "rho2"}});
      for (const auto& i : coproduct_split(t.lm, x.mode)) {
        Scalar inner = rename(i.lc, {{"rho", "rho1"}}) *
                       rename(i.rc, {{"rho", "rho1"}, {"mu", "rho2"}});
        out.insert(i.lm, i.rm, t.rm, outer * inner);
      }
    }
  return out;
}

Tensor3Element coassoc_right(const AlgElement& x) {
  Tensor3Element out;
  out.mode = x.mode;
  for (const auto& [m, c] : x.terms)
    for (const auto& t : coproduct_split(m, x.mode)) {
      Scalar outer = c * rename(t.lc, {{"rho", "rho1"}}) * rename(t.rc, {{"rho", "rho1"}});
      for (const auto& i : coproduct_split(t.rm, x.mode)) {
        Scalar inner = rename(i.lc, {{"lambda", "rho1"}, {"rho", "rho2"}}) *
                       rename(i.rc, {{"rho", "rho2"}});
        out.insert(t.lm, i.lm, i.rm, outer * inner);
      }
    }
  return out;
}

namespace {

// eps of a basis monomial: (defined, shift) with eps(m) = T_shift, zero
// otherwise.
std::pair<bool, int> eps_shift(const Mono& m) {
  if (m.b == 0 && m.g == 0 && m.d == 0) return {true, -m.a};
  if (m.a == 0 && m.b == 0 && m.g == 0) return {true, m.d};
  return {false, 0};
}

}  // namespace

AlgElement counit_collapse_left(const TensorElement& t, VarNames out) {
  AlgElement r(t.mode, out);
  for (const auto& [mm, c] : t.terms) {
    auto [ok, s] = eps_shift(mm.first);
    if (!ok) continue;
    (void)s;
    Scalar cc = subst(c, {{"lambda", Scalar::var(out.l)},
                          {"rho", Scalar::var(out.l)},
                          {"mu", Scalar::var(out.r)}});
    r.insert(mm.second, cc);
  }
  return r;
}

AlgElement counit_collapse_right(const TensorElement& t, VarNames out) {
  AlgElement r(t.mode, out);
  for (const auto& [mm, c] : t.terms) {
    auto [ok, s] = eps_shift(mm.second);
    if (!ok) continue;
    (void)s;
    Scalar cc = subst(c, {{"lambda", Scalar::var(out.l)},
                          {"rho", Scalar::var(out.r)},
                          {"mu", Scalar::var(out.r)}});
    r.insert(mm.first, cc);
  }
  return r;
}

namespace {

AlgElement slot_as_element(const Scalar& coeff, const Mono& m, bool left_slot, Mode mode) {
  // reinterpret a tensor slot as an element over (lambda, mu)
  AlgElement e(mode, VarNames{});
  Scalar c = left_slot ? rename(coeff, {{"rho", "mu"}}) : rename(coeff, {{"rho", "lambda"}});
  e.insert(m, c);
  return e;
}

}  // namespace

AlgElement conv_id_S(const Mono& m, Mode mode) {
  AlgElement r(mode, VarNames{});
  for (const auto& t : coproduct_split(m, mode)) {
    AlgElement a = slot_as_element(t.lc, t.lm, true, mode);
    AlgElement sb = antipode(slot_as_element(t.rc, t.rm, false, mode));
    r = r + mul(a, sb);
  }
  return normalize(r);
}

AlgElement conv_S_id(const Mono& m, Mode mode) {
  AlgElement r(mode, VarNames{});
  for (const auto& t : coproduct_split(m, mode)) {
    AlgElement sa = antipode(slot_as_element(t.lc, t.lm, true, mode));
    AlgElement b = slot_as_element(t.rc, t.rm, false, mode);
    r = r + mul(sa, b);
  }
  return normalize(r);
}

AlgElement conv_id_S_probe(const Mono& m, Mode mode, const Scalar& g_rho, bool attach_left) {
  AlgElement r(mode, VarNames{});
  for (auto t : coproduct_split(m, mode)) {
    if (attach_left)
      t.lc = g_rho * t.lc;
    else
      t.rc = g_rho * t.rc;
    AlgElement a = slot_as_element(t.lc, t.lm, true, mode);
    AlgElement sb = antipode(slot_as_element(t.rc, t.rm, false, mode));
    r = r + mul(a, sb);
  }
  return normalize(r);
}

AlgElement conv_S_id_probe(const Mono& m, Mode mode, const Scalar& g_rho, bool attach_left) {
  AlgElement r(mode, VarNames{});
  for (auto t : coproduct_split(m, mode)) {
    if (attach_left)
      t.lc = g_rho * t.lc;
    else
      t.rc = g_rho * t.rc;
    AlgElement sa = antipode(slot_as_element(t.lc, t.lm, true, mode));
    AlgElement b = slot_as_element(t.rc, t.rm, false, mode);
    r = r + mul(sa, b);
  }
  return normalize(r);
}

TensorElement sigma_SS_delta(const Mono& m, Mode mode) {
  TensorElement out;
  out.mode = mode;
  for (const auto& t : coproduct_split(m, mode)) {
    AlgElement sa = antipode(slot_as_element(t.lc, t.lm, true, mode));
    AlgElement sb = antipode(slot_as_element(t.rc, t.rm, false, mode));
    for (const auto& [mb, cb] : sb.terms)
      for (const auto& [ma, ca] : sa.terms)
        out.insert(mb, ma, rename(cb, {{"mu", "rho"}}) * rename(ca, {{"lambda", "rho"}}));
  }
  purge(out.terms);
  return out;
}

TensorElement star_star_delta(const Mono& m, Mode mode) {
  TensorElement out;
  out.mode = mode;
  for (const auto& t : coproduct_split(m, mode)) {
    AlgElement qa = star(slot_as_element(t.lc, t.lm, true, mode));
    AlgElement qb = star(slot_as_element(t.rc, t.rm, false, mode));
    for (const auto& [ma, ca] : qa.terms)
      for (const auto& [mb, cb] : qb.terms)
        out.insert(ma, mb, rename(ca, {{"mu", "rho"}}) * rename(cb, {{"lambda", "rho"}}));
  }
  purge(out.terms);
  return out;
}

AlgElement mul_tilde(const TensorElement& t, bool rho_left, VarNames out) {
  AlgElement r(t.mode, out);
  for (const auto& [mm, c] : t.terms) {
    auto [wl1, wr1] = mm.first.bidegree();
    std::map<std::string, Scalar> repl;
    repl["lambda"] = Scalar::var(out.l);
    repl["mu"] = qpow(-wr1) * Scalar::var(out.r);
    repl["rho"] = rho_left ? Scalar::var(out.r) : qpow(-wl1) * Scalar::var(out.l);
    GenWord w;
    w.push_back(WordItem::of(subst(c, repl)));
    for (Gen g : mm.first.word(t.mode)) w.push_back(WordItem::of(g));
    for (Gen g : mm.second.word(t.mode)) w.push_back(WordItem::of(g));
    AlgElement part = normalize(w, t.mode, out);
    for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
  }
  return r;
}

AlgElement mul_tilde_guarded(const TensorElement& t, int trials, uint64_t seed, VarNames out) {
  AlgElement a = mul_tilde(t, true, out);
  AlgElement b = mul_tilde(t, false, out);
  if (!alg_equal(a, b, trials, seed))
    throw DomainError("multiplication is representative-dependent on this tilde tensor");
  return a;
}

HatTensor hat(const AlgElement& x, const AlgElement& y) {
  HatTensor out;
  out.mode = x.mode;
  for (const auto& [mx, cx] : x.terms) {
    auto [wl, wr] = mx.bidegree();
    for (const auto& [my, cy] : y.terms) {
      Scalar c2 = cy;
      if (wl) c2 = shift(c2, "lambda", -wl);
      if (wr) c2 = shift(c2, "mu", -wr);
      out.insert(mx, my, cx * c2);
    }
  }
  return out;
}

AlgElement mul_out(const HatTensor& h, VarNames out) {
  AlgElement r(h.mode, out);
  for (const auto& [mm, c] : h.terms) {
    GenWord w;
    w.push_back(WordItem::of(subst(
        c, {{"lambda", Scalar::var(out.l)}, {"mu", Scalar::var(out.r)}})));
    for (Gen g : mm.first.word(h.mode)) w.push_back(WordItem::of(g));
    for (Gen g : mm.second.word(h.mode)) w.push_back(WordItem::of(g));
    AlgElement part = normalize(w, h.mode, out);
    for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
  }
  return r;
}

DiffOp hat_counit(const HatTensor& h) {
  DiffOp out("lambda");
  for (const auto& [mm, c] : h.terms) {
    auto [ok1, s1] = eps_shift(mm.first);
    auto [ok2, s2] = eps_shift(mm.second);
    if (!ok1 || !ok2) continue;
    Scalar f = subst(c, {{"mu", Scalar::var("lambda")}});
    out += DiffOp::term(f, s1 + s2, "lambda");
  }
  return out;
}

HatOfTilde hat_of_tensors(const TensorElement& x, const TensorElement& y) {
  HatOfTilde out;
  out.mode = x.mode;
  for (const auto& [mx, cx] : x.terms) {
    auto [wla, wra] = mx.first.bidegree();
    auto [wlb, wrb] = mx.second.bidegree();
    (void)wlb;
    for (const auto& [my, cy] : y.terms) {
      Scalar c2 = subst(cy, {{"lambda", qpow(-wla) * Scalar::var("lambda")},
                             {"rho", Scalar::var("rho2")},
                             {"mu", qpow(-wrb) * Scalar::var("mu")}});
      out.insert(mx.first, mx.second, my.first, my.second,
                 rename(cx, {{"rho", "rho1"}}) * c2);
    }
  }
  return out;
}

TildeOfHat sigma23(const HatOfTilde& x) {
  TildeOfHat out;
  out.mode = x.mode;
  for (const auto& [mm, c] : x.terms) {
    const auto& [a, b, cc, d] = mm;
    auto [wla, wra] = a.bidegree();
    (void)wla;
    Scalar s = subst(c, {{"rho1", Scalar::var("rho")},
                         {"rho2", qpow(-wra) * Scalar::var("rho")}});
    out.insert(a, cc, b, d, s);
  }
  return out;
}

TildeOfHat hat_coproduct(const HatTensor& h) {
  TildeOfHat out;
  out.mode = h.mode;
  for (const auto& [mm, c] : h.terms) {
    for (const auto& ta : coproduct_split(mm.first, h.mode)) {
      Scalar ca = ta.lc * ta.rc;  // joint over (lambda, rho, mu)
      auto [wla1, wra1] = ta.lm.bidegree();
      auto [wla2, wra2] = ta.rm.bidegree();
      (void)wla2;
      for (const auto& tb : coproduct_split(mm.second, h.mode)) {
        Scalar cb = tb.lc * tb.rc;
        Scalar cb2 = subst(cb, {{"lambda", qpow(-wla1) * Scalar::var("lambda")},
                                {"rho", qpow(-wra1) * Scalar::var("rho")},
                                {"mu", qpow(-wra2) * Scalar::var("mu")}});
        out.insert(ta.lm, tb.lm, ta.rm, tb.rm, c * ca * cb2);
      }
    }
  }
  return out;
}

TensorElement mul_out_pairs(const TildeOfHat& t) {
  TensorElement out;
  out.mode = t.mode;
  for (const auto& [mm, c] : t.terms) {
    const auto& [a, b, cc, d] = mm;
    GenWord lw, rw;
    for (Gen g : a.word(t.mode)) lw.push_back(WordItem::of(g));
    for (Gen g : b.word(t.mode)) lw.push_back(WordItem::of(g));
    for (Gen g : cc.word(t.mode)) rw.push_back(WordItem::of(g));
    for (Gen g : d.word(t.mode)) rw.push_back(WordItem::of(g));
    AlgElement L = normalize(lw, t.mode, kLeftSlot);
    AlgElement R = normalize(rw, t.mode, kRightSlot);
    for (const auto& [lm, lc] : L.terms)
      for (const auto& [rm, rc] : R.terms) out.insert(lm, rm, c * lc * rc);
  }
  purge(out.terms);
  return out;
}

HatTensor hat_counit_collapse_left(const TildeOfHat& t) {
  HatTensor out;
  out.mode = t.mode;
  for (const auto& [mm, c] : t.terms) {
    const auto& [a, b, cc, d] = mm;
    auto [ok1, s1] = eps_shift(a);
    auto [ok2, s2] = eps_shift(b);
    if (!ok1 || !ok2) continue;
    (void)s1;
    (void)s2;
    out.insert(cc, d, subst(c, {{"rho", Scalar::var("lambda")}}));
  }
  return out;
}

HatTensor hat_counit_collapse_right(const TildeOfHat& t) {
  HatTensor out;
  out.mode = t.mode;
  for (const auto& [mm, c] : t.terms) {
    const auto& [a, b, cc, d] = mm;
    auto [ok1, s1] = eps_shift(cc);
    auto [ok2, s2] = eps_shift(d);
    if (!ok1 || !ok2) continue;
    (void)s1;
    (void)s2;
    out.insert(a, b, subst(c, {{"rho", Scalar::var("mu")}}));
  }
  return out;
}

bool tensor_is_zero(const TensorElement& t, int trials, uint64_t seed) {
  uint64_t i = 0;
  for (const auto& [mm, c] : t.terms)
    if (!is_zero(c, trials, splitmix64(seed + ++i))) return false;
  return true;
}

bool tensor_equal(const TensorElement& a, const TensorElement& b, int trials, uint64_t seed) {
  TensorElement d = a;
  for (const auto& [mm, c] : b.terms) d.insert(mm.first, mm.second, -c);
  return tensor_is_zero(d, trials, seed);
}

bool tensor3_equal(const Tensor3Element& a, const Tensor3Element& b, int trials, uint64_t seed) {
  Tensor3Element d = a;
  for (const auto& [mm, c] : b.terms)
    d.insert(std::get<0>(mm), std::get<1>(mm), std::get<2>(mm), -c);
  uint64_t i = 0;
  for (const auto& [mm, c] : d.terms)
    if (!is_zero(c, trials, splitmix64(seed + ++i))) return false;
  return true;
}

bool hat_equal(const HatTensor& a, const HatTensor& b, int trials, uint64_t seed) {
  HatTensor d = a;
  for (const auto& [mm, c] : b.terms) d.insert(mm.first, mm.second, -c);
  uint64_t i = 0;
  for (const auto& [mm, c] : d.terms)
    if (!is_zero(c, trials, splitmix64(seed + ++i))) return false;
  return true;
}

}  // namespace dynsu2
