#include "dynsu2/algebra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

#include "dynsu2/qseries.hpp"

namespace dynsu2 {

namespace {
// Internal purge seed; coefficient zero tests must not depend on suite seeds
// or results would vary with CLI flags.
constexpr uint64_t kPurgeSeed = 0x70757267655f3141ULL;
constexpr int kPurgeTrials = 20;
constexpr long kRewriteFuel = 2000000;
}  // namespace

int weight_l(Gen g) {
  switch (g) {
    case Gen::Alpha:
    case Gen::Beta: return 1;
    default: return -1;
  }
}

int weight_r(Gen g) {
  switch (g) {
    case Gen::Alpha:
    case Gen::Gamma: return 1;
    default: return -1;
  }
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::Alpha: return "alpha";
    case Gen::Beta: return "beta";
    case Gen::Gamma: return "gamma";
    default: return "delta";
  }
}

std::pair<int, int> Mono::bidegree() const {
  return {a + b - g - d, a - b + g - d};
}

bool Mono::admissible(Mode mode) const {
  if (a < 0 || b < 0 || g < 0 || d < 0) return false;
  if (mode == Mode::M2) return true;
  return a == 0 || d == 0;
}

std::vector<Gen> Mono::word(Mode mode) const {
  std::vector<Gen> w;
  w.reserve(degree());
  if (mode == Mode::M2) {
    w.insert(w.end(), a, Gen::Alpha);
    w.insert(w.end(), b, Gen::Beta);
    w.insert(w.end(), g, Gen::Gamma);
    w.insert(w.end(), d, Gen::Delta);
  } else if (d == 0) {
    w.insert(w.end(), g, Gen::Gamma);
    w.insert(w.end(), b, Gen::Beta);
    w.insert(w.end(), a, Gen::Alpha);
  } else {
    w.insert(w.end(), d, Gen::Delta);
    w.insert(w.end(), g, Gen::Gamma);
    w.insert(w.end(), b, Gen::Beta);
  }
  return w;
}

std::string Mono::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char* n, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << n;
    if (e > 1) os << "^" << e;
  };
  // print in SL2 basis order when delta-free, else delta first
  if (d == 0) {
    put("gamma", g);
    put("beta", b);
    put("alpha", a);
  } else {
    put("delta", d);
    put("gamma", g);
    put("beta", b);
    put("alpha", a);
  }
  return os.str();
}

void AlgElement::insert(const Mono& m, const Scalar& c) {
  auto it = terms.find(m);
  if (it == terms.end())
    terms.emplace(m, c);
  else
    it->second += c;
}

Scalar aux_F(const std::string& var, long s) {
  Scalar u2 = Scalar::var(var).pow(2);
  return (qpow(2 + 2 * s) * u2 - qpow(-2)) / (qpow(2 + 2 * s) * u2 - Scalar(1));
}

Scalar aux_G(const std::string& var, long s) {
  Scalar u2 = Scalar::var(var).pow(2);
  return (qpow(2 + 2 * s) * u2 - qpow(2)) * (qpow(2 + 2 * s) * u2 - qpow(-2)) /
         ((qpow(2 + 2 * s) * u2 - Scalar(1)) * (qpow(2 + 2 * s) * u2 - Scalar(1)));
}

Scalar aux_H(const VarNames& v) {
  Scalar ul2 = Scalar::var(v.l).pow(2), ur2 = Scalar::var(v.r).pow(2);
  return (Scalar::q() - qpow(-1)) * (qpow(4) * ul2 * ur2 - Scalar(1)) /
         ((qpow(2) * ul2 - Scalar(1)) * (qpow(2) * ur2 - Scalar(1)));
}

Scalar aux_I(const VarNames& v) {
  Scalar ul2 = Scalar::var(v.l).pow(2), ur2 = Scalar::var(v.r).pow(2);
  return (Scalar::q() - qpow(-1)) * (qpow(2) * ur2 - qpow(2) * ul2) /
         ((qpow(2) * ul2 - Scalar(1)) * (qpow(2) * ur2 - Scalar(1)));
}

namespace {

struct TermState {
  Scalar coeff;
  std::vector<Gen> word;
};

struct Replacement {
  Scalar c;
  std::vector<Gen> w;
};

// Rewrite rules for an adjacent out-of-order pair (x, y).  Coefficients are
// positioned at the pair; the caller moves them to the far left.
std::vector<Replacement> pair_rule(Gen x, Gen y, Mode mode, const VarNames& v) {
  using G = Gen;
  const Scalar q = Scalar::q();
  if (mode == Mode::SL2) {
    if (x == G::Alpha && y == G::Delta)
      return {{Scalar(1), {}}, {q * aux_F(v.l), {G::Gamma, G::Beta}}};
    if (x == G::Delta && y == G::Alpha)
      return {{Scalar(1), {}}, {qpow(-1) / aux_F(v.r, -1), {G::Gamma, G::Beta}}};
    if (x == G::Alpha && y == G::Beta) return {{q * aux_F(v.r, -1), {G::Beta, G::Alpha}}};
    if (x == G::Alpha && y == G::Gamma) return {{q * aux_F(v.l), {G::Gamma, G::Alpha}}};
    if (x == G::Beta && y == G::Delta) return {{q * aux_F(v.l), {G::Delta, G::Beta}}};
    if (x == G::Gamma && y == G::Delta) return {{q * aux_F(v.r, -1), {G::Delta, G::Gamma}}};
    if (x == G::Beta && y == G::Gamma) {
      // beta gamma = G(l) gamma beta + I(l,r) alpha delta, with alpha delta
      // immediately reduced by c = 1.
      Scalar I = aux_I(v);
      return {{aux_G(v.l) + q * aux_F(v.l) * I, {G::Gamma, G::Beta}}, {I, {}}};
    }
    // inverse crossings, used only while contracting an alpha toward a delta
    if (x == G::Beta && y == G::Alpha)
      return {{Scalar(1) / (q * aux_F(v.r, -1)), {G::Alpha, G::Beta}}};
    if (x == G::Gamma && y == G::Alpha)
      return {{Scalar(1) / (q * aux_F(v.l)), {G::Alpha, G::Gamma}}};
    if (x == G::Delta && y == G::Beta)
      return {{Scalar(1) / (q * aux_F(v.l)), {G::Beta, G::Delta}}};
    if (x == G::Delta && y == G::Gamma)
      return {{Scalar(1) / (q * aux_F(v.r, -1)), {G::Gamma, G::Delta}}};
  } else {
    if (x == G::Beta && y == G::Alpha)
      return {{Scalar(1) / (q * aux_F(v.r, -1)), {G::Alpha, G::Beta}}};
    if (x == G::Gamma && y == G::Alpha)
      return {{Scalar(1) / (q * aux_F(v.l)), {G::Alpha, G::Gamma}}};
    if (x == G::Delta && y == G::Beta)
      return {{Scalar(1) / (q * aux_F(v.l)), {G::Beta, G::Delta}}};
    if (x == G::Delta && y == G::Gamma)
      return {{Scalar(1) / (q * aux_F(v.r, -1)), {G::Gamma, G::Delta}}};
    if (x == G::Delta && y == G::Alpha)
      return {{Scalar(1), {G::Alpha, G::Delta}}, {-aux_H(v), {G::Gamma, G::Beta}}};
    if (x == G::Gamma && y == G::Beta) {
      Scalar Ginv = Scalar(1) / aux_G(v.l);
      return {{Ginv, {G::Beta, G::Gamma}}, {-Ginv * aux_I(v), {G::Alpha, G::Delta}}};
    }
  }
  throw std::logic_error("no rewrite rule for this pair");
}

// Basis letter ranks: M2 sorts alpha < beta < gamma < delta, SL2 sorts
// delta < gamma < beta < alpha (valid for both monomial families).
int rank_of(Gen g, Mode mode) {
  int r = static_cast<int>(g);
  return mode == Mode::M2 ? r : 3 - r;
}

Scalar move_left(const Scalar& c, const std::vector<Gen>& word, size_t upto, const VarNames& v) {
  long sl = 0, sr = 0;
  for (size_t i = 0; i < upto; ++i) {
    sl -= weight_l(word[i]);
    sr -= weight_r(word[i]);
  }
  Scalar r = c;
  if (sl) r = shift(r, v.l, sl);
  if (sr) r = shift(r, v.r, sr);
  return r;
}

Mono mono_of_sorted(const std::vector<Gen>& w) {
  Mono m;
  for (Gen g : w) switch (g) {
      case Gen::Alpha: ++m.a; break;
      case Gen::Beta: ++m.b; break;
      case Gen::Gamma: ++m.g; break;
      case Gen::Delta: ++m.d; break;
    }
  return m;
}

// Locate work in a word.  Returns (kind, i): kind 0 = done, 1 = rewrite the
// adjacent pair at i, 2 = contract the alpha/delta pair starting at i (SL2).
std::pair<int, size_t> find_work(const std::vector<Gen>& w, Mode mode, RewriteStrategy strat) {
  if (mode == Mode::SL2) {
    bool has_a = std::find(w.begin(), w.end(), Gen::Alpha) != w.end();
    bool has_d = std::find(w.begin(), w.end(), Gen::Delta) != w.end();
    if (has_a && has_d) {
      // closest alpha..delta or delta..alpha segment
      size_t best_i = 0, best_len = w.size() + 1;
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != Gen::Alpha && w[i] != Gen::Delta) continue;
        Gen other = w[i] == Gen::Alpha ? Gen::Delta : Gen::Alpha;
        for (size_t j = i + 1; j < w.size(); ++j) {
          if (w[j] == w[i]) break;
          if (w[j] == other) {
            if (j - i < best_len) {
              best_len = j - i;
              best_i = i;
            }
            break;
          }
        }
      }
      return {2, best_i};
    }
  }
  if (strat == RewriteStrategy::Leftmost) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (rank_of(w[i], mode) > rank_of(w[i + 1], mode)) return {1, i};
  } else {
    for (size_t i = w.size(); i-- > 1;)
      if (rank_of(w[i - 1], mode) > rank_of(w[i], mode)) return {1, i - 1};
  }
  return {0, 0};
}

}  // namespace

AlgElement normalize(const GenWord& input, Mode mode, VarNames vars, RewriteStrategy strat) {
  // pass 1: move all coefficient factors to the far left
  TermState init{Scalar(1), {}};
  bool nonzero = true;
  for (const auto& item : input) {
    if (item.is_gen) {
      init.word.push_back(item.g);
    } else {
      if (item.c.is_const_zero()) nonzero = false;
      init.coeff *= move_left(item.c, init.word, init.word.size(), vars);
    }
  }
  AlgElement out(mode, vars);
  if (!nonzero) return out;

  std::deque<TermState> work{std::move(init)};
  long fuel = kRewriteFuel;
  while (!work.empty()) {
    if (--fuel < 0) throw std::logic_error("rewrite fuel exhausted");
    TermState t = std::move(work.front());
    work.pop_front();
    auto [kind, pos] = find_work(t.word, mode, strat);
    if (kind == 0) {
      out.insert(mono_of_sorted(t.word), t.coeff);
      continue;
    }
    if (kind == 2) {
      // bring the alpha/delta pair together by one crossing step (or reduce
      // it if already adjacent)
      Gen other = t.word[pos] == Gen::Alpha ? Gen::Delta : Gen::Alpha;
      size_t j = pos + 1;
      while (t.word[j] != other) ++j;
      if (j != pos + 1) {
        // swap (word[j-1], word[j]) moving the terminator letter leftward
        auto reps = pair_rule(t.word[j - 1], t.word[j], mode, vars);
        for (auto& rep : reps) {
          TermState nt;
          nt.coeff = t.coeff * move_left(rep.c, t.word, j - 1, vars);
          nt.word.assign(t.word.begin(), t.word.begin() + static_cast<long>(j - 1));
          nt.word.insert(nt.word.end(), rep.w.begin(), rep.w.end());
          nt.word.insert(nt.word.end(), t.word.begin() + static_cast<long>(j + 1), t.word.end());
          work.push_front(std::move(nt));
        }
        continue;
      }
      // adjacent pair at pos: handled by the pair rule below
    }
    auto reps = pair_rule(t.word[pos], t.word[pos + 1], mode, vars);
    for (auto& rep : reps) {
      TermState nt;
      nt.coeff = t.coeff * move_left(rep.c, t.word, pos, vars);
      nt.word.assign(t.word.begin(), t.word.begin() + static_cast<long>(pos));
      nt.word.insert(nt.word.end(), rep.w.begin(), rep.w.end());
      nt.word.insert(nt.word.end(), t.word.begin() + static_cast<long>(pos + 2), t.word.end());
      work.push_front(std::move(nt));
    }
  }

  // purge coefficients that test to zero
  uint64_t i = 0;
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (is_zero(it->second, kPurgeTrials, splitmix64(kPurgeSeed + ++i)))
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

AlgElement normalize(const AlgElement& x) {
  AlgElement out(x.mode, x.vars);
  for (const auto& [m, c] : x.terms) {
    GenWord w;
    w.push_back(WordItem::of(c));
    for (Gen g : m.word(x.mode)) w.push_back(WordItem::of(g));
    AlgElement part = normalize(w, x.mode, x.vars);
    for (const auto& [pm, pc] : part.terms) out.insert(pm, pc);
  }
  return out;
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  AlgElement r = a;
  for (const auto& [m, c] : b.terms) r.insert(m, c);
  return r;
}

AlgElement operator-(const AlgElement& a) {
  AlgElement r(a.mode, a.vars);
  for (const auto& [m, c] : a.terms) r.terms.emplace(m, -c);
  return r;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) { return a + (-b); }

AlgElement mul(const AlgElement& a, const AlgElement& b) {
  AlgElement r(a.mode, a.vars);
  for (const auto& [ma, ca] : a.terms) {
    auto wa = ma.word(a.mode);
    for (const auto& [mb, cb] : b.terms) {
      GenWord w;
      w.push_back(WordItem::of(ca * move_left(cb, wa, wa.size(), a.vars)));
      for (Gen g : wa) w.push_back(WordItem::of(g));
      for (Gen g : mb.word(b.mode)) w.push_back(WordItem::of(g));
      AlgElement part = normalize(w, a.mode, a.vars);
      for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
    }
  }
  return r;
}

AlgElement scale(const AlgElement& a, const Scalar& c) {
  AlgElement r(a.mode, a.vars);
  if (c.is_const_zero()) return r;
  for (const auto& [m, cc] : a.terms) r.terms.emplace(m, c * cc);
  return r;
}

AlgElement unit(Mode mode, VarNames vars) {
  AlgElement r(mode, std::move(vars));
  r.terms.emplace(Mono{}, Scalar(1));
  return r;
}

AlgElement gen_elem(Gen g, Mode mode, VarNames vars) {
  AlgElement r(mode, std::move(vars));
  Mono m;
  switch (g) {
    case Gen::Alpha: m.a = 1; break;
    case Gen::Beta: m.b = 1; break;
    case Gen::Gamma: m.g = 1; break;
    case Gen::Delta: m.d = 1; break;
  }
  r.terms.emplace(m, Scalar(1));
  return r;
}

AlgElement mono_elem(const Mono& m, Mode mode, VarNames vars) {
  AlgElement r(mode, std::move(vars));
  if (!m.admissible(mode)) throw DomainError("monomial not in the basis of this mode");
  r.terms.emplace(m, Scalar(1));
  return r;
}

AlgElement embed_l(const Scalar& f, Mode mode, VarNames vars) {
  AlgElement r(mode, std::move(vars));
  r.terms.emplace(Mono{}, f);
  return r;
}

AlgElement embed_r(const Scalar& f, Mode mode, VarNames vars) { return embed_l(f, mode, vars); }

AlgElement star(const AlgElement& x) {
  if (x.mode != Mode::SL2) throw DomainError("star needs SL2 mode");
  AlgElement r(x.mode, x.vars);
  const Scalar q = Scalar::q();
  for (const auto& [m, c] : x.terms) {
    GenWord w;
    auto letters = m.word(x.mode);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      switch (*it) {
        case Gen::Alpha: w.push_back(WordItem::of(Gen::Delta)); break;
        case Gen::Beta:
          w.push_back(WordItem::of(-q));
          w.push_back(WordItem::of(Gen::Gamma));
          break;
        case Gen::Gamma:
          w.push_back(WordItem::of(-qpow(-1)));
          w.push_back(WordItem::of(Gen::Beta));
          break;
        case Gen::Delta: w.push_back(WordItem::of(Gen::Alpha)); break;
      }
    }
    w.push_back(WordItem::of(bar(c)));
    AlgElement part = normalize(w, x.mode, x.vars);
    for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
  }
  return r;
}

AlgElement antipode(const AlgElement& x) {
  if (x.mode != Mode::SL2) throw DomainError("antipode needs SL2 mode");
  AlgElement r(x.mode, x.vars);
  for (const auto& [m, c] : x.terms) {
    GenWord w;
    auto letters = m.word(x.mode);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      switch (*it) {
        case Gen::Alpha:
          w.push_back(WordItem::of(aux_F(x.vars.l) / aux_F(x.vars.r)));
          w.push_back(WordItem::of(Gen::Delta));
          break;
        case Gen::Beta:
          w.push_back(WordItem::of(-qpow(-1) / aux_F(x.vars.r)));
          w.push_back(WordItem::of(Gen::Beta));
          break;
        case Gen::Gamma:
          w.push_back(WordItem::of(-Scalar::q() * aux_F(x.vars.l)));
          w.push_back(WordItem::of(Gen::Gamma));
          break;
        case Gen::Delta: w.push_back(WordItem::of(Gen::Alpha)); break;
      }
    }
    w.push_back(WordItem::of(rename(c, {{x.vars.l, x.vars.r}, {x.vars.r, x.vars.l}})));
    AlgElement part = normalize(w, x.mode, x.vars);
    for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
  }
  return r;
}

DiffOp counit(const AlgElement& x) {
  DiffOp out(x.vars.l);
  for (const auto& [m, c] : x.terms) {
    if (m.b != 0 || m.g != 0) continue;  // eps(beta) = eps(gamma) = 0
    int shift_amt = m.d - m.a;
    Scalar f = subst(c, {{x.vars.l, Scalar::var(x.vars.l)}, {x.vars.r, Scalar::var(x.vars.l)}});
    out += DiffOp::term(f, shift_amt, x.vars.l);
  }
  return out;
}

AlgElement phi_auto(const AlgElement& x) {
  AlgElement r(x.mode, x.vars);
  Scalar lrep = qpow(-2) / Scalar::var(x.vars.r);
  Scalar rrep = qpow(-2) / Scalar::var(x.vars.l);
  for (const auto& [m, c] : x.terms) {
    GenWord w;
    w.push_back(WordItem::of(subst(c, {{x.vars.l, lrep}, {x.vars.r, rrep}})));
    for (Gen g : m.word(x.mode)) {
      Gen img = g == Gen::Alpha ? Gen::Delta : (g == Gen::Delta ? Gen::Alpha : g);
      w.push_back(WordItem::of(img));
    }
    AlgElement part = normalize(w, x.mode, x.vars);
    for (const auto& [pm, pc] : part.terms) r.insert(pm, pc);
  }
  return r;
}

bool alg_is_zero(const AlgElement& x, int trials, uint64_t seed) {
  uint64_t i = 0;
  for (const auto& [m, c] : x.terms)
    if (!is_zero(c, trials, splitmix64(seed + ++i))) return false;
  return true;
}

bool alg_equal(const AlgElement& a, const AlgElement& b, int trials, uint64_t seed) {
  return alg_is_zero(a - b, trials, seed);
}

std::string to_string(const AlgElement& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (!m.is_one()) os << "*" << m.str();
  }
  return os.str();
}

AlgElement det_c(int which, Mode mode, VarNames v) {
  GenWord w;
  auto F = [&](const std::string& var, long s) { return aux_F(var, s); };
  switch (which) {
    case 0:  // F(l)/F(r) da - q^{-1}/F(r) bg
      w = {WordItem::of(F(v.l, 0) / F(v.r, 0)), WordItem::of(Gen::Delta),
           WordItem::of(Gen::Alpha)};
      {
        AlgElement first = normalize(w, mode, v);
        GenWord w2 = {WordItem::of(-qpow(-1) / F(v.r, 0)), WordItem::of(Gen::Beta),
                      WordItem::of(Gen::Gamma)};
        return normalize(first + normalize(w2, mode, v));
      }
    case 1: {  // ad - q F(l) gb
      AlgElement first = normalize({WordItem::of(Gen::Alpha), WordItem::of(Gen::Delta)}, mode, v);
      GenWord w2 = {WordItem::of(-Scalar::q() * F(v.l, 0)), WordItem::of(Gen::Gamma),
                    WordItem::of(Gen::Beta)};
      return normalize(first + normalize(w2, mode, v));
    }
    case 2: {  // F(l-1)/F(r-1) ad - q F(l-1) bg
      GenWord w1 = {WordItem::of(F(v.l, -1) / F(v.r, -1)), WordItem::of(Gen::Alpha),
                    WordItem::of(Gen::Delta)};
      GenWord w2 = {WordItem::of(-Scalar::q() * F(v.l, -1)), WordItem::of(Gen::Beta),
                    WordItem::of(Gen::Gamma)};
      return normalize(normalize(w1, mode, v) + normalize(w2, mode, v));
    }
    default: {  // da - q^{-1}/F(r-1) gb
      AlgElement first = normalize({WordItem::of(Gen::Delta), WordItem::of(Gen::Alpha)}, mode, v);
      GenWord w2 = {WordItem::of(-qpow(-1) / F(v.r, -1)), WordItem::of(Gen::Gamma),
                    WordItem::of(Gen::Beta)};
      return normalize(first + normalize(w2, mode, v));
    }
  }
}

AlgElement xi_elem(int which, VarNames v) {
  Scalar ul = Scalar::var(v.l), ur = Scalar::var(v.r);
  if (which == 0) {
    Scalar c0 = Scalar::q() * ul / ur + qpow(-1) * ur / ul;
    Scalar cgb = -(qpow(-2) / (ul * ur)) * (Scalar(1) - qpow(4) * ul.pow(2)) *
                 (Scalar(1) - ur.pow(2));
    GenWord w = {WordItem::of(cgb), WordItem::of(Gen::Gamma), WordItem::of(Gen::Beta)};
    return embed_l(c0, Mode::SL2, v) + normalize(w, Mode::SL2, v);
  }
  Scalar c0 = qpow(-1) * ul / ur + Scalar::q() * ur / ul;
  Scalar cbg = -(qpow(-2) / (ul * ur)) * (Scalar(1) - qpow(2) * ul.pow(2)) *
               (Scalar(1) - qpow(2) * ur.pow(2));
  GenWord w = {WordItem::of(cbg), WordItem::of(Gen::Beta), WordItem::of(Gen::Gamma)};
  return embed_l(c0, Mode::SL2, v) + normalize(w, Mode::SL2, v);
}

XiPoly& XiPoly::operator+=(const XiPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Scalar());
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  return *this;
}

XiPoly operator*(const XiPoly& a, const XiPoly& b) {
  if (a.c.empty() || b.c.empty()) return XiPoly{};
  XiPoly r(std::vector<Scalar>(a.c.size() + b.c.size() - 1, Scalar()));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

XiPoly XiPoly::scaled(const Scalar& s) const {
  XiPoly r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

namespace {
const AlgElement& xi_pow_cached(size_t i, const VarNames& v) {
  static std::map<std::pair<std::string, size_t>, AlgElement> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(v.l + "|" + v.r, i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  AlgElement r = i == 0 ? unit(Mode::SL2, v) : xi_elem(0, v);
  for (size_t k = 1; k < i; ++k) r = mul(r, xi_elem(0, v));
  return cache.emplace(key, std::move(r)).first->second;
}
}  // namespace

AlgElement XiPoly::to_alg(VarNames v) const {
  AlgElement r(Mode::SL2, v);
  for (size_t i = 0; i < c.size(); ++i) {
    AlgElement part = scale(xi_pow_cached(i, v), c[i]);
    for (const auto& [m, cc] : part.terms) r.insert(m, cc);
  }
  return r;
}

XiPoly ccr_form(CcrKind kind, int k, VarNames v) {
  // h_k(Xi/2, a; q^2) with the stated prefactors
  Scalar ul = Scalar::var(v.l), ur = Scalar::var(v.r);
  Scalar q2 = qpow(2);
  Scalar a, pref;
  auto poch = [&](const Scalar& x, long n) { return qs::qpoch<Scalar>(x, q2, n); };
  switch (kind) {
    case CcrKind::AlphaDelta:
      a = qpow(-1) / (ul * ur);
      pref = Scalar(1) / (poch(qpow(-2) / ul.pow(2), k) * poch(Scalar(1) / ur.pow(2), k));
      break;
    case CcrKind::DeltaAlpha:
      a = qpow(3) * ul * ur;
      pref = Scalar(1) / (poch(qpow(4) * ul.pow(2), k) * poch(qpow(2) * ur.pow(2), k));
      break;
    case CcrKind::BetaGamma:
      a = Scalar::q() * ur / ul;
      pref = (-qpow(-1)).pow(k) /
             (poch(qpow(-2) / ul.pow(2), k) * poch(qpow(2) * ur.pow(2), k));
      break;
    default:  // GammaBeta
      a = Scalar::q() * ul / ur;
      pref = (-Scalar::q()).pow(k) /
             (poch(qpow(4) * ul.pow(2), k) * poch(Scalar(1) / ur.pow(2), k));
      break;
  }
  auto coeffs = qs::awmono_xipoly<Scalar>(k, a, q2);
  XiPoly r(std::move(coeffs));
  return r.scaled(pref);
}

AlgElement xi_power_elem(int j, VarNames v) {
  // invert the triangular system gamma^l beta^l = sum_i ccr[l][i] Xi^i
  std::vector<XiPoly> ccr;
  for (int l = 0; l <= j; ++l) ccr.push_back(ccr_form(CcrKind::GammaBeta, l, v));
  // E[j][l]: Xi^j = sum_l E[j][l] gamma^l beta^l
  AlgElement out(Mode::SL2, v);
  std::vector<Scalar> e(static_cast<size_t>(j) + 1, Scalar());
  // solve by back-substitution on coefficients of Xi^i
  // Xi^j - sum_{l} e_l * ccr[l] = 0
  for (int l = j; l >= 0; --l) {
    Scalar acc = l == j ? Scalar(1) : Scalar();
    for (int t = l + 1; t <= j; ++t) acc -= e[static_cast<size_t>(t)] * ccr[t].coeff(l);
    e[static_cast<size_t>(l)] = acc / ccr[l].coeff(l);
  }
  for (int l = 0; l <= j; ++l) {
    Mono m;
    m.g = l;
    m.b = l;
    out.insert(m, e[static_cast<size_t>(l)]);
  }
  return out;
}

RMatrix RMatrix::dynamical(const std::string& var) {
  Scalar u2 = Scalar::var(var).pow(2);
  Scalar den = qpow(2) * u2 - Scalar(1);
  RMatrix r;
  r.e[0][0] = Scalar::q();
  r.e[1][1] = Scalar(1);
  r.e[1][2] = (qpow(-1) - Scalar::q()) / den;
  r.e[2][1] = (qpow(-1) - Scalar::q()) / (qpow(-2) / u2 - Scalar(1));
  r.e[2][2] = (qpow(2) * u2 - qpow(2)) * (qpow(2) * u2 - qpow(-2)) / (den * den);
  r.e[3][3] = Scalar::q();
  return r;
}

RMatrix RMatrix::rational(const std::string& var) {
  Scalar x = Scalar::var(var);
  RMatrix r;
  r.e[0][0] = Scalar(1);
  r.e[1][1] = Scalar(1);
  r.e[1][2] = -(Scalar(1) / (x + Scalar(1)));
  r.e[2][1] = Scalar(1) / (x + Scalar(1));
  r.e[2][2] = x * (x + Scalar(2)) / ((x + Scalar(1)) * (x + Scalar(1)));
  r.e[3][3] = Scalar(1);
  return r;
}

}  // namespace dynsu2
