#pragma once

// internal helpers shared by the verification suites

#include <functional>

#include "dynsu2/coalgebra.hpp"
#include "dynsu2/qseries.hpp"
#include "dynsu2/report.hpp"

namespace dynsu2 {
namespace detail {

using VarMap = std::map<std::string, PRat>;

/// Samples (q, vars) `points` times and requires diff == 0 exactly at each;
/// resamples on PoleAtPoint within the retry budget.  A mismatch throws with
/// the failing sample point serialized, so fail records carry a reproducing
/// (seed, point, indices) triple.
inline bool pointwise(const std::vector<std::string>& vars, int points, uint64_t seed,
                      const std::function<PRat(const PRat&, const VarMap&)>& diff) {
  Sampler sampler(seed);
  for (int t = 0; t < points; ++t) {
    int tries = 0;
    for (;;) {
      PRat q(sampler.sample_q());
      VarMap m;
      for (const auto& v : vars) m.emplace(v, PRat(sampler.sample_u()));
      try {
        if (!(diff(q, m) == PRat(0))) {
          std::string pt = "nonzero at q=" + q.v.get_str();
          for (const auto& [name, val] : m) pt += "," + name + "=" + val.v.get_str();
          throw std::runtime_error(pt);
        }
        break;
      } catch (const PoleAtPoint&) {
        if (++tries > kRetryBudget) throw SamplingExhausted("pointwise: retry budget exhausted");
      }
    }
  }
  return true;
}

inline std::vector<Mono> monos_up_to(Mode mode, int maxdeg) {
  std::vector<Mono> out;
  for (int t = 0; t <= maxdeg; ++t)
    for (int a = 0; a <= t; ++a)
      for (int b = 0; a + b <= t; ++b)
        for (int g = 0; a + b + g <= t; ++g) {
          Mono m;
          m.a = a;
          m.b = b;
          m.g = g;
          m.d = t - a - b - g;
          if (m.degree() == t && m.admissible(mode) &&
              std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
        }
  return out;
}

inline Gen random_gen(Sampler& s) { return static_cast<Gen>(s.next_u64() % 4); }

inline Scalar random_coeff(Sampler& s, const VarNames& v) {
  switch (s.next_u64() % 5) {
    case 0: {
      Rat r(1 + static_cast<long>(s.next_u64() % 7), 1 + static_cast<long>(s.next_u64() % 7));
      r.canonicalize();
      return Scalar(r);
    }
    case 1: return aux_F(v.l, static_cast<long>(s.next_u64() % 3) - 1);
    case 2: return aux_F(v.r, static_cast<long>(s.next_u64() % 3) - 1);
    case 3: return qexp(static_cast<long>(s.next_u64() % 5) - 2) *
                   Scalar::var(v.l).pow(static_cast<long>(s.next_u64() % 3) - 1);
    default:
      return Scalar(1) +
             Scalar::var(v.r).pow(static_cast<long>(s.next_u64() % 2) + 1) * qpow(2);
  }
}

inline GenWord random_word(Sampler& s, int len, bool with_coeffs, const VarNames& v = {}) {
  GenWord w;
  for (int i = 0; i < len; ++i) {
    if (with_coeffs && s.next_u64() % 4 == 0) w.push_back(WordItem::of(random_coeff(s, v)));
    w.push_back(WordItem::of(random_gen(s)));
  }
  return w;
}

inline AlgElement random_elem(Sampler& s, Mode mode, int maxdeg, int nterms) {
  AlgElement out(mode, VarNames{});
  for (int i = 0; i < nterms; ++i) {
    GenWord w = random_word(s, 1 + static_cast<int>(s.next_u64() % static_cast<uint64_t>(maxdeg)),
                            false);
    w.insert(w.begin(), WordItem::of(random_coeff(s, VarNames{})));
    AlgElement part = normalize(w, mode);
    for (const auto& [m, c] : part.terms) out.insert(m, c);
  }
  return out;
}

inline std::string idx(std::initializer_list<long> xs) {
  std::string s;
  for (long x : xs) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s;
}

}  // namespace detail
}  // namespace dynsu2
