#include "dynsu2/haar.hpp"

#include <mutex>

namespace dynsu2 {

XiPoly to_xi_poly(const AlgElement& x, bool strict) {
  XiPoly out;
  bool any = false;
  for (const auto& [m, c] : x.terms) {
    if (m.bidegree() == std::pair<int, int>{0, 0}) {
      // (0,0) basis monomials are gamma^k beta^k
      out += ccr_form(CcrKind::GammaBeta, m.g, x.vars).scaled(c);
      any = true;
    } else if (strict) {
      throw NotDegreeZero("element has support outside bidegree (0,0)");
    }
  }
  if (!any) out = XiPoly{{Scalar()}};
  return out;
}

XiPoly haar_pk(int k) {
  // the spherical element t^{2k}_{kk} as a degree-k polynomial in Xi; the
  // moment table is the unique solution of h(t^{2k}_{kk}) = delta_{k0}
  return matelem_block(2 * k, k, k);
}

std::vector<Scalar> moments(int d) {
  static std::vector<Scalar> table{Scalar(1)};  // m_0 = 1
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  for (int k = static_cast<int>(table.size()); k <= d; ++k) {
    XiPoly pk = haar_pk(k);
    Scalar acc;
    for (int i = 0; i < k; ++i) acc += pk.coeff(static_cast<size_t>(i)) * table[static_cast<size_t>(i)];
    table.push_back(-acc / pk.coeff(static_cast<size_t>(k)));
  }
  return std::vector<Scalar>(table.begin(), table.begin() + d + 1);
}

Scalar haar(const AlgElement& x, bool strict) {
  XiPoly p = to_xi_poly(x, strict);
  auto m = moments(static_cast<int>(std::max<long>(p.degree(), 0)));
  Scalar out;
  for (size_t i = 0; i < p.c.size(); ++i) out += p.c[i] * m[i];
  return out;
}

}  // namespace dynsu2
