#pragma once

#include "dynsu2/corep.hpp"

namespace dynsu2 {

struct NotDegreeZero : std::runtime_error {
  explicit NotDegreeZero(const std::string& w) : std::runtime_error(w) {}
};

/// Extract the bidegree-(0,0) component of x (spanned by gamma^k beta^k) and
/// convert it to a polynomial in Xi via the triangular closed forms.  In
/// strict mode a nonzero component outside (0,0) raises NotDegreeZero.
XiPoly to_xi_poly(const AlgElement& x, bool strict = false);

/// Moment table m_0..m_d with m_k = h(Xi^k), solved from h(p_k(Xi/2)) = 0
/// against the two-parameter Askey-Wilson family; Scalars in (lambda, mu).
std::vector<Scalar> moments(int d);

/// The Haar functional: project to bidegree (0,0), expand in Xi, contract
/// against the moment table.
Scalar haar(const AlgElement& x, bool strict = false);

/// The two-parameter Askey-Wilson polynomial p_k(Xi/2) whose vanishing under
/// h defines the moments.
XiPoly haar_pk(int k);

}  // namespace dynsu2
