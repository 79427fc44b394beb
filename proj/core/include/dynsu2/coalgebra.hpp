#pragma once

#include <tuple>

#include "dynsu2/algebra.hpp"

namespace dynsu2 {

// Tensor flavors.  All elements store bare basis monomials per slot and one
// joint coefficient over the boundary variable lines; each line's content is
// positioned at the left of the first slot that carries it (lambda, rho at
// slot 1; mu at slot 2, and correspondingly for longer products).

/// A (x)~ A with coefficient variables (lambda, rho, mu).
struct TensorElement {
  Mode mode = Mode::SL2;
  std::map<std::pair<Mono, Mono>, Scalar> terms;
  void insert(const Mono& m1, const Mono& m2, const Scalar& c);
};

/// A (x)~ A (x)~ A with coefficient variables (lambda, rho1, rho2, mu).
struct Tensor3Element {
  Mode mode = Mode::SL2;
  std::map<std::tuple<Mono, Mono, Mono>, Scalar> terms;
  void insert(const Mono& m1, const Mono& m2, const Mono& m3, const Scalar& c);
};

/// A (x)^ A with coefficient variables (lambda, mu).
struct HatTensor {
  Mode mode = Mode::SL2;
  std::map<std::pair<Mono, Mono>, Scalar> terms;
  void insert(const Mono& m1, const Mono& m2, const Scalar& c);
};

/// (A (x)^ A) (x)~ (A (x)^ A), variables (lambda, rho, mu).
struct TildeOfHat {
  Mode mode = Mode::SL2;
  std::map<std::tuple<Mono, Mono, Mono, Mono>, Scalar> terms;
  void insert(const Mono& a, const Mono& b, const Mono& c, const Mono& d, const Scalar& s);
};

/// (A (x)~ A) (x)^ (A (x)~ A), variables (lambda, rho1, rho2, mu).
struct HatOfTilde {
  Mode mode = Mode::SL2;
  std::map<std::tuple<Mono, Mono, Mono, Mono>, Scalar> terms;
  void insert(const Mono& a, const Mono& b, const Mono& c, const Mono& d, const Scalar& s);
};

/// One term of Delta(monomial) with per-slot coefficients: lc over
/// (lambda, rho), rc over (rho, mu).  Bridge-free by construction.
struct SplitTerm {
  Scalar lc;
  Mono lm;
  Scalar rc;
  Mono rm;
};

inline const VarNames kLeftSlot{"lambda", "rho"};
inline const VarNames kRightSlot{"rho", "mu"};

std::vector<SplitTerm> coproduct_split(const Mono& m, Mode mode);
TensorElement coproduct(const AlgElement& x);
/// x (x)~ y for x, y in (lambda, mu) coordinates.
TensorElement tensor_of(const AlgElement& x, const AlgElement& y);
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

Tensor3Element coassoc_left(const AlgElement& x);   // (Delta (x) id) Delta
Tensor3Element coassoc_right(const AlgElement& x);  // (id (x) Delta) Delta

/// Counit legs of the bialgebroid axioms under the canonical identifications.
AlgElement counit_collapse_left(const TensorElement& t, VarNames out = {});
AlgElement counit_collapse_right(const TensorElement& t, VarNames out = {});

/// m(id (x) S)Delta and m(S (x) id)Delta on a basis monomial; with a nonzero
/// probe g(rho) the two representative placements are compared (the guarded
/// route of the antipode axiom).
AlgElement conv_id_S(const Mono& m, Mode mode);
AlgElement conv_S_id(const Mono& m, Mode mode);
AlgElement conv_id_S_probe(const Mono& m, Mode mode, const Scalar& g_rho, bool attach_left);
AlgElement conv_S_id_probe(const Mono& m, Mode mode, const Scalar& g_rho, bool attach_left);

TensorElement sigma_SS_delta(const Mono& m, Mode mode);   // sigma (S x S) Delta
TensorElement star_star_delta(const Mono& m, Mode mode);  // (* x *) Delta

/// Multiplication on the tilde tensor product along one representative
/// (rho attached left or right); only meaningful where the convolution
/// context guarantees representative independence, which mul_tilde_guarded
/// checks explicitly.
AlgElement mul_tilde(const TensorElement& t, bool rho_left, VarNames out = {});
AlgElement mul_tilde_guarded(const TensorElement& t, int trials, uint64_t seed,
                             VarNames out = {});

// hat tensor machinery
HatTensor hat(const AlgElement& x, const AlgElement& y);
AlgElement mul_out(const HatTensor& h, VarNames out = {});
DiffOp hat_counit(const HatTensor& h);
HatOfTilde hat_of_tensors(const TensorElement& x, const TensorElement& y);
TildeOfHat sigma23(const HatOfTilde& x);
TildeOfHat hat_coproduct(const HatTensor& h);
/// (m (x) m) applied pairwise to a TildeOfHat; lands in A (x)~ A.
TensorElement mul_out_pairs(const TildeOfHat& t);
/// Counit legs of the hat coproduct.
HatTensor hat_counit_collapse_left(const TildeOfHat& t);
HatTensor hat_counit_collapse_right(const TildeOfHat& t);

bool tensor_is_zero(const TensorElement&, int trials, uint64_t seed);
bool tensor_equal(const TensorElement&, const TensorElement&, int trials, uint64_t seed);
bool tensor3_equal(const Tensor3Element&, const Tensor3Element&, int trials, uint64_t seed);
bool hat_equal(const HatTensor&, const HatTensor&, int trials, uint64_t seed);

}  // namespace dynsu2
