#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dynsu2/diffop.hpp"
#include "dynsu2/scalar.hpp"

namespace dynsu2 {

enum class Mode { M2, SL2 };
enum class Gen : int { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3 };

struct IncompatibleGrading : std::runtime_error {
  explicit IncompatibleGrading(const std::string& w) : std::runtime_error(w) {}
};

// Shift weights: f(lambda) x = x f(lambda + wl), f(mu) x = x f(mu + wr).
int weight_l(Gen g);
int weight_r(Gen g);
const char* gen_name(Gen g);

/// Variable names for the two moment-map coordinates of an algebra copy.
/// Tensor-slot copies use rho in place of lambda or mu.
struct VarNames {
  std::string l = "lambda";
  std::string r = "mu";
  bool operator==(const VarNames&) const = default;
};

/// Basis monomial.  SL2 basis words are gamma^g beta^b alpha^a (d == 0) and
/// delta^d gamma^g beta^b (d >= 1, a == 0); M2 words are alpha^a beta^b
/// gamma^g delta^d.
struct Mono {
  int a = 0, b = 0, g = 0, d = 0;
  auto operator<=>(const Mono&) const = default;
  int degree() const { return a + b + g + d; }
  std::pair<int, int> bidegree() const;
  bool admissible(Mode mode) const;
  std::vector<Gen> word(Mode mode) const;
  bool is_one() const { return a == 0 && b == 0 && g == 0 && d == 0; }
  std::string str() const;
};

/// Element of F_R(M(2)) or F_R(SL(2)) in Lemma-basis normal form, with
/// coefficients written at the far left of each monomial.
struct AlgElement {
  Mode mode = Mode::SL2;
  VarNames vars;
  std::map<Mono, Scalar> terms;

  AlgElement() = default;
  AlgElement(Mode m, VarNames v = {}) : mode(m), vars(std::move(v)) {}
  bool is_zero_elem() const { return terms.empty(); }
  void insert(const Mono& m, const Scalar& c);
};

/// Free input word: generators interleaved with coefficient factors.
struct WordItem {
  bool is_gen;
  Gen g;
  Scalar c;
  static WordItem of(Gen gen) { return {true, gen, Scalar()}; }
  static WordItem of(const Scalar& s) { return {false, Gen::Alpha, s}; }
};
using GenWord = std::vector<WordItem>;

enum class RewriteStrategy { Leftmost, Rightmost };

AlgElement normalize(const GenWord& w, Mode mode, VarNames vars = {},
                     RewriteStrategy strategy = RewriteStrategy::Leftmost);
AlgElement normalize(const AlgElement& x);  // re-run the rewriter (idempotence checks)

AlgElement operator+(const AlgElement&, const AlgElement&);
AlgElement operator-(const AlgElement&, const AlgElement&);
AlgElement operator-(const AlgElement&);
AlgElement mul(const AlgElement&, const AlgElement&);
AlgElement scale(const AlgElement&, const Scalar& c);  // left multiplication by c
AlgElement unit(Mode mode, VarNames vars = {});
AlgElement gen_elem(Gen g, Mode mode, VarNames vars = {});
AlgElement mono_elem(const Mono& m, Mode mode, VarNames vars = {});
/// Moment maps: f a one-variable Scalar in vars.l (resp. vars.r).
AlgElement embed_l(const Scalar& f, Mode mode, VarNames vars = {});
AlgElement embed_r(const Scalar& f, Mode mode, VarNames vars = {});

AlgElement star(const AlgElement&);      // SL2 *-structure
AlgElement antipode(const AlgElement&);  // SL2 antipode
DiffOp counit(const AlgElement&);
AlgElement phi_auto(const AlgElement&);  // Phi: alpha<->delta, f(l)->f(-2-mu)

bool alg_is_zero(const AlgElement&, int trials, uint64_t seed);
bool alg_equal(const AlgElement&, const AlgElement&, int trials, uint64_t seed);
std::string to_string(const AlgElement&);

// Auxiliary coefficient functions of the defining relations.
Scalar aux_F(const std::string& var, long shift_by = 0);
Scalar aux_G(const std::string& var, long shift_by = 0);
Scalar aux_H(const VarNames& vars);
Scalar aux_I(const VarNames& vars);

/// The dynamical determinant c (four equivalent expressions, 0..3).
AlgElement det_c(int which, Mode mode, VarNames vars = {});
/// The central element Xi (two equivalent expressions, 0..1); SL2 only.
AlgElement xi_elem(int which = 0, VarNames vars = {});

/// Polynomial in the placeholder Xi with Scalar coefficients.
struct XiPoly {
  std::vector<Scalar> c;  // c[i] multiplies Xi^i
  XiPoly() = default;
  explicit XiPoly(std::vector<Scalar> cc) : c(std::move(cc)) {}
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Scalar coeff(size_t i) const { return i < c.size() ? c[i] : Scalar(); }
  XiPoly& operator+=(const XiPoly& o);
  friend XiPoly operator*(const XiPoly&, const XiPoly&);
  XiPoly scaled(const Scalar& s) const;
  /// Substitute the xi() element for Xi and expand in the algebra.
  AlgElement to_alg(VarNames vars = {}) const;
};

enum class CcrKind { AlphaDelta, DeltaAlpha, BetaGamma, GammaBeta };
/// Closed form of alpha^k delta^k etc. as a polynomial in Xi (Lemma on the
/// commutative subalgebra).
XiPoly ccr_form(CcrKind kind, int k, VarNames vars = {});
/// Xi^j expanded over the gamma^l beta^l basis of the (0,0) component.
AlgElement xi_power_elem(int j, VarNames vars = {});

/// 4x4 dynamical R-matrix; entries indexed [out][in] over the ordered basis
/// e+e+, e+e-, e-e+, e-e-.  Entries are Scalars in a single variable.
struct RMatrix {
  std::array<std::array<Scalar, 4>, 4> e;
  /// Eq-(r) matrix with entries in u_var = q^var.
  static RMatrix dynamical(const std::string& var = "lambda");
  /// q->1 rational degeneration; entries rational in the plain variable
  /// (the Var node is read additively by the supplied shifter).
  static RMatrix rational(const std::string& var = "lambda");
};

}  // namespace dynsu2
