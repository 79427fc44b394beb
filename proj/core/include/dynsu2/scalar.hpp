#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynsu2 {

using Rat = mpq_class;

struct PoleAtPoint : std::runtime_error {
  explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};
struct SamplingExhausted : std::runtime_error {
  explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// x^e over exact rationals; 0^negative is a pole.
Rat rat_pow(const Rat& x, long e);

/// An exact expression in q and named exponential indeterminates u_x = q^x.
/// Immutable DAG; copying is a shared_ptr copy.  Arithmetic folds constants
/// and drops additive/multiplicative units to keep trees small, nothing more.
class Scalar {
 public:
  enum class Kind : uint8_t { Const, Q, Var, Add, Sub, Mul, Div, Neg, Pow };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    Rat cval;          // Const
    std::string name;  // Var
    long expo = 0;     // Pow
    NodePtr a, b;
  };

  Scalar();  // zero
  Scalar(int n);
  Scalar(long n);
  Scalar(const Rat& r);
  static Scalar q();
  static Scalar var(const std::string& name);
  static Scalar from_node(NodePtr n) { return Scalar(std::move(n)); }

  const NodePtr& node() const { return node_; }
  bool is_const() const { return node_->kind == Kind::Const; }
  bool is_const_zero() const { return is_const() && node_->cval == 0; }
  bool is_const_one() const { return is_const() && node_->cval == 1; }
  const Rat& const_value() const { return node_->cval; }

  Scalar pow(long e) const;
  Scalar inv() const;

  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  friend Scalar operator/(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

 private:
  explicit Scalar(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

/// q^k (k may be negative).
Scalar qpow(long k);
/// q^{qk} * prod u_x^{e_x}.  The workhorse for paper expressions like
/// q^{2(lambda+1)} = qexp(2, {{"lambda", 2}}).
Scalar qexp(long qk, std::initializer_list<std::pair<const char*, long>> vars = {});

/// Exact point: rational q with 0<q<1 (q != 0, +-1) and a nonzero rational
/// value per exponential variable; carries the seed it was drawn from.
struct Point {
  Rat q;
  std::map<std::string, Rat> vars;
  uint64_t seed = 0;
};

/// Exact evaluation; throws PoleAtPoint when a denominator vanishes.
Rat eval(const Scalar& s, const Point& p);

/// Names of all exponential variables occurring in s.
std::set<std::string> variables(const Scalar& s);

/// T_a in the variable x: replaces u_x by q^a * u_x, nothing else.
Scalar shift(const Scalar& s, const std::string& x, long a);
/// Simultaneous substitution of whole expressions for variables.
Scalar subst(const Scalar& s, const std::map<std::string, Scalar>& repl);
/// Variable renaming (simultaneous).
Scalar rename(const Scalar& s, const std::map<std::string, std::string>& repl);
/// Conjugation for the chosen real form (q, lambda, mu, omega real; rational
/// constants): the identity map, kept explicit so *-axioms read uniformly.
Scalar bar(const Scalar& s);

uint64_t splitmix64(uint64_t x);

/// Draws sample points: q = a/b with 1 <= a < b <= 97, u_x uniform over
/// nonzero rationals with numerator/denominator magnitude <= 97.
class Sampler {
 public:
  explicit Sampler(uint64_t seed);
  Rat sample_q();
  Rat sample_u();
  Point point_for(const std::set<std::string>& vars);
  uint64_t next_u64();

 private:
  uint64_t state_;
};

inline constexpr int kDefaultTrials = 20;
inline constexpr int kRetryBudget = 50;

/// Randomized exact zero test: true iff s evaluates to exactly 0 at `trials`
/// independently sampled pole-free points.  Resamples on PoleAtPoint up to
/// kRetryBudget times per point; SamplingExhausted past that.
bool is_zero(const Scalar& s, int trials, uint64_t seed);
bool equal(const Scalar& a, const Scalar& b, int trials, uint64_t seed);

std::string to_string(const Scalar& s);
std::string to_string(const Rat& r);

}  // namespace dynsu2
