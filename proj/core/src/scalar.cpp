#include "dynsu2/scalar.hpp"

#include <sstream>
#include <unordered_map>

namespace dynsu2 {

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (x == 0) {
    if (e < 0) throw PoleAtPoint("0 raised to negative power");
    return Rat(0);
  }
  Rat base = e > 0 ? x : Rat(1) / x;
  unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

namespace {

Scalar::NodePtr make_const(Rat v) {
  auto n = std::make_shared<Scalar::Node>();
  n->kind = Scalar::Kind::Const;
  n->cval = std::move(v);
  return n;
}

const Scalar::NodePtr& zero_node() {
  static const Scalar::NodePtr n = make_const(Rat(0));
  return n;
}
const Scalar::NodePtr& one_node() {
  static const Scalar::NodePtr n = make_const(Rat(1));
  return n;
}

Scalar::NodePtr make_binary(Scalar::Kind k, Scalar::NodePtr a, Scalar::NodePtr b) {
  auto n = std::make_shared<Scalar::Node>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Scalar::Scalar() : node_(zero_node()) {}
Scalar::Scalar(int n) : node_(n == 0 ? zero_node() : (n == 1 ? one_node() : make_const(Rat(n)))) {}
Scalar::Scalar(long n) : node_(n == 0 ? zero_node() : (n == 1 ? one_node() : make_const(Rat(n)))) {}
Scalar::Scalar(const Rat& r) : node_(zero_node()) {
  Rat c = r;
  c.canonicalize();
  if (c != 0) node_ = make_const(std::move(c));
}

Scalar Scalar::q() {
  static const NodePtr n = [] {
    auto m = std::make_shared<Node>();
    m->kind = Kind::Q;
    return NodePtr(m);
  }();
  return Scalar(n);
}

Scalar Scalar::var(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = name;
  return Scalar(NodePtr(n));
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.is_const_zero()) return y;
  if (y.is_const_zero()) return x;
  if (x.is_const() && y.is_const()) return Scalar(Rat(x.const_value() + y.const_value()));
  return Scalar::from_node(make_binary(Scalar::Kind::Add, x.node(), y.node()));
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  if (y.is_const_zero()) return x;
  if (x.is_const() && y.is_const()) return Scalar(Rat(x.const_value() - y.const_value()));
  if (x.is_const_zero()) return -y;
  return Scalar::from_node(make_binary(Scalar::Kind::Sub, x.node(), y.node()));
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_const_zero() || y.is_const_zero()) return Scalar();
  if (x.is_const_one()) return y;
  if (y.is_const_one()) return x;
  if (x.is_const() && y.is_const()) return Scalar(Rat(x.const_value() * y.const_value()));
  return Scalar::from_node(make_binary(Scalar::Kind::Mul, x.node(), y.node()));
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_const_one()) return x;
  if (x.is_const_zero() && !y.is_const_zero()) return Scalar();
  if (x.is_const() && y.is_const()) {
    if (y.const_value() == 0) throw PoleAtPoint("division by constant zero");
    return Scalar(Rat(x.const_value() / y.const_value()));
  }
  return Scalar::from_node(make_binary(Scalar::Kind::Div, x.node(), y.node()));
}

Scalar operator-(const Scalar& x) {
  if (x.is_const()) return Scalar(Rat(-x.const_value()));
  auto n = std::make_shared<Scalar::Node>();
  n->kind = Scalar::Kind::Neg;
  n->a = x.node();
  return Scalar::from_node(std::move(n));
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  if (e == 1) return *this;
  if (is_const()) return Scalar(rat_pow(const_value(), e));
  if (node_->kind == Kind::Pow) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->a = node_->a;
    n->expo = node_->expo * e;
    return Scalar(NodePtr(n));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->a = node_;
  n->expo = e;
  return Scalar(NodePtr(n));
}

Scalar Scalar::inv() const { return Scalar(1) / *this; }

Scalar qpow(long k) { return Scalar::q().pow(k); }

Scalar qexp(long qk, std::initializer_list<std::pair<const char*, long>> vars) {
  Scalar r = qpow(qk);
  for (const auto& [name, e] : vars) r = r * Scalar::var(name).pow(e);
  return r;
}

namespace {

struct EvalCtx {
  const Point& p;
  std::unordered_map<const Scalar::Node*, Rat> memo;

  const Rat& run(const Scalar::NodePtr& n) {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Rat v;
    switch (n->kind) {
      case Scalar::Kind::Const: v = n->cval; break;
      case Scalar::Kind::Q: v = p.q; break;
      case Scalar::Kind::Var: {
        auto vt = p.vars.find(n->name);
        if (vt == p.vars.end()) throw DomainError("unassigned variable " + n->name);
        v = vt->second;
        break;
      }
      case Scalar::Kind::Add: v = run(n->a) + run(n->b); break;
      case Scalar::Kind::Sub: v = run(n->a) - run(n->b); break;
      case Scalar::Kind::Mul: v = run(n->a) * run(n->b); break;
      case Scalar::Kind::Div: {
        const Rat& den = run(n->b);
        if (den == 0) throw PoleAtPoint("denominator vanishes at sample point");
        v = run(n->a) / den;
        break;
      }
      case Scalar::Kind::Neg: v = -run(n->a); break;
      case Scalar::Kind::Pow: v = rat_pow(run(n->a), n->expo); break;
    }
    return memo.emplace(n.get(), std::move(v)).first->second;
  }
};

}  // namespace

Rat eval(const Scalar& s, const Point& p) {
  EvalCtx ctx{p, {}};
  return ctx.run(s.node());
}

namespace {

void collect_vars(const Scalar::NodePtr& n, std::set<std::string>& out,
                  std::set<const Scalar::Node*>& seen) {
  if (!n || !seen.insert(n.get()).second) return;
  if (n->kind == Scalar::Kind::Var) out.insert(n->name);
  collect_vars(n->a, out, seen);
  collect_vars(n->b, out, seen);
}

struct SubstCtx {
  const std::map<std::string, Scalar>& repl;
  std::unordered_map<const Scalar::Node*, Scalar::NodePtr> memo;

  Scalar::NodePtr run(const Scalar::NodePtr& n) {
    auto it = memo.find(n.get());
    if (it != memo.end()) return it->second;
    Scalar::NodePtr r;
    switch (n->kind) {
      case Scalar::Kind::Const:
      case Scalar::Kind::Q: r = n; break;
      case Scalar::Kind::Var: {
        auto vt = repl.find(n->name);
        r = vt == repl.end() ? n : vt->second.node();
        break;
      }
      case Scalar::Kind::Pow: {
        auto a = run(n->a);
        r = a == n->a ? n : Scalar::from_node(a).pow(n->expo).node();
        break;
      }
      case Scalar::Kind::Neg: {
        auto a = run(n->a);
        r = a == n->a ? n : (-Scalar::from_node(a)).node();
        break;
      }
      default: {
        auto a = run(n->a), b = run(n->b);
        if (a == n->a && b == n->b) {
          r = n;
        } else {
          Scalar sa = Scalar::from_node(a), sb = Scalar::from_node(b);
          switch (n->kind) {
            case Scalar::Kind::Add: r = (sa + sb).node(); break;
            case Scalar::Kind::Sub: r = (sa - sb).node(); break;
            case Scalar::Kind::Mul: r = (sa * sb).node(); break;
            default: r = (sa / sb).node(); break;
          }
        }
        break;
      }
    }
    return memo.emplace(n.get(), std::move(r)).first->second;
  }
};

}  // namespace

std::set<std::string> variables(const Scalar& s) {
  std::set<std::string> out;
  std::set<const Scalar::Node*> seen;
  collect_vars(s.node(), out, seen);
  return out;
}

Scalar subst(const Scalar& s, const std::map<std::string, Scalar>& repl) {
  if (repl.empty()) return s;
  SubstCtx ctx{repl, {}};
  return Scalar::from_node(ctx.run(s.node()));
}

Scalar shift(const Scalar& s, const std::string& x, long a) {
  if (a == 0) return s;
  return subst(s, {{x, qpow(a) * Scalar::var(x)}});
}

Scalar rename(const Scalar& s, const std::map<std::string, std::string>& repl) {
  std::map<std::string, Scalar> m;
  for (const auto& [from, to] : repl) m.emplace(from, Scalar::var(to));
  return subst(s, m);
}

Scalar bar(const Scalar& s) { return s; }

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Sampler::Sampler(uint64_t seed) : state_(seed ? seed : 0x6a09e667f3bcc908ULL) {}

uint64_t Sampler::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64(state_);
}

Rat Sampler::sample_q() {
  long den = 2 + static_cast<long>(next_u64() % 96);   // 2..97
  long num = 1 + static_cast<long>(next_u64() % (den - 1));  // 1..den-1
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat Sampler::sample_u() {
  long num = 1 + static_cast<long>(next_u64() % 97);
  if (next_u64() & 1) num = -num;
  long den = 1 + static_cast<long>(next_u64() % 97);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Point Sampler::point_for(const std::set<std::string>& vars) {
  Point p;
  p.q = sample_q();
  for (const auto& v : vars) p.vars[v] = sample_u();
  return p;
}

bool is_zero(const Scalar& s, int trials, uint64_t seed) {
  if (s.is_const()) return s.const_value() == 0;
  auto vars = variables(s);
  Sampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    int tries = 0;
    for (;;) {
      Point p = sampler.point_for(vars);
      p.seed = seed;
      try {
        if (eval(s, p) != 0) return false;
        break;
      } catch (const PoleAtPoint&) {
        if (++tries > kRetryBudget)
          throw SamplingExhausted("no pole-free sample point found in " +
                                  std::to_string(kRetryBudget) + " tries");
      }
    }
  }
  return true;
}

bool equal(const Scalar& a, const Scalar& b, int trials, uint64_t seed) {
  return is_zero(a - b, trials, seed);
}

namespace {

void print_node(const Scalar::NodePtr& n, std::ostream& os) {
  switch (n->kind) {
    case Scalar::Kind::Const: os << n->cval.get_str(); break;
    case Scalar::Kind::Q: os << "q"; break;
    case Scalar::Kind::Var: os << "q^" << n->name; break;
    case Scalar::Kind::Add:
      os << "(";
      print_node(n->a, os);
      os << " + ";
      print_node(n->b, os);
      os << ")";
      break;
    case Scalar::Kind::Sub:
      os << "(";
      print_node(n->a, os);
      os << " - ";
      print_node(n->b, os);
      os << ")";
      break;
    case Scalar::Kind::Mul:
      print_node(n->a, os);
      os << "*";
      print_node(n->b, os);
      break;
    case Scalar::Kind::Div:
      print_node(n->a, os);
      os << "/";
      if (n->b->kind == Scalar::Kind::Const || n->b->kind == Scalar::Kind::Q) {
        print_node(n->b, os);
      } else {
        os << "(";
        print_node(n->b, os);
        os << ")";
      }
      break;
    case Scalar::Kind::Neg:
      os << "-";
      print_node(n->a, os);
      break;
    case Scalar::Kind::Pow:
      if (n->a->kind == Scalar::Kind::Q) {
        os << "q^" << n->expo;
      } else if (n->a->kind == Scalar::Kind::Var) {
        os << "q^(" << n->expo << n->a->name << ")";
      } else {
        os << "(";
        print_node(n->a, os);
        os << ")^" << n->expo;
      }
      break;
  }
}

}  // namespace

std::string to_string(const Scalar& s) {
  std::ostringstream os;
  print_node(s.node(), os);
  return os.str();
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace dynsu2
