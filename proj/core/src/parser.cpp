#include "dynsu2/parser.hpp"

#include <cctype>
#include <sstream>

namespace dynsu2 {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected integer", start);
    return std::stol(s.substr(start, pos - start));
  }
};

// element-level values: a sum of words
struct Value {
  bool is_scalar;
  Scalar sc;
  GenWord word_sum;  // unused; elements are kept as AlgElement below
};

class Parser {
 public:
  Parser(const std::string& text, Mode mode) : lex_{text, 0}, mode_(mode) {}

  AlgElement parse() {
    AlgElement e = expr();
    lex_.skip_ws();
    if (lex_.pos != lex_.s.size()) throw ParseError("trailing input", lex_.pos);
    return e;
  }

 private:
  Lexer lex_;
  Mode mode_;

  AlgElement expr() {
    AlgElement acc = term();
    for (;;) {
      if (lex_.accept('+'))
        acc = acc + term();
      else if (lex_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  AlgElement term() {
    AlgElement acc = factor();
    for (;;) {
      if (lex_.accept('*'))
        acc = mul(acc, factor());
      else if (lex_.accept('/')) {
        // scalar divisor only
        AlgElement d = factor();
        if (d.terms.size() != 1 || !d.terms.begin()->first.is_one())
          throw ParseError("division by a non-scalar", lex_.pos);
        acc = scale(acc, Scalar(1) / d.terms.begin()->second);
      } else {
        return acc;
      }
    }
  }

  AlgElement factor() {
    AlgElement a = atom();
    if (lex_.accept('^')) {
      long e = lex_.integer();
      if (e < 0) {
        if (a.terms.size() != 1 || !a.terms.begin()->first.is_one())
          throw ParseError("negative powers need a scalar base", lex_.pos);
        return embed_l(a.terms.begin()->second.pow(e), mode_);
      }
      AlgElement r = unit(mode_);
      for (long i = 0; i < e; ++i) r = mul(r, a);
      return r;
    }
    return a;
  }

  AlgElement atom() {
    if (lex_.accept('(')) {
      AlgElement e = expr();
      lex_.expect(')');
      return e;
    }
    if (lex_.accept('-')) return -atom();
    char c = lex_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = lex_.integer();
      if (lex_.accept('/')) {
        long den = lex_.integer();
        if (den == 0) throw ParseError("zero denominator", lex_.pos);
        return embed_l(Scalar(Rat(num, den)), mode_);
      }
      return embed_l(Scalar(num), mode_);
    }
    if (c == '\0') throw ParseError("unexpected end of input", lex_.pos);
    size_t start = lex_.pos;
    std::string id = lex_.ident();
    if (id == "alpha") return gen_elem(Gen::Alpha, mode_);
    if (id == "beta") return gen_elem(Gen::Beta, mode_);
    if (id == "gamma") return gen_elem(Gen::Gamma, mode_);
    if (id == "delta") return gen_elem(Gen::Delta, mode_);
    if (id == "q") return embed_l(Scalar::q(), mode_);
    if (id == "f") {
      lex_.expect('[');
      std::string var = lex_.ident();
      if (var != "lambda" && var != "mu")
        throw ParseError("moment map variable must be lambda or mu", lex_.pos);
      lex_.expect(']');
      lex_.expect('(');
      Scalar s = scalar_expr(var);
      lex_.expect(')');
      return embed_l(s, mode_);
    }
    throw ParseError("unexpected token '" + (id.empty() ? std::string(1, c) : id) + "'",
                     start);
  }

  Scalar scalar_expr(const std::string& var) {
    Scalar acc = scalar_term(var);
    for (;;) {
      if (lex_.accept('+'))
        acc = acc + scalar_term(var);
      else if (lex_.accept('-'))
        acc = acc - scalar_term(var);
      else
        return acc;
    }
  }

  Scalar scalar_term(const std::string& var) {
    Scalar acc = scalar_factor(var);
    for (;;) {
      if (lex_.accept('*'))
        acc = acc * scalar_factor(var);
      else if (lex_.accept('/'))
        acc = acc / scalar_factor(var);
      else
        return acc;
    }
  }

  Scalar scalar_factor(const std::string& var) {
    Scalar a = scalar_atom(var);
    if (lex_.accept('^')) return a.pow(lex_.integer());
    return a;
  }

  Scalar scalar_atom(const std::string& var) {
    if (lex_.accept('(')) {
      Scalar e = scalar_expr(var);
      lex_.expect(')');
      return e;
    }
    if (lex_.accept('-')) return -scalar_atom(var);
    char c = lex_.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = lex_.integer();
      if (lex_.accept('/')) return Scalar(Rat(num, lex_.integer()));
      return Scalar(num);
    }
    size_t start = lex_.pos;
    std::string id = lex_.ident();
    if (id == "q") return Scalar::q();
    if (id == var) return Scalar::var(var);  // the exponential q^var
    throw ParseError("unexpected scalar token '" + id + "'", start);
  }
};

// recognize q^k * {F,G}(var+s) and q^k / F(var+s) and q^k {H,I} for printing
std::string recognize(const Scalar& c) {
  struct Candidate {
    Scalar value;
    std::string name;
  };
  static const std::vector<Candidate> base = [] {
    std::vector<Candidate> v;
    for (const char* var : {"lambda", "mu"}) {
      for (long s = -2; s <= 2; ++s) {
        std::string arg = std::string(var) + (s == 0 ? "" : (s > 0 ? "+" : "")) +
                          (s == 0 ? "" : std::to_string(s));
        v.push_back({aux_F(var, s), "F(" + arg + ")"});
        v.push_back({Scalar(1) / aux_F(var, s), "1/F(" + arg + ")"});
        v.push_back({aux_G(var, s), "G(" + arg + ")"});
      }
    }
    v.push_back({aux_H(VarNames{}), "H(lambda,mu)"});
    v.push_back({aux_I(VarNames{}), "I(lambda,mu)"});
    v.push_back({Scalar(1), ""});
    return v;
  }();
  for (const auto& cand : base)
    for (long k = -3; k <= 3; ++k)
      for (int sign = 0; sign < 2; ++sign) {
        Scalar probe = qpow(k) * cand.value;
        if (sign) probe = -probe;
        if (is_zero(c - probe, 8, 0xfaceu)) {
          std::ostringstream os;
          if (sign) os << "-";
          bool need_star = false;
          if (k != 0) {
            os << (k == 1 ? "q" : "q^" + std::to_string(k));
            need_star = true;
          }
          if (!cand.name.empty()) {
            if (need_star) os << "*";
            os << cand.name;
            need_star = true;
          }
          if (!need_star) os << "1";
          return os.str();
        }
      }
  return "";
}

}  // namespace

AlgElement parse_element(const std::string& text, Mode mode) {
  // re-normalize to purge coefficients that cancelled across terms
  return normalize(Parser(text, mode).parse());
}

std::string render(const AlgElement& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    std::string nice = recognize(c);
    std::string cs = nice.empty() ? "(" + to_string(c) + ")" : nice;
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << cs;
    } else if (cs == "1") {
      os << m.str();
    } else {
      os << cs << "*" << m.str();
    }
  }
  return os.str();
}

}  // namespace dynsu2
