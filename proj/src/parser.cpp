#include "nullsol/parser.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace nullsol {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ParseErrorKind::BadExponent: return "BadExponent";
    case ParseErrorKind::DimensionExceeded: return "DimensionExceeded";
  }
  return "UnexpectedToken";
}

namespace {

constexpr int kMaxXIndex = 1024;
constexpr int kMaxNesting = 256;
constexpr std::size_t kMaxProductTerms = 4'000'000;

enum class Tok { Number, T, X, Imag, Pi, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  int x_index = 0;
};

ParseError error(std::size_t pos, ParseErrorKind kind, std::string msg) {
  return ParseError{pos, std::move(msg), kind};
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, start, s.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t letters_end = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string word = s.substr(start, letters_end - start);
      std::string digits = s.substr(letters_end, i - letters_end);
      if (word == "X" && !digits.empty()) {
        if (digits.size() > 4 || std::stoi(digits) > kMaxXIndex) {
          throw error(start, ParseErrorKind::DimensionExceeded, "variable index too large: X" + digits);
        }
        int index = std::stoi(digits);
        if (index == 0) throw error(start, ParseErrorKind::UnknownSymbol, "X indices start at 1");
        Token t{Tok::X, start, word + digits};
        t.x_index = index;
        out.push_back(std::move(t));
        continue;
      }
      if (digits.empty()) {
        if (word == "T") {
          out.push_back({Tok::T, start, word});
          continue;
        }
        if (word == "i") {
          out.push_back({Tok::Imag, start, word});
          continue;
        }
        if (word == "PI") {
          out.push_back({Tok::Pi, start, word});
          continue;
        }
      }
      std::string sym = word + digits;
      if (sym == "I" || sym == "j") {
        throw error(start, ParseErrorKind::UnknownSymbol, "unknown symbol '" + sym + "' (the imaginary unit is 'i')");
      }
      throw error(start, ParseErrorKind::UnknownSymbol, "unknown symbol '" + sym + "'");
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw error(start, ParseErrorKind::UnexpectedToken, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, start, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Polynomial in PI with MultiPoly coefficients, indexed by PI power.
using Value = std::vector<MultiPoly>;

class Parser {
 public:
  Parser(std::vector<Token> tokens, int dimension, bool allow_pi)
      : tokens_(std::move(tokens)), d_(dimension), allow_pi_(allow_pi) {}

  Value run() {
    Value v = expr();
    if (peek().kind != Tok::End) {
      throw error(peek().pos, ParseErrorKind::UnexpectedToken, "unexpected '" + peek().text + "'");
    }
    return v;
  }

 private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }

  static bool starts_base(Tok k) {
    return k == Tok::Number || k == Tok::T || k == Tok::X || k == Tok::Imag || k == Tok::Pi || k == Tok::LParen;
  }

  Value constant(const Gaussian& c) const { return trim({MultiPoly::constant(d_, c)}); }

  static Value trim(Value v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
  }

  Value add(Value a, const Value& b, bool subtract) const {
    if (a.size() < b.size()) a.resize(b.size(), MultiPoly(d_));
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (subtract) {
        a[k] -= b[k];
      } else {
        a[k] += b[k];
      }
    }
    return trim(std::move(a));
  }

  Value mul(const Value& a, const Value& b, std::size_t pos) const {
    if (a.empty() || b.empty()) return {};
    std::size_t work = 0;
    for (const auto& x : a)
      for (const auto& y : b) work += x.size() * y.size();
    if (work > kMaxProductTerms) throw error(pos, ParseErrorKind::BadExponent, "expansion too large");
    Value out(a.size() + b.size() - 1, MultiPoly(d_));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
  }

  Value power(Value base, unsigned e, std::size_t pos) const {
    Value result = constant(Gaussian(1));
    while (e != 0) {
      if (e & 1U) result = mul(result, base, pos);
      e >>= 1U;
      if (e != 0) base = mul(base, base, pos);
    }
    return result;
  }

  Value expr() {
    Value v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool subtract = next().kind == Tok::Minus;
      v = add(std::move(v), term(), subtract);
    }
    return v;
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        std::size_t pos = next().pos;
        v = mul(v, factor(), pos);
      } else if (starts_base(peek().kind)) {
        throw error(peek().pos, ParseErrorKind::UnexpectedToken, "implicit multiplication is not allowed; use '*'");
      } else {
        return v;
      }
    }
  }

  Value factor() {
    Value b = base();
    if (peek().kind != Tok::Caret) return b;
    std::size_t caret = next().pos;
    const Token& e = peek();
    if (e.kind != Tok::Number) {
      throw error(e.pos, ParseErrorKind::BadExponent, "exponent must be a nonnegative integer literal");
    }
    next();
    if (e.text.size() > 4 || std::stoul(e.text) > kMaxExponent) {
      throw error(e.pos, ParseErrorKind::BadExponent, "exponent exceeds " + std::to_string(kMaxExponent));
    }
    if (peek().kind == Tok::Slash) {
      throw error(peek().pos, ParseErrorKind::BadExponent, "fractional exponents are not allowed");
    }
    return power(std::move(b), static_cast<unsigned>(std::stoul(e.text)), caret);
  }

  Value base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::T:
        next();
        return {MultiPoly::variable(d_, d_)};
      case Tok::X:
        next();
        return {MultiPoly::variable(d_, t.x_index - 1)};
      case Tok::Imag:
        next();
        return constant(Gaussian::i());
      case Tok::Pi: {
        if (!allow_pi_) {
          throw error(t.pos, ParseErrorKind::UnknownSymbol, "PI is only admitted in periodic input");
        }
        next();
        return {MultiPoly(d_), MultiPoly::constant(d_, Gaussian(1))};
      }
      case Tok::Number: {
        next();
        Integer num(t.text, 10);
        Integer den(1);
        if (peek().kind == Tok::Slash) {
          next();
          const Token& dt = peek();
          if (dt.kind != Tok::Number) {
            throw error(dt.pos, ParseErrorKind::UnexpectedToken, "expected denominator after '/'");
          }
          next();
          den = Integer(dt.text, 10);
          if (den == 0) throw error(dt.pos, ParseErrorKind::UnexpectedToken, "zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return constant(Gaussian(q));
      }
      case Tok::LParen: {
        next();
        Nest guard(*this, t.pos);
        Value v = expr();
        if (peek().kind != Tok::RParen) {
          throw error(peek().pos, ParseErrorKind::UnexpectedToken, "expected ')'");
        }
        next();
        return v;
      }
      case Tok::Minus: {
        next();
        Nest guard(*this, t.pos);
        Value v = factor();
        for (auto& part : v) part = -part;
        return v;
      }
      case Tok::End:
        throw error(t.pos, ParseErrorKind::UnexpectedToken, "unexpected end of input");
      default:
        throw error(t.pos, ParseErrorKind::UnexpectedToken, "unexpected '" + t.text + "'");
    }
  }

  struct Nest {
    Parser& p;
    Nest(Parser& parser, std::size_t pos) : p(parser) {
      if (++p.depth_ > kMaxNesting) throw error(pos, ParseErrorKind::UnexpectedToken, "nesting too deep");
    }
    ~Nest() { --p.depth_; }
  };

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  int d_;
  bool allow_pi_;
  int depth_ = 0;
};

std::variant<Value, ParseError> parse_value(const SourceExpr& src, bool allow_pi, int& dimension) {
  try {
    std::vector<Token> tokens = lex(src.text);
    int highest = 0;
    for (const auto& t : tokens) {
      if (t.kind == Tok::X) highest = std::max(highest, t.x_index);
    }
    if (src.dimension) {
      if (*src.dimension < 0) {
        return error(0, ParseErrorKind::DimensionExceeded, "declared dimension must be nonnegative");
      }
      for (const auto& t : tokens) {
        if (t.kind == Tok::X && t.x_index > *src.dimension) {
          return error(t.pos, ParseErrorKind::DimensionExceeded,
                       t.text + " exceeds declared dimension " + std::to_string(*src.dimension));
        }
      }
      dimension = *src.dimension;
    } else {
      dimension = highest;
    }
    Parser parser(std::move(tokens), dimension, allow_pi);
    return parser.run();
  } catch (const ParseError& e) {
    return e;
  }
}

std::string coefficient_text(const Gaussian& c) {
  std::string s = to_string(c);
  if (!c.is_real() && sgn(c.re) != 0) return "(" + s + ")";
  return s;
}

std::string term_text(const Gaussian& c, const std::vector<std::string>& factors) {
  if (factors.empty()) return coefficient_text(c);
  std::string body;
  for (const auto& f : factors) {
    if (!body.empty()) body += "*";
    body += f;
  }
  if (c == Gaussian(1)) return body;
  if (c == Gaussian(-1)) return "-" + body;
  return coefficient_text(c) + "*" + body;
}

std::vector<std::string> monomial_factors(const Exponents& e) {
  std::vector<std::string> out;
  const std::size_t d = e.size() - 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    std::string name = k == d ? "T" : "X" + std::to_string(k + 1);
    out.push_back(e[k] == 1 ? name : name + "^" + std::to_string(e[k]));
  }
  return out;
}

void append_term(std::string& out, const std::string& term) {
  if (!out.empty() && term.front() != '-') out += "+";
  out += term;
}

}  // namespace

std::variant<MultiPoly, ParseError> parse(const SourceExpr& src) {
  int d = 0;
  auto result = parse_value(src, false, d);
  if (auto* err = std::get_if<ParseError>(&result)) return *err;
  auto& v = std::get<Value>(result);
  return v.empty() ? MultiPoly(d) : std::move(v.front());
}

std::variant<PiMultiPoly, ParseError> parse_with_pi(const SourceExpr& src) {
  int d = 0;
  auto result = parse_value(src, true, d);
  if (auto* err = std::get_if<ParseError>(&result)) return *err;
  return PiMultiPoly(d, std::move(std::get<Value>(result)));
}

std::string print_canonical(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) append_term(out, term_text(c, monomial_factors(e)));
  return out;
}

std::string print_canonical(const PiMultiPoly& p) {
  if (p.is_zero()) return "0";
  std::map<Exponents, std::vector<std::pair<std::size_t, Gaussian>>, GrlexGreater> grouped;
  for (std::size_t k = p.by_pi_power.size(); k-- > 0;) {
    for (const auto& [e, c] : p.by_pi_power[k].terms()) grouped[e].emplace_back(k, c);
  }
  std::string out;
  for (const auto& [e, entries] : grouped) {
    for (const auto& [k, c] : entries) {
      std::vector<std::string> factors;
      if (k == 1) factors.emplace_back("PI");
      if (k > 1) factors.push_back("PI^" + std::to_string(k));
      auto mono = monomial_factors(e);
      factors.insert(factors.end(), mono.begin(), mono.end());
      append_term(out, term_text(c, factors));
    }
  }
  return out;
}

std::string render_parse_error(const std::string& text, const ParseError& err) {
  std::string out = text + "\n" + std::string(std::min(err.position, text.size()), ' ') + "^ ";
  out += to_string(err.kind);
  out += ": " + err.message;
  return out;
}

}  // namespace nullsol
