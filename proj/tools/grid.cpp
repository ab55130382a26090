#include "grid.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <numeric>

#include "cppforge/number_theory.hpp"

namespace cppforge::grid {

std::int64_t Point::at(const std::string& name) const {
  const auto it = vars.find(name);
  if (it == vars.end()) throw GridError("unbound variable '" + name + "'");
  return it->second;
}

namespace {

using i64 = std::int64_t;
using Expr = std::function<i64(const Point&)>;
__extension__ using i128 = __int128;

enum class Tok { kNum, kIdent, kSym, kEnd };

struct Token {
  Tok kind;
  std::string text;
  i64 value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  static const char* const kTwoChar[] = {"..", "<=", ">=", "==", "!="};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = i;
      i64 v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (v > (std::numeric_limits<i64>::max() - 9) / 10) throw GridError("integer literal too large");
        v = v * 10 + (s[i++] - '0');
      }
      out.push_back({Tok::kNum, std::string(s.substr(start, i - start)), v, start});
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), 0, start});
    } else {
      std::string sym(1, ch);
      for (const char* two : kTwoChar) {
        if (s.substr(i, 2) == two) sym = two;
      }
      if (sym.size() == 1 && std::string_view("{}(),=<>|+-*/%^").find(ch) == std::string_view::npos) {
        throw GridError("unexpected character '" + sym + "' at offset " + std::to_string(i));
      }
      out.push_back({Tok::kSym, sym, 0, i});
      i += sym.size();
    }
  }
  out.push_back({Tok::kEnd, "", 0, s.size()});
  return out;
}

i64 checked(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw GridError("arithmetic overflow in grid expression");
  }
  return static_cast<i64>(v);
}

i64 ipow(i64 base, i64 exp) {
  if (exp < 0) throw GridError("negative exponent in grid expression");
  i128 r = 1;
  for (i64 i = 0; i < exp; ++i) r = checked(r * base);
  return static_cast<i64>(r);
}

using Step = std::function<void(const Point&, std::vector<Point>&)>;

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  std::vector<Step> parse() {
    std::vector<Step> steps;
    if (peek().kind == Tok::kEnd) return steps;
    steps.push_back(clause());
    while (accept(",")) steps.push_back(clause());
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return steps;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool is_sym(const Token& t, std::string_view s) const { return t.kind == Tok::kSym && t.text == s; }
  bool accept(std::string_view s) {
    if (is_sym(peek(), s)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw GridError(what + " at offset " + std::to_string(peek().pos));
  }

  Step clause() {
    const Token& head = peek();
    if (head.kind == Tok::kIdent && peek(1).kind == Tok::kIdent && peek(1).text == "in") {
      const std::string var = head.text;
      pos_ += 2;
      return membership(var);
    }
    if (head.kind == Tok::kIdent && is_sym(peek(1), "=")) {
      const std::string var = head.text;
      pos_ += 2;
      Expr e = expr();
      return [var, e](const Point& pt, std::vector<Point>& out) {
        const i64 v = e(pt);
        if (pt.has(var)) {
          if (pt.at(var) == v) out.push_back(pt);
          return;
        }
        Point next = pt;
        next.vars[var] = v;
        out.push_back(std::move(next));
      };
    }
    if (head.kind == Tok::kIdent && is_sym(peek(1), "|")) {
      const std::string var = head.text;
      pos_ += 2;
      Expr e = expr();
      return [var, e](const Point& pt, std::vector<Point>& out) {
        const i64 m = e(pt);
        if (pt.has(var)) {
          const i64 v = pt.at(var);
          if (v != 0 && m % v == 0) out.push_back(pt);
          return;
        }
        if (m <= 0) throw GridError("'" + var + " | e' needs e > 0");
        for (const u64 d : divisors(static_cast<u64>(m))) {
          Point next = pt;
          next.vars[var] = static_cast<i64>(d);
          out.push_back(std::move(next));
        }
      };
    }
    Expr lhs = expr();
    static const char* const kOps[] = {"<=", ">=", "==", "!=", "<", ">", "|"};
    for (const char* op : kOps) {
      if (!accept(op)) continue;
      Expr rhs = expr();
      const std::string o = op;
      return [lhs, rhs, o](const Point& pt, std::vector<Point>& out) {
        const i64 a = lhs(pt);
        const i64 b = rhs(pt);
        bool keep = false;
        if (o == "<=") keep = a <= b;
        if (o == ">=") keep = a >= b;
        if (o == "==") keep = a == b;
        if (o == "!=") keep = a != b;
        if (o == "<") keep = a < b;
        if (o == ">") keep = a > b;
        if (o == "|") keep = a != 0 && b % a == 0;
        if (keep) out.push_back(pt);
      };
    }
    return [lhs](const Point& pt, std::vector<Point>& out) {
      if (lhs(pt) != 0) out.push_back(pt);
    };
  }

  Step membership(const std::string& var) {
    if (accept("{")) {
      std::vector<Expr> items{expr()};
      while (accept(",")) items.push_back(expr());
      expect("}");
      return bind_each(var, [items](const Point& pt) {
        std::vector<i64> vs;
        for (const auto& e : items) vs.push_back(e(pt));
        return vs;
      });
    }
    if (peek().kind == Tok::kIdent && peek().text == "GF" && is_sym(peek(1), "(")) {
      pos_ += 2;
      Expr order = expr();
      expect(")");
      expect("*");
      return [var, order](const Point& pt, std::vector<Point>& out) {
        const i64 q = order(pt);
        if (q < 2 || factorize(static_cast<u64>(q)).size() != 1) {
          throw GridError("GF(" + std::to_string(q) + ") is not a prime-power field");
        }
        for (i64 i = 1; i < q; ++i) {
          Point next = pt;
          next.vars[var] = i;
          next.fields[var] = static_cast<std::uint64_t>(q);
          out.push_back(std::move(next));
        }
      };
    }
    Expr lo = expr();
    expect("..");
    Expr hi = expr();
    return bind_each(var, [lo, hi](const Point& pt) {
      std::vector<i64> vs;
      const i64 a = lo(pt);
      const i64 b = hi(pt);
      if (b - a > 1'000'000) throw GridError("range too large");
      for (i64 v = a; v <= b; ++v) vs.push_back(v);
      return vs;
    });
  }

  static Step bind_each(const std::string& var, std::function<std::vector<i64>(const Point&)> values) {
    return [var, values](const Point& pt, std::vector<Point>& out) {
      for (const i64 v : values(pt)) {
        if (pt.has(var)) {
          if (pt.at(var) == v) out.push_back(pt);
          continue;
        }
        Point next = pt;
        next.vars[var] = v;
        out.push_back(std::move(next));
      }
    };
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept("+")) {
        Expr rhs = term();
        lhs = [lhs, rhs](const Point& p) { return checked(static_cast<i128>(lhs(p)) + rhs(p)); };
      } else if (accept("-")) {
        Expr rhs = term();
        lhs = [lhs, rhs](const Point& p) { return checked(static_cast<i128>(lhs(p)) - rhs(p)); };
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept("*")) {
        Expr rhs = unary();
        lhs = [lhs, rhs](const Point& p) { return checked(static_cast<i128>(lhs(p)) * rhs(p)); };
      } else if (accept("/")) {
        Expr rhs = unary();
        lhs = [lhs, rhs](const Point& p) {
          const i64 d = rhs(p);
          if (d == 0) throw GridError("division by zero in grid expression");
          return lhs(p) / d;
        };
      } else if (accept("%")) {
        Expr rhs = unary();
        lhs = [lhs, rhs](const Point& p) {
          const i64 d = rhs(p);
          if (d == 0) throw GridError("modulo by zero in grid expression");
          return lhs(p) % d;
        };
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept("-")) {
      Expr e = unary();
      return [e](const Point& p) { return checked(-static_cast<i128>(e(p))); };
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept("^")) {
      Expr exp = unary();
      return [base, exp](const Point& p) { return ipow(base(p), exp(p)); };
    }
    return base;
  }

  Expr primary() {
    const Token t = peek();
    if (t.kind == Tok::kNum) {
      ++pos_;
      return [v = t.value](const Point&) { return v; };
    }
    if (t.kind == Tok::kIdent) {
      ++pos_;
      if (accept("(")) return call(t.text);
      return [name = t.text](const Point& p) { return p.at(name); };
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    fail(t.kind == Tok::kEnd ? "unexpected end of grid" : "unexpected '" + t.text + "'");
  }

  Expr call(const std::string& name) {
    std::vector<Expr> args{expr()};
    while (accept(",")) args.push_back(expr());
    expect(")");
    if (name == "gcd" && args.size() == 2) {
      return [a = args[0], b = args[1]](const Point& p) { return std::gcd(a(p), b(p)); };
    }
    if (name == "prime" && args.size() == 1) {
      return [a = args[0]](const Point& p) {
        const i64 v = a(p);
        return static_cast<i64>(v > 1 && is_prime(static_cast<u64>(v)));
      };
    }
    throw GridError("unknown function " + name + "/" + std::to_string(args.size()));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Point> expand(std::string_view text, std::size_t max_points) {
  const std::vector<Step> steps = Parser(text).parse();
  std::vector<Point> points(1);
  for (const auto& step : steps) {
    std::vector<Point> next;
    for (const auto& pt : points) {
      step(pt, next);
      if (next.size() > max_points) throw GridError("grid exceeds " + std::to_string(max_points) + " points");
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace cppforge::grid
