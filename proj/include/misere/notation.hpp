#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "misere/constructions.hpp"
#include "misere/game.hpp"

namespace misere {

/// AST for the game-expression language:
///   expr := term ("+" term)*
///   term := "0" | "*" | INT | "I" | "S" | "Z" | "Ga" | "B(" IDX ")"
///         | "s(" IDX ")" | "conj(" expr ")" | "adj(" expr ")"
///         | "tilde(" expr "," IDX ")" | "{" list "|" list "}"
///   list := eps | expr ("," expr)*
///   INT  := [1-9][0-9]*      IDX := "0" | INT
/// INT elaborates as the game n with n = {n-1|.}; "+" is the expanded
/// disjunctive sum.
struct GameExpr {
  enum class Kind {
    Zero,
    Star,
    Integer,
    NameI,
    NameS,
    NameZ,
    NameGa,
    FamilyB,
    FamilyS,
    Braces,
    Sum,
    Conjugate,
    Adjoint,
    Tilde
  };

  Kind kind = Kind::Zero;
  int number = 0;                        // Integer value, family or tilde index
  std::vector<GameExpr> children;        // sum terms, unary child, braces left
  std::vector<GameExpr> right_children;  // braces right
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

namespace detail {

constexpr int kMaxInteger = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GameExpr run() {
    GameExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer(bool allow_zero) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail("expected an integer");
    if (text_[pos_] == '0') {
      if (!allow_zero) fail("expected a positive integer");
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        fail("leading zero in integer");
      return 0;
    }
    long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxInteger) fail("integer exceeds the supported maximum of 4096");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  GameExpr expr() {
    GameExpr first = term();
    if (peek() != '+') return first;
    GameExpr sum;
    sum.kind = GameExpr::Kind::Sum;
    sum.children.push_back(std::move(first));
    while (peek() == '+') {
      ++pos_;
      sum.children.push_back(term());
    }
    return sum;
  }

  std::vector<GameExpr> list(char stop1, char stop2) {
    std::vector<GameExpr> out;
    if (peek() == stop1 || peek() == stop2) return out;
    out.push_back(expr());
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
    }
    return out;
  }

  GameExpr unary(GameExpr::Kind kind) {
    GameExpr e;
    e.kind = kind;
    expect('(');
    e.children.push_back(expr());
    if (kind == GameExpr::Kind::Tilde) {
      expect(',');
      e.number = integer(/*allow_zero=*/true);
    }
    expect(')');
    return e;
  }

  static GameExpr make(GameExpr::Kind kind) {
    GameExpr e;
    e.kind = kind;
    return e;
  }

  GameExpr term() {
    char c = peek();
    if (c == '0') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        fail("leading zero in integer");
      return make(GameExpr::Kind::Zero);
    }
    if (c == '*') {
      ++pos_;
      return make(GameExpr::Kind::Star);
    }
    if (c >= '1' && c <= '9') {
      GameExpr e;
      e.kind = GameExpr::Kind::Integer;
      e.number = integer(/*allow_zero=*/false);
      return e;
    }
    if (c == '{') {
      ++pos_;
      GameExpr e;
      e.kind = GameExpr::Kind::Braces;
      e.children = list('|', '|');
      expect('|');
      e.right_children = list('}', '}');
      expect('}');
      return e;
    }
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ((text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                                     (text_[pos_] >= 'a' && text_[pos_] <= 'z')))
        ++pos_;
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "I") return make(GameExpr::Kind::NameI);
      if (word == "S") return make(GameExpr::Kind::NameS);
      if (word == "Z") return make(GameExpr::Kind::NameZ);
      if (word == "Ga") return make(GameExpr::Kind::NameGa);
      if (word == "conj") return unary(GameExpr::Kind::Conjugate);
      if (word == "adj") return unary(GameExpr::Kind::Adjoint);
      if (word == "tilde") return unary(GameExpr::Kind::Tilde);
      if (word == "B" || word == "s") {
        GameExpr e;
        e.kind = word == "B" ? GameExpr::Kind::FamilyB : GameExpr::Kind::FamilyS;
        expect('(');
        e.number = integer(/*allow_zero=*/true);
        expect(')');
        return e;
      }
      pos_ = start;
      fail("unknown name '" + std::string(word) + "'");
    }
    fail("expected a game term");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GameExpr parse(std::string_view text) { return detail::Parser(text).run(); }

inline GameId elaborate(GamePool& pool, const GameExpr& e) {
  using Kind = GameExpr::Kind;
  switch (e.kind) {
    case Kind::Zero:
      return pool.zero();
    case Kind::Star:
      return pool.star();
    case Kind::Integer:
      return int_game(pool, e.number);
    case Kind::NameI:
      return named(pool, NamedGame::I);
    case Kind::NameS:
      return named(pool, NamedGame::S);
    case Kind::NameZ:
      return named(pool, NamedGame::Z);
    case Kind::NameGa:
      return named(pool, NamedGame::Ga);
    case Kind::FamilyB:
      return b_game(pool, e.number);
    case Kind::FamilyS:
      return s_game(pool, e.number);
    case Kind::Braces: {
      std::vector<GameId> l, r;
      for (const GameExpr& c : e.children) l.push_back(elaborate(pool, c));
      for (const GameExpr& c : e.right_children) r.push_back(elaborate(pool, c));
      return pool.intern(std::move(l), std::move(r));
    }
    case Kind::Sum: {
      GameId g = pool.zero();
      for (const GameExpr& c : e.children) g = pool.sum(g, elaborate(pool, c));
      return g;
    }
    case Kind::Conjugate:
      return pool.conjugate(elaborate(pool, e.children.at(0)));
    case Kind::Adjoint:
      return adjoint(pool, elaborate(pool, e.children.at(0)));
    case Kind::Tilde:
      return tilde(pool, elaborate(pool, e.children.at(0)), e.number);
  }
  throw std::logic_error("elaborate: unhandled expression kind");
}

inline GameId parse_game(GamePool& pool, std::string_view text) {
  return elaborate(pool, parse(text));
}

enum class PrintStyle { Braces, Named };

namespace detail {

inline std::unordered_map<std::uint32_t, std::string> named_table(GamePool& pool) {
  std::unordered_map<std::uint32_t, std::string> out;
  auto add = [&](GameId g, std::string name) { out.emplace(g.raw, std::move(name)); };
  add(pool.zero(), "0");
  add(pool.star(), "*");
  for (int n = 1; n <= 9; ++n) add(int_game(pool, n), std::to_string(n));
  add(named(pool, NamedGame::I), "I");
  add(named(pool, NamedGame::S), "S");
  add(named(pool, NamedGame::Z), "Z");
  for (int i = 0; i <= 4; ++i) add(b_game(pool, i), "B(" + std::to_string(i) + ")");
  for (int i = 2; i <= 9; ++i) add(s_game(pool, i), "s(" + std::to_string(i) + ")");
  return out;
}

inline void print_rec(GamePool& pool, GameId g,
                      const std::unordered_map<std::uint32_t, std::string>* names,
                      std::string& out) {
  if (names) {
    auto it = names->find(g.raw);
    if (it != names->end()) {
      out += it->second;
      return;
    }
  }
  if (g == pool.zero()) {
    out += '0';
    return;
  }
  out += '{';
  bool first = true;
  for (GameId o : pool.left(g)) {
    if (!first) out += ',';
    first = false;
    print_rec(pool, o, names, out);
  }
  out += '|';
  first = true;
  for (GameId o : pool.right(g)) {
    if (!first) out += ',';
    first = false;
    print_rec(pool, o, names, out);
  }
  out += '}';
}

}  // namespace detail

/// Braces style emits pure brace notation with options in normalized order;
/// named style substitutes the well-known names where the id matches.
inline std::string print(GamePool& pool, GameId g, PrintStyle style = PrintStyle::Braces) {
  std::string out;
  if (style == PrintStyle::Named) {
    auto names = detail::named_table(pool);
    detail::print_rec(pool, g, &names, out);
  } else {
    detail::print_rec(pool, g, nullptr, out);
  }
  return out;
}

}  // namespace misere
