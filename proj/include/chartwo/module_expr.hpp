// Symbolic module expressions and their parser.
//
// Grammar (whitespace insensitive):
//   expr   := term ('+' term)*
//   term   := [int '*'] factor
//   factor := atom | 'T(' expr ',' expr ')' | 'E2(' expr ')' | 'S2(' expr ')' | '(' expr ')'
//   atom   := ('V' | 'W') int
#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jordan_type.hpp"
#include "kinds.hpp"

namespace chartwo {

class ModuleExpr;

namespace expr {

struct Atom {
  OperatorKind kind;
  count_t dim;
  count_t multiplicity = 1;
};
struct Sum {
  std::vector<ModuleExpr> terms;
};
struct Multiple {  // c * (non-atom)
  count_t times;
  std::shared_ptr<const ModuleExpr> inner;
};
struct Tensor {
  std::shared_ptr<const ModuleExpr> left, right;
};
struct Ext2 {
  std::shared_ptr<const ModuleExpr> inner;
};
struct Sym2 {
  std::shared_ptr<const ModuleExpr> inner;
};

}  // namespace expr

/// Immutable expression tree. Children are shared, so copies are cheap.
class ModuleExpr {
 public:
  using Node = std::variant<expr::Atom, expr::Sum, expr::Multiple, expr::Tensor, expr::Ext2, expr::Sym2>;

  ModuleExpr(Node node) : node_(std::move(node)) {}

  static ModuleExpr atom(OperatorKind kind, count_t dim, count_t multiplicity = 1) {
    if (dim == 0) throw std::invalid_argument("atom dimensions must be positive");
    if (multiplicity == 0) throw std::invalid_argument("multiplicities must be positive");
    return Node{expr::Atom{kind, dim, multiplicity}};
  }
  static ModuleExpr sum(std::vector<ModuleExpr> terms) { return Node{expr::Sum{std::move(terms)}}; }
  static ModuleExpr multiple(count_t times, ModuleExpr inner) {
    if (times == 0) throw std::invalid_argument("multiplicities must be positive");
    if (auto* a = std::get_if<expr::Atom>(&inner.node_))
      return atom(a->kind, a->dim, detail::checked_mul(a->multiplicity, times));
    return Node{expr::Multiple{times, std::make_shared<const ModuleExpr>(std::move(inner))}};
  }
  static ModuleExpr tensor(ModuleExpr a, ModuleExpr b) {
    return Node{expr::Tensor{std::make_shared<const ModuleExpr>(std::move(a)),
                             std::make_shared<const ModuleExpr>(std::move(b))}};
  }
  static ModuleExpr ext2(ModuleExpr a) { return Node{expr::Ext2{std::make_shared<const ModuleExpr>(std::move(a))}}; }
  static ModuleExpr sym2(ModuleExpr a) { return Node{expr::Sym2{std::make_shared<const ModuleExpr>(std::move(a))}}; }

  const Node& node() const { return node_; }

  /// The single operator kind used by every atom. Throws on mixed kinds.
  OperatorKind kind() const {
    std::optional<OperatorKind> k;
    collect_kind(k);
    if (!k) throw std::invalid_argument("expression has no atoms");
    return *k;
  }

  std::string to_string() const {
    return std::visit(
        [](const auto& n) -> std::string {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Atom>) {
            std::string s = (n.kind == OperatorKind::unipotent ? "V" : "W") + std::to_string(n.dim);
            return n.multiplicity == 1 ? s : std::to_string(n.multiplicity) + "*" + s;
          } else if constexpr (std::is_same_v<T, expr::Sum>) {
            std::string s;
            for (const auto& t : n.terms) {
              if (!s.empty()) s += " + ";
              s += t.to_string();
            }
            return s;
          } else if constexpr (std::is_same_v<T, expr::Multiple>) {
            return std::to_string(n.times) + "*(" + n.inner->to_string() + ")";
          } else if constexpr (std::is_same_v<T, expr::Tensor>) {
            return "T(" + n.left->to_string() + ", " + n.right->to_string() + ")";
          } else if constexpr (std::is_same_v<T, expr::Ext2>) {
            return "E2(" + n.inner->to_string() + ")";
          } else {
            return "S2(" + n.inner->to_string() + ")";
          }
        },
        node_);
  }

 private:
  void collect_kind(std::optional<OperatorKind>& k) const {
    std::visit(
        [&k](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, expr::Atom>) {
            if (k && *k != n.kind) throw std::invalid_argument("expression mixes V and W atoms");
            k = n.kind;
          } else if constexpr (std::is_same_v<T, expr::Sum>) {
            for (const auto& t : n.terms) t.collect_kind(k);
          } else if constexpr (std::is_same_v<T, expr::Tensor>) {
            n.left->collect_kind(k);
            n.right->collect_kind(k);
          } else {
            n.inner->collect_kind(k);
          }
        },
        node_);
  }

  Node node_;
};

class ExprParseError : public std::invalid_argument {
 public:
  ExprParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ModuleExpr parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    ModuleExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    e.kind();  // rejects mixed V/W atoms
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ExprParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_word(std::string_view w) {
    skip_ws();
    return text_.substr(pos_, w.size()) == w;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  count_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    count_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      count_t next;
      if (__builtin_mul_overflow(v, 10, &next) || __builtin_add_overflow(next, count_t(text_[pos_] - '0'), &next)) {
        pos_ = start;
        fail("integer too large");
      }
      v = next;
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }

  ModuleExpr parse_expr() {
    std::vector<ModuleExpr> terms;
    terms.push_back(parse_term());
    while (peek('+')) {
      ++pos_;
      terms.push_back(parse_term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return ModuleExpr::sum(std::move(terms));
  }

  ModuleExpr parse_term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t at = pos_;
      count_t c = parse_int();
      if (c == 0) {
        pos_ = at;
        fail("multiplicity must be positive");
      }
      expect('*');
      return ModuleExpr::multiple(c, parse_factor());
    }
    return parse_factor();
  }

  ModuleExpr parse_factor() {
    skip_ws();
    if (peek_word("T(")) {
      pos_ += 2;
      ModuleExpr a = parse_expr();
      expect(',');
      ModuleExpr b = parse_expr();
      expect(')');
      return ModuleExpr::tensor(std::move(a), std::move(b));
    }
    if (peek_word("E2(") || peek_word("S2(")) {
      const bool ext = text_[pos_] == 'E';
      pos_ += 3;
      ModuleExpr a = parse_expr();
      expect(')');
      return ext ? ModuleExpr::ext2(std::move(a)) : ModuleExpr::sym2(std::move(a));
    }
    if (peek('(')) {
      ++pos_;
      ModuleExpr a = parse_expr();
      expect(')');
      return a;
    }
    if (peek('V') || peek('W')) {
      const OperatorKind k = text_[pos_] == 'V' ? OperatorKind::unipotent : OperatorKind::nilpotent;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected dimension after atom symbol");
      std::size_t at = pos_;
      count_t d = parse_int();
      if (d == 0) {
        pos_ = at;
        fail("atom dimension must be positive");
      }
      return ModuleExpr::atom(k, d);
    }
    if (pos_ == text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ModuleExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace chartwo
