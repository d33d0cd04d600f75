#pragma once

// Semiring terms over the signature (+, *, 0, 1) with variables x1, x2, ...
//
// A Term is an immutable tree shared through reference-counted nodes, so
// copying a Term is cheap and subterms may be shared freely.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace vsemi {

/// 1-based variable index.
using VarId = std::uint32_t;

enum class TermKind : std::uint8_t { Zero, One, Var, Add, Mul };

class Term {
 public:
  /// Default-constructed terms are the constant 0.
  Term() : Term(zero()) {}

  static Term zero() {
    static const Term t{std::make_shared<const Node>(Node{TermKind::Zero, 0, {}, {}})};
    return t;
  }
  static Term one() {
    static const Term t{std::make_shared<const Node>(Node{TermKind::One, 0, {}, {}})};
    return t;
  }
  static Term var(VarId index) {
    if (index == 0) throw std::invalid_argument("variable index must be positive");
    return Term{std::make_shared<const Node>(Node{TermKind::Var, index, {}, {}})};
  }
  static Term add(Term lhs, Term rhs) {
    return Term{std::make_shared<const Node>(
        Node{TermKind::Add, 0, std::move(lhs.node_), std::move(rhs.node_)})};
  }
  static Term mul(Term lhs, Term rhs) {
    return Term{std::make_shared<const Node>(
        Node{TermKind::Mul, 0, std::move(lhs.node_), std::move(rhs.node_)})};
  }

  TermKind kind() const noexcept { return node_->kind; }
  bool is_binary() const noexcept {
    return node_->kind == TermKind::Add || node_->kind == TermKind::Mul;
  }

  /// Only meaningful for Var nodes.
  VarId var_index() const noexcept { return node_->var; }

  /// Children of Add and Mul nodes. Calling these on a leaf is a logic error.
  Term lhs() const { return Term{node_->lhs}; }
  Term rhs() const { return Term{node_->rhs}; }

  /// Number of nodes in the tree (leaves and operators).
  std::size_t size() const {
    if (!is_binary()) return 1;
    return 1 + lhs().size() + rhs().size();
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case TermKind::Zero:
      case TermKind::One:
        return true;
      case TermKind::Var:
        return a.var_index() == b.var_index();
      default:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
  }

  friend Term operator+(Term a, Term b) { return add(std::move(a), std::move(b)); }
  friend Term operator*(Term a, Term b) { return mul(std::move(a), std::move(b)); }

 private:
  struct Node {
    TermKind kind;
    VarId var;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Syntax error carrying the 0-based character offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

// Recursive-descent parser for
//   sum := prod { "+" prod } ; prod := atom { "*" atom } ;
//   atom := "0" | "1" | var | "(" sum ")" ; var := "x" digits | "x" | "y" | "z"
class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_ws();
    if (at_end()) fail("empty term");
    Term t = parse_sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  Term parse_sum() {
    Term acc = parse_prod();
    while (consume('+')) acc = Term::add(std::move(acc), parse_prod());
    return acc;
  }

  Term parse_prod() {
    Term acc = parse_atom();
    while (consume('*')) acc = Term::mul(std::move(acc), parse_atom());
    return acc;
  }

  Term parse_atom() {
    skip_ws();
    if (at_end()) fail("expected term, found end of input");
    const char c = text_[pos_];
    switch (c) {
      case '0':
        ++pos_;
        reject_juxtaposition();
        return Term::zero();
      case '1':
        ++pos_;
        reject_juxtaposition();
        return Term::one();
      case '(': {
        ++pos_;
        Term inner = parse_sum();
        if (!consume(')')) fail("expected ')'");
        return inner;
      }
      case 'x':
      case 'y':
      case 'z':
        return parse_var();
      default:
        fail(std::string("unexpected '") + c + "'");
    }
  }

  Term parse_var() {
    const std::size_t start = pos_;
    const char c = text_[pos_++];
    if (c != 'x') {
      reject_juxtaposition();
      return Term::var(c == 'y' ? 2 : 3);
    }
    if (at_end() || !is_digit(text_[pos_])) {
      reject_juxtaposition();
      return Term::var(1);
    }
    std::uint64_t index = 0;
    while (!at_end() && is_digit(text_[pos_])) {
      index = index * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (index > 0xFFFFFFFFu) fail_at(start, "variable index too large");
      ++pos_;
    }
    if (index == 0) fail_at(start, "variable index must be positive");
    reject_juxtaposition();
    return Term::var(static_cast<VarId>(index));
  }

  // `x1x2`, `xy` and `2x` are rejected: multiplication needs an explicit '*'.
  void reject_juxtaposition() {
    if (at_end()) return;
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
      fail("missing operator before '" + std::string(1, c) + "'");
  }

  bool consume(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& what) {
    throw ParseError(pos, what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Zero:
      out += '0';
      return;
    case TermKind::One:
      out += '1';
      return;
    case TermKind::Var:
      out += 'x';
      out += std::to_string(t.var_index());
      return;
    case TermKind::Add: {
      print_into(t.lhs(), out);
      out += '+';
      const Term r = t.rhs();
      // A right-nested sum must keep its parentheses to survive a re-parse.
      const bool paren = r.kind() == TermKind::Add;
      if (paren) out += '(';
      print_into(r, out);
      if (paren) out += ')';
      return;
    }
    case TermKind::Mul: {
      const Term l = t.lhs();
      const Term r = t.rhs();
      const bool lparen = l.kind() == TermKind::Add;
      const bool rparen = r.is_binary();
      if (lparen) out += '(';
      print_into(l, out);
      if (lparen) out += ')';
      out += '*';
      if (rparen) out += '(';
      print_into(r, out);
      if (rparen) out += ')';
      return;
    }
  }
}

inline void collect_vars(const Term& t, std::set<VarId>& out) {
  if (t.kind() == TermKind::Var) {
    out.insert(t.var_index());
  } else if (t.is_binary()) {
    collect_vars(t.lhs(), out);
    collect_vars(t.rhs(), out);
  }
}

}  // namespace detail

/// Parses a term. `*` binds tighter than `+`; both associate to the left.
/// Bare `x`, `y`, `z` are aliases for x1, x2, x3.
inline Term parse(std::string_view text) { return detail::TermParser(text).parse(); }

/// Renders with x1, x2, ... names, explicit `*` and the fewest parentheses
/// that still make parse() return an identical tree.
inline std::string print(const Term& t) {
  std::string out;
  detail::print_into(t, out);
  return out;
}

inline std::set<VarId> vars(const Term& t) {
  std::set<VarId> out;
  detail::collect_vars(t, out);
  return out;
}

}  // namespace vsemi
