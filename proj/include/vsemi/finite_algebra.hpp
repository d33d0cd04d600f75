#pragma once

// Finite semirings given by Cayley tables, term evaluation and identity
// checking by exhaustive enumeration, and the standard small models.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsemi/term.hpp"

namespace vsemi {

/// Index of an element in a finite algebra's carrier.
using Element = std::uint32_t;

/// Variable bindings for evaluation.
using Assignment = std::map<VarId, Element>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteSemiring {
 public:
  /// Tables are row-major: add[i * n + j] is e_i + e_j. Only the shape is
  /// validated here; the semiring laws are checked on demand by check_axioms.
  FiniteSemiring(std::string name, std::vector<std::string> labels, std::vector<Element> add,
                 std::vector<Element> mul, Element zero, Element one)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one) {
    const std::size_t n = labels_.size();
    if (n == 0) throw AlgebraError("algebra must have at least one element");
    for (std::size_t i = 0; i < n; ++i) {
      if (labels_[i].empty()) throw AlgebraError("empty element label");
      for (std::size_t j = 0; j < i; ++j)
        if (labels_[i] == labels_[j]) throw AlgebraError("duplicate element label '" + labels_[i] + "'");
    }
    auto check_table = [n](const std::vector<Element>& table, const char* what) {
      if (table.size() != n * n)
        throw AlgebraError(std::string(what) + " table must have " + std::to_string(n * n) + " entries");
      for (Element e : table)
        if (e >= n) throw AlgebraError(std::string(what) + " table entry out of range");
    };
    check_table(add_, "add");
    check_table(mul_, "mul");
    if (zero_ >= n || one_ >= n) throw AlgebraError("constant out of range");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }

  std::optional<Element> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<Element>(i);
    return std::nullopt;
  }

  Element add(Element x, Element y) const { return add_[x * size() + y]; }
  Element mul(Element x, Element y) const { return mul_[x * size() + y]; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }

  /// Same carrier size, tables and constants; names and labels may differ.
  bool same_tables(const FiniteSemiring& other) const {
    return add_ == other.add_ && mul_ == other.mul_ && zero_ == other.zero_ && one_ == other.one_;
  }

  friend bool operator==(const FiniteSemiring&, const FiniteSemiring&) = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  Element zero_;
  Element one_;
};

/// A bounded lattice (L, join, meet, bottom, top) given by tables.
class FiniteLattice {
 public:
  FiniteLattice(std::string name, std::vector<std::string> labels, std::vector<Element> join,
                std::vector<Element> meet, Element bottom, Element top)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        join_(std::move(join)),
        meet_(std::move(meet)),
        bottom_(bottom),
        top_(top) {
    const std::size_t n = labels_.size();
    if (n == 0) throw AlgebraError("lattice must have at least one element");
    if (join_.size() != n * n || meet_.size() != n * n)
      throw AlgebraError("lattice tables must be n x n");
    for (Element e : join_)
      if (e >= n) throw AlgebraError("join table entry out of range");
    for (Element e : meet_)
      if (e >= n) throw AlgebraError("meet table entry out of range");
    if (bottom_ >= n || top_ >= n) throw AlgebraError("lattice bound out of range");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  /// Name of the first bounded-distributive-lattice law that fails, if any.
  std::optional<std::string> violated_law() const {
    const auto n = static_cast<Element>(size());
    for (Element x = 0; x < n; ++x) {
      if (join(x, x) != x) return "join-idempotent";
      if (meet(x, x) != x) return "meet-idempotent";
      if (join(bottom_, x) != x || join(x, bottom_) != x) return "bottom-neutral";
      if (meet(top_, x) != x || meet(x, top_) != x) return "top-neutral";
      for (Element y = 0; y < n; ++y) {
        if (join(x, y) != join(y, x)) return "join-commutative";
        if (meet(x, y) != meet(y, x)) return "meet-commutative";
        if (join(x, meet(x, y)) != x || meet(x, join(x, y)) != x) return "absorption";
        for (Element z = 0; z < n; ++z) {
          if (join(join(x, y), z) != join(x, join(y, z))) return "join-associative";
          if (meet(meet(x, y), z) != meet(x, meet(y, z))) return "meet-associative";
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return "distributive";
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_;
  Element top_;
};

struct Identity {
  Term lhs;
  Term rhs;
  std::string name;
};

/// Parses "t = u". An optional name can be attached.
inline Identity parse_identity(std::string_view text, std::string name = {}) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError(text.size(), "expected '=' in identity");
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError(text.find('=', eq + 1), "more than one '=' in identity");
  Term lhs;
  Term rhs;
  lhs = parse(text.substr(0, eq));
  try {
    rhs = parse(text.substr(eq + 1));
  } catch (const ParseError& e) {
    // Report positions relative to the whole identity.
    const std::string msg = e.what();
    throw ParseError(eq + 1 + e.position(), msg.substr(msg.find(": ") + 2));
  }
  if (name.empty()) name = std::string(text);
  return Identity{std::move(lhs), std::move(rhs), std::move(name)};
}

namespace identities {

/// 1 + x + x = 1 (Boolean semirings).
inline Identity boolean() { return parse_identity("1+x+x = 1", "1+x+x=1"); }
/// 1 + x + xy = 1 + x.
inline Identity absorb_one() { return parse_identity("1+x+x*y = 1+x", "1+x+xy=1+x"); }
/// x + y + xyz = x + y, the defining identity of the variety V.
inline Identity v_defining() { return parse_identity("x+y+x*y*z = x+y", "x+y+xyz=x+y"); }
/// 1 + x + xy + xy = 1 + x; holds in B and in V but not in S3.
inline Identity join_separator() { return parse_identity("1+x+x*y+x*y = 1+x", "1+x+xy+xy=1+x"); }

}  // namespace identities

namespace detail {

inline Element eval_dense(const FiniteSemiring& a, const Term& t, std::span<const Element> values) {
  switch (t.kind()) {
    case TermKind::Zero:
      return a.zero();
    case TermKind::One:
      return a.one();
    case TermKind::Var:
      return values[t.var_index()];
    case TermKind::Add:
      return a.add(eval_dense(a, t.lhs(), values), eval_dense(a, t.rhs(), values));
    case TermKind::Mul:
      return a.mul(eval_dense(a, t.lhs(), values), eval_dense(a, t.rhs(), values));
  }
  return a.zero();
}

// Visits every tuple in {0..size-1}^arity in lexicographic order (first
// coordinate most significant) until `visit` returns false. Returns whether
// the sweep ran to completion.
template <typename Visit>
bool for_each_tuple(std::size_t size, std::size_t arity, Visit&& visit) {
  std::vector<Element> tuple(arity, 0);
  while (true) {
    if (!visit(std::span<const Element>(tuple))) return false;
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < size) break;
      tuple[pos] = 0;
      if (pos == 0) return true;
    }
    if (arity == 0) return true;
  }
}

}  // namespace detail

/// Evaluates t under sigma. Throws AlgebraError on an unbound variable or an
/// element index outside the carrier.
inline Element eval_term(const FiniteSemiring& a, const Term& t, const Assignment& sigma) {
  const auto used = vars(t);
  const VarId top = used.empty() ? 0 : *used.rbegin();
  std::vector<Element> values(top + 1, 0);
  for (VarId v : used) {
    auto it = sigma.find(v);
    if (it == sigma.end()) throw AlgebraError("unbound variable x" + std::to_string(v));
    if (it->second >= a.size()) throw AlgebraError("element index out of range for x" + std::to_string(v));
    values[v] = it->second;
  }
  return detail::eval_dense(a, t, values);
}

struct Counterexample {
  Assignment assignment;
  Element lhs_value;
  Element rhs_value;
};

struct IdentityCheck {
  bool holds;
  std::optional<Counterexample> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// Default cap on the number of distinct variables in an identity; the
/// sweep costs |A|^v evaluations.
inline constexpr std::size_t kDefaultMaxVars = 4;

/// Checks lhs = rhs under all assignments. Variables are bound in ascending
/// index order with the lowest variable most significant, so the reported
/// witness is the lexicographically least failing assignment.
inline IdentityCheck holds(const FiniteSemiring& a, const Identity& id,
                           std::size_t max_vars = kDefaultMaxVars) {
  auto used = vars(id.lhs);
  used.merge(vars(id.rhs));
  if (used.size() > max_vars)
    throw AlgebraError("identity has " + std::to_string(used.size()) + " variables; limit is " +
                       std::to_string(max_vars));
  const std::vector<VarId> order(used.begin(), used.end());
  std::vector<Element> values(order.empty() ? 1 : order.back() + 1, 0);

  IdentityCheck result{true, std::nullopt};
  detail::for_each_tuple(a.size(), order.size(), [&](std::span<const Element> tuple) {
    for (std::size_t i = 0; i < order.size(); ++i) values[order[i]] = tuple[i];
    const Element l = detail::eval_dense(a, id.lhs, values);
    const Element r = detail::eval_dense(a, id.rhs, values);
    if (l == r) return true;
    Assignment sigma;
    for (std::size_t i = 0; i < order.size(); ++i) sigma[order[i]] = tuple[i];
    result = IdentityCheck{false, Counterexample{std::move(sigma), l, r}};
    return false;
  });
  return result;
}

struct AxiomResult {
  std::string name;
  bool holds;
  /// Values of x, y, z (as many as the law uses) at the first failure.
  std::vector<Element> witness;
};

class AxiomReport {
 public:
  explicit AxiomReport(std::vector<AxiomResult> results) : results_(std::move(results)) {}

  const std::vector<AxiomResult>& results() const noexcept { return results_; }

  const AxiomResult& at(std::string_view name) const {
    for (const auto& r : results_)
      if (r.name == name) return r;
    throw std::out_of_range("no axiom named '" + std::string(name) + "'");
  }
  bool ok(std::string_view name) const { return at(name).holds; }

  bool is_semiring() const {
    for (const char* law : kSemiringLaws)
      if (!ok(law)) return false;
    return true;
  }
  /// Commutative and multiplicatively idempotent semiring.
  bool in_c() const { return is_semiring() && ok("mul-commutative") && ok("mul-idempotent"); }
  bool in_b() const { return in_c() && ok("identity 1+x+x=1"); }
  bool in_v() const { return in_c() && ok("identity x+y+xyz=x+y"); }
  /// Bounded distributive lattices, the intersection of B and V.
  bool in_d() const { return in_b() && in_v(); }

  static constexpr const char* kSemiringLaws[] = {
      "add-associative", "add-commutative",   "add-zero",           "mul-associative",
      "mul-one",         "left-distributive", "right-distributive", "zero-annihilates"};

 private:
  std::vector<AxiomResult> results_;
};

/// Every law by exhaustive evaluation, with the first counterexample for each
/// failure.
inline AxiomReport check_axioms(const FiniteSemiring& a) {
  const std::size_t n = a.size();
  std::vector<AxiomResult> out;
  auto law = [&](std::string name, std::size_t arity,
                 const std::function<bool(std::span<const Element>)>& pred) {
    AxiomResult r{std::move(name), true, {}};
    detail::for_each_tuple(n, arity, [&](std::span<const Element> t) {
      if (pred(t)) return true;
      r.holds = false;
      r.witness.assign(t.begin(), t.end());
      return false;
    });
    out.push_back(std::move(r));
  };
  const auto add = [&a](Element x, Element y) { return a.add(x, y); };
  const auto mul = [&a](Element x, Element y) { return a.mul(x, y); };

  law("add-associative", 3, [&](auto v) { return add(add(v[0], v[1]), v[2]) == add(v[0], add(v[1], v[2])); });
  law("add-commutative", 2, [&](auto v) { return add(v[0], v[1]) == add(v[1], v[0]); });
  law("add-zero", 1, [&](auto v) { return add(v[0], a.zero()) == v[0] && add(a.zero(), v[0]) == v[0]; });
  law("mul-associative", 3, [&](auto v) { return mul(mul(v[0], v[1]), v[2]) == mul(v[0], mul(v[1], v[2])); });
  law("mul-one", 1, [&](auto v) { return mul(v[0], a.one()) == v[0] && mul(a.one(), v[0]) == v[0]; });
  law("left-distributive", 3,
      [&](auto v) { return mul(v[0], add(v[1], v[2])) == add(mul(v[0], v[1]), mul(v[0], v[2])); });
  law("right-distributive", 3,
      [&](auto v) { return mul(add(v[0], v[1]), v[2]) == add(mul(v[0], v[2]), mul(v[1], v[2])); });
  law("zero-annihilates", 1,
      [&](auto v) { return mul(v[0], a.zero()) == a.zero() && mul(a.zero(), v[0]) == a.zero(); });
  law("mul-commutative", 2, [&](auto v) { return mul(v[0], v[1]) == mul(v[1], v[0]); });
  law("mul-idempotent", 1, [&](auto v) { return mul(v[0], v[0]) == v[0]; });

  for (const Identity& id : {identities::boolean(), identities::v_defining()}) {
    const auto check = holds(a, id);
    AxiomResult r{"identity " + id.name, check.holds, {}};
    if (check.witness)
      for (const auto& [var, value] : check.witness->assignment) r.witness.push_back(value);
    out.push_back(std::move(r));
  }
  return AxiomReport(std::move(out));
}

/// The built-in models: "t3", "s3", "two" (two-element lattice), "gf2", "gf3".
inline FiniteSemiring builtin(std::string_view name) {
  // t3 and s3 use the carrier order 0, a, 1.
  if (name == "t3" || name == "s3") {
    std::vector<Element> add = {0, 1, 2,  //
                                1, 1, 1,  //
                                2, 1, 1};
    if (name == "s3") add[2 * 3 + 2] = 2;
    return FiniteSemiring(std::string(name), {"0", "a", "1"}, std::move(add),
                          {0, 0, 0,  //
                           0, 1, 1,  //
                           0, 1, 2},
                          0, 2);
  }
  if (name == "two") return FiniteSemiring("two", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
  if (name == "gf2" || name == "gf3") {
    const Element p = name == "gf2" ? 2 : 3;
    std::vector<std::string> labels;
    std::vector<Element> add;
    std::vector<Element> mul;
    for (Element i = 0; i < p; ++i) {
      labels.push_back(std::to_string(i));
      for (Element j = 0; j < p; ++j) {
        add.push_back((i + j) % p);
        mul.push_back((i * j) % p);
      }
    }
    return FiniteSemiring(std::string(name), std::move(labels), std::move(add), std::move(mul), 0, 1);
  }
  throw AlgebraError("unknown builtin algebra '" + std::string(name) + "'");
}

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"t3", "s3", "two", "gf2", "gf3"};
  return names;
}

/// Powerset lattice of {1..k} under union and intersection, 1 <= k <= 4.
/// Element i is the subset with bitmask i; labels are "0" for the empty set,
/// "a" for the full set and e<members> otherwise (e.g. "e13").
inline FiniteLattice boolean_lattice(unsigned k) {
  if (k < 1 || k > 4) throw AlgebraError("boolean_lattice: k must be in 1..4");
  const Element n = Element{1} << k;
  std::vector<std::string> labels;
  std::vector<Element> join;
  std::vector<Element> meet;
  for (Element s = 0; s < n; ++s) {
    if (s == 0) {
      labels.emplace_back("0");
    } else if (s == n - 1) {
      labels.emplace_back("a");
    } else {
      std::string l = "e";
      for (unsigned bit = 0; bit < k; ++bit)
        if (s & (Element{1} << bit)) l += std::to_string(bit + 1);
      labels.push_back(std::move(l));
    }
    for (Element t = 0; t < n; ++t) {
      join.push_back(s | t);
      meet.push_back(s & t);
    }
  }
  return FiniteLattice("boolean" + std::to_string(k), std::move(labels), std::move(join),
                       std::move(meet), 0, n - 1);
}

/// Adjoins a new multiplicative unit "1" to a non-trivial bounded distributive
/// lattice L. With a the top of L:
///   x + y = x v y   if x, y in L
///         = 1       if {x, y} = {0, 1}
///         = a       otherwise
///   x * y = x ^ y   if x, y in L, otherwise the argument that is not 1.
/// The new element is appended after the elements of L.
inline FiniteSemiring lplus1(const FiniteLattice& lattice) {
  if (lattice.size() < 2) throw AlgebraError("lplus1 requires a non-trivial lattice");
  if (auto law = lattice.violated_law())
    throw AlgebraError("lplus1 requires a bounded distributive lattice (" + *law + " fails)");
  std::vector<std::string> labels = lattice.labels();
  if (std::find(labels.begin(), labels.end(), "1") != labels.end())
    throw AlgebraError("lattice already has an element labelled '1'");
  labels.emplace_back("1");

  const auto n = static_cast<Element>(labels.size());
  const Element unit = n - 1;
  const Element bottom = lattice.bottom();
  std::vector<Element> add(std::size_t{n} * n);
  std::vector<Element> mul(std::size_t{n} * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element sum;
      Element product;
      if (x != unit && y != unit) {
        sum = lattice.join(x, y);
        product = lattice.meet(x, y);
      } else {
        sum = (x == bottom || y == bottom) ? unit : lattice.top();
        product = x == unit ? y : x;
      }
      add[x * n + y] = sum;
      mul[x * n + y] = product;
    }
  }
  return FiniteSemiring(lattice.name() + "+1", std::move(labels), std::move(add), std::move(mul),
                        bottom, unit);
}

/// Componentwise operations; element (i, j) has index i * |B| + j.
inline FiniteSemiring direct_product(const FiniteSemiring& a, const FiniteSemiring& b) {
  const std::size_t nb = b.size();
  const std::size_t n = a.size() * nb;
  auto pair = [nb](Element i, Element j) { return static_cast<Element>(i * nb + j); };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element i = 0; i < a.size(); ++i)
    for (Element j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
      add[x * n + y] = pair(a.add(xi, yi), b.add(xj, yj));
      mul[x * n + y] = pair(a.mul(xi, yi), b.mul(xj, yj));
    }
  }
  return FiniteSemiring(a.name() + "*" + b.name(), std::move(labels), std::move(add), std::move(mul),
                        pair(a.zero(), b.zero()), pair(a.one(), b.one()));
}

/// "x1=1, x2=a" using the algebra's labels.
inline std::string format_assignment(const FiniteSemiring& a, const Assignment& sigma) {
  std::string out;
  for (const auto& [var, value] : sigma) {
    if (!out.empty()) out += ", ";
    out += "x" + std::to_string(var) + "=" + a.label(value);
  }
  return out;
}

}  // namespace vsemi
