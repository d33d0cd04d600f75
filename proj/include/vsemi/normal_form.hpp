#pragma once

// Sum-of-products normal forms for commutative multiplicatively idempotent
// semirings satisfying x + y + xyz = x + y.
//
// Every term is equal to a formal sum of monomials (products of distinct
// variables) listed in the canonical order on index sets. Within the variety
// the sum can be thinned out: whenever the union of two summands I_i, I_j is
// contained in a third summand I_k (positions pairwise distinct), the summand
// at position k is redundant. A sum with no such triple is *reduced*,
// and reduced sums are unique: two terms are equal in the variety iff their
// reduced sums coincide.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsemi/term.hpp"

namespace vsemi {

/// A product of distinct variables, stored as its sorted index set. The empty
/// set is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<VarId> indices) : indices_(indices) { canonicalize(); }
  explicit Monomial(std::vector<VarId> indices) : indices_(std::move(indices)) { canonicalize(); }

  const std::vector<VarId>& indices() const noexcept { return indices_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }

  bool is_subset_of(const Monomial& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
  }

  /// Product in an idempotent monoid: the union of the index sets.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.indices_.reserve(a.indices_.size() + b.indices_.size());
    std::set_union(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
                   std::back_inserter(out.indices_));
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Canonical order: smaller sets first, equal sizes compared on their
  // ascending index tuples.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

 private:
  void canonicalize() {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() == 0)
      throw std::invalid_argument("variable index must be positive");
  }

  std::vector<VarId> indices_;
};

/// I <= J in the canonical linear order on finite index sets.
inline bool monomial_leq(const Monomial& a, const Monomial& b) { return a <= b; }

/// A formal sum of monomials kept in canonical order. Duplicates are
/// significant because addition is not idempotent.
using MonomialSum = std::vector<Monomial>;

/// Positions (0-based, pairwise distinct) of summands where the union of
/// sum[i] and sum[j] is contained in sum[k].
struct ReducibleTriple {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  friend bool operator==(const ReducibleTriple&, const ReducibleTriple&) = default;
};

namespace detail {

inline MonomialSum merge_sums(const MonomialSum& a, const MonomialSum& b) {
  MonomialSum out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline MonomialSum multiply_sums(const MonomialSum& a, const MonomialSum& b) {
  MonomialSum out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) out.push_back(p * q);
  std::sort(out.begin(), out.end());
  return out;
}

// Position k can be removed iff at least two other live summands divide it.
inline bool removable(const MonomialSum& sum, const std::vector<bool>& live, std::size_t k) {
  int divisors = 0;
  for (std::size_t r = 0; r < sum.size(); ++r) {
    if (r == k || !live[r]) continue;
    if (sum[r].is_subset_of(sum[k]) && ++divisors == 2) return true;
  }
  return false;
}

}  // namespace detail

/// Distributes products over sums and sorts the summands. The result equals
/// the input in every commutative multiplicatively idempotent semiring.
inline MonomialSum flatten(const Term& t) {
  switch (t.kind()) {
    case TermKind::Zero:
      return {};
    case TermKind::One:
      return {Monomial{}};
    case TermKind::Var:
      return {Monomial{t.var_index()}};
    case TermKind::Add:
      return detail::merge_sums(flatten(t.lhs()), flatten(t.rhs()));
    case TermKind::Mul:
      return detail::multiply_sums(flatten(t.lhs()), flatten(t.rhs()));
  }
  return {};
}

/// All positions k that currently head some reducible triple, ascending.
inline std::vector<std::size_t> reducible_positions(const MonomialSum& sum) {
  const std::vector<bool> live(sum.size(), true);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sum.size(); ++k)
    if (detail::removable(sum, live, k)) out.push_back(k);
  return out;
}

/// Finds a reducible triple, taking k as large as possible and then the
/// lexicographically least (i, j) for that k. Returns nullopt on reduced input.
inline std::optional<ReducibleTriple> find_reducible(const MonomialSum& sum) {
  for (std::size_t k = sum.size(); k-- > 0;) {
    std::optional<std::size_t> first;
    for (std::size_t r = 0; r < sum.size(); ++r) {
      if (r == k || !sum[r].is_subset_of(sum[k])) continue;
      if (!first) {
        first = r;
      } else {
        return ReducibleTriple{*first, r, k};
      }
    }
  }
  return std::nullopt;
}

class ReducedRep;
inline ReducedRep reduce(MonomialSum sum);

/// A sorted, reduced sum of monomials: the normal form of a term. The empty
/// sum is 0.
class ReducedRep {
 public:
  ReducedRep() = default;

  const MonomialSum& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  bool empty() const noexcept { return summands_.empty(); }

  friend bool operator==(const ReducedRep&, const ReducedRep&) = default;

  /// Wraps a sum that is already sorted and reduced; nullopt otherwise.
  static std::optional<ReducedRep> from_reduced(MonomialSum sum) {
    if (!std::is_sorted(sum.begin(), sum.end()) || find_reducible(sum)) return std::nullopt;
    ReducedRep rep;
    rep.summands_ = std::move(sum);
    return rep;
  }

 private:
  friend ReducedRep reduce(MonomialSum sum);
  std::vector<Monomial> summands_;
};

/// Repeatedly deletes the largest removable position until the sum is
/// reduced. Deletion never makes a later position removable, so a single
/// descending sweep suffices.
inline ReducedRep reduce(MonomialSum sum) {
  if (!std::is_sorted(sum.begin(), sum.end())) std::sort(sum.begin(), sum.end());
  std::vector<bool> live(sum.size(), true);
  for (std::size_t k = sum.size(); k-- > 0;)
    if (detail::removable(sum, live, k)) live[k] = false;

  ReducedRep out;
  out.summands_.reserve(sum.size());
  for (std::size_t r = 0; r < sum.size(); ++r)
    if (live[r]) out.summands_.push_back(std::move(sum[r]));
  return out;
}

/// Normal form of t. Subterms are reduced as they are combined, which keeps
/// intermediate sums small; by uniqueness of reduced forms the result is
/// reduce(flatten(t)).
inline ReducedRep normalize(const Term& t) {
  switch (t.kind()) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Var:
      return reduce(flatten(t));
    case TermKind::Add:
      return reduce(detail::merge_sums(normalize(t.lhs()).summands(),
                                       normalize(t.rhs()).summands()));
    case TermKind::Mul:
      return reduce(detail::multiply_sums(normalize(t.lhs()).summands(),
                                          normalize(t.rhs()).summands()));
  }
  return {};
}

/// Left-associated sum of left-associated products with ascending indices.
inline Term to_term(const MonomialSum& sum) {
  if (sum.empty()) return Term::zero();
  auto monomial_term = [](const Monomial& m) {
    if (m.empty()) return Term::one();
    Term acc = Term::var(m.indices().front());
    for (std::size_t i = 1; i < m.indices().size(); ++i)
      acc = Term::mul(std::move(acc), Term::var(m.indices()[i]));
    return acc;
  };
  Term acc = monomial_term(sum.front());
  for (std::size_t i = 1; i < sum.size(); ++i)
    acc = Term::add(std::move(acc), monomial_term(sum[i]));
  return acc;
}

inline Term to_term(const ReducedRep& rep) { return to_term(rep.summands()); }

/// Decides t = u in the variety (the word problem).
inline bool decide_equal(const Term& t, const Term& u) { return normalize(t) == normalize(u); }

inline std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.indices().size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(m.indices()[i]);
  }
  return out;
}

/// Canonical text: "x1*x2+x3", "1" for the empty monomial, "0" for the empty sum.
inline std::string to_string(const MonomialSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    if (i) out += '+';
    out += to_string(sum[i]);
  }
  return out;
}

inline std::string to_string(const ReducedRep& rep) { return to_string(rep.summands()); }

}  // namespace vsemi
