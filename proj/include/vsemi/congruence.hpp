#pragma once

// Congruences of finite semirings and subdirect irreducibility.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vsemi/finite_algebra.hpp"

namespace vsemi {

/// An equivalence relation on {0, ..., n-1}. Each element maps to the least
/// element of its block, so equal relations compare equal.
class Partition {
 public:
  /// Every element in its own block.
  static Partition discrete(std::size_t n) {
    Partition p;
    p.rep_.resize(n);
    std::iota(p.rep_.begin(), p.rep_.end(), Element{0});
    return p;
  }
  /// One block containing everything.
  static Partition total(std::size_t n) {
    Partition p;
    p.rep_.assign(n, 0);
    return p;
  }
  /// From any block labelling: elements with equal labels share a block.
  static Partition from_labels(const std::vector<Element>& labels) {
    Partition p = discrete(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (labels[i] == labels[j]) {
          p.rep_[i] = p.rep_[j];
          break;
        }
    return p;
  }

  std::size_t size() const noexcept { return rep_.size(); }
  Element representative(Element x) const { return rep_.at(x); }
  bool related(Element x, Element y) const { return rep_.at(x) == rep_.at(y); }

  std::size_t block_count() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < rep_.size(); ++i)
      if (rep_[i] == i) ++count;
    return count;
  }
  bool is_discrete() const { return block_count() == rep_.size(); }
  bool is_total() const { return block_count() <= 1; }

  /// Blocks in order of their least element, each sorted ascending.
  std::vector<std::vector<Element>> blocks() const {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> slot(rep_.size());
    for (std::size_t i = 0; i < rep_.size(); ++i) {
      if (rep_[i] == i) {
        slot[i] = out.size();
        out.emplace_back();
      }
      out[slot[rep_[i]]].push_back(static_cast<Element>(i));
    }
    return out;
  }

  /// Intersection of the two relations.
  Partition meet(const Partition& other) const {
    std::vector<Element> labels(rep_.size());
    for (std::size_t i = 0; i < rep_.size(); ++i)
      labels[i] = static_cast<Element>(rep_[i] * rep_.size() + other.rep_.at(i));
    return from_labels(labels);
  }

  /// True if every pair related here is related in `other`.
  bool refines(const Partition& other) const {
    for (std::size_t i = 0; i < rep_.size(); ++i)
      if (!other.related(static_cast<Element>(i), rep_[i])) return false;
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Element> rep_;
};

/// "{0},{a,1}" using the algebra's labels.
inline std::string format_partition(const FiniteSemiring& a, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += ',';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += a.label(block[i]);
    }
    out += '}';
  }
  return out;
}

/// Whether p is compatible with both operations of a.
inline bool is_congruence(const FiniteSemiring& a, const Partition& p) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    const Element y = p.representative(x);
    if (x == y) continue;
    // Relating each element to its representative generates p, so checking
    // those pairs against every c suffices.
    for (Element c = 0; c < n; ++c) {
      if (!p.related(a.add(x, c), a.add(y, c)) || !p.related(a.add(c, x), a.add(c, y)) ||
          !p.related(a.mul(x, c), a.mul(y, c)) || !p.related(a.mul(c, x), a.mul(c, y)))
        return false;
    }
  }
  return true;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

  Element find(Element x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Element x, Element y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }
  Partition partition() {
    std::vector<Element> labels(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) labels[i] = find(static_cast<Element>(i));
    return Partition::from_labels(labels);
  }

 private:
  std::vector<Element> parent_;
};

}  // namespace detail

/// Cg(x, y): the least congruence relating x and y, by closing under
/// translations x+c, c+x, x*c, c*x until nothing new merges.
inline Partition principal_congruence(const FiniteSemiring& a, Element x, Element y) {
  const auto n = static_cast<Element>(a.size());
  if (x >= n || y >= n) throw AlgebraError("principal_congruence: element out of range");
  detail::UnionFind uf(n);
  uf.unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element u = 0; u < n; ++u) {
      const Element v = uf.find(u);
      if (u == v) continue;
      for (Element c = 0; c < n; ++c) {
        changed |= uf.unite(a.add(u, c), a.add(v, c));
        changed |= uf.unite(a.add(c, u), a.add(c, v));
        changed |= uf.unite(a.mul(u, c), a.mul(v, c));
        changed |= uf.unite(a.mul(c, u), a.mul(c, v));
      }
    }
  }
  return uf.partition();
}

struct SubdirectResult {
  bool irreducible;
  /// The least nontrivial congruence, present iff irreducible.
  std::optional<Partition> monolith;
  explicit operator bool() const noexcept { return irreducible; }
};

/// An algebra is subdirectly irreducible iff the principal congruences
/// Cg(x, y), x != y, have a nontrivial intersection; that intersection is
/// the monolith.
inline SubdirectResult is_subdirectly_irreducible(const FiniteSemiring& a) {
  if (a.size() < 2) throw AlgebraError("subdirect irreducibility is undefined for a trivial algebra");
  const auto n = static_cast<Element>(a.size());
  Partition meet = Partition::total(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      meet = meet.meet(principal_congruence(a, x, y));
      if (meet.is_discrete()) return {false, std::nullopt};
    }
  }
  return {true, meet};
}

}  // namespace vsemi
