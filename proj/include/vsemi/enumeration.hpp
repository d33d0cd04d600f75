#pragma once

// The free algebra of V on n generators, listed as reduced representations,
// and an independent count of n-ary term functions of a finite algebra.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vsemi/finite_algebra.hpp"
#include "vsemi/normal_form.hpp"

namespace vsemi {

inline constexpr unsigned kDefaultMaxArity = 3;
/// Hard limit: 3^(2^5) candidates is out of reach for the brute-force sweep.
inline constexpr unsigned kHardMaxArity = 4;

/// All subsets of {1..n} in canonical order.
inline std::vector<Monomial> all_monomials(unsigned n) {
  std::vector<Monomial> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<VarId> idx;
    for (unsigned bit = 0; bit < n; ++bit)
      if (mask & (std::uint32_t{1} << bit)) idx.push_back(bit + 1);
    out.emplace_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every reduced representation over x1..xn, ordered by canonical text.
/// Candidates are all multiplicity vectors in {0,1,2}^(2^n) over the
/// monomials; a monomial used three times is never reduced.
inline std::vector<ReducedRep> enumerate_reduced(unsigned n, unsigned max_arity = kDefaultMaxArity) {
  if (n > max_arity || n > kHardMaxArity)
    throw std::invalid_argument("arity " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(std::min(max_arity, kHardMaxArity)));
  const auto monomials = all_monomials(n);
  std::vector<unsigned> mult(monomials.size(), 0);
  std::vector<ReducedRep> out;
  MonomialSum sum;
  while (true) {
    sum.clear();
    for (std::size_t i = 0; i < monomials.size(); ++i)
      for (unsigned c = 0; c < mult[i]; ++c) sum.push_back(monomials[i]);
    if (auto rep = ReducedRep::from_reduced(sum)) out.push_back(std::move(*rep));

    std::size_t pos = 0;
    while (pos < mult.size() && ++mult[pos] == 3) mult[pos++] = 0;
    if (pos == mult.size()) break;
  }
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(to_string(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ReducedRep> sorted;
  sorted.reserve(out.size());
  for (const auto& [text, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

struct FreeSpectrumEntry {
  unsigned n;
  std::size_t count;
  std::optional<std::vector<ReducedRep>> reps;
};

inline FreeSpectrumEntry free_spectrum(unsigned n, bool with_reps = false,
                                       unsigned max_arity = kDefaultMaxArity) {
  auto reps = enumerate_reduced(n, max_arity);
  FreeSpectrumEntry entry{n, reps.size(), std::nullopt};
  if (with_reps) entry.reps = std::move(reps);
  return entry;
}

/// Number of distinct functions A^n -> A generated from the constants 0, 1
/// and the projections by pointwise + and *. Uses only the Cayley tables.
inline std::size_t clone_count(const FiniteSemiring& a, unsigned n,
                               std::size_t max_table_cells = std::size_t{1} << 16) {
  if (a.size() > 255) throw AlgebraError("clone_count supports algebras of at most 255 elements");
  std::size_t cells = 1;
  for (unsigned i = 0; i < n; ++i) {
    cells *= a.size();
    if (cells > max_table_cells) throw AlgebraError("clone_count: |A|^n is too large");
  }

  // A function is its value table over A^n, points in lexicographic order,
  // packed one byte per value.
  std::vector<std::string> funcs;
  std::unordered_set<std::string> seen;
  auto insert = [&](std::string f) {
    if (seen.insert(f).second) funcs.push_back(std::move(f));
  };
  insert(std::string(cells, static_cast<char>(a.zero())));
  insert(std::string(cells, static_cast<char>(a.one())));
  for (unsigned var = 0; var < n; ++var) {
    std::string f(cells, '\0');
    std::size_t stride = 1;
    for (unsigned k = var + 1; k < n; ++k) stride *= a.size();
    for (std::size_t p = 0; p < cells; ++p) f[p] = static_cast<char>((p / stride) % a.size());
    insert(std::move(f));
  }

  auto apply = [&](const std::string& f, const std::string& g, bool plus) {
    std::string h(cells, '\0');
    for (std::size_t p = 0; p < cells; ++p) {
      const auto x = static_cast<Element>(static_cast<unsigned char>(f[p]));
      const auto y = static_cast<Element>(static_cast<unsigned char>(g[p]));
      h[p] = static_cast<char>(plus ? a.add(x, y) : a.mul(x, y));
    }
    return h;
  };
  // Every pair (i, j) with j <= i is combined once i is reached; the list
  // grows as new functions appear, so the loop ends at the closure.
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      // Index afresh each time: insert() may reallocate `funcs`.
      insert(apply(funcs[i], funcs[j], true));
      insert(apply(funcs[j], funcs[i], true));
      insert(apply(funcs[i], funcs[j], false));
      insert(apply(funcs[j], funcs[i], false));
    }
  }
  return funcs.size();
}

}  // namespace vsemi
