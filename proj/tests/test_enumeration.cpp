#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "vsemi/enumeration.hpp"

namespace vsemi {
namespace {

std::vector<std::string> texts(const std::vector<ReducedRep>& reps) {
  std::vector<std::string> out;
  for (const auto& r : reps) out.push_back(to_string(r));
  return out;
}

// x1 -> x, x2 -> y, products written by juxtaposition.
std::string with_letters(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '*') continue;
    if (s[i] == 'x' && i + 1 < s.size()) {
      out += s[i + 1] == '1' ? 'x' : 'y';
      ++i;
      continue;
    }
    out += s[i];
  }
  return out;
}

TEST(AllMonomials, CanonicalOrder) {
  const auto m = all_monomials(3);
  EXPECT_EQ(to_string(m), "1+x1+x2+x3+x1*x2+x1*x3+x2*x3+x1*x2*x3");
}

TEST(EnumerateReduced, NullaryAndUnary) {
  EXPECT_EQ(texts(enumerate_reduced(0)), (std::vector<std::string>{"0", "1", "1+1"}));
  EXPECT_EQ(texts(enumerate_reduced(1)),
            (std::vector<std::string>{"0", "1", "1+1", "1+x1", "x1", "x1+x1"}));
}

// The commonly quoted 18-term list of binary terms omits x+x+y+y, which is
// reduced (no monomial occurs three times) and is distinguished from every
// listed term by T3, e.g. x+x+y+y = a but x+x+y = 1 at x=0, y=1.
TEST(EnumerateReduced, BinaryListIsPublishedListPlusXXYY) {
  std::set<std::string> published = {
      "0",   "1",   "x",    "y",     "xy",    "1+1",   "1+x",   "1+y",   "1+xy",
      "x+x", "x+y", "x+xy", "y+y",   "y+xy",  "xy+xy", "1+x+y", "x+x+y", "x+y+y"};
  ASSERT_EQ(published.size(), 18u);
  std::set<std::string> ours;
  for (const auto& t : texts(enumerate_reduced(2))) ours.insert(with_letters(t));

  const auto t3 = builtin("t3");
  const Term extra = parse("x+x+y+y");
  for (const auto& p : published) {
    std::string spelled;
    for (std::size_t i = 0; i < p.size(); ++i) {
      spelled += p[i];
      if (p[i] != '+' && i + 1 < p.size() && p[i + 1] != '+') spelled += '*';
    }
    EXPECT_FALSE(testing::agree_everywhere(t3, extra, parse(spelled), 2)) << p;
  }
  published.insert("x+x+y+y");
  EXPECT_EQ(ours, published);
}

TEST(EnumerateReduced, SortedByTextAndDistinct) {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto t = texts(enumerate_reduced(n));
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_EQ(std::adjacent_find(t.begin(), t.end()), t.end());
  }
}

TEST(EnumerateReduced, ArityCap) {
  EXPECT_THROW(enumerate_reduced(4), std::invalid_argument);
  EXPECT_THROW(enumerate_reduced(5, 5), std::invalid_argument);
}

TEST(EnumerateReduced, EveryRepIsAFixpointOfNormalize) {
  for (unsigned n = 0; n <= 3; ++n)
    for (const auto& rep : enumerate_reduced(n)) ASSERT_EQ(normalize(to_term(rep)), rep) << to_string(rep);
}

TEST(EnumerateReduced, EvaluationInT3IsInjective) {
  const auto t3 = builtin("t3");
  for (unsigned n = 0; n <= 3; ++n) {
    std::set<std::vector<Element>> tables;
    const auto reps = enumerate_reduced(n);
    for (const auto& rep : reps) {
      const Term t = to_term(rep);
      std::vector<Element> table;
      Assignment sigma;
      detail::for_each_tuple(3, n, [&](std::span<const Element> point) {
        for (unsigned v = 0; v < n; ++v) sigma[v + 1] = point[v];
        table.push_back(eval_term(t3, t, sigma));
        return true;
      });
      tables.insert(table);
    }
    EXPECT_EQ(tables.size(), reps.size()) << n;
    EXPECT_EQ(tables.size(), clone_count(t3, n)) << n;
  }
}

TEST(FreeSpectrum, CountsAndMonotonicity) {
  EXPECT_EQ(free_spectrum(0).count, 3u);
  EXPECT_EQ(free_spectrum(1).count, 6u);
  EXPECT_EQ(free_spectrum(2).count, 19u);
  EXPECT_FALSE(free_spectrum(2).reps);
  const auto with = free_spectrum(2, true);
  ASSERT_TRUE(with.reps);
  EXPECT_EQ(with.reps->size(), with.count);
  for (unsigned n = 0; n < 3; ++n) EXPECT_LT(free_spectrum(n).count, free_spectrum(n + 1).count);
  EXPECT_EQ(free_spectrum(3).count, clone_count(builtin("t3"), 3));
}

TEST(CloneCount, Examples) {
  const auto t3 = builtin("t3");
  EXPECT_EQ(clone_count(t3, 0), 3u);
  EXPECT_EQ(clone_count(t3, 1), 6u);
  EXPECT_EQ(clone_count(t3, 2), 19u);
  // Unary term functions of the two-element lattice: 0, 1 and x; x+1 = 1
  // and x*x = x + x = x add nothing.
  EXPECT_EQ(clone_count(builtin("two"), 1), 3u);
  // GF(2): 0, 1, x, x+1.
  EXPECT_EQ(clone_count(builtin("gf2"), 1), 4u);
}

TEST(CloneCount, RejectsHugeTables) {
  EXPECT_THROW(clone_count(builtin("t3"), 12), AlgebraError);
}

}  // namespace
}  // namespace vsemi
