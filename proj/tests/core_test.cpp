#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sqdiff/colouring_io.hpp"
#include "sqdiff/construct.hpp"
#include "sqdiff/search.hpp"
#include "sqdiff/solutions.hpp"
#include "sqdiff/verify.hpp"

namespace sqdiff {
namespace {

TEST(IsSolution, Examples) {
  EXPECT_TRUE(is_solution(2, 1, 1, 2));
  EXPECT_FALSE(is_solution(1, 1, 1, 5));
  EXPECT_TRUE(is_solution(5, 1, 2, 5));
}

TEST(IsSolution, OutOfRangeIsFalse) {
  EXPECT_FALSE(is_solution(5, 1, 2, 4));
  EXPECT_FALSE(is_solution(0, 0, 0, 10));
  EXPECT_FALSE(is_solution(BigNat(-3), BigNat(-4), BigNat(1), BigNat(10)));
  EXPECT_TRUE(is_solution(BigNat(10), BigNat(1), BigNat(3), BigNat(10)));
}

TEST(IsSolution, AgreesWithEnumerationUpTo60) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto sols = enumerate_solutions(n);
    for (std::uint64_t x = 1; x <= n; ++x)
      for (std::uint64_t y = 1; y <= n; ++y)
        for (std::uint64_t z = 1; z <= n; ++z) {
          const bool listed = std::binary_search(sols.begin(), sols.end(), SolutionTriple{x, y, z});
          ASSERT_EQ(is_solution(x, y, z, n), listed) << n << ' ' << x << ' ' << y << ' ' << z;
        }
  }
}

TEST(EnumerateSolutions, Examples) {
  EXPECT_TRUE(enumerate_solutions(1).empty());
  EXPECT_EQ(enumerate_solutions(2), (std::vector<SolutionTriple>{{2, 1, 1}}));
  EXPECT_EQ(enumerate_solutions(5),
            (std::vector<SolutionTriple>{{2, 1, 1}, {3, 2, 1}, {4, 3, 1}, {5, 1, 2}, {5, 4, 1}}));
}

TEST(EnumerateSolutions, MatchesCubicOracleAndIsSorted) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const auto sols = enumerate_solutions(n);
    const auto ref = oracle::triples(n);
    ASSERT_EQ(sols.size(), ref.size());
    for (std::size_t i = 0; i < sols.size(); ++i)
      EXPECT_EQ(std::tuple(sols[i].x, sols[i].y, sols[i].z), ref[i]);
  }
}

TEST(EnumerateSolutions, CardinalityFormulaUpTo500) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t expected = 0;
    for (std::uint64_t z = 1; z * z <= n - 1 && n >= 1; ++z) expected += n - z * z;
    ASSERT_EQ(enumerate_solutions(n).size(), expected) << n;
    ASSERT_EQ(solution_count(n), expected);
  }
}

TEST(EnumerateSolutions, RefusesHugeN) {
  EXPECT_THROW(enumerate_solutions(std::uint64_t{1} << 40), CapacityError);
}

TEST(Colouring, RejectsMalformedRuns) {
  EXPECT_THROW(Colouring::run_form(4, 2, {{1, 1, 0}, {3, 4, 1}}), InvariantError);  // gap
  EXPECT_THROW(Colouring::run_form(4, 2, {{1, 2, 0}, {2, 4, 1}}), InvariantError);  // overlap
  EXPECT_THROW(Colouring::run_form(4, 2, {{1, 3, 0}}), InvariantError);             // short
  EXPECT_THROW(Colouring::run_form(4, 2, {{1, 4, 2}}), InvariantError);             // colour >= k
  EXPECT_THROW(Colouring::run_form(4, 2, {{2, 4, 0}}), InvariantError);             // not from 1
  EXPECT_THROW(Colouring::explicit_form(2, {0, 1, 2}), InvariantError);
  EXPECT_THROW(Colouring::explicit_form(0, {}), InvariantError);
}

TEST(Colouring, ExplicitRunConversionIsLossless) {
  std::mt19937_64 rng(0);
  for (int rep = 0; rep < 200; ++rep) {
    const auto cols = oracle::random_block_colouring(rng, 1 + rng() % 80, 1 + rng() % 4);
    const std::uint32_t k = *std::max_element(cols.begin(), cols.end()) + 1;
    const auto c = Colouring::explicit_form(k, cols);
    const auto runs = c.as_runs();
    EXPECT_EQ(runs.as_explicit(), c);
    for (std::size_t i = 0; i < cols.size(); ++i) EXPECT_EQ(runs.colour_of(i + 1), cols[i]);
  }
}

TEST(Colouring, ExplicitViewRespectsLimit) {
  const auto c = construct_lower_bound(6);
  EXPECT_THROW(c.to_explicit(), CapacityError);
}

TEST(ColouringText, BitExactRunForm) {
  EXPECT_EQ(colouring_to_string(construct_lower_bound(2)), "4 2\nR\n1 1 0\n2 4 1\n");
  EXPECT_EQ(colouring_to_string(Colouring::explicit_form(2, {0, 1, 1})), "3 2\nE\n0 1 1\n");
}

TEST(ColouringText, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    const auto cols = oracle::random_colouring(rng, 1 + rng() % 30, 3);
    const auto c = Colouring::explicit_form(3, cols);
    EXPECT_EQ(colouring_from_string(colouring_to_string(c)), c);
    EXPECT_EQ(colouring_from_string(colouring_to_string(c.as_runs())), c.as_runs());
  }
  const auto big = construct_lower_bound(8);
  EXPECT_EQ(colouring_from_string(colouring_to_string(big)), big);
}

TEST(ColouringText, RejectsMalformed) {
  EXPECT_THROW(colouring_from_string("3 2\nE\n0 1\n"), ParseError);
  EXPECT_THROW(colouring_from_string("3 2\nX\n0 1 1\n"), ParseError);
  EXPECT_THROW(colouring_from_string("03 2\nE\n0 1 1\n"), ParseError);
  EXPECT_THROW(colouring_from_string("3 2\nR\n1 3\n"), ParseError);
  EXPECT_THROW(colouring_from_string("3 2\nE\n0 -1 1\n"), ParseError);
  EXPECT_THROW(colouring_from_string("3 2\nR\n1 2 0\n"), InvariantError);
}

TEST(Verify, Examples) {
  const auto v = verify_colouring(Colouring::explicit_form(1, {0, 0}));
  ASSERT_FALSE(v.clean());
  EXPECT_EQ(v.witness->triple, (BigTriple{2, 1, 1}));
  EXPECT_EQ(v.witness->colour, 0u);
  EXPECT_TRUE(verify_colouring(Colouring::explicit_form(1, {0})).clean());
  EXPECT_TRUE(verify_colouring(construct_lower_bound(3)).clean());
}

TEST(Verify, RunPathFindsLeastWitness) {
  // One colour on [1, 10]: least triple is (2, 1, 1).
  const auto v = verify_runs(Colouring::run_form(10, 1, {{1, 10, 0}}));
  ASSERT_FALSE(v.clean());
  EXPECT_EQ(v.witness->triple, (BigTriple{2, 1, 1}));
  // [2, 5] alone is clean (no z in [2,5] with z^2 <= 3); [2, 6] has (6, 2, 2).
  const auto w = verify_runs(Colouring::run_form(6, 2, {{1, 1, 0}, {2, 6, 1}}));
  ASSERT_FALSE(w.clean());
  EXPECT_EQ(w.witness->triple, (BigTriple{6, 2, 2}));
  EXPECT_TRUE(verify_runs(Colouring::run_form(5, 2, {{1, 1, 0}, {2, 5, 1}})).clean());
}

void expect_agreement(const std::vector<Colour>& cols, std::uint32_t k) {
  const auto c = Colouring::explicit_form(k, cols);
  const auto ref = oracle::least_mono(cols);
  const auto fast = verify_runs(c.as_runs());
  const auto brute = verify_explicit(cols);
  ASSERT_EQ(fast.clean(), !ref.has_value());
  ASSERT_EQ(brute.clean(), !ref.has_value());
  if (ref) {
    const auto [x, y, z] = *ref;
    EXPECT_EQ(fast.witness->triple, (BigTriple{x, y, z}));
    EXPECT_EQ(brute.witness->triple, (BigTriple{x, y, z}));
    EXPECT_EQ(fast.witness->colour, cols[x - 1]);
  }
}

TEST(Verify, RunPathAgreesWithBruteForce) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 1 + rng() % 300;
    const std::uint32_t k = 1 + rng() % 4;
    expect_agreement(rep % 2 ? oracle::random_colouring(rng, n, k)
                             : oracle::random_block_colouring(rng, n, k), k);
  }
}

TEST(Verify, RunPathAgreesOnCleanColourings) {
  // Clean inputs come from the searcher; the oracle checks them independently.
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const auto res = feasible(3, n);
    ASSERT_EQ(res.status, SearchStatus::Colourable);
    expect_agreement(res.witness->colours(), 3);
  }
  for (unsigned k = 2; k <= 4; ++k) {
    const auto c = construct_lower_bound(k);
    expect_agreement(c.to_explicit(), k);
  }
}

}  // namespace
}  // namespace sqdiff
