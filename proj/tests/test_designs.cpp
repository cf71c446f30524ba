#include <gtest/gtest.h>

#include "support.hpp"

using namespace hwe;
using namespace hwe::testing;

namespace {

SupportMultiset blocks(std::size_t n, std::vector<std::pair<Mask, std::uint64_t>> entries) {
  std::sort(entries.begin(), entries.end());
  return {n, std::move(entries)};
}

}  // namespace

TEST(IsDesign, Examples) {
  const auto b = blocks(6, {{mask_of({1, 2, 3, 4}), 1}, {mask_of({1, 2, 5, 6}), 1}, {mask_of({3, 4, 5, 6}), 1}});
  const auto r = is_t_design(b, 1);
  EXPECT_TRUE(r.is_design);
  EXPECT_EQ(r.lambda, Integer(2));
  EXPECT_FALSE(is_t_design(b, 2).is_design);

  // A single block is a design at t = |B| only when it is all of E; a proper
  // block misses the other t-subsets.
  const auto single = is_t_design(blocks(3, {{mask_of({1, 2, 3}), 1}}), 3);
  EXPECT_TRUE(single.is_design);
  EXPECT_EQ(single.lambda, Integer(1));
  EXPECT_FALSE(is_t_design(blocks(5, {{mask_of({2, 4, 5}), 1}}), 3).is_design);

  const auto bad = is_t_design(blocks(3, {{mask_of({1, 2}), 1}, {mask_of({1, 3}), 1}}), 1);
  EXPECT_FALSE(bad.is_design);
  EXPECT_FALSE(bad.lambda.has_value());
  ASSERT_EQ(bad.violations.size(), 3u);
  EXPECT_EQ(bad.violations[0], std::make_pair(mask_of({1}), Integer(2)));
  EXPECT_EQ(bad.violations[1], std::make_pair(mask_of({2}), Integer(1)));

  const auto empty = is_t_design(SupportMultiset{4, {}}, 2);
  EXPECT_TRUE(empty.is_design);
  EXPECT_EQ(empty.lambda, Integer(0));
}

TEST(IsDesign, Multiplicity) {
  const auto b = blocks(4, {{mask_of({1, 2}), 2}, {mask_of({3, 4}), 2}, {mask_of({1, 3}), 1}, {mask_of({2, 4}), 1}});
  const auto r = is_t_design(b, 1);
  EXPECT_TRUE(r.is_design);
  EXPECT_EQ(r.lambda, Integer(3));
}

TEST(IsDesign, ViolationsCapped) {
  std::vector<std::pair<Mask, std::uint64_t>> e;
  for (int i = 2; i <= 9; ++i) e.emplace_back(mask_of({1, i}), 1);
  const auto r = is_t_design(blocks(9, e), 1);
  EXPECT_FALSE(r.is_design);
  EXPECT_EQ(r.violations.size(), 5u);
}

TEST(IsDesign, Errors) {
  try {
    is_t_design(blocks(4, {{mask_of({1, 2}), 1}, {mask_of({1, 2, 3}), 1}}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedBlockSizes);
  }
  try {
    is_t_design(blocks(4, {{mask_of({1, 2}), 1}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StrengthExceedsBlockSize);
  }
  EXPECT_THROW(is_t_design(blocks(4, {{mask_of({1, 2}), 1}}), 0), Error);
}

// The harmonic vanishing criterion agrees with incidence counting on
// hand-built multisets, designs and non-designs alike.
TEST(Delsarte, HandBuilt) {
  // Fano plane: a 2-(7,3,1) design.
  const std::vector<std::vector<int>> fano = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<std::pair<Mask, std::uint64_t>> e;
  for (const auto& l : fano) {
    Mask m = 0;
    for (int x : l) m |= Mask{1} << (x - 1);
    e.emplace_back(m, 1);
  }
  const auto b = blocks(7, e);
  EXPECT_TRUE(delsarte_check(b, 2));
  EXPECT_TRUE(is_t_design(b, 2).is_design);
  EXPECT_FALSE(delsarte_check(b, 3));
  EXPECT_FALSE(is_t_design(b, 3).is_design);

  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 5, size = 2 + trial % (n - 3);
    const auto all = subsets_lex(n, size);
    std::vector<std::pair<Mask, std::uint64_t>> chosen;
    // Sometimes the complete design, sometimes a random sub-multiset.
    for (Mask m : all) {
      const std::uint64_t mult = trial % 7 == 0 ? 2 : rng() % 3;
      if (mult) chosen.emplace_back(m, mult);
    }
    const auto bl = blocks(n, chosen);
    for (long t = 1; t <= static_cast<long>(size); ++t)
      EXPECT_EQ(delsarte_check(bl, t), is_t_design(bl, t).is_design) << trial << " t=" << t;
  }
}

TEST(HarmonicDesign, SixThreeExample) {
  const auto c = binary_code({"110000", "001100", "000011"});
  EXPECT_TRUE(harmonic_design_check(c, 2, 4, 1));
  for (const auto& f : harm_basis(6, 1)) EXPECT_EQ(higher_A(c, f, 2).A[4], 0);
  EXPECT_TRUE(harmonic_design_check(c, 2, 4, 0));
  EXPECT_TRUE(is_t_design(subcode_supports(c, 2, 4), 1).is_design);
  EXPECT_EQ(is_t_design(subcode_supports(c, 2, 4), 1).lambda, Integer(2));
}

TEST(HarmonicDesign, EquivalenceRandom) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4}[trial % 3];
    const std::size_t n = 4 + trial % 5, k = 1 + rng() % std::min<std::size_t>(n - 1, q == 2 ? 5 : 3);
    const auto c = random_code(rng, q, n, k);
    for (long r = 1; r <= static_cast<long>(k); ++r) {
      const auto dist = support_distribution(c, r);
      for (std::size_t i = generalized_hamming_weight(c, r); i <= n; ++i)
        for (long t = 1; t <= 2 && t <= static_cast<long>(i); ++t) {
          const auto s = dist.with_size(i);
          EXPECT_EQ(harmonic_design_check(dist, r, static_cast<long>(i), t), is_t_design(s, t).is_design)
              << "trial " << trial << " r=" << r << " i=" << i << " t=" << t;
        }
    }
  }
}

TEST(AssmusMattson, SixThreeExample) {
  // Self-dual, d_1 = 2 and A_2 = A_4 = 3 on each side: L_{1,1} = {2, 4} is
  // one too many, so the hypothesis fails at mu = 1 even though S_{2,4}(C)
  // is a 1-design.
  const auto c = binary_code({"110000", "001100", "000011"});
  const auto rep = am_check(c, 2, 1);
  EXPECT_EQ(rep.d, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(rep.d_dual, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(rep.L_sets, (std::vector<std::vector<std::size_t>>{{2, 4}, {4}}));
  EXPECT_EQ(rep.margins, (std::vector<long>{-1, 2}));
  EXPECT_FALSE(rep.hypothesis_holds);
  EXPECT_FALSE(rep.verified());
  EXPECT_TRUE(rep.conclusions.empty());
  bool found = false;
  for (const auto& con : rep.observed)
    if (con.side == "C" && con.i == 4) {
      found = true;
      EXPECT_TRUE(con.report.is_design);
      EXPECT_EQ(con.report.lambda, Integer(2));
    }
  EXPECT_TRUE(found);
}

TEST(AssmusMattson, HypothesisFails) {
  const auto c = binary_code({"100011", "010010", "001001"});
  const auto rep = am_check(c, 1, 1);
  EXPECT_FALSE(rep.hypothesis_holds);
  EXPECT_TRUE(rep.conclusions.empty());
  bool negative = false;
  for (long m : rep.margins) negative |= m < 0;
  EXPECT_TRUE(negative);
}

TEST(AssmusMattson, Errors) {
  const auto c = binary_code({"110000", "001100", "000011"});
  try {
    am_check(c, 1, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::StrengthTooLarge);
  }
  EXPECT_THROW(am_check(c, 4, 1), Error);
  EXPECT_THROW(am_check(c, 0, 1), Error);
}

// Every conclusion is re-checked independently; a design the checker claims
// must survive direct incidence counting.
TEST(AssmusMattson, ConclusionsAreDesigns) {
  std::mt19937_64 rng(102);
  int held = 0;
  const std::vector<std::string> named = {"ex53", "hamming7", "tetracode", "rs4"};
  std::vector<LinearCode> codes;
  for (const auto& name : named) codes.push_back(read_code_file(std::string(HWE_FIXTURES) + "/" + name + ".code"));
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3}[trial % 2];
    const std::size_t n = 4 + trial % 5;
    codes.push_back(random_code(rng, q, n, 1 + rng() % (n - 1)));
  }
  for (const auto& c : codes) {
    const std::size_t d1 = generalized_hamming_weight(c, 1);
    const LinearCode cd = dual(c);
    for (long r = 1; r <= static_cast<long>(c.dimension()); ++r)
      for (long t = 1; t <= static_cast<long>(std::min<std::size_t>(d1, 3)); ++t) {
        const auto rep = am_check(c, r, t);
        EXPECT_EQ(rep.hypothesis_holds, std::all_of(rep.margins.begin(), rep.margins.end(), [](long m) { return m >= 0; }));
        if (!rep.hypothesis_holds) {
          EXPECT_TRUE(rep.conclusions.empty());
          continue;
        }
        ++held;
        EXPECT_TRUE(rep.counterexamples.empty());
        for (const auto& con : rep.conclusions) {
          const auto& code = con.side == "C" ? c : cd;
          const auto s = subcode_supports(code, con.r, con.i);
          EXPECT_EQ(is_t_design(s, t), con.report);
          EXPECT_TRUE(con.report.is_design);
        }
      }
  }
  EXPECT_GT(held, 0);
}

TEST(AssmusMattson, HammingCode) {
  const auto c = read_code_file(std::string(HWE_FIXTURES) + "/hamming7.code");
  const auto rep = am_check(c, 1, 2);
  EXPECT_TRUE(rep.hypothesis_holds);
  EXPECT_TRUE(rep.verified());
  // Weight-3 words of the [7,4] Hamming code form the Fano plane.
  bool fano = false;
  for (const auto& con : rep.conclusions)
    if (con.side == "C" && con.i == 3) fano = con.report.lambda == Integer(1);
  EXPECT_TRUE(fano);
}
