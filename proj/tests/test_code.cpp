#include <gtest/gtest.h>

#include "support.hpp"

using namespace hwe;
using namespace hwe::testing;

TEST(Code, FromMatrix) {
  const auto c45 = binary_code({"11100", "00011"});
  EXPECT_EQ(c45.length(), 5u);
  EXPECT_EQ(c45.dimension(), 2u);
  EXPECT_EQ(binary_code({"111", "111"}).dimension(), 1u);
  EXPECT_EQ(binary_code({"110000", "001100", "000011"}).dimension(), 3u);
}

TEST(Code, FromMatrixErrors) {
  const Field f = Field::make(3);
  try {
    code_from_matrix(f, {{1, 0, 1}, {1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RowLengthMismatch);
  }
  try {
    code_from_matrix(f, {{1, 0, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ElementOutOfField);
  }
}

TEST(Code, RrefIsCanonical) {
  const auto a = binary_code({"11100", "00011"});
  const auto b = binary_code({"11111", "00011"});
  EXPECT_EQ(a, b);
}

TEST(Code, DualExamples) {
  const auto c = binary_code({"11100", "00011"});
  const auto d = dual(c);
  EXPECT_EQ(d.dimension(), 3u);
  EXPECT_EQ(d, binary_code({"10100", "01100", "00011"}));
  const auto full = binary_code({"100", "010", "001"});
  EXPECT_EQ(dual(full).dimension(), 0u);
  EXPECT_EQ(codewords(dual(full)).size(), 1u);
}

TEST(Code, DualRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[trial % 4];
    const std::size_t n = 3 + trial % 5, k = 1 + trial % (n - 1);
    const auto c = random_code(rng, q, n, k);
    const auto d = dual(c);
    EXPECT_EQ(d.dimension(), n - k);
    EXPECT_EQ(dual(d), c);
    const Field& f = c.field();
    for (std::size_t i = 0; i < c.dimension(); ++i)
      for (std::size_t j = 0; j < d.dimension(); ++j) {
        Elem dot = 0;
        for (std::size_t t = 0; t < n; ++t) dot = f.add(dot, f.mul(c.generator()(i, t), d.generator()(j, t)));
        EXPECT_EQ(dot, 0);
      }
  }
}

TEST(Code, Codewords) {
  const auto c = binary_code({"110", "001"});
  auto words = codewords(c);
  std::set<std::vector<Elem>> got(words.begin(), words.end());
  std::set<std::vector<Elem>> want{{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  EXPECT_EQ(got, want);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = random_code(rng, 3, 5, 1 + trial % 4);
    const auto ws = codewords(r);
    EXPECT_EQ(ws.size(), static_cast<std::size_t>(std::pow(3, r.dimension())));
    EXPECT_EQ(std::set<std::vector<Elem>>(ws.begin(), ws.end()).size(), ws.size());
  }
}

TEST(Code, Budget) {
  std::mt19937_64 rng(5);
  const auto c = random_code(rng, 4, 12, 10);
  try {
    codewords(c, Budget{1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
  try {
    support_distribution(c, 5, Budget{1000});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Subcodes, Counts) {
  const auto d = dual(binary_code({"11100", "00011"}));
  EXPECT_EQ(subcodes(d, 2).size(), 7u);
  const auto zero = subcodes(d, 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(support(zero[0]), 0u);
  const auto top = subcodes(d, 3);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].gen, d.generator());
  EXPECT_THROW(subcodes(d, 4), Error);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned q = trial % 2 ? 3 : 4;
    const auto c = random_code(rng, q, 5, 3);
    for (long r = 0; r <= 3; ++r) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(subcodes(c, r).size())), gaussian_binom(3, r, q));
      EXPECT_EQ(Integer(static_cast<unsigned long>(support_distribution(c, r).total())), gaussian_binom(3, r, q));
    }
  }
}

// The RREF enumeration yields exactly the set of subspaces found by brute force.
TEST(Subcodes, MatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4}[trial % 3];
    const std::size_t n = 4 + trial % 3, k = q == 2 ? 3 : 2;
    const auto c = random_code(rng, q, n, k);
    for (std::size_t r = 1; r <= k; ++r) {
      const auto oracle = subcode_oracle(c, r);
      std::set<std::set<std::vector<Elem>>> want(oracle.begin(), oracle.end());
      std::set<std::set<std::vector<Elem>>> got;
      std::map<Mask, std::uint64_t> got_supports, want_supports;
      for (const auto& s : subcodes(c, static_cast<long>(r))) {
        const auto elems = codewords(code_from_generator(c.field(), s.gen));
        got.insert(std::set<std::vector<Elem>>(elems.begin(), elems.end()));
        ++got_supports[support(s)];
      }
      for (const auto& s : oracle) ++want_supports[support_of_set(s)];
      EXPECT_EQ(got, want);
      EXPECT_EQ(got_supports, want_supports);
      const auto dist = support_distribution(c, static_cast<long>(r));
      const std::map<Mask, std::uint64_t> dist_map(dist.entries.begin(), dist.entries.end());
      EXPECT_EQ(dist_map, want_supports);
    }
  }
}

TEST(Subcodes, SupportExamples) {
  const Field f = Field::make(2);
  Subcode a{1, Matrix(1, 5)};
  for (int j : {0, 1, 2}) a.gen(0, j) = 1;
  EXPECT_EQ(support(a), mask_of({1, 2, 3}));
  EXPECT_EQ(weight(a), 3u);
  const auto c = binary_code({"11100", "00011"});
  EXPECT_EQ(support(subcodes(c, 2)[0]), c.full_set());
  EXPECT_EQ(weight(subcodes(c, 2)[0]), 5u);
}

// Support of span(v) equals supp(v), and the row-union support agrees with
// the union over all subcode elements.
TEST(Subcodes, SupportAgainstElements) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4, 5}[trial % 4];
    const std::size_t n = 4 + trial % 4;
    const auto c = random_code(rng, q, n, 2);
    for (long r = 1; r <= 2; ++r)
      for (const auto& s : subcodes(c, r)) {
        const auto elems = codewords(code_from_generator(c.field(), s.gen));
        Mask m = 0;
        for (const auto& w : elems) m |= support_of(w);
        EXPECT_EQ(support(s), m);
      }
    for (const auto& w : codewords(c)) {
      if (support_of(w) == 0) continue;
      Matrix g(1, n);
      for (std::size_t j = 0; j < n; ++j) g(0, j) = w[j];
      EXPECT_EQ(support(Subcode{1, g}), support_of(w));
    }
  }
}

TEST(Subcodes, ShortenedDimExamples) {
  const auto c = binary_code({"11100", "00011"});
  EXPECT_EQ(c.shortened_dim(0), 2u);
  EXPECT_EQ(c.shortened_dim(c.full_set()), 0u);
  EXPECT_EQ(c.shortened_dim(mask_of({4, 5})), 1u);
}

TEST(Subcodes, ShortenedDimOracle) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4}[trial % 3];
    const std::size_t n = 4 + trial % 4, k = 1 + trial % (n - 1);
    const auto c = random_code(rng, q, n, std::min<std::size_t>(k, 4));
    for (Mask x = 0; x < (Mask{1} << n); ++x) EXPECT_EQ(c.shortened_dim(x), shortened_dim_oracle(c, x));
  }
}

// B_X^{(r)}(C): the r-dim subcodes inside C(X) number [l(X) choose r]_q.
TEST(Subcodes, SubspacesOfShortenedCode) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const unsigned q = trial % 2 ? 2 : 3;
    const std::size_t n = 5 + trial % 3;
    const auto c = random_code(rng, q, n, 3);
    for (long r = 0; r <= 3; ++r) {
      const auto subs = subcodes(c, r);
      for (Mask x = 0; x < (Mask{1} << n); ++x) {
        long count = 0;
        for (const auto& s : subs) count += (support(s) & x) == 0;
        EXPECT_EQ(Integer(count), gaussian_binom(static_cast<long>(c.shortened_dim(x)), r, q));
      }
    }
  }
}

TEST(GeneralizedWeights, Examples) {
  const auto c = binary_code({"11100", "00011"});
  EXPECT_EQ(generalized_hamming_weight(c, 1), 2u);
  EXPECT_EQ(generalized_hamming_weight(c, 2), 5u);
  EXPECT_THROW(generalized_hamming_weight(c, 3), Error);
}

TEST(GeneralizedWeights, StrictlyIncreasing) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned q = std::vector<unsigned>{2, 3, 4}[trial % 3];
    const std::size_t n = 4 + trial % 5, k = 1 + trial % (q == 2 ? 4 : 2);
    const auto c = random_code(rng, q, n, k);
    std::size_t prev = 0;
    for (long r = 1; r <= static_cast<long>(k); ++r) {
      std::size_t brute = n + 1;
      for (const auto& s : subcode_oracle(c, static_cast<std::size_t>(r)))
        brute = std::min<std::size_t>(brute, std::popcount(support_of_set(s)));
      const std::size_t dr = generalized_hamming_weight(c, r);
      EXPECT_EQ(dr, brute);
      EXPECT_GT(dr, prev);
      prev = dr;
    }
  }
}

TEST(SubcodeSupports, Examples) {
  const auto c = binary_code({"110000", "001100", "000011"});
  const auto s = subcode_supports(c, 2, 4);
  const std::vector<std::pair<Mask, std::uint64_t>> want = {
      {mask_of({1, 2, 3, 4}), 1}, {mask_of({1, 2, 5, 6}), 1}, {mask_of({3, 4, 5, 6}), 1}};
  auto got = s.entries;
  std::sort(got.begin(), got.end());
  auto sorted_want = want;
  std::sort(sorted_want.begin(), sorted_want.end());
  EXPECT_EQ(got, sorted_want);
  EXPECT_EQ(support_distribution(c, 2).total(), 7u);
  EXPECT_TRUE(subcode_supports(c, 1, 1).entries.empty());
}

TEST(ExtendCode, Examples) {
  const auto c = binary_code({"11100", "00011"});
  EXPECT_EQ(extend_code(c, 1), c);
  const auto e = extend_code(c, 2);
  EXPECT_EQ(e.field().order(), 4u);
  EXPECT_EQ(e.dimension(), 2u);
  EXPECT_EQ(codewords(e).size(), 16u);
}

TEST(ExtendCode, PreservesShortenedDims) {
  std::mt19937_64 rng(60);
  const std::vector<std::pair<unsigned, unsigned>> qm = {{2, 2}, {2, 3}, {3, 2}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto [q, m] = qm[trial % 3];
    const std::size_t n = 4 + trial % 4;
    const auto c = random_code(rng, q, n, 1 + trial % (n - 1));
    const auto e = extend_code(c, m);
    EXPECT_EQ(e.field().order(), static_cast<unsigned>(std::pow(q, m)));
    for (Mask x = 0; x < (Mask{1} << n); ++x) EXPECT_EQ(e.shortened_dim(x), c.shortened_dim(x));
  }
}

TEST(CodeFile, RoundTrip) {
  const std::string text = "q=3\nn=4\nk=2\n1 0 1 1\n0 1 1 2\n";
  const auto c = parse_code(text);
  EXPECT_EQ(c.field().order(), 3u);
  EXPECT_EQ(format_code(c), text);
  EXPECT_EQ(parse_code(format_code(c)), c);
  const auto e36 = read_code_file(std::string(HWE_FIXTURES) + "/ex36.code");
  EXPECT_EQ(e36, binary_code({"110", "001"}));
}

TEST(CodeFile, Errors) {
  auto message = [](const std::string& text) {
    try {
      parse_code(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("q=2\nn=3\nk=1\n1 1\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("q=2\nn=3\nk=1\n1 2 1\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("q=6\nn=3\nk=1\n1 1 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("q=2\nm=3\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("q=2\nn=3\nk=2\n1 1 1\n").find("line 5"), std::string::npos);
  EXPECT_NE(message("q=2\nn=3\nk=1\n1 1 1\nextra\n").find("line 5"), std::string::npos);
}
