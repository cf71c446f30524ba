#pragma once

// Shared helpers for the test binaries: random codes and slow, independent
// reference computations.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "hwe/hwe.hpp"

namespace hwe::testing {

inline Field field_of_order(unsigned q) { return Field::parse("q=" + std::to_string(q)); }

/// A uniformly random full-rank k x n generator, resampled until rank k.
inline LinearCode random_code(std::mt19937_64& rng, unsigned q, std::size_t n, std::size_t k) {
  const Field f = field_of_order(q);
  std::uniform_int_distribution<unsigned> sym(0, q - 1);
  while (true) {
    std::vector<std::vector<unsigned>> rows(k, std::vector<unsigned>(n));
    for (auto& row : rows)
      for (auto& x : row) x = sym(rng);
    LinearCode c = code_from_matrix(f, rows, n);
    if (c.dimension() == k) return c;
  }
}

/// A random element of Harm_d(n): an integer combination of the basis.
inline HarmonicFunction random_harmonic(std::mt19937_64& rng, std::size_t n, std::size_t d) {
  std::uniform_int_distribution<int> coef(-3, 3);
  SubsetFunction f{n, d, {}};
  for (const auto& b : harm_basis(n, d)) {
    const int c = coef(rng);
    for (const auto& [z, v] : b.base().values) f.values[z] += v * c;
  }
  f.normalize();
  return HarmonicFunction::from(std::move(f));
}

/// f~(X) straight from the definition.
inline Rational tilde_oracle(const HarmonicFunction& f, Mask x) {
  Rational s = 0;
  for (const auto& [z, v] : f.base().values)
    if ((z & x) == z) s += v;
  return s;
}

/// Every r-dim subcode as the sorted set of its elements, found by closing
/// r-tuples of codewords under linear combination and keeping distinct spans
/// of full size. Exponential; only for tiny codes.
inline std::vector<std::set<std::vector<Elem>>> subcode_oracle(const LinearCode& c, std::size_t r) {
  const Field& f = c.field();
  const auto words = codewords(c);
  const std::size_t n = c.length();
  std::size_t target = 1;
  for (std::size_t i = 0; i < r; ++i) target *= f.order();
  std::set<std::set<std::vector<Elem>>> spans;
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    std::set<std::vector<Elem>> span{std::vector<Elem>(n, 0)};
    for (auto i : idx) {
      std::set<std::vector<Elem>> next;
      for (const auto& s : span)
        for (unsigned a = 0; a < f.order(); ++a) {
          std::vector<Elem> v(n);
          for (std::size_t j = 0; j < n; ++j) v[j] = f.add(s[j], f.mul(static_cast<Elem>(a), words[i][j]));
          next.insert(v);
        }
      span = std::move(next);
    }
    if (span.size() == target) spans.insert(span);
    std::size_t t = 0;
    while (t < r && ++idx[t] == words.size()) idx[t++] = 0;
    if (t == r) break;
  }
  return {spans.begin(), spans.end()};
}

inline Mask support_of_set(const std::set<std::vector<Elem>>& words) {
  Mask m = 0;
  for (const auto& w : words)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) m |= Mask{1} << j;
  return m;
}

/// l(X) by counting the codewords that vanish on X.
inline std::size_t shortened_dim_oracle(const LinearCode& c, Mask x) {
  std::size_t count = 0;
  for (const auto& w : codewords(c)) {
    bool zero = true;
    for (std::size_t j = 0; j < w.size(); ++j)
      if ((x >> j & 1u) && w[j] != 0) zero = false;
    count += zero;
  }
  std::size_t dim = 0;
  while (count > 1) {
    count /= c.field().order();
    ++dim;
  }
  return dim;
}

inline SubsetFunction singleton_difference(std::size_t n, std::size_t a, std::size_t b) {
  return make_subset_function(n, 1, {{Mask{1} << (a - 1), Rational(1)}, {Mask{1} << (b - 1), Rational(-1)}});
}

inline LinearCode binary_code(const std::vector<std::string>& rows) {
  std::vector<std::vector<unsigned>> m;
  for (const auto& r : rows) {
    std::vector<unsigned> v;
    for (char ch : r) v.push_back(static_cast<unsigned>(ch - '0'));
    m.push_back(v);
  }
  return code_from_matrix(Field::make(2), m);
}

inline Mask mask_of(std::initializer_list<int> elems) {
  Mask m = 0;
  for (int e : elems) m |= Mask{1} << (e - 1);
  return m;
}

}  // namespace hwe::testing
