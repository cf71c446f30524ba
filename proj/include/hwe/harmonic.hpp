#pragma once

// Discrete harmonic functions on the d-subsets of E = {1..n}.

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hwe/code.hpp"
#include "hwe/rational.hpp"

namespace hwe {

/// All d-subsets of an n-set in lexicographic order of their sorted elements.
inline std::vector<Mask> subsets_lex(std::size_t n, std::size_t d) {
  std::vector<Mask> out;
  if (d > n) return out;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (auto i : idx) m |= Mask{1} << i;
    out.push_back(m);
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// Lexicographic comparison of the sorted element lists of two subsets.
inline bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// f in R E_d: values on d-subsets, absent keys are zero.
struct SubsetFunction {
  std::size_t n = 0;
  std::size_t d = 0;
  std::map<Mask, Rational> values;

  Rational at(Mask z) const {
    auto it = values.find(z);
    return it == values.end() ? Rational(0) : it->second;
  }

  /// Drops explicit zeros so equality is structural.
  void normalize() {
    std::erase_if(values, [](const auto& kv) { return kv.second == 0; });
  }

  friend bool operator==(const SubsetFunction& a, const SubsetFunction& b) {
    if (a.n != b.n || a.d != b.d) return false;
    SubsetFunction x = a, y = b;
    x.normalize();
    y.normalize();
    return x.values == y.values;
  }
};

inline SubsetFunction make_subset_function(std::size_t n, std::size_t d, const std::map<Mask, Rational>& values) {
  if (n > kMaxLength) throw Error(ErrorKind::GroundSetTooLarge, "n exceeds " + std::to_string(kMaxLength));
  if (d > n) throw Error(ErrorKind::DegreeOutOfRange, "d exceeds n");
  SubsetFunction f{n, d, {}};
  for (const auto& [z, v] : values) {
    if (static_cast<std::size_t>(std::popcount(z)) != d || (n < 32 && (z >> n) != 0))
      throw Error(ErrorKind::InvalidArgument, "key is not a " + std::to_string(d) + "-subset of E");
    if (v != 0) f.values.emplace(z, v);
  }
  return f;
}

/// gamma(Z) = sum of the (d-1)-subsets of Z, extended linearly.
inline SubsetFunction gamma(const SubsetFunction& f) {
  if (f.d == 0) throw Error(ErrorKind::DegreeZero, "gamma is undefined on degree 0");
  SubsetFunction out{f.n, f.d - 1, {}};
  for (const auto& [z, v] : f.values) {
    for (Mask rest = z; rest != 0; rest &= rest - 1) {
      const Mask y = z & ~(rest & -rest);
      out.values[y] += v;
    }
  }
  out.normalize();
  return out;
}

/// f with gamma(f) = 0 and degree d >= 1.
class HarmonicFunction {
 public:
  /// Throws NotHarmonic unless gamma(base) vanishes.
  static HarmonicFunction from(SubsetFunction base) {
    if (base.d == 0) throw Error(ErrorKind::DegreeOutOfRange, "harmonic functions here have degree >= 1");
    base.normalize();
    if (!gamma(base).values.empty()) throw Error(ErrorKind::NotHarmonic, "gamma(f) is not zero");
    return HarmonicFunction(std::move(base));
  }

  std::size_t n() const noexcept { return base_.n; }
  std::size_t degree() const noexcept { return base_.d; }
  const SubsetFunction& base() const noexcept { return base_; }
  bool is_zero() const noexcept { return base_.values.empty(); }

  /// f~(X) = sum over d-subsets Z of X of f(Z).
  Rational tilde(Mask x) const {
    if (base_.n <= kTableLimit) return tilde_table()[x];
    Rational s = 0;
    for (const auto& [z, v] : base_.values)
      if ((z & ~x) == 0) s += v;
    return s;
  }

  /// f~ on every subset, by a subset-sum (zeta) transform. Needs n <= 20.
  const std::vector<Rational>& tilde_table() const {
    if (base_.n > kTableLimit) throw Error(ErrorKind::GroundSetTooLarge, "tilde table needs n <= 20");
    std::call_once(cache_->once, [&] {
      auto& t = cache_->table;
      t.assign(std::size_t{1} << base_.n, Rational(0));
      for (const auto& [z, v] : base_.values) t[z] = v;
      for (std::size_t bit = 0; bit < base_.n; ++bit)
        for (std::size_t x = 0; x < t.size(); ++x)
          if (x >> bit & 1u) t[x] += t[x ^ (std::size_t{1} << bit)];
    });
    return cache_->table;
  }

  friend bool operator==(const HarmonicFunction& a, const HarmonicFunction& b) { return a.base_ == b.base_; }

 private:
  static constexpr std::size_t kTableLimit = 20;

  struct Cache {
    std::once_flag once;
    std::vector<Rational> table;
  };

  explicit HarmonicFunction(SubsetFunction base) : base_(std::move(base)), cache_(std::make_shared<Cache>()) {}

  SubsetFunction base_;
  std::shared_ptr<Cache> cache_;
};

inline Rational tilde(const HarmonicFunction& f, Mask x) { return f.tilde(x); }

/// f^(i)(J) = sum of f(Z) over d-subsets Z with |J cap Z| = i.
inline Rational level_sum(const HarmonicFunction& f, Mask j, long i) {
  if (i < 0 || static_cast<std::size_t>(i) > f.degree())
    throw Error(ErrorKind::IndexOutOfRange, "level index outside 0..d");
  Rational s = 0;
  for (const auto& [z, v] : f.base().values)
    if (std::popcount(z & j) == i) s += v;
  return s;
}

namespace detail {

// Kernel of the dense rational matrix, as the rows of its RREF basis.
inline std::vector<std::vector<Rational>> kernel_rref(std::vector<std::vector<Rational>> a, std::size_t cols) {
  auto reduce = [cols](std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < m.size(); ++col) {
      std::size_t sel = lead;
      while (sel < m.size() && m[sel][col] == 0) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[sel], m[lead]);
      const Rational inv = 1 / m[lead][col];
      for (auto& x : m[lead]) x *= inv;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == lead || m[i][col] == 0) continue;
        const Rational factor = m[i][col];
        for (std::size_t j = col; j < cols; ++j)
          if (m[lead][j] != 0) m[i][j] -= factor * m[lead][j];
      }
      pivots.push_back(col);
      ++lead;
    }
    m.resize(lead);
    return pivots;
  };
  const auto pivots = reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fcol];
    kernel.push_back(std::move(v));
  }
  reduce(kernel);
  return kernel;
}

// Scales to coprime integers with positive leading entry.
inline void clear_denominators(std::vector<Rational>& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return;
  Rational scale(Integer(1), g);
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) scale = -scale;
      break;
    }
  for (auto& x : v) x *= scale;
}

}  // namespace detail

/// Basis of Harm_d(n): the kernel of the inclusion matrix E_{d-1} x E_d
/// (both in lexicographic order) in reduced echelon form, each vector scaled
/// to coprime integers. Results are memoized per (n, d).
inline std::vector<HarmonicFunction> harm_basis(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw Error(ErrorKind::DegreeOutOfRange, "harm_basis needs 1 <= d <= n");
  if (n > kMaxLength) throw Error(ErrorKind::GroundSetTooLarge, "n exceeds " + std::to_string(kMaxLength));
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<HarmonicFunction>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({n, d}); it != memo.end()) return it->second;
  }
  const auto cols = subsets_lex(n, d);
  const auto rows = subsets_lex(n, d - 1);
  std::map<Mask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  std::vector<std::vector<Rational>> inc(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (Mask rest = cols[j]; rest != 0; rest &= rest - 1) inc[row_index[cols[j] & ~(rest & -rest)]][j] = 1;
  auto kernel = detail::kernel_rref(std::move(inc), cols.size());
  std::vector<HarmonicFunction> basis;
  for (auto& v : kernel) {
    detail::clear_denominators(v);
    SubsetFunction f{n, d, {}};
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (v[j] != 0) f.values.emplace(cols[j], v[j]);
    basis.push_back(HarmonicFunction::from(std::move(f)));
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(n, d), basis);
  return basis;
}

}  // namespace hwe
