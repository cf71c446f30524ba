#pragma once

// Matroids through exact rank oracles, the harmonic Tutte polynomial and the
// Greene-type expressions of the harmonic enumerators.

#include <atomic>
#include <bit>
#include <functional>
#include <memory>
#include <vector>

#include "hwe/code.hpp"
#include "hwe/enumerators.hpp"
#include "hwe/harmonic.hpp"
#include "hwe/poly.hpp"

namespace hwe {

/// Ground set {1..n} with a rank function rho: 2^E -> N.
class Matroid {
 public:
  using RankOracle = std::function<std::size_t(Mask)>;

  Matroid(std::size_t n, RankOracle oracle) : n_(n), oracle_(std::move(oracle)) {}

  std::size_t size() const noexcept { return n_; }
  Mask ground() const noexcept { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  std::size_t rank(Mask x) const { return oracle_(x); }
  std::size_t rank() const { return oracle_(ground()); }

 private:
  std::size_t n_;
  RankOracle oracle_;
};

/// M[G]: rho(X) is the rank of the generator columns indexed by X.
/// Ranks are memoized lazily; concurrent fills write identical values.
inline Matroid vector_matroid(const LinearCode& c) {
  require_subset_sum_size(c.length());
  struct Memo {
    Field field;
    Matrix gen;
    std::vector<std::atomic<int>> ranks;
    Memo(Field f, Matrix g, std::size_t n) : field(std::move(f)), gen(std::move(g)), ranks(std::size_t{1} << n) {
      for (auto& r : ranks) r.store(-1, std::memory_order_relaxed);
    }
  };
  auto memo = std::make_shared<Memo>(c.field(), c.generator(), c.length());
  return Matroid(c.length(), [memo](Mask x) -> std::size_t {
    int v = memo->ranks[x].load(std::memory_order_relaxed);
    if (v < 0) {
      v = static_cast<int>(column_rank(memo->field, memo->gen, x));
      memo->ranks[x].store(v, std::memory_order_relaxed);
    }
    return static_cast<std::size_t>(v);
  });
}

/// rho*(X) = |X| + rho(E \ X) - rho(E).
inline Matroid dual_matroid(const Matroid& m) {
  return Matroid(m.size(), [m](Mask x) -> std::size_t {
    const Mask e = m.ground();
    return static_cast<std::size_t>(std::popcount(x)) + m.rank(e & ~x) - m.rank(e);
  });
}

/// T(M,f;x,y) = sum_X f~(X) (x-1)^(rho(E)-rho(X)) (y-1)^(|X|-rho(X)).
inline TwoVarPoly harmonic_tutte(const Matroid& m, const HarmonicFunction& f) {
  if (m.size() != f.n()) throw Error(ErrorKind::InvalidArgument, "matroid and harmonic ground set differ");
  require_subset_sum_size(m.size());
  const std::size_t full = m.rank();
  TwoVarPoly out;
  for (std::size_t x = 0; x < (std::size_t{1} << m.size()); ++x) {
    const Rational v = f.tilde(static_cast<Mask>(x));
    if (v == 0) continue;
    const std::size_t rho = m.rank(static_cast<Mask>(x));
    const long a = static_cast<long>(full - rho);
    const long b = static_cast<long>(std::popcount(x)) - static_cast<long>(rho);
    // (x-1)^a (y-1)^b, expanded.
    for (long i = 0; i <= a; ++i)
      for (long j = 0; j <= b; ++j) {
        Rational c = v * Rational(binom(a, i) * binom(b, j));
        if ((a - i + b - j) % 2 != 0) c = -c;
        out.add_term(i, j, c);
      }
  }
  return out;
}

namespace detail {

// (-1)^d sum_X f~(X) Q^(k-rho(X)) (x-y)^(|X|-d) y^(n-|X|-d), Q = q^m; the
// Tutte specialization x -> (x+(Q-1)y)/(x-y), y -> x/y with denominators
// cleared term by term.
inline HomogeneousPoly greene_rhs(const Matroid& mat, const HarmonicFunction& f, const Integer& qm) {
  const std::size_t n = mat.size(), d = f.degree();
  const long deg = z_degree(n, d);
  require_subset_sum_size(n);
  const std::size_t k = mat.rank();
  std::vector<Rational> powers;
  for (std::size_t e = 0; e <= k; ++e) powers.emplace_back(integer_power(qm, e));
  std::vector<Rational> per_size(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    const Rational v = f.tilde(static_cast<Mask>(x));
    if (v == 0) continue;
    const auto t = static_cast<std::size_t>(std::popcount(x));
    if (t < d || t + d > n) throw Error(ErrorKind::NotHarmonic, "f~ does not vanish outside d..n-d");
    per_size[t - d] += v * powers[k - mat.rank(static_cast<Mask>(x))];
  }
  HomogeneousPoly z(deg);
  for (long s = 0; s <= deg; ++s) {
    if (per_size[s] == 0) continue;
    z.add_scaled(HomogeneousPoly::linear_power(1, -1, s) * HomogeneousPoly::monomial(0, deg - s), per_size[s]);
  }
  return z * sign(static_cast<long>(d));
}

}  // namespace detail

/// Z_{C,f}(x,y;q^m) = (-1)^d (x-y)^(k-d) y^(n-k-d) T(M_C, f; (x+(q^m-1)y)/(x-y), x/y).
inline HomogeneousPoly greene_extended_rhs(const LinearCode& c, const HarmonicFunction& f, long m) {
  if (c.length() != f.n()) throw Error(ErrorKind::InvalidArgument, "code length and harmonic ground set differ");
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "m must be >= 0");
  return detail::greene_rhs(vector_matroid(c), f,
                            integer_power(Integer(c.field().order()), static_cast<unsigned long>(m)));
}

/// Z^{(r)}_{C,f} as the [r choose j]_q-weighted combination of the Greene
/// expressions at q^j, j = 0..r.
inline HomogeneousPoly greene_higher_rhs(const LinearCode& c, const HarmonicFunction& f, long r) {
  if (c.length() != f.n()) throw Error(ErrorKind::InvalidArgument, "code length and harmonic ground set differ");
  check_subcode_rank(c, r);
  const long q = c.field().order();
  const Integer qq(q);
  const Matroid mat = vector_matroid(c);
  HomogeneousPoly out(detail::z_degree(c.length(), f.degree()));
  for (long j = 0; j <= r; ++j) {
    const Rational coeff = Rational(gaussian_binom(r, j, q)) * detail::sign(r - j) *
                           Rational(integer_power(qq, static_cast<unsigned long>((r - j) * (r - j - 1) / 2)));
    out.add_scaled(detail::greene_rhs(mat, f, integer_power(qq, static_cast<unsigned long>(j))), coeff);
  }
  return out * Rational(Integer(1), q_factorial(r, qq));
}

}  // namespace hwe
