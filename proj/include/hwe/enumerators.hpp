#pragma once

// Harmonic higher and extended weight enumerators, their mutual
// conversions and the MacWilliams-type transforms.
//
// Conventions: for f in Harm_d(n) every Z-polynomial has degree n-2d and
// Z[i-d] is the coefficient of x^(n-i-d) y^(i-d), i.e. the spectrum value
// A_i for d <= i <= n-d. W = (xy)^d Z has degree n and W[i] = A_i.

#include <bit>
#include <vector>

#include "hwe/code.hpp"
#include "hwe/harmonic.hpp"
#include "hwe/poly.hpp"
#include "hwe/qcomb.hpp"

namespace hwe {

/// A_{i,f}^{(r)}(C) for i = 0..n.
struct HigherSpectrum {
  std::size_t n = 0;
  std::size_t d = 0;
  long r = 0;
  std::vector<Rational> A;

  friend bool operator==(const HigherSpectrum&, const HigherSpectrum&) = default;
};

/// A_{i,f}^{q^m}(C) for i = 0..n.
struct ExtendedSpectrum {
  std::size_t n = 0;
  std::size_t d = 0;
  long m = 0;
  std::vector<Rational> A;

  friend bool operator==(const ExtendedSpectrum&, const ExtendedSpectrum&) = default;
};

namespace detail {

inline Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

inline long z_degree(std::size_t n, std::size_t d) {
  if (2 * d > n) throw Error(ErrorKind::DegreeOutOfRange, "Z-polynomials need 2d <= n");
  return static_cast<long>(n - 2 * d);
}

inline void check_same_length(const LinearCode& c, const HarmonicFunction& f) {
  if (c.length() != f.n()) throw Error(ErrorKind::InvalidArgument, "code length and harmonic ground set differ");
}

// (x-y)^(t-d) y^(n-t-d) for t = d..n-d, indexed by t-d.
inline std::vector<HomogeneousPoly> reinterpretation_basis(std::size_t n, std::size_t d) {
  const long deg = z_degree(n, d);
  std::vector<HomogeneousPoly> out;
  for (long s = 0; s <= deg; ++s)
    out.push_back(HomogeneousPoly::linear_power(1, -1, s) * HomogeneousPoly::monomial(0, deg - s));
  return out;
}

// (-1)^d sum_t S_t (x-y)^(t-d) y^(n-t-d), with S indexed by t-d.
inline HomogeneousPoly combine_by_size(std::size_t n, std::size_t d, const std::vector<Rational>& sums) {
  const auto basis = reinterpretation_basis(n, d);
  HomogeneousPoly z(z_degree(n, d));
  for (std::size_t s = 0; s < basis.size(); ++s) z.add_scaled(basis[s], sums[s]);
  return z * sign(static_cast<long>(d));
}

// sum over X in E_t of f~(X) * weight(X), for t = d..n-d (indexed by t-d).
template <class Weight>
std::vector<Rational> subset_sums(const LinearCode& c, const HarmonicFunction& f, Weight&& weight) {
  check_same_length(c, f);
  const std::size_t n = c.length(), d = f.degree();
  require_subset_sum_size(n);
  const long deg = z_degree(n, d);
  std::vector<Rational> sums(static_cast<std::size_t>(deg) + 1, Rational(0));
  const auto& ell = c.shortened_dims();
  for (std::size_t x = 0; x < ell.size(); ++x) {
    const auto t = static_cast<std::size_t>(std::popcount(x));
    if (t < d || t > n - d) continue;
    const Rational v = f.tilde(static_cast<Mask>(x));
    if (v != 0) sums[t - d] += v * weight(ell[x]);
  }
  return sums;
}

inline HomogeneousPoly z_from_A(std::size_t n, std::size_t d, const std::vector<Rational>& a) {
  const long deg = z_degree(n, d);
  HomogeneousPoly z(deg);
  for (long s = 0; s <= deg; ++s) z[s] = a[d + static_cast<std::size_t>(s)];
  return z;
}

inline std::vector<Rational> A_from_z(std::size_t n, std::size_t d, const HomogeneousPoly& z) {
  std::vector<Rational> a(n + 1, Rational(0));
  for (long s = 0; s <= z.degree(); ++s) a[d + static_cast<std::size_t>(s)] = z[s];
  return a;
}

inline HomogeneousPoly w_from_A(std::size_t n, const std::vector<Rational>& a) {
  return HomogeneousPoly(static_cast<long>(n), a);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Direct enumeration.

/// Spectrum from a precomputed support multiset of D_r(C).
inline HigherSpectrum higher_A(const SupportMultiset& dist, const HarmonicFunction& f, long r) {
  if (dist.n != f.n()) throw Error(ErrorKind::InvalidArgument, "support multiset and harmonic ground set differ");
  HigherSpectrum s{f.n(), f.degree(), r, std::vector<Rational>(f.n() + 1, Rational(0))};
  for (const auto& [mask, count] : dist.entries) {
    const Rational v = f.tilde(mask);
    if (v != 0) s.A[static_cast<std::size_t>(std::popcount(mask))] += v * Rational(Integer(static_cast<unsigned long>(count)));
  }
  return s;
}

/// A_{i,f}^{(r)}(C) = sum over r-dim subcodes D of weight i of f~(Supp D).
inline HigherSpectrum higher_A(const LinearCode& c, const HarmonicFunction& f, long r, const Budget& budget = {}) {
  detail::check_same_length(c, f);
  return higher_A(support_distribution(c, r, budget), f, r);
}

inline HomogeneousPoly spectrum_Z(const HigherSpectrum& s) { return detail::z_from_A(s.n, s.d, s.A); }
inline HomogeneousPoly spectrum_Z(const ExtendedSpectrum& s) { return detail::z_from_A(s.n, s.d, s.A); }
inline HomogeneousPoly spectrum_W(const HigherSpectrum& s) { return detail::w_from_A(s.n, s.A); }
inline HomogeneousPoly spectrum_W(const ExtendedSpectrum& s) { return detail::w_from_A(s.n, s.A); }

inline HomogeneousPoly higher_Z(const LinearCode& c, const HarmonicFunction& f, long r, const Budget& budget = {}) {
  return spectrum_Z(higher_A(c, f, r, budget));
}

inline HomogeneousPoly higher_W(const LinearCode& c, const HarmonicFunction& f, long r, const Budget& budget = {}) {
  return spectrum_W(higher_A(c, f, r, budget));
}

/// Plain higher weight distribution A_i^{(r)}(C) (the degree-0 case, f = 1).
inline std::vector<Integer> higher_weight_distribution(const SupportMultiset& dist) {
  std::vector<Integer> a(dist.n + 1, Integer(0));
  for (const auto& [mask, count] : dist.entries)
    a[static_cast<std::size_t>(std::popcount(mask))] += Integer(static_cast<unsigned long>(count));
  return a;
}

inline std::vector<Integer> higher_weight_distribution(const LinearCode& c, long r, const Budget& budget = {}) {
  return higher_weight_distribution(support_distribution(c, r, budget));
}

/// W_C^{(r)}; for a degree-0 "harmonic" constant f, W_{C,f}^{(r)} = f(empty) * this.
inline HomogeneousPoly higher_weight_enumerator(const LinearCode& c, long r, const Budget& budget = {}) {
  const auto a = higher_weight_distribution(c, r, budget);
  std::vector<Rational> coeffs(a.begin(), a.end());
  return HomogeneousPoly(static_cast<long>(c.length()), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Subset (B-side) formulas.

/// B_{t,f}^{(r)}(C) = sum over X in E_t of f~(X) [l(X) choose r]_q.
inline Rational higher_B(const LinearCode& c, const HarmonicFunction& f, long r, std::size_t t) {
  detail::check_same_length(c, f);
  require_subset_sum_size(c.length());
  if (t > c.length()) throw Error(ErrorKind::InvalidArgument, "t exceeds n");
  const auto& ell = c.shortened_dims();
  const long q = c.field().order();
  Rational sum = 0;
  for (std::size_t x = 0; x < ell.size(); ++x)
    if (static_cast<std::size_t>(std::popcount(x)) == t) {
      const Rational v = f.tilde(static_cast<Mask>(x));
      if (v != 0) sum += v * Rational(gaussian_binom(ell[x], r, q));
    }
  return sum;
}

/// (-1)^d sum_{i=d}^{n-t} C(n-d-i, t-d) A_i; zero outside d <= t <= n-d.
inline Rational B_from_spectrum(std::size_t n, std::size_t d, const std::vector<Rational>& a, std::size_t t) {
  if (t < d || t + d > n) return 0;
  Rational sum = 0;
  for (std::size_t i = d; i + t <= n; ++i)
    sum += Rational(binom(static_cast<long>(n - d - i), static_cast<long>(t - d))) * a[i];
  return sum * detail::sign(static_cast<long>(d));
}

/// Z^{(r)} = (-1)^d sum_t B_{t,f}^{(r)} (x-y)^(t-d) y^(n-t-d).
inline HomogeneousPoly z_from_B(const LinearCode& c, const HarmonicFunction& f, long r) {
  const long q = c.field().order();
  return detail::combine_by_size(
      c.length(), f.degree(),
      detail::subset_sums(c, f, [&](std::uint8_t ell) { return Rational(gaussian_binom(ell, r, q)); }));
}

/// Z(x,y;q^m) from the subset formula sum f~(X) (q^m)^l(X) (x-y)^(t-d) y^(n-t-d).
/// m = 0 is accepted and reads (q^0)^l(X) = 1.
inline HomogeneousPoly extended_Z(const LinearCode& c, const HarmonicFunction& f, long m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "m must be >= 0");
  const Integer qm = integer_power(Integer(c.field().order()), static_cast<unsigned long>(m));
  std::vector<Rational> powers;
  for (std::size_t e = 0; e <= c.dimension(); ++e) powers.emplace_back(integer_power(qm, e));
  return detail::combine_by_size(c.length(), f.degree(),
                                 detail::subset_sums(c, f, [&](std::uint8_t ell) { return powers[ell]; }));
}

inline ExtendedSpectrum extended_A(const LinearCode& c, const HarmonicFunction& f, long m) {
  return {c.length(), f.degree(), m, detail::A_from_z(c.length(), f.degree(), extended_Z(c, f, m))};
}

/// B_{t,f}^{q^m}(C) = sum over X in E_t of f~(X) ((q^m)^l(X) - 1).
inline Rational extended_B(const LinearCode& c, const HarmonicFunction& f, long m, std::size_t t) {
  detail::check_same_length(c, f);
  require_subset_sum_size(c.length());
  const auto& ell = c.shortened_dims();
  const Integer qm = integer_power(Integer(c.field().order()), static_cast<unsigned long>(m));
  Rational sum = 0;
  for (std::size_t x = 0; x < ell.size(); ++x)
    if (static_cast<std::size_t>(std::popcount(x)) == t) {
      const Rational v = f.tilde(static_cast<Mask>(x));
      if (v != 0) sum += v * Rational(integer_power(qm, ell[x]) - 1);
    }
  return sum;
}

/// A_{i,f}^{q^m} by enumerating every codeword of the GF(q^m)-extension code.
inline ExtendedSpectrum extended_A_oracle(const LinearCode& c, const HarmonicFunction& f, long m,
                                          const Budget& budget = {}) {
  detail::check_same_length(c, f);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  const LinearCode ext = extend_code(c, static_cast<unsigned>(m));
  SupportCounter counter(c.length());
  for_each_codeword(ext, [&](std::span<const Elem> v) { counter.add(support_of(v)); }, budget);
  ExtendedSpectrum s{c.length(), f.degree(), m, std::vector<Rational>(c.length() + 1, Rational(0))};
  for (const auto& [mask, count] : counter.finish().entries) {
    const Rational v = f.tilde(mask);
    if (v != 0) s.A[static_cast<std::size_t>(std::popcount(mask))] += v * Rational(Integer(static_cast<unsigned long>(count)));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Links between higher and extended enumerators.

/// A^{q^m}_{i,f} = sum_r [m,r]_q A^{(r)}_{i,f}; spectra[r] must hold r = 0..k.
inline ExtendedSpectrum extended_from_higher(const std::vector<HigherSpectrum>& spectra, long m, long q) {
  if (spectra.empty()) throw Error(ErrorKind::IncompleteInput, "no spectra given");
  const std::size_t n = spectra.front().n, d = spectra.front().d;
  ExtendedSpectrum out{n, d, m, std::vector<Rational>(n + 1, Rational(0))};
  for (std::size_t r = 0; r < spectra.size(); ++r) {
    const auto& s = spectra[r];
    if (s.r != static_cast<long>(r) || s.n != n || s.d != d || s.A.size() != n + 1)
      throw Error(ErrorKind::IncompleteInput, "spectra must be consecutive r = 0..k over one (n, d)");
    const Rational coeff(q_product(m, static_cast<long>(r), Integer(q)));
    if (coeff == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) out.A[i] += coeff * s.A[i];
  }
  return out;
}

/// Z^{(r)} = (1/[r]_q) sum_j [r choose j]_q (-1)^(r-j) q^C(r-j,2) Z(x,y;q^j); zs[j] for j = 0..r.
inline HomogeneousPoly higher_from_extended(const std::vector<HomogeneousPoly>& zs, long r, long q) {
  if (r < 0 || zs.size() != static_cast<std::size_t>(r) + 1)
    throw Error(ErrorKind::IncompleteInput, "need Z(x,y;q^j) for j = 0..r");
  const Integer qq(q);
  HomogeneousPoly out(zs.front().degree());
  for (long j = 0; j <= r; ++j) {
    const Rational coeff = Rational(gaussian_binom(r, j, q)) * detail::sign(r - j) *
                           Rational(integer_power(qq, static_cast<unsigned long>((r - j) * (r - j - 1) / 2)));
    out.add_scaled(zs[static_cast<std::size_t>(j)], coeff);
  }
  return out * Rational(Integer(1), q_factorial(r, qq));
}

// ---------------------------------------------------------------------------
// MacWilliams-type transforms.

/// Z_{C-perp,f}(x,y;q^m) = (-1)^d q^(-(k-d)m) Z_{C,f}(x+(q^m-1)y, x-y; q^m).
inline HomogeneousPoly macwilliams_extended(const HomogeneousPoly& z, std::size_t n, std::size_t k, std::size_t d,
                                            long q, long m) {
  if (z.degree() != detail::z_degree(n, d))
    throw Error(ErrorKind::DegreeMismatch, "input degree must be n-2d");
  const Integer qm = integer_power(Integer(q), static_cast<unsigned long>(m));
  HomogeneousPoly out = poly_substitute(z, {1, Rational(qm - 1)}, {1, -1});
  const long exponent = -(static_cast<long>(k) - static_cast<long>(d)) * m;
  return out * (detail::sign(static_cast<long>(d)) * rational_power(Integer(q), exponent));
}

namespace detail {

// q^(C(r-j,2) - j(r-j) - l(j-l) - j(k-d)) / ([r-j]_q [j-l]_q).
inline Rational higher_mac_coefficient(long r, long j, long l, long k, long d, long q) {
  const Integer qq(q);
  const long e = (r - j) * (r - j - 1) / 2 - j * (r - j) - l * (j - l) - j * (k - d);
  return rational_power(qq, e) / Rational(q_factorial(r - j, qq) * q_factorial(j - l, qq));
}

}  // namespace detail

/// Z^{(r)}_{C-perp,f} from Z^{(l)}_{C,f}, l = 0..r.
inline HomogeneousPoly macwilliams_higher(const std::vector<HomogeneousPoly>& zs, std::size_t n, std::size_t k,
                                          std::size_t d, long q, long r) {
  if (r < 0 || zs.size() != static_cast<std::size_t>(r) + 1)
    throw Error(ErrorKind::IncompleteInput, "need Z^{(l)} for l = 0..r");
  const long deg = detail::z_degree(n, d);
  for (const auto& z : zs)
    if (z.degree() != deg) throw Error(ErrorKind::DegreeMismatch, "input degree must be n-2d");
  const auto kk = static_cast<long>(k), dd = static_cast<long>(d);
  HomogeneousPoly out(deg);
  for (long j = 0; j <= r; ++j) {
    const Integer qj = integer_power(Integer(q), static_cast<unsigned long>(j));
    for (long l = 0; l <= j; ++l) {
      const auto& zl = zs[static_cast<std::size_t>(l)];
      if (zl.is_zero()) continue;
      const Rational coeff = detail::sign(r + dd - j) * detail::higher_mac_coefficient(r, j, l, kk, dd, q);
      out.add_scaled(poly_substitute(zl, {1, Rational(qj - 1)}, {1, -1}), coeff);
    }
  }
  return out;
}

/// A^{(r)}_{i,f}(C-perp) for d <= i <= n-d written through Krawtchouk numbers:
///   (-1)^d sum_{l=1}^r sum_{j=l}^r (-1)^(r-j) c(r,j,l) sum_p K_{i-d}(p-d; n-2d, q^j) A^{(l)}_{p,f}(C),
/// where K_s(w; N, Q) is the coefficient of x^(N-s) y^s in (x+(Q-1)y)^(N-w) (x-y)^w.
/// spectra[l] must hold l = 0..r for C (the l = 0 term vanishes for d >= 1).
inline HigherSpectrum higher_A_dual_explicit(const std::vector<HigherSpectrum>& spectra, std::size_t n, std::size_t k,
                                             std::size_t d, long q, long r) {
  if (r < 0 || spectra.size() < static_cast<std::size_t>(r) + 1)
    throw Error(ErrorKind::IncompleteInput, "need spectra for l = 0..r");
  const long nn = detail::z_degree(n, d);
  const auto kk = static_cast<long>(k), dd = static_cast<long>(d);
  HigherSpectrum out{n, d, r, std::vector<Rational>(n + 1, Rational(0))};
  for (long j = 1; j <= r; ++j) {
    const Integer qj = integer_power(Integer(q), static_cast<unsigned long>(j));
    // kraw[s][w] = K_s(w; nn, q^j)
    std::vector<std::vector<Rational>> kraw(nn + 1, std::vector<Rational>(nn + 1));
    for (long s = 0; s <= nn; ++s)
      for (long w = 0; w <= nn; ++w) kraw[s][w] = Rational(krawtchouk(s, w, nn, qj));
    for (long l = 1; l <= j; ++l) {
      const auto& a = spectra[static_cast<std::size_t>(l)].A;
      const Rational coeff = detail::sign(r - j) * detail::higher_mac_coefficient(r, j, l, kk, dd, q);
      for (long s = 0; s <= nn; ++s) {
        Rational acc = 0;
        for (long w = 0; w <= nn; ++w) {
          const Rational& ap = a[static_cast<std::size_t>(w + dd)];
          if (ap != 0) acc += kraw[s][w] * ap;
        }
        out.A[static_cast<std::size_t>(s + dd)] += coeff * acc;
      }
    }
  }
  for (auto& x : out.A) x *= detail::sign(dd);
  return out;
}

}  // namespace hwe
