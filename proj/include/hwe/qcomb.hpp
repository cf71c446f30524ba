#pragma once

// Classical and q-analog counting over arbitrary-precision integers.

#include <map>
#include <mutex>
#include <tuple>

#include "hwe/rational.hpp"

namespace hwe {

/// [a,b]_q = prod_{i<b} (q^a - q^i); 1 for b = 0, 0 for b > a.
inline Integer q_product(long a, long b, const Integer& q) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "q_product needs a,b >= 0");
  if (b > a) return 0;
  Integer out = 1;
  const Integer qa = integer_power(q, static_cast<unsigned long>(a));
  Integer qi = 1;
  for (long i = 0; i < b; ++i) {
    out *= qa - qi;
    qi *= q;
  }
  return out;
}

/// [a]_q = [a,a]_q.
inline Integer q_factorial(long a, const Integer& q) { return q_product(a, a, q); }

namespace detail {

template <class Key>
class Memo {
 public:
  template <class Compute>
  Integer get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Integer value = compute();
    std::lock_guard lock(mutex_);
    table_.emplace(key, value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Integer> table_;
};

inline Memo<std::tuple<long, long, long>>& gaussian_memo() {
  static Memo<std::tuple<long, long, long>> memo;
  return memo;
}

inline Memo<std::pair<long, long>>& binom_memo() {
  static Memo<std::pair<long, long>> memo;
  return memo;
}

}  // namespace detail

/// Gaussian binomial [a choose b]_q: the number of b-dim subspaces of GF(q)^a.
inline Integer gaussian_binom(long a, long b, long q) {
  if (a < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "gaussian_binom needs a,b >= 0");
  if (b > a) return 0;
  if (b == 0 || b == a) return 1;
  return detail::gaussian_memo().get({a, b, q}, [&] {
    const Integer qq(q);
    Integer num = q_product(a, b, qq);
    Integer den = q_factorial(b, qq);
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
  });
}

/// C(n,k); 0 when k < 0, k > n or n < 0.
inline Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  return detail::binom_memo().get({n, k}, [&] {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  });
}

/// K_p(w; nn, qq) = sum_m (-1)^m (qq-1)^(p-m) C(w,m) C(nn-w, p-m).
///
/// This is the coefficient of x^(nn-p) y^p in (x + (qq-1)y)^(nn-w) (x-y)^w.
inline Integer krawtchouk(long p, long w, long nn, const Integer& qq) {
  if (p < 0 || p > nn || w < 0 || w > nn)
    throw Error(ErrorKind::InvalidArgument, "krawtchouk needs 0 <= p,w <= nn");
  Integer out = 0;
  for (long m = 0; m <= p; ++m) {
    Integer term = integer_power(qq - 1, static_cast<unsigned long>(p - m)) * binom(w, m) * binom(nn - w, p - m);
    if (m % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

}  // namespace hwe
