#pragma once

// Bivariate polynomials with exact rational coefficients.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hwe/qcomb.hpp"
#include "hwe/rational.hpp"

namespace hwe {

/// sum_j c_j x^(deg-j) y^j; the degree is fixed by construction.
class HomogeneousPoly {
 public:
  HomogeneousPoly() : HomogeneousPoly(0) {}
  explicit HomogeneousPoly(long degree) : degree_(degree) {
    if (degree < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative polynomial degree");
    coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  }
  HomogeneousPoly(long degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
      throw Error(ErrorKind::DegreeMismatch, "coefficient count must be degree+1");
  }

  /// x^a y^b scaled by c.
  static HomogeneousPoly monomial(long a, long b, const Rational& c = 1) {
    HomogeneousPoly p(a + b);
    p.coeffs_[static_cast<std::size_t>(b)] = c;
    return p;
  }

  /// (alpha x + beta y)^e.
  static HomogeneousPoly linear_power(const Rational& alpha, const Rational& beta, long e) {
    HomogeneousPoly p(e);
    std::vector<Rational> apows(static_cast<std::size_t>(e) + 1), bpows(static_cast<std::size_t>(e) + 1);
    apows[0] = bpows[0] = 1;
    for (long i = 1; i <= e; ++i) {
      apows[i] = apows[i - 1] * alpha;
      bpows[i] = bpows[i - 1] * beta;
    }
    for (long j = 0; j <= e; ++j) p.coeffs_[j] = Rational(binom(e, j)) * apows[e - j] * bpows[j];
    return p;
  }

  long degree() const noexcept { return degree_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^(deg-j) y^j.
  const Rational& operator[](long j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Rational& operator[](long j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
    check_same_degree(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    return *this;
  }
  HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
    check_same_degree(o);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    return *this;
  }
  HomogeneousPoly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  /// Adds s * o without a temporary.
  void add_scaled(const HomogeneousPoly& o, const Rational& s) {
    check_same_degree(o);
    if (s == 0) return;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      if (o.coeffs_[j] != 0) coeffs_[j] += s * o.coeffs_[j];
  }

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(HomogeneousPoly a, const Rational& s) { return a *= s; }
  friend HomogeneousPoly operator*(const Rational& s, HomogeneousPoly a) { return a *= s; }

  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly out(a.degree_ + b.degree_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_degree(const HomogeneousPoly& o) const {
    if (o.degree_ != degree_)
      throw Error(ErrorKind::DegreeMismatch,
                  "degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_) + " differ");
  }

  long degree_;
  std::vector<Rational> coeffs_;
};

/// Linear substitution x -> alpha x + beta y, y -> gamma x + delta y.
struct LinearForm {
  Rational x_coeff;
  Rational y_coeff;
};

inline HomogeneousPoly poly_substitute(const HomogeneousPoly& p, const LinearForm& into_x, const LinearForm& into_y) {
  const long n = p.degree();
  HomogeneousPoly out(n);
  std::vector<HomogeneousPoly> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  for (long e = 0; e <= n; ++e) {
    xs.push_back(HomogeneousPoly::linear_power(into_x.x_coeff, into_x.y_coeff, e));
    ys.push_back(HomogeneousPoly::linear_power(into_y.x_coeff, into_y.y_coeff, e));
  }
  for (long j = 0; j <= n; ++j)
    if (p[j] != 0) out.add_scaled(xs[n - j] * ys[j], p[j]);
  return out;
}

/// Signed terms in increasing y-exponent, e.g. "-x^2 y + x y^2"; "0" if zero.
inline std::string format_poly(const HomogeneousPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (long j = 0; j <= p.degree(); ++j) {
    const Rational& c = p[j];
    if (c == 0) continue;
    const long a = p.degree() - j, b = j;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::string vars;
    if (a > 0) vars += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) vars += (vars.empty() ? "" : " ") + (b == 1 ? std::string("y") : "y^" + std::to_string(b));
    if (vars.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << vars;
    else
      out << mag.get_str() << " " << vars;
  }
  return first ? "0" : out.str();
}

/// A polynomial in x, y with arbitrary exponents: (x exponent, y exponent) -> coefficient.
class TwoVarPoly {
 public:
  using Key = std::pair<long, long>;

  void add_term(long xe, long ye, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[{xe, ye}];
    slot += c;
    if (slot == 0) terms_.erase({xe, ye});
  }

  Rational coeff(long xe, long ye) const {
    auto it = terms_.find({xe, ye});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  TwoVarPoly swapped() const {
    TwoVarPoly out;
    for (const auto& [k, v] : terms_) out.terms_[{k.second, k.first}] = v;
    return out;
  }

  TwoVarPoly operator*(const Rational& s) const {
    TwoVarPoly out;
    for (const auto& [k, v] : terms_) out.add_term(k.first, k.second, v * s);
    return out;
  }

  friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

 private:
  std::map<Key, Rational> terms_;
};

}  // namespace hwe
