#pragma once

// Finite fields GF(p^e) with p^e <= 256, stored as lookup tables.
//
// An element is the integer sum c_i p^i encoding the residue polynomial
// sum c_i X^i modulo the field's irreducible modulus (c_0 least significant).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwe/error.hpp"

namespace hwe {

/// Raw element encoding, always in [0, q).
using Elem = std::uint16_t;

inline constexpr unsigned kMaxFieldOrder = 256;

namespace detail {

inline bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.
using PrimePoly = std::vector<unsigned>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
inline PrimePoly poly_mod(PrimePoly a, const PrimePoly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PrimePoly& modulus, unsigned p) {
  const std::size_t deg = modulus.size() - 1;
  for (std::size_t fd = 1; 2 * fd <= deg; ++fd) {
    unsigned long count = 1;
    for (std::size_t i = 0; i < fd; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code) {
      PrimePoly factor(fd + 1, 0);
      unsigned long c = code;
      for (std::size_t i = 0; i < fd; ++i) {
        factor[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      factor[fd] = 1;
      if (poly_mod(modulus, factor, p).empty()) return false;
    }
  }
  return true;
}

inline std::optional<PrimePoly> builtin_modulus(unsigned p, unsigned e) {
  if (p == 2 && e == 2) return PrimePoly{1, 1, 1};
  if (p == 2 && e == 3) return PrimePoly{1, 1, 0, 1};
  if (p == 2 && e == 4) return PrimePoly{1, 1, 0, 0, 1};
  if (p == 3 && e == 2) return PrimePoly{1, 0, 1};
  return std::nullopt;
}

struct FieldTables {
  unsigned p = 0;
  unsigned e = 0;
  unsigned q = 0;
  PrimePoly modulus;
  std::vector<Elem> add, mul, neg, inv;
};

inline std::vector<unsigned> digits(unsigned value, unsigned p, unsigned e) {
  std::vector<unsigned> out(e, 0);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

inline unsigned from_digits(const std::vector<unsigned>& ds, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = ds.size(); i-- > 0;) value = value * p + ds[i];
  return value;
}

inline std::shared_ptr<const FieldTables> build_tables(unsigned p, unsigned e, PrimePoly modulus) {
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->e = e;
  t->modulus = std::move(modulus);
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  t->q = q;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    std::vector<unsigned> dn(e);
    for (unsigned i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    t->neg[a] = static_cast<Elem>(from_digits(dn, p));
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<unsigned> ds(e);
      for (unsigned i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      t->add[a * q + b] = static_cast<Elem>(from_digits(ds, p));
      PrimePoly prod(2 * e, 0);
      for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      PrimePoly red = e == 1 ? PrimePoly{prod[0] % p} : poly_mod(prod, t->modulus, p);
      red.resize(e, 0);
      t->mul[a * q + b] = static_cast<Elem>(from_digits(red, p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<Elem>(b);
        break;
      }
  return t;
}

}  // namespace detail

class FieldElement;

/// GF(p^e). Cheap to copy; all copies share one immutable table set.
class Field {
 public:
  /// Builds GF(p^e). Without an explicit modulus, (p,e) must be prime or in
  /// the built-in table {(2,2),(2,3),(2,4),(3,2)}.
  static Field make(unsigned p, unsigned e = 1, std::optional<std::vector<unsigned>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    unsigned long q = 1;
    for (unsigned i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxFieldOrder)
        throw Error(ErrorKind::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
    detail::PrimePoly mod;
    if (e > 1) {
      if (modulus) {
        mod = *modulus;
        if (mod.size() != e + 1) throw Error(ErrorKind::InvalidModulus, "modulus must have e+1 coefficients");
        for (unsigned c : mod)
          if (c >= p) throw Error(ErrorKind::InvalidModulus, "modulus coefficient out of range");
        if (mod.back() != 1) throw Error(ErrorKind::InvalidModulus, "modulus must be monic");
        if (!detail::is_irreducible(mod, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible");
      } else {
        auto builtin = detail::builtin_modulus(p, e);
        if (!builtin)
          throw Error(ErrorKind::NoBuiltinModulus,
                      "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(e) + ")");
        mod = *builtin;
      }
    }
    return Field(detail::build_tables(p, e, std::move(mod)));
  }

  /// Parses "q=p^e" or "q=n" (the "q=" prefix is optional).
  static Field parse(std::string_view spec) {
    std::string s(spec);
    if (s.rfind("q=", 0) == 0) s = s.substr(2);
    auto bad = [&] { return Error(ErrorKind::ParseError, "malformed field spec '" + std::string(spec) + "'"); };
    auto to_uint = [&](const std::string& part) {
      if (part.empty() || part.size() > 6) throw bad();
      for (char ch : part)
        if (ch < '0' || ch > '9') throw bad();
      return static_cast<unsigned>(std::stoul(part));
    };
    const auto caret = s.find('^');
    if (caret != std::string::npos) return make(to_uint(s.substr(0, caret)), to_uint(s.substr(caret + 1)));
    const unsigned n = to_uint(s);
    if (n < 2) throw Error(ErrorKind::NotPrime, std::to_string(n) + " is not a prime power");
    unsigned p = 2;
    while (n % p != 0) ++p;
    unsigned e = 0, rest = n;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) throw Error(ErrorKind::NotPrime, std::to_string(n) + " is not a prime power");
    return make(p, e);
  }

  unsigned characteristic() const noexcept { return t_->p; }
  unsigned degree() const noexcept { return t_->e; }
  unsigned order() const noexcept { return t_->q; }
  const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

  /// "q=4" style spec, stable for files.
  std::string spec() const { return "q=" + std::to_string(order()); }

  Elem add(Elem a, Elem b) const noexcept { return t_->add[a * t_->q + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return t_->add[a * t_->q + t_->neg[b]]; }
  Elem mul(Elem a, Elem b) const noexcept { return t_->mul[a * t_->q + b]; }
  Elem neg(Elem a) const noexcept { return t_->neg[a]; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return t_->inv[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool contains(unsigned value) const noexcept { return value < t_->q; }

  FieldElement element(unsigned value) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->e == b.t_->e && a.t_->modulus == b.t_->modulus);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

/// An element bound to its field; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value)) throw Error(ErrorKind::ElementOutOfField, "value " + std::to_string(value));
  }

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check(a, b);
    return {a.field_, a.field_.div(a.value_, b.value_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  static void check(const FieldElement& a, const FieldElement& b) {
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "operands from different fields");
  }

  Field field_;
  Elem value_;
};

inline FieldElement Field::element(unsigned value) const { return {*this, static_cast<Elem>(value)}; }
inline FieldElement Field::zero() const { return {*this, 0}; }
inline FieldElement Field::one() const { return {*this, 1}; }

enum class FieldOp { Add, Sub, Mul, Div };

inline FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field operation");
}

/// Ring embedding GF(p^e) -> GF(p^E), e | E.
///
/// The generator X of the source maps to the smallest-encoded root of the
/// source modulus in the target, which fixes the embedding deterministically.
class Embedding {
 public:
  Embedding(Field source, Field target) : source_(std::move(source)), target_(std::move(target)) {
    if (source_.characteristic() != target_.characteristic() || target_.degree() % source_.degree() != 0)
      throw Error(ErrorKind::NoEmbeddingRegistered, "GF(" + std::to_string(source_.order()) + ") does not embed in GF(" +
                                                        std::to_string(target_.order()) + ")");
    const unsigned p = source_.characteristic();
    Elem root = 1;
    if (source_.degree() > 1) {
      const auto& mod = source_.modulus();
      bool found = false;
      for (unsigned cand = 0; cand < target_.order() && !found; ++cand) {
        Elem acc = 0, pw = 1;
        for (unsigned c : mod) {
          acc = target_.add(acc, target_.mul(static_cast<Elem>(c), pw));
          pw = target_.mul(pw, static_cast<Elem>(cand));
        }
        if (acc == 0) {
          root = static_cast<Elem>(cand);
          found = true;
        }
      }
      if (!found) throw Error(ErrorKind::NoEmbeddingRegistered, "source modulus has no root in target");
    }
    image_.resize(source_.order());
    for (unsigned v = 0; v < source_.order(); ++v) {
      const auto ds = detail::digits(v, p, source_.degree());
      Elem acc = 0, pw = 1;
      for (unsigned c : ds) {
        // Prime-field digits are encoded identically in every extension.
        acc = target_.add(acc, target_.mul(static_cast<Elem>(c), pw));
        pw = target_.mul(pw, root);
      }
      image_[v] = acc;
    }
  }

  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }
  Elem operator()(Elem x) const noexcept { return image_[x]; }

 private:
  Field source_;
  Field target_;
  std::vector<Elem> image_;
};

/// GF(q^m) built from the built-in table, where q is the order of `base`.
inline Field extension_field(const Field& base, unsigned m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (m == 1) return base;
  try {
    return Field::make(base.characteristic(), base.degree() * m);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoBuiltinModulus || e.kind() == ErrorKind::FieldTooLarge)
      throw Error(ErrorKind::NoEmbeddingRegistered, "no registered extension of degree " + std::to_string(m) +
                                                        " over GF(" + std::to_string(base.order()) + ")");
    throw;
  }
}

inline FieldElement embed(const FieldElement& x, const Field& target) {
  Embedding emb(x.field(), target);
  return {target, emb(x.value())};
}

}  // namespace hwe
