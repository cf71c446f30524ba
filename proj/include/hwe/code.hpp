#pragma once

// Linear codes over GF(q): construction, duals, codeword and subcode
// enumeration, supports and shortened dimensions.
//
// Coordinates are 1-indexed in text formats and stored as bit (i-1) of a Mask.

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwe/linalg.hpp"
#include "hwe/qcomb.hpp"

namespace hwe {

inline constexpr std::size_t kMaxLength = 24;

/// Upper bound on items (codewords, subcodes) an enumeration may visit.
struct Budget {
  std::uint64_t max_items = std::uint64_t{1} << 22;
};

inline void require_budget(const Integer& count, const Budget& budget, const char* what) {
  if (count > Integer(std::to_string(budget.max_items)))
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " count " + count.get_str() + " exceeds budget " +
                                               std::to_string(budget.max_items));
}

inline void require_subset_sum_size(std::size_t n) {
  if (n > kMaxLength)
    throw Error(ErrorKind::GroundSetTooLarge, "n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxLength));
}

/// An [n,k] code, stored by its canonical RREF generator matrix.
class LinearCode {
 public:
  const Field& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return gen_.rows; }
  const Matrix& generator() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Mask full_set() const noexcept { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  /// dim C(X) = k - rank(gen[., X]).
  std::size_t shortened_dim(Mask x) const {
    if (n_ <= kMaxLength) return shortened_dims()[x];
    return dimension() - column_rank(field_, gen_, x);
  }

  /// Table of dim C(X) for all X, built once on first use.
  const std::vector<std::uint8_t>& shortened_dims() const {
    require_subset_sum_size(n_);
    std::call_once(cache_->once, [&] {
      auto& table = cache_->ell;
      table.resize(std::size_t{1} << n_);
      for (Mask x = 0; x < table.size(); ++x)
        table[x] = static_cast<std::uint8_t>(dimension() - column_rank(field_, gen_, x));
    });
    return cache_->ell;
  }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.gen_ == b.gen_;
  }

  friend LinearCode code_from_rref(Field field, std::size_t n, Matrix gen, std::vector<std::size_t> pivots);

 private:
  struct Cache {
    std::once_flag once;
    std::vector<std::uint8_t> ell;
  };

  LinearCode(Field field, std::size_t n, Matrix gen, std::vector<std::size_t> pivots)
      : field_(std::move(field)), n_(n), gen_(std::move(gen)), pivots_(std::move(pivots)),
        cache_(std::make_shared<Cache>()) {}

  Field field_;
  std::size_t n_;
  Matrix gen_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<Cache> cache_;
};

inline LinearCode code_from_rref(Field field, std::size_t n, Matrix gen, std::vector<std::size_t> pivots) {
  return LinearCode(std::move(field), n, std::move(gen), std::move(pivots));
}

/// Row-reduces the given rows; dependent and zero rows vanish.
inline LinearCode code_from_matrix(const Field& field, const std::vector<std::vector<unsigned>>& rows,
                                   std::optional<std::size_t> length = std::nullopt) {
  if (!length && rows.empty()) throw Error(ErrorKind::InvalidArgument, "length required for an empty row list");
  const std::size_t n = length ? *length : rows.front().size();
  if (n == 0 || n > 32) throw Error(ErrorKind::InvalidArgument, "code length must be in 1..32");
  Matrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::RowLengthMismatch, "row " + std::to_string(i + 1) + " has length " +
                                                    std::to_string(rows[i].size()) + ", expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (!field.contains(rows[i][j]))
        throw Error(ErrorKind::ElementOutOfField, "entry " + std::to_string(rows[i][j]) + " not in " + field.spec());
      m(i, j) = static_cast<Elem>(rows[i][j]);
    }
  }
  auto pivots = rref(field, m);
  return code_from_rref(field, n, std::move(m), std::move(pivots));
}

inline LinearCode code_from_generator(const Field& field, Matrix m) {
  const std::size_t n = m.cols;
  auto pivots = rref(field, m);
  return code_from_rref(field, n, std::move(m), std::move(pivots));
}

inline LinearCode dual(const LinearCode& c) {
  const Field& f = c.field();
  const std::size_t n = c.length(), k = c.dimension();
  std::vector<bool> is_pivot(n, false);
  for (auto p : c.pivots()) is_pivot[p] = true;
  Matrix h(n - k, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    h(row, j) = 1;
    for (std::size_t i = 0; i < k; ++i) h(row, c.pivots()[i]) = f.neg(c.generator()(i, j));
    ++row;
  }
  return code_from_generator(f, std::move(h));
}

namespace detail {

inline Integer pow_count(unsigned q, std::size_t k) { return integer_power(Integer(q), k); }

// Depth-first walk over message vectors in lexicographic order (first
// message symbol most significant), handing each codeword to `visit`.
template <class Visit>
void walk_codewords(const Field& f, const Matrix& gen, Visit&& visit) {
  const std::size_t k = gen.rows, n = gen.cols;
  std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n, 0));
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == k) {
      visit(std::span<const Elem>(partial[k]));
      return;
    }
    const auto g = gen.row(level);
    for (unsigned s = 0; s < f.order(); ++s) {
      auto& next = partial[level + 1];
      const auto& cur = partial[level];
      for (std::size_t j = 0; j < n; ++j) next[j] = f.add(cur[j], f.mul(static_cast<Elem>(s), g[j]));
      rec(level + 1);
    }
  };
  rec(0);
}

}  // namespace detail

/// Visits all q^k codewords in message-lexicographic order.
template <class Visit>
void for_each_codeword(const LinearCode& c, Visit&& visit, const Budget& budget = {}) {
  require_budget(detail::pow_count(c.field().order(), c.dimension()), budget, "codeword");
  detail::walk_codewords(c.field(), c.generator(), visit);
}

inline std::vector<std::vector<Elem>> codewords(const LinearCode& c, const Budget& budget = {}) {
  std::vector<std::vector<Elem>> out;
  for_each_codeword(c, [&](std::span<const Elem> v) { out.emplace_back(v.begin(), v.end()); }, budget);
  return out;
}

/// Support of each codeword, indexed by its message in mixed radix q.
inline std::vector<Mask> codeword_supports(const LinearCode& c, const Budget& budget = {}) {
  std::vector<Mask> out;
  for_each_codeword(c, [&](std::span<const Elem> v) { out.push_back(support_of(v)); }, budget);
  return out;
}

/// Visits every r x k RREF matrix over the field exactly once: pivot-column
/// sets in lexicographic order, then free entries lexicographically in
/// row-major position order.
template <class Visit>
void for_each_rref_matrix(const Field& f, std::size_t k, std::size_t r, Visit&& visit) {
  if (r > k) return;
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  const unsigned q = f.order();
  while (true) {
    std::vector<bool> is_pivot(k, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = piv[i] + 1; j < k; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    Matrix m(r, k);
    for (std::size_t i = 0; i < r; ++i) m(i, piv[i]) = 1;
    std::vector<unsigned> digits(free_pos.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m(free_pos[t].first, free_pos[t].second) = static_cast<Elem>(digits[t]);
      visit(static_cast<const Matrix&>(m));
      std::size_t t = free_pos.size();
      while (t > 0 && digits[t - 1] + 1 == q) digits[--t] = 0;
      if (t == 0) break;
      ++digits[t - 1];
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && piv[i - 1] == k - r + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
}

/// An r-dimensional subcode, by its RREF generator.
struct Subcode {
  std::size_t r = 0;
  Matrix gen;
};

/// Union of row supports; for any spanning set this is Supp(D).
inline Mask support(const Subcode& s) {
  Mask m = 0;
  for (std::size_t i = 0; i < s.gen.rows; ++i) m |= support_of(s.gen.row(i));
  return m;
}

inline std::size_t weight(const Subcode& s) { return static_cast<std::size_t>(std::popcount(support(s))); }

inline void check_subcode_rank(const LinearCode& c, long r) {
  if (r < 0 || static_cast<std::size_t>(r) > c.dimension())
    throw Error(ErrorKind::RankOutOfRange, "r = " + std::to_string(r) + " outside 0.." + std::to_string(c.dimension()));
}

inline Integer subcode_count(const LinearCode& c, std::size_t r) {
  return gaussian_binom(static_cast<long>(c.dimension()), static_cast<long>(r), c.field().order());
}

/// All r-dim subcodes, each generated by (RREF message matrix) * gen.
inline std::vector<Subcode> subcodes(const LinearCode& c, long r, const Budget& budget = {}) {
  check_subcode_rank(c, r);
  const auto rr = static_cast<std::size_t>(r);
  require_budget(subcode_count(c, rr), budget, "subcode");
  std::vector<Subcode> out;
  for_each_rref_matrix(c.field(), c.dimension(), rr, [&](const Matrix& msg) {
    Matrix g = multiply(c.field(), msg, c.generator());
    rref(c.field(), g);
    out.push_back({rr, std::move(g)});
  });
  return out;
}

/// Multiset of subsets of E, sorted by mask.
struct SupportMultiset {
  std::size_t n = 0;
  std::vector<std::pair<Mask, std::uint64_t>> entries;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& e : entries) t += e.second;
    return t;
  }

  SupportMultiset with_size(std::size_t i) const {
    SupportMultiset out{n, {}};
    for (const auto& e : entries)
      if (static_cast<std::size_t>(std::popcount(e.first)) == i) out.entries.push_back(e);
    return out;
  }

  friend bool operator==(const SupportMultiset&, const SupportMultiset&) = default;
};

/// Accumulates masks with multiplicity; dense for small n.
class SupportCounter {
 public:
  explicit SupportCounter(std::size_t n) : n_(n) {
    if (n_ <= 20) dense_.assign(std::size_t{1} << n_, 0);
  }

  void add(Mask m, std::uint64_t count = 1) {
    if (!dense_.empty())
      dense_[m] += count;
    else
      sparse_[m] += count;
  }

  SupportMultiset finish() const {
    SupportMultiset out{n_, {}};
    if (!dense_.empty()) {
      for (std::size_t m = 0; m < dense_.size(); ++m)
        if (dense_[m] != 0) out.entries.emplace_back(static_cast<Mask>(m), dense_[m]);
    } else {
      out.entries.assign(sparse_.begin(), sparse_.end());
      std::sort(out.entries.begin(), out.entries.end());
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> dense_;
  std::unordered_map<Mask, std::uint64_t> sparse_;
};

/// Supports of all r-dim subcodes as a multiset (the full S_r(C)).
inline SupportMultiset support_distribution(const LinearCode& c, long r, const Budget& budget = {}) {
  check_subcode_rank(c, r);
  const auto rr = static_cast<std::size_t>(r);
  require_budget(subcode_count(c, rr), budget, "subcode");
  const auto table = codeword_supports(c, budget);
  const std::size_t k = c.dimension();
  const unsigned q = c.field().order();
  SupportCounter counter(c.length());
  for_each_rref_matrix(c.field(), k, rr, [&](const Matrix& msg) {
    Mask m = 0;
    for (std::size_t i = 0; i < msg.rows; ++i) {
      std::size_t index = 0;
      for (std::size_t j = 0; j < k; ++j) index = index * q + msg(i, j);
      m |= table[index];
    }
    counter.add(m);
  });
  return counter.finish();
}

/// S_{r,i}(C): supports of the r-dim subcodes of weight i.
inline SupportMultiset subcode_supports(const LinearCode& c, long r, std::size_t i, const Budget& budget = {}) {
  return support_distribution(c, r, budget).with_size(i);
}

/// d_r(C), the least support size of an r-dim subcode.
inline std::size_t generalized_hamming_weight(const LinearCode& c, long r, const Budget& budget = {}) {
  if (r < 1 || static_cast<std::size_t>(r) > c.dimension())
    throw Error(ErrorKind::RankOutOfRange, "generalized weight needs 1 <= r <= k");
  const auto dist = support_distribution(c, r, budget);
  std::size_t best = c.length();
  for (const auto& e : dist.entries) best = std::min<std::size_t>(best, std::popcount(e.first));
  return best;
}

/// C tensored up to GF(q^m): the same generator, embedded entrywise.
inline LinearCode extend_code(const LinearCode& c, unsigned m) {
  Field target = extension_field(c.field(), m);
  if (m == 1) return c;
  Embedding emb(c.field(), target);
  Matrix g = c.generator();
  for (auto& x : g.data) x = emb(x);
  return code_from_rref(target, c.length(), std::move(g), c.pivots());
}

// ---------------------------------------------------------------------------
// Code file format:
//   q=<spec>
//   n=<n>
//   k=<rows>
//   <rows lines of n whitespace-separated integer-encoded field elements>

inline LinearCode parse_code(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&]() -> std::string {
    if (!std::getline(in, line)) {
      ++lineno;
      throw fail("unexpected end of file");
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  };
  auto header_value = [&](const std::string& key) {
    const std::string l = next_line();
    if (l.rfind(key + "=", 0) != 0) throw fail("expected '" + key + "=...'");
    return l.substr(key.size() + 1);
  };
  auto parse_uint = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
      throw fail("expected a non-negative integer, got '" + s + "'");
    return static_cast<std::size_t>(std::stoul(s));
  };

  std::optional<Field> field;
  {
    const std::string spec = header_value("q");
    try {
      field = Field::parse(spec);
    } catch (const Error& e) {
      throw fail(e.what());
    }
  }
  const std::size_t n = parse_uint(header_value("n"));
  if (n < 1 || n > kMaxLength) throw fail("n must be in 1.." + std::to_string(kMaxLength));
  const std::size_t k = parse_uint(header_value("k"));
  if (k > n * 4 + 64) throw fail("too many rows");
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t i = 0; i < k; ++i) {
    std::istringstream row(next_line());
    std::vector<unsigned> values;
    std::string tok;
    while (row >> tok) {
      const std::size_t v = parse_uint(tok);
      if (!field->contains(static_cast<unsigned>(v)) || v > 0xffff)
        throw fail("entry " + tok + " not in " + field->spec());
      values.push_back(static_cast<unsigned>(v));
    }
    if (values.size() != n)
      throw fail("row has " + std::to_string(values.size()) + " entries, expected " + std::to_string(n));
    rows.push_back(std::move(values));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw fail("trailing content");
  }
  return code_from_matrix(*field, rows, n);
}

inline LinearCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

inline std::string format_code(const LinearCode& c) {
  std::ostringstream out;
  out << c.field().spec() << "\nn=" << c.length() << "\nk=" << c.dimension() << "\n";
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    for (std::size_t j = 0; j < c.length(); ++j) out << (j ? " " : "") << c.generator()(i, j);
    out << "\n";
  }
  return out.str();
}

}  // namespace hwe
