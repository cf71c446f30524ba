#pragma once

// t-designs from support multisets: direct incidence counting, the harmonic
// vanishing criterion, and the subcode Assmus-Mattson checker.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "hwe/code.hpp"
#include "hwe/enumerators.hpp"
#include "hwe/harmonic.hpp"
#include "hwe/qcomb.hpp"

namespace hwe {

struct DesignReport {
  std::size_t t = 0;
  bool is_design = false;
  std::optional<Integer> lambda;
  /// (t-subset, incidence count). On failure the lex-first t-subset comes
  /// first, followed by subsets whose count differs from it.
  std::vector<std::pair<Mask, Integer>> violations;

  friend bool operator==(const DesignReport&, const DesignReport&) = default;
};

namespace detail {

inline std::size_t block_size(const SupportMultiset& blocks) {
  std::optional<std::size_t> size;
  for (const auto& [m, mult] : blocks.entries) {
    if (mult == 0) continue;
    const auto s = static_cast<std::size_t>(std::popcount(m));
    if (size && *size != s) throw Error(ErrorKind::MixedBlockSizes, "blocks have different sizes");
    size = s;
  }
  return size.value_or(0);
}

}  // namespace detail

/// Counts, with multiplicity, the blocks through every t-subset of E.
inline DesignReport is_t_design(const SupportMultiset& blocks, long t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "design strength must be >= 1");
  const auto tt = static_cast<std::size_t>(t);
  const std::size_t size = detail::block_size(blocks);
  DesignReport report{tt, true, Integer(0), {}};
  if (blocks.total() == 0) {
    if (tt > blocks.n) throw Error(ErrorKind::StrengthExceedsBlockSize, "t exceeds n");
    return report;
  }
  if (tt > size) throw Error(ErrorKind::StrengthExceedsBlockSize, "t exceeds the block size");
  const auto tsets = subsets_lex(blocks.n, tt);
  std::optional<Integer> first;
  for (const Mask s : tsets) {
    Integer count = 0;
    for (const auto& [m, mult] : blocks.entries)
      if ((s & ~m) == 0) count += Integer(static_cast<unsigned long>(mult));
    if (!first) {
      first = count;
      continue;
    }
    if (count != *first) {
      if (report.is_design) {
        report.is_design = false;
        report.violations.emplace_back(tsets.front(), *first);
      }
      if (report.violations.size() < 5) report.violations.emplace_back(s, count);
    }
  }
  if (report.is_design)
    report.lambda = *first;
  else
    report.lambda.reset();
  return report;
}

/// Sum over blocks B of f~(B) vanishes for every basis f of Harm_d(n), d = 1..t.
inline bool delsarte_check(const SupportMultiset& blocks, long t) {
  for (long d = 1; d <= t && static_cast<std::size_t>(d) <= blocks.n; ++d)
    for (const auto& f : harm_basis(blocks.n, static_cast<std::size_t>(d))) {
      Rational s = 0;
      for (const auto& [m, mult] : blocks.entries) s += f.tilde(m) * Rational(Integer(static_cast<unsigned long>(mult)));
      if (s != 0) return false;
    }
  return true;
}

/// S_{r,i}(C) is a t-design iff A_{i,f}^{(r)}(C) = 0 for all f in Harm_d(n), 1 <= d <= t.
inline bool harmonic_design_check(const SupportMultiset& dist, long r, long i, long t) {
  if (t <= 0) return true;
  if (i < 0) throw Error(ErrorKind::IndexOutOfRange, "weight index must be >= 0");
  const std::size_t n = dist.n;
  for (long d = 1; d <= t && static_cast<std::size_t>(2 * d) <= n; ++d) {
    if (i < d || static_cast<std::size_t>(i + d) > n) continue;  // A_i vanishes outside d..n-d
    for (const auto& f : harm_basis(n, static_cast<std::size_t>(d)))
      if (higher_A(dist, f, r).A[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

inline bool harmonic_design_check(const LinearCode& c, long r, long i, long t, const Budget& budget = {}) {
  if (t <= 0) return true;
  return harmonic_design_check(support_distribution(c, r, budget), r, i, t);
}

struct AMConclusion {
  std::string side;  // "C" or "C_perp"
  long r = 0;
  std::size_t i = 0;
  DesignReport report;

  friend bool operator==(const AMConclusion&, const AMConclusion&) = default;
};

struct AMReport {
  long r = 0;
  long t = 0;
  std::vector<std::size_t> d;       // d_mu(C), mu = 1..r
  std::vector<std::size_t> d_dual;  // d_mu(C_perp); n+1 when mu exceeds dim C_perp
  std::vector<std::vector<std::size_t>> L_sets;
  std::vector<long> margins;
  bool hypothesis_holds = false;
  std::vector<AMConclusion> conclusions;
  std::vector<AMConclusion> counterexamples;
  /// Direct verdicts on the same families, computed whether or not the
  /// hypothesis holds; informational only.
  std::vector<AMConclusion> observed;

  bool verified() const { return hypothesis_holds && counterexamples.empty(); }

  friend bool operator==(const AMReport&, const AMReport&) = default;
};

/// Checks |L_{mu,t}| <= d_mu - t for mu = 1..r and tests every family the
/// Assmus-Mattson argument covers directly with is_t_design. The verdicts become
/// conclusions only when the hypothesis holds.
inline AMReport am_check(const LinearCode& c, long r, long t, const Budget& budget = {}) {
  if (r < 1 || static_cast<std::size_t>(r) > c.dimension())
    throw Error(ErrorKind::RankOutOfRange, "am_check needs 1 <= r <= k");
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "design strength must be >= 1");
  const std::size_t n = c.length();
  const long q = c.field().order();
  const LinearCode cd = dual(c);
  const std::size_t kd = cd.dimension();

  std::vector<SupportMultiset> dists, dual_dists;
  for (long mu = 1; mu <= r; ++mu) dists.push_back(support_distribution(c, mu, budget));
  auto min_weight = [n](const SupportMultiset& s) {
    std::size_t best = n + 1;
    for (const auto& e : s.entries) best = std::min<std::size_t>(best, std::popcount(e.first));
    return best;
  };
  if (static_cast<std::size_t>(t) > min_weight(dists[0]))
    throw Error(ErrorKind::StrengthTooLarge, "t exceeds the minimum distance");

  std::vector<std::vector<Integer>> dual_A;  // dual_A[l][i] = A_i^{(l)}(C_perp)
  for (long l = 0; l <= r; ++l) {
    if (static_cast<std::size_t>(l) > kd) {
      dual_A.emplace_back(n + 1, Integer(0));
      continue;
    }
    dual_dists.push_back(support_distribution(cd, l, budget));
    dual_A.push_back(higher_weight_distribution(dual_dists.back()));
  }

  AMReport rep;
  rep.r = r;
  rep.t = t;
  rep.hypothesis_holds = true;
  for (long mu = 1; mu <= r; ++mu) {
    rep.d.push_back(min_weight(dists[mu - 1]));
    rep.d_dual.push_back(static_cast<std::size_t>(mu) <= kd ? min_weight(dual_dists[mu]) : n + 1);
    std::vector<std::size_t> L;
    for (std::size_t i = rep.d_dual.back(); i + t <= n; ++i) {
      Integer s = 0;
      for (long l = 0; l <= mu; ++l) s += q_product(mu, l, Integer(q)) * dual_A[l][i];
      if (s != 0) L.push_back(i);
    }
    const long margin = static_cast<long>(rep.d.back()) - t - static_cast<long>(L.size());
    rep.L_sets.push_back(std::move(L));
    rep.margins.push_back(margin);
    if (margin < 0) rep.hypothesis_holds = false;
  }
  auto record = [&rep, t](std::string side, const SupportMultiset& blocks, std::size_t i) {
    rep.observed.push_back(AMConclusion{std::move(side), rep.r, i, is_t_design(blocks, t)});
  };
  const auto& top = dists[r - 1];
  for (std::size_t i = rep.d[r - 1]; i <= n; ++i) {
    const auto blocks = top.with_size(i);
    if (blocks.total() != 0) record("C", blocks, i);
  }
  if (static_cast<std::size_t>(r) <= kd) {
    const auto& dtop = dual_dists[r];
    for (std::size_t j = std::max<std::size_t>(rep.d_dual[r - 1], t); j + t <= n; ++j)
      record("C_perp", dtop.with_size(j), j);
  }
  if (rep.hypothesis_holds) {
    rep.conclusions = rep.observed;
    for (const auto& con : rep.conclusions)
      if (!con.report.is_design) rep.counterexamples.push_back(con);
  }
  return rep;
}

}  // namespace hwe
