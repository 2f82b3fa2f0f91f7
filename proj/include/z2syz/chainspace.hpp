#pragma once

/// Chain spaces N_c for a length vector ℓ = (l_1..l_r) and constant c:
/// subset calculus on ℓ, the presentations of the equivariant cohomology over
/// R̃ = F2[t, t1..tr], the map ι over R = F2[t1..tr] and the resulting
/// syzygy-order report for H*_G(N_c) = coker ι ⊕ ker ι.
///
/// Subsets of {1..r} are bitmasks (bit j-1 for index j) and are always listed
/// by cardinality, then colex. Basis labels s_J/t^μ are slots with adjusted
/// degrees; no Laurent polynomials are ever formed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "z2syz/homological.hpp"
#include "z2syz/koszul.hpp"
#include "z2syz/rank.hpp"
#include "z2syz/rational.hpp"
#include "z2syz/resolution.hpp"

namespace z2syz {

using Subset = std::uint32_t;

inline constexpr int kMaxChainLength = static_cast<int>(kMaxVars);
inline constexpr int kMaxSphereParameter = 16;

class ChainSpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (ℓ, c) hits a wall: l(J) ∈ {0, c, -c} for the reported subset.
class NonGenericError : public ChainSpaceError {
 public:
  NonGenericError(Subset s, Rational v, std::string what)
      : ChainSpaceError(std::move(what)), subset(s), value(v) {}
  Subset subset;
  Rational value;
};

struct ChainSpaceParams {
  int m = 2;
  int n = 1;
  std::vector<Rational> ell;
  Rational c{0};

  int r() const { return static_cast<int>(ell.size()); }
  friend bool operator==(const ChainSpaceParams&, const ChainSpaceParams&) = default;
};

/// "{1,3}", "{}" for the empty set.
inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!(s & (Subset{1} << j))) continue;
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

/// All subsets of {1..r}, by cardinality then colex.
inline std::vector<Subset> all_subsets(int r) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << r);
  for (int k = 0; k <= r; ++k)
    for (auto s : subsets_of_size(r, k)) out.push_back(s);
  return out;
}

inline Subset full_set(int r) { return r >= 32 ? ~Subset{0} : (Subset{1} << r) - 1; }

/// l(J) = Σ_{j∈J} l_j − Σ_{j∉J} l_j.
inline Rational subset_weight(const std::vector<Rational>& ell, Subset J) {
  Rational w(0);
  for (std::size_t j = 0; j < ell.size(); ++j) w += (J & (Subset{1} << j)) ? ell[j] : -ell[j];
  return w;
}

/// First subset (in canonical order) with l(J) ∈ {0, c, -c}.
inline std::optional<Subset> first_wall(const std::vector<Rational>& ell, const Rational& c) {
  for (auto J : all_subsets(static_cast<int>(ell.size()))) {
    const Rational w = subset_weight(ell, J);
    if (w == kZero || w == c || w == -c) return J;
  }
  return std::nullopt;
}

/// l(J) ≠ ±c for all J, and l(J) ≠ 0 (plain genericity of ℓ).
inline bool is_generic(const std::vector<Rational>& ell, const Rational& c) { return !first_wall(ell, c); }

inline void check_generic(const std::vector<Rational>& ell, const Rational& c) {
  const auto J = first_wall(ell, c);
  if (!J) return;
  const Rational w = subset_weight(ell, *J);
  std::string msg = "non-generic: l(" + subset_to_string(*J) + ") = " + to_string(w);
  if (w != kZero) msg += w == c ? " = c" : " = -c";
  throw NonGenericError(*J, w, msg);
}

/// Structural checks plus genericity; throws ChainSpaceError / NonGenericError.
inline void validate(const ChainSpaceParams& p) {
  if (p.m < 2 || p.m > kMaxSphereParameter) throw ChainSpaceError("m must lie in [2, 16]");
  if (p.n < 1 || p.n > kMaxSphereParameter) throw ChainSpaceError("n must lie in [1, 16]");
  if (p.ell.empty() || p.r() > kMaxChainLength) throw ChainSpaceError("length vector must have 1..8 entries");
  for (const auto& l : p.ell)
    if (l <= kZero) throw ChainSpaceError("length entries must be positive");
  if (p.c < kZero) throw ChainSpaceError("c must be non-negative");
  check_generic(p.ell, p.c);
}

struct LongShort {
  std::vector<Subset> long_sets;   // l(J) > c
  std::vector<Subset> short_sets;  // l(I) < -c
};

inline LongShort long_short_sets(const std::vector<Rational>& ell, const Rational& c) {
  check_generic(ell, c);
  LongShort out;
  for (auto J : all_subsets(static_cast<int>(ell.size()))) {
    const Rational w = subset_weight(ell, J);
    if (w > c) out.long_sets.push_back(J);
    if (w < -c) out.short_sets.push_back(J);
  }
  return out;
}

struct CriticalValues {
  std::vector<Rational> values;  // sorted, distinct
  Rational cr_min{0};            // least positive value
};

inline CriticalValues critical_values(const std::vector<Rational>& ell) {
  check_generic(ell, Rational(0));
  CriticalValues out;
  for (auto J : all_subsets(static_cast<int>(ell.size()))) out.values.push_back(subset_weight(ell, J));
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.cr_min = *std::upper_bound(out.values.begin(), out.values.end(), Rational(0));
  return out;
}

/// Open interval of c >= 0 between consecutive positive critical values.
struct Chamber {
  Rational lo{0};
  std::optional<Rational> hi;  // nullopt: unbounded
  Rational representative{0};  // midpoint, or lo + 1 when unbounded

  std::string to_string() const {
    return "(" + z2syz::to_string(lo) + "," + (hi ? z2syz::to_string(*hi) : std::string("inf")) + ")";
  }
};

inline std::vector<Chamber> chambers(const std::vector<Rational>& ell) {
  std::vector<Rational> cuts{Rational(0)};
  for (const auto& v : critical_values(ell).values)
    if (v > kZero) cuts.push_back(v);
  std::vector<Chamber> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    out.push_back({cuts[k], cuts[k + 1], (cuts[k] + cuts[k + 1]) / 2});
  out.push_back({cuts.back(), std::nullopt, cuts.back() + 1});
  return out;
}

/// μ_i(J) = i for long J (l(J) > 0), 0 for short J.
inline int mu(int i, Subset J, const std::vector<Rational>& ell) {
  const Rational w = subset_weight(ell, J);
  if (w == kZero) throw NonGenericError(J, w, "mu undefined: l(" + subset_to_string(J) + ") = 0");
  return w > kZero ? i : 0;
}

/// H*_{G̃}(M) = F2[s_1..s_r, t, t_1..t_r] / (s_j s̄_j), s̄_j = s_j + t^{m-1} t_j^n.
struct AmbientRecord {
  int r = 0;
  int s_degree = 0;  // |s_j| = m+n-1; |t| = |t_j| = 1
  std::vector<std::string> relations;
};

inline AmbientRecord presentation_ambient(const ChainSpaceParams& p) {
  AmbientRecord a;
  a.r = p.r();
  a.s_degree = p.m + p.n - 1;
  auto power = [](const std::string& x, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? x : x + "^" + std::to_string(e);
  };
  for (int j = 1; j <= a.r; ++j) {
    const std::string s = "s" + std::to_string(j);
    std::string coeff = power("t", p.m - 1);
    const std::string tj = power("t" + std::to_string(j), p.n);
    if (!tj.empty()) coeff += coeff.empty() ? tj : "*" + tj;
    a.relations.push_back(s + "^2 + " + (coeff.empty() ? s : coeff + "*" + s));
  }
  return a;
}

/// R̃ = F2[t, t1..tr]; t is variable 0, t_j is variable j.
inline RingPtr extended_ring(int r) {
  if (r < 0 || r + 1 > static_cast<int>(kMaxVars)) throw ChainSpaceError("extended ring needs r <= 7");
  std::vector<std::string> names{"t"};
  for (int j = 1; j <= r; ++j) names.push_back("t" + std::to_string(j));
  return make_ring(std::move(names));
}

/// t^a · Π_{j∈S} t_j^n in R̃.
inline Monomial extended_monomial(unsigned a, Subset S, int n) {
  Monomial m = Monomial::variable(0, a);
  for (int j = 0; j < 31; ++j)
    if (S & (Subset{1} << j)) m = m * Monomial::variable(static_cast<std::size_t>(j) + 1, static_cast<unsigned>(n));
  return m;
}

/// Restriction of s_j (j is 1-based) to the fixed point p_J: t^{m-1} t_j^n if j ∈ J, else 0.
inline Polynomial restrict_to_fixed_point(const RingPtr& rt, int m, int n, Subset J, int j) {
  if (!(J & (Subset{1} << (j - 1)))) return Polynomial::zero(rt);
  return Polynomial::monomial(rt, extended_monomial(static_cast<unsigned>(m - 1), Subset{1} << (j - 1), n));
}

/// Restriction of s_I = Π_{i∈I} s_i to p_J.
inline Polynomial restrict_product_to_fixed_point(const RingPtr& rt, int m, int n, Subset J, Subset I) {
  if ((I & J) != I) return Polynomial::zero(rt);
  const auto k = static_cast<unsigned>(std::popcount(I));
  return Polynomial::monomial(rt, extended_monomial(static_cast<unsigned>(m - 1) * k, I, n));
}

struct BasisSlot {
  Subset set = 0;
  int degree = 0;
};

/// Free R̃-basis s_J/t^{μ_i(J)} of H*_{G̃}(M_i), degrees |J|(m+n-1) − μ_i(J).
inline std::vector<BasisSlot> level_basis(const ChainSpaceParams& p, int i) {
  if (i < 0 || i > p.m - 1) throw ChainSpaceError("level out of range");
  check_generic(p.ell, Rational(0));
  std::vector<BasisSlot> out;
  for (auto J : all_subsets(p.r()))
    out.push_back({J, std::popcount(J) * (p.m + p.n - 1) - mu(i, J, p.ell)});
  return out;
}

namespace detail {

inline FreeModule slot_module(const RingPtr& ring, const std::vector<BasisSlot>& basis) {
  std::vector<int> shifts;
  for (const auto& b : basis) shifts.push_back(b.degree);
  return FreeModule(ring, std::move(shifts));
}

inline std::vector<std::uint32_t> slot_index(int r) {
  std::vector<std::uint32_t> index(std::size_t{1} << r, 0);
  const auto order = all_subsets(r);
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = static_cast<std::uint32_t>(k);
  return index;
}

/// s̄_J / t^d written on the slots s_I/t^{μ(I)} of the given level:
/// Σ_{I⊆J} slot_I · t^{(m-1)|J∖I| + μ(I) − d} · Π_{j∈J∖I} t_j^n.
inline ModuleElement bar_expansion(const ChainSpaceParams& p, int level, Subset J, int d,
                                   const std::vector<std::uint32_t>& index, TermOrder order) {
  std::vector<ModTerm> terms;
  for (Subset I = J;; I = (I - 1) & J) {
    const int e = (p.m - 1) * std::popcount(J & ~I) + mu(level, I, p.ell) - d;
    if (e < 0) throw std::logic_error("negative t exponent in expansion");
    terms.push_back({extended_monomial(static_cast<unsigned>(e), J & ~I, p.n), index[I]});
    if (I == 0) break;
  }
  return ModuleElement::from_terms(std::move(terms), order);
}

}  // namespace detail

/// H*_{G̃}(M_i) for 1 <= i <= m: level i-1 slots modulo s_J/t^{i-1} and s̄_J/t^{i-1} for long J.
inline Presentation level_presentation(const ChainSpaceParams& p, int i) {
  if (i < 1 || i > p.m) throw ChainSpaceError("level out of range");
  const RingPtr rt = extended_ring(p.r());
  const auto basis = level_basis(p, i - 1);
  const FreeModule gens = detail::slot_module(rt, basis);
  const auto index = detail::slot_index(p.r());
  std::vector<ModuleElement> rels;
  for (const auto& b : basis) {
    if (subset_weight(p.ell, b.set) < kZero) continue;
    // s_J/t^{i-1} = t^{μ_{i-1}(J) − (i-1)} · slot_J, and μ_{i-1}(J) = i-1 here.
    rels.push_back(ModuleElement::basis_vector(index[b.set]));
    rels.push_back(detail::bar_expansion(p, i - 1, b.set, i - 1, index, rt->term_order()));
  }
  return Presentation(gens, inclusion_map(rels, gens));
}

/// H*_{G̃}(N_c): level m-1 slots modulo S = ⟨slots with l(I) > −c⟩ and
/// S̄ = ⟨s̄_J/t^{m-1} : l(J) > c⟩.
inline Presentation chain_presentation(const ChainSpaceParams& p) {
  validate(p);
  const RingPtr rt = extended_ring(p.r());
  const auto basis = level_basis(p, p.m - 1);
  const FreeModule gens = detail::slot_module(rt, basis);
  const auto index = detail::slot_index(p.r());
  std::vector<ModuleElement> rels;
  for (const auto& b : basis)
    if (subset_weight(p.ell, b.set) > -p.c) rels.push_back(ModuleElement::basis_vector(index[b.set]));
  for (const auto& b : basis)
    if (subset_weight(p.ell, b.set) > p.c)
      rels.push_back(detail::bar_expansion(p, p.m - 1, b.set, p.m - 1, index, rt->term_order()));
  return Presentation(gens, inclusion_map(rels, gens));
}

struct IotaMatrix {
  std::vector<Subset> rows;  // S_c, slot s_I in degree |I|(m+n-1)
  std::vector<Subset> cols;  // L_c, slot s̄_J/t^{m-1} in degree |J|(m+n-1) − (m−1)
  ModuleMap map;

  friend bool operator==(const IotaMatrix&, const IotaMatrix&) = default;
};

/// ι(s̄_J/t^{m-1}) = Σ_{j∈J, l(J∖{j}) < −c} t_j^n s_{J∖{j}} over R = F2[t1..tr].
inline IotaMatrix build_iota(const ChainSpaceParams& p) {
  validate(p);
  const LongShort ls = long_short_sets(p.ell, p.c);
  const RingPtr ring = make_ring(static_cast<std::size_t>(p.r()));
  const int deg_s = p.m + p.n - 1;
  std::vector<int> row_shifts, col_shifts;
  std::vector<std::uint32_t> row_of(std::size_t{1} << p.r(), static_cast<std::uint32_t>(-1));
  for (std::size_t k = 0; k < ls.short_sets.size(); ++k) {
    row_of[ls.short_sets[k]] = static_cast<std::uint32_t>(k);
    row_shifts.push_back(std::popcount(ls.short_sets[k]) * deg_s);
  }
  std::vector<ModuleElement> cols;
  for (auto J : ls.long_sets) {
    col_shifts.push_back(std::popcount(J) * deg_s - (p.m - 1));
    std::vector<ModTerm> terms;
    for (int j = 0; j < p.r(); ++j) {
      const Subset bit = Subset{1} << j;
      if (!(J & bit)) continue;
      const auto row = row_of[J & ~bit];
      if (row != static_cast<std::uint32_t>(-1))
        terms.push_back({Monomial::variable(static_cast<std::size_t>(j), static_cast<unsigned>(p.n)), row});
    }
    cols.push_back(ModuleElement::from_terms(std::move(terms), ring->term_order()));
  }
  IotaMatrix out;
  out.rows = ls.short_sets;
  out.cols = ls.long_sets;
  out.map = ModuleMap(FreeModule(ring, std::move(col_shifts)), FreeModule(ring, std::move(row_shifts)), std::move(cols));
  return out;
}

struct Cohomology {
  Presentation ker;
  Presentation coker;
  Presentation combined;  // coker ⊕ ker
};

/// ker ι presented by its generators modulo their syzygies.
inline Presentation kernel_presentation(const ModuleMap& f, std::stop_token stop = {}) {
  return submodule_presentation(kernel(f, stop), f.source(), stop);
}

inline Cohomology cohomology(const IotaMatrix& iota, std::stop_token stop = {}) {
  Cohomology h;
  h.coker = Presentation::cokernel(iota.map);
  h.ker = kernel_presentation(iota.map, stop);
  h.combined = direct_sum(h.coker, h.ker);
  return h;
}

inline Cohomology cohomology(const ChainSpaceParams& p, std::stop_token stop = {}) {
  return cohomology(build_iota(p), stop);
}

struct Dimensions {
  long long dim_H = 0;        // dim H*(N_c) = 2|L_c|
  long long dim_H_fixed = 0;  // dim H*(N_c^G) = 2|L_c| − 2 rk ι
  std::size_t rank_iota = 0;
};

inline Dimensions dims(const IotaMatrix& iota) {
  Dimensions d;
  d.rank_iota = generic_rank(iota.map);
  d.dim_H = 2 * static_cast<long long>(iota.cols.size());
  d.dim_H_fixed = d.dim_H - 2 * static_cast<long long>(d.rank_iota);
  return d;
}

inline Dimensions dims(const ChainSpaceParams& p) { return dims(build_iota(p)); }

/// The k with r = 2k+1 or r = 2k+2: the largest possible non-free order.
inline int maximal_order(int r) { return (r - 1) / 2; }

/// k when L_c is the long family of the maximal model, nullopt ("below maximal") otherwise.
/// Odd r: model (1,..,1), long iff |J| >= k+1. Even r: model (1,..,1) with one
/// coordinate p set to 0, long iff |J∖{p}| >= k+1; every p is tried since the
/// model is only fixed up to reordering.
inline std::optional<int> classify_maximal(const ChainSpaceParams& p) {
  validate(p);
  const int r = p.r();
  const int k = maximal_order(r);
  std::vector<bool> is_long(std::size_t{1} << r, false);
  for (auto J : long_short_sets(p.ell, p.c).long_sets) is_long[J] = true;
  auto matches = [&](Subset ignore) {
    for (Subset J = 0; J <= full_set(r); ++J)
      if ((std::popcount(J & ~ignore) >= k + 1) != is_long[J]) return false;
    return true;
  };
  if (r % 2 == 1) return matches(0) ? std::optional<int>(k) : std::nullopt;
  for (int q = 0; q < r; ++q)
    if (matches(Subset{1} << q)) return k;
  return std::nullopt;
}

/// Appends l_{r+1} = ε, half the distance from 0 of the nearest value among l(J), l(J) ± c.
/// Every l(J) then moves by ε without crossing 0 or ±c, so L_c gains exactly J ∪ {r+1} for long J.
inline ChainSpaceParams extend_by_zero(const ChainSpaceParams& p) {
  validate(p);
  if (p.r() + 1 > kMaxChainLength) throw ChainSpaceError("length vector would exceed 8 entries");
  std::optional<Rational> gap;
  for (auto J : all_subsets(p.r())) {
    const Rational w = subset_weight(p.ell, J);
    for (const Rational& v : {abs(w), abs(w - p.c), abs(w + p.c)})
      if (!gap || v < *gap) gap = v;
  }
  if (!gap || *gap <= kZero) throw ChainSpaceError("no positive gap");
  ChainSpaceParams q = p;
  q.ell.push_back(*gap / 2);
  return q;
}

struct SyzygyReport {
  ChainSpaceParams params;
  std::vector<Subset> long_sets;
  std::vector<Subset> short_sets;
  std::vector<Rational> critical_values;
  Rational cr_min{0};
  IotaMatrix iota;
  std::size_t rank_iota = 0;
  long long dim_H = 0;
  long long dim_H_fixed = 0;
  Presentation ker_pres;
  Presentation coker_pres;
  SyzygyOrder order = SyzygyOrder::free();
  bool free = true;
  bool zero = true;
  std::size_t free_rank = 0;  // rank when free
  std::optional<int> classification_predicted;
  bool consistent = true;

  friend bool operator==(const SyzygyReport&, const SyzygyReport&) = default;
};

inline SyzygyReport full_report(const ChainSpaceParams& p, std::stop_token stop = {}) {
  validate(p);
  SyzygyReport rep;
  rep.params = p;
  const LongShort ls = long_short_sets(p.ell, p.c);
  rep.long_sets = ls.long_sets;
  rep.short_sets = ls.short_sets;
  const CriticalValues cv = critical_values(p.ell);
  rep.critical_values = cv.values;
  rep.cr_min = cv.cr_min;
  rep.iota = build_iota(p);
  const Dimensions d = dims(rep.iota);
  rep.rank_iota = d.rank_iota;
  rep.dim_H = d.dim_H;
  rep.dim_H_fixed = d.dim_H_fixed;
  Cohomology h = cohomology(rep.iota, stop);
  rep.ker_pres = std::move(h.ker);
  rep.coker_pres = std::move(h.coker);
  const Presentation minimal = minimal_presentation(h.combined, stop);
  rep.zero = minimal.num_gens() == 0;
  rep.free = minimal.num_rels() == 0;
  rep.free_rank = rep.free ? minimal.num_gens() : 0;
  rep.order = rep.free ? SyzygyOrder::free() : syzygy_order(minimal, stop);
  rep.classification_predicted = classify_maximal(p);
  const bool maximal = !rep.free && rep.order.value() == maximal_order(p.r());
  rep.consistent = maximal == rep.classification_predicted.has_value() && rep.free == (rep.dim_H == rep.dim_H_fixed);
  return rep;
}

}  // namespace z2syz
