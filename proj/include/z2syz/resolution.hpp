#pragma once

/// Kernels, minimal presentations and free resolutions.
///
/// Kernels are computed by elimination: the columns f_j of f: F -> G are
/// lifted to (f_j, e_j) in G ⊕ F. Under position-over-term order with the
/// G slots first, the Groebner basis elements whose leading slot lies in F
/// have zero G-part, and their F-parts generate ker f.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <vector>

#include "z2syz/groebner.hpp"
#include "z2syz/module.hpp"

namespace z2syz {

/// Groebner basis of the image of f inside its target.
inline GroebnerBasis image_basis(const ModuleMap& f, std::stop_token stop = {}) {
  return groebner(f.columns(), f.target(), std::move(stop));
}

/// Degree of a generator: its homogeneous degree, or its top degree when not homogeneous.
inline int generator_degree(const ModuleElement& e, const FreeModule& ambient) {
  if (auto d = e.homogeneous_degree(ambient)) return *d;
  return e.top_degree(ambient.shifts());
}

/// Generating set of ker f; a minimal one when f is graded.
inline std::vector<ModuleElement> kernel(const ModuleMap& f, std::stop_token stop = {}) {
  const auto g = static_cast<std::uint32_t>(f.rows());
  const FreeModule aug = direct_sum(f.target(), f.source());
  std::vector<ModuleElement> lifted;
  lifted.reserve(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    std::vector<ModTerm> t = f.column(j).terms();
    t.push_back({Monomial::one(), g + static_cast<std::uint32_t>(j)});
    lifted.push_back(ModuleElement::from_sorted(std::move(t)));
  }
  const GroebnerBasis gb = groebner(lifted, aug, stop);
  std::vector<ModuleElement> ker;
  for (const auto& e : gb.elements) {
    if (e.lead().pos < g) continue;
    std::vector<ModTerm> t = e.terms();
    for (auto& x : t) x.pos -= g;
    ker.push_back(ModuleElement::from_sorted(std::move(t)));
  }
  if (ker.empty() || !f.is_graded()) return ker;
  const auto keep = minimal_generators(ker, f.source(), stop);
  std::vector<ModuleElement> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(std::move(ker[i]));
  return out;
}

/// Map whose columns are `gens`, with source degrees read off the generators.
inline ModuleMap inclusion_map(const std::vector<ModuleElement>& gens, const FreeModule& ambient) {
  std::vector<int> shifts;
  shifts.reserve(gens.size());
  for (const auto& e : gens) shifts.push_back(generator_degree(e, ambient));
  return ModuleMap(FreeModule(ambient.ring(), std::move(shifts)), ambient, gens);
}

namespace detail {

inline ModuleMap drop_rows(const ModuleMap& f, const std::vector<bool>& drop) {
  std::vector<std::optional<std::uint32_t>> remap(f.rows());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    if (drop[i]) continue;
    remap[i] = static_cast<std::uint32_t>(kept.size());
    kept.push_back(i);
  }
  std::vector<ModuleElement> cols;
  cols.reserve(f.cols());
  for (const auto& c : f.columns()) {
    std::vector<ModTerm> t;
    for (const auto& x : c.terms())
      if (remap[x.pos]) t.push_back({x.mon, *remap[x.pos]});
    cols.push_back(ModuleElement::from_sorted(std::move(t)));
  }
  return ModuleMap(f.source(), sub_basis(f.target(), kept), std::move(cols));
}

inline ModuleMap drop_columns(const ModuleMap& f, const std::vector<bool>& drop) {
  std::vector<std::size_t> kept;
  std::vector<ModuleElement> cols;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (drop[j]) continue;
    kept.push_back(j);
    cols.push_back(f.column(j));
  }
  return ModuleMap(sub_basis(f.source(), kept), f.target(), std::move(cols));
}

struct Pivot {
  std::size_t row, col;
};

/// Unit entry with the smallest column index, then the smallest row index.
inline std::optional<Pivot> find_unit(const ModuleMap& f) {
  for (std::size_t j = 0; j < f.cols(); ++j) {
    std::optional<std::size_t> best;
    for (const auto& t : f.column(j).terms())
      if (t.mon.is_one() && (!best || t.pos < *best)) best = t.pos;
    if (best) return Pivot{*best, j};
  }
  return std::nullopt;
}

/// Clears row p.row outside column p.col by column operations, then removes
/// that row and column. The returned map is f restricted to a complement of
/// the split-off summand R e_col -> R f_row.
inline ModuleMap cancel_unit(const ModuleMap& f, Pivot p) {
  const TermOrder order = f.target().order();
  const ModuleElement& pivot_col = f.column(p.col);
  std::vector<ModuleElement> cols = f.columns();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c == p.col) continue;
    const Polynomial coeff = cols[c].component(f.target(), p.row);
    if (coeff.is_zero()) continue;
    cols[c] = add(cols[c], multiply(pivot_col, coeff, order), order);
  }
  ModuleMap g(f.source(), f.target(), std::move(cols));
  std::vector<bool> rows(f.rows(), false), colmask(f.cols(), false);
  rows[p.row] = true;
  colmask[p.col] = true;
  return drop_columns(drop_rows(g, rows), colmask);
}

}  // namespace detail

/// Presentation of the same module with minimally many generators and relations
/// (for graded input; otherwise only unit pivots are cancelled).
inline Presentation minimal_presentation(const Presentation& p, std::stop_token stop = {}) {
  std::vector<ModuleElement> rels;
  for (const auto& c : p.rels.columns())
    if (!c.is_zero()) rels.push_back(c);
  ModuleMap m = inclusion_map(rels, p.gens);
  if (p.is_graded() && !rels.empty()) {
    const auto keep = minimal_generators(rels, p.gens, stop);
    std::vector<ModuleElement> kept;
    kept.reserve(keep.size());
    for (auto i : keep) kept.push_back(rels[i]);
    m = inclusion_map(kept, p.gens);
  }
  while (auto piv = detail::find_unit(m)) {
    if (stop.stop_requested()) throw OperationCancelled();
    m = detail::cancel_unit(m, *piv);
  }
  return Presentation(m.target(), m);
}

/// F_0 <- F_1 <- ... <- F_L with differentials d_i: F_i -> F_{i-1} stored at index i-1.
struct FreeResolution {
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> differentials;

  std::size_t length() const { return differentials.size(); }

  /// Graded ranks (rank of each F_i).
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (const auto& m : modules) out.push_back(m.rank());
    return out;
  }

  Presentation presented_module() const {
    if (differentials.empty()) return Presentation::of_free(modules.front());
    return Presentation(modules.front(), differentials.front());
  }
};

struct ResolutionOptions {
  bool minimal = true;
  std::stop_token stop = {};
};

/// Resolution of coker(rels), truncated at max_len differentials.
inline FreeResolution free_resolution(const Presentation& p, std::size_t max_len, ResolutionOptions opt = {});

/// Cancels unit entries pairwise until no differential has one.
inline FreeResolution minimize(FreeResolution res, std::stop_token stop = {}) {
  for (std::size_t i = 0; i < res.differentials.size(); ++i) {
    while (auto piv = detail::find_unit(res.differentials[i])) {
      if (stop.stop_requested()) throw OperationCancelled();
      res.differentials[i] = detail::cancel_unit(res.differentials[i], *piv);
      if (i + 1 < res.differentials.size()) {
        std::vector<bool> rows(res.differentials[i + 1].rows(), false);
        rows[piv->col] = true;
        res.differentials[i + 1] = detail::drop_rows(res.differentials[i + 1], rows);
      }
      if (i > 0) {
        std::vector<bool> cols(res.differentials[i - 1].cols(), false);
        cols[piv->row] = true;
        res.differentials[i - 1] = detail::drop_columns(res.differentials[i - 1], cols);
      }
    }
  }
  if (res.differentials.empty()) return res;
  res.modules.clear();
  res.modules.push_back(res.differentials.front().target());
  for (const auto& d : res.differentials) res.modules.push_back(d.source());
  while (!res.differentials.empty() && res.modules.back().rank() == 0) {
    res.differentials.pop_back();
    res.modules.pop_back();
  }
  return res;
}

/// Incremental resolution builder: each extend() appends one differential.
class Resolver {
 public:
  Resolver(const Presentation& p, ResolutionOptions opt) : opt_(std::move(opt)) {
    Presentation q = opt_.minimal ? minimal_presentation(p, opt_.stop) : p;
    res_.modules.push_back(q.gens);
    if (q.num_rels() > 0 && !q.rels.is_zero()) {
      res_.modules.push_back(q.rels.source());
      res_.differentials.push_back(q.rels);
    } else {
      done_ = true;
    }
  }

  bool done() const { return done_; }
  const FreeResolution& resolution() const { return res_; }

  /// Appends the next differential; returns false once the resolution has terminated.
  bool extend() {
    if (done_) return false;
    const ModuleMap& last = res_.differentials.back();
    std::vector<ModuleElement> ker = kernel(last, opt_.stop);
    if (ker.empty()) {
      done_ = true;
      return false;
    }
    ModuleMap d = inclusion_map(ker, last.source());
    res_.modules.push_back(d.source());
    res_.differentials.push_back(std::move(d));
    return true;
  }

 private:
  ResolutionOptions opt_;
  FreeResolution res_;
  bool done_ = false;
};

inline FreeResolution free_resolution(const Presentation& p, std::size_t max_len, ResolutionOptions opt) {
  const bool want_minimal = opt.minimal;
  Resolver r(p, opt);
  FreeResolution res = r.resolution();
  if (max_len == 0) {
    res.differentials.clear();
    res.modules.resize(1);
    return res;
  }
  while (r.resolution().length() < max_len && r.extend()) {
  }
  res = r.resolution();
  if (want_minimal && !p.is_graded()) res = minimize(std::move(res), opt.stop);
  return res;
}

inline FreeResolution free_resolution(const Presentation& p) {
  return free_resolution(p, p.ring()->num_vars() + 1);
}

}  // namespace z2syz
