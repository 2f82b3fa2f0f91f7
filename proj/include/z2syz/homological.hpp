#pragma once

/// Homological invariants of finitely presented graded modules over
/// R = F2[v1,...,vk]: freeness, homological dimension, Ext vanishing against
/// R and the exact syzygy order.
///
/// A module M is a k-th syzygy iff Ext^i(Tr M, R) = 0 for 1 <= i <= k, where
/// Tr M is the Auslander transpose (cokernel of the dual of a minimal
/// presentation matrix). Over a polynomial ring k-torsionless and k-th
/// syzygy agree, so the syzygy order is one less than the first index
/// with Ext^i(Tr M, R) != 0.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "z2syz/resolution.hpp"

namespace z2syz {

class SyzygyOrder {
 public:
  static SyzygyOrder free() { return SyzygyOrder(true, 0); }
  static SyzygyOrder of(int k) { return SyzygyOrder(false, k); }

  bool is_free() const { return free_; }
  /// Meaningful only when !is_free().
  int value() const { return value_; }

  std::string to_string() const { return free_ ? "FREE" : std::to_string(value_); }

  friend bool operator==(const SyzygyOrder&, const SyzygyOrder&) = default;

 private:
  SyzygyOrder(bool f, int v) : free_(f), value_(v) {}
  bool free_;
  int value_;
};

/// min over summands; FREE absorbs.
inline SyzygyOrder combine(const SyzygyOrder& a, const SyzygyOrder& b) {
  if (a.is_free()) return b;
  if (b.is_free()) return a;
  return SyzygyOrder::of(std::min(a.value(), b.value()));
}

struct ExtReport {
  int index = 0;
  bool vanishes = true;
  std::optional<ModuleElement> witness;  // nonzero class representative in Hom(F_i, R)
};

/// Decomposition of a presentation into a free part and connected blocks.
struct BlockDecomposition {
  FreeModule free_part;  // generators touched by no relation
  std::vector<Presentation> blocks;
};

/// Splits a presentation along connected components of its relation matrix
/// (generators linked when some relation involves both).
inline BlockDecomposition split_blocks(const Presentation& p) {
  const std::size_t n = p.num_gens();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (const auto& c : p.rels.columns()) {
    if (c.is_zero()) continue;
    const std::size_t first = c.lead().pos;
    for (const auto& t : c.terms()) {
      touched[t.pos] = true;
      parent[find(t.pos)] = find(first);
    }
  }
  BlockDecomposition out;
  std::vector<std::size_t> free_slots;
  std::vector<std::vector<std::size_t>> comp_slots;
  std::vector<std::size_t> comp_of(n, 0), root_to_comp(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i) {
    if (!touched[i]) {
      free_slots.push_back(i);
      continue;
    }
    const std::size_t r = find(i);
    if (root_to_comp[r] == static_cast<std::size_t>(-1)) {
      root_to_comp[r] = comp_slots.size();
      comp_slots.emplace_back();
    }
    comp_of[i] = root_to_comp[r];
    comp_slots[comp_of[i]].push_back(i);
  }
  out.free_part = sub_basis(p.gens, free_slots);
  std::vector<std::vector<ModuleElement>> comp_rels(comp_slots.size());
  std::vector<std::uint32_t> local(n, 0);
  for (const auto& slots : comp_slots)
    for (std::size_t k = 0; k < slots.size(); ++k) local[slots[k]] = static_cast<std::uint32_t>(k);
  for (const auto& c : p.rels.columns()) {
    if (c.is_zero()) continue;
    std::vector<ModTerm> t = c.terms();
    for (auto& x : t) x.pos = local[x.pos];
    comp_rels[comp_of[c.lead().pos]].push_back(ModuleElement::from_sorted(std::move(t)));
  }
  for (std::size_t k = 0; k < comp_slots.size(); ++k) {
    FreeModule gens = sub_basis(p.gens, comp_slots[k]);
    ModuleMap rels = inclusion_map(comp_rels[k], gens);
    out.blocks.emplace_back(std::move(gens), std::move(rels));
  }
  return out;
}

/// Auslander transpose: coker of the dual of a minimal presentation matrix.
inline Presentation auslander_transpose(const Presentation& p, std::stop_token stop = {}) {
  const Presentation m = minimal_presentation(p, std::move(stop));
  ModuleMap t = transpose(m.rels);
  FreeModule gens = t.target();
  return Presentation(std::move(gens), std::move(t));
}

/// Ext^i(M, R) read off a resolution of M that reaches index i+1 (or terminates earlier).
inline ExtReport ext_from_resolution(const FreeResolution& res, int i, std::stop_token stop = {}) {
  ExtReport rep;
  rep.index = i;
  const auto ui = static_cast<std::size_t>(i);
  if (ui >= res.modules.size() || res.modules[ui].rank() == 0) return rep;
  const FreeModule& fi = res.modules[ui];
  const ModuleMap& di = res.differentials[ui - 1];  // F_i -> F_{i-1}
  std::vector<ModuleElement> cycles;
  if (ui < res.differentials.size()) {
    cycles = kernel(transpose(res.differentials[ui]), stop);  // Hom(F_i) -> Hom(F_{i+1})
  } else {
    for (std::size_t k = 0; k < fi.rank(); ++k) cycles.push_back(ModuleElement::basis_vector(k));
  }
  if (cycles.empty()) return rep;
  const GroebnerBasis bounds = image_basis(transpose(di), stop);
  for (const auto& z : cycles) {
    if (!contains(bounds, z)) {
      rep.vanishes = false;
      rep.witness = z;
      return rep;
    }
  }
  return rep;
}

/// Whether Ext^i(M, R) = 0, with a nonzero class representative otherwise.
inline ExtReport ext_vanishing(const Presentation& p, int i, std::stop_token stop = {}) {
  if (i < 1) throw std::invalid_argument("Ext index must be positive");
  const FreeResolution res = free_resolution(p, static_cast<std::size_t>(i) + 1, {true, stop});
  return ext_from_resolution(res, i, stop);
}

namespace detail {

/// Syzygy order of a minimally presented module with at least one relation.
inline SyzygyOrder block_syzygy_order(const Presentation& m, std::stop_token stop) {
  const int nvars = static_cast<int>(m.ring()->num_vars());
  const Presentation tr = auslander_transpose(m, stop);
  Resolver resolver(tr, {true, stop});
  for (int i = 1; i <= nvars; ++i) {
    while (!resolver.done() && resolver.resolution().length() < static_cast<std::size_t>(i) + 1)
      resolver.extend();
    if (!ext_from_resolution(resolver.resolution(), i, stop).vanishes) return SyzygyOrder::of(i - 1);
  }
  throw std::logic_error("non-free module passed every Ext test up to the number of variables");
}

}  // namespace detail

/// Exact syzygy order; FREE for free (including zero) modules.
inline SyzygyOrder syzygy_order(const Presentation& p, std::stop_token stop = {}) {
  const Presentation m = minimal_presentation(p, stop);
  if (m.num_rels() == 0) return SyzygyOrder::free();
  const BlockDecomposition parts = split_blocks(m);
  SyzygyOrder order = SyzygyOrder::free();
  for (const auto& b : parts.blocks) order = combine(order, detail::block_syzygy_order(b, stop));
  return order;
}

/// Length of a minimal free resolution.
inline int homological_dimension(const Presentation& p, std::stop_token stop = {}) {
  const Presentation m = minimal_presentation(p, stop);
  if (m.num_rels() == 0) return 0;
  const std::size_t cap = m.ring()->num_vars() + 1;
  std::size_t len = 0;
  for (const auto& b : split_blocks(m).blocks)
    len = std::max(len, free_resolution(b, cap, {true, stop}).length());
  return static_cast<int>(len);
}

inline bool is_free(const Presentation& p, std::stop_token stop = {}) {
  return minimal_presentation(p, std::move(stop)).num_rels() == 0;
}

inline bool is_zero_module(const Presentation& p, std::stop_token stop = {}) {
  return minimal_presentation(p, std::move(stop)).num_gens() == 0;
}

}  // namespace z2syz
