#pragma once

// Koszul complex on t1..tr over F2 and the modules built from it.
// Basis slots of Λ^k are the k-subsets of {1..r} in colex order, which for
// bitmasks of a fixed size is plain numeric order.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "z2syz/resolution.hpp"

namespace z2syz {

/// k-subsets of {0..r-1} as bitmasks, colex order.
inline std::vector<std::uint32_t> subsets_of_size(int r, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << r); ++s)
    if (std::popcount(s) == k) out.push_back(s);
  return out;
}

/// Λ^k with every basis vector in degree k.
inline FreeModule exterior_power(const RingPtr& ring, int k) {
  const int r = static_cast<int>(ring->num_vars());
  return FreeModule(ring, std::vector<int>(subsets_of_size(r, k).size(), k));
}

/// δ_k: Λ^k -> Λ^{k-1}, e_S ↦ Σ_{j∈S} t_j e_{S∖{j}}.
inline ModuleMap koszul_differential(const RingPtr& ring, int k) {
  const int r = static_cast<int>(ring->num_vars());
  if (k < 1 || k > r) throw std::out_of_range("Koszul degree out of range");
  const auto src = subsets_of_size(r, k);
  const auto dst = subsets_of_size(r, k - 1);
  std::vector<std::uint32_t> index(1u << r, 0);
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<std::uint32_t>(i);
  std::vector<ModuleElement> cols;
  cols.reserve(src.size());
  for (auto s : src) {
    std::vector<ModTerm> t;
    for (int j = 0; j < r; ++j)
      if (s & (1u << j)) t.push_back({Monomial::variable(static_cast<std::size_t>(j)), index[s & ~(1u << j)]});
    cols.push_back(ModuleElement::from_terms(std::move(t), ring->term_order()));
  }
  return ModuleMap(exterior_power(ring, k), exterior_power(ring, k - 1), std::move(cols));
}

/// The complete Koszul resolution of F2 = R/(t1..tr): F_k = Λ^k, d_k = δ_k.
inline FreeResolution koszul_complex(const RingPtr& ring) {
  const int r = static_cast<int>(ring->num_vars());
  FreeResolution res;
  res.modules.push_back(exterior_power(ring, 0));
  for (int k = 1; k <= r; ++k) {
    res.differentials.push_back(koszul_differential(ring, k));
    res.modules.push_back(res.differentials.back().source());
  }
  return res;
}

/// Presentation of a submodule from generators: gens = its generators, rels = their syzygies.
inline Presentation submodule_presentation(const std::vector<ModuleElement>& gens, const FreeModule& ambient,
                                           std::stop_token stop = {}) {
  const ModuleMap incl = inclusion_map(gens, ambient);
  const auto syz = kernel(incl, stop);
  return Presentation(incl.source(), inclusion_map(syz, incl.source()));
}

/// K_j = im δ_j, presented by the columns of δ_j modulo ker δ_j.
inline Presentation koszul_image_presentation(const RingPtr& ring, int j, std::stop_token stop = {}) {
  const ModuleMap d = koszul_differential(ring, j);
  const auto syz = kernel(d, stop);
  return Presentation(d.source(), inclusion_map(syz, d.source()));
}

/// ker and coker of δ_{k+1}: Λ^{k+1} -> Λ^k.
inline std::pair<Presentation, Presentation> koszul_ker_coker(const RingPtr& ring, int k, std::stop_token stop = {}) {
  const int r = static_cast<int>(ring->num_vars());
  if (k < 0 || k + 1 > r) throw std::out_of_range("Koszul degree out of range");
  const ModuleMap d = koszul_differential(ring, k + 1);
  Presentation coker = Presentation::cokernel(d);
  Presentation ker = submodule_presentation(kernel(d, stop), d.source(), stop);
  return {std::move(ker), std::move(coker)};
}

}  // namespace z2syz
