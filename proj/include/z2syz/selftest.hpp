#pragma once

// Randomized consistency checks of the Groebner/resolution engine on small
// graded presentations over at most four variables.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "z2syz/groebner.hpp"
#include "z2syz/hilbert.hpp"
#include "z2syz/resolution.hpp"

namespace z2syz {

struct PropertyTally {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;
};

struct PropertySuiteResult {
  std::vector<PropertyTally> properties;
  bool all_passed() const {
    for (const auto& p : properties)
      if (p.failed) return false;
    return true;
  }
};

namespace detail {

class RandomModules {
 public:
  explicit RandomModules(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Monomial monomial(std::size_t nvars, int deg) {
    std::vector<unsigned> e(nvars, 0);
    for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))];
    return Monomial::from_exponents(e);
  }

  /// Homogeneous element of the given degree in `ambient`.
  ModuleElement element(const FreeModule& ambient, int deg, int max_terms) {
    std::vector<ModTerm> t;
    const int terms = uniform(1, max_terms);
    const std::size_t nvars = ambient.ring()->num_vars();
    for (int k = 0; k < terms; ++k) {
      const auto pos = static_cast<std::uint32_t>(uniform(0, static_cast<int>(ambient.rank()) - 1));
      const int d = deg - ambient.shift(pos);
      if (d < 0) continue;
      t.push_back({monomial(nvars, d), pos});
    }
    return ModuleElement::from_terms(std::move(t), ambient.order());
  }

  /// Graded presentation, deliberately non-minimal (redundant relations and a
  /// generator cancelled by a unit).
  Presentation presentation() {
    const auto nvars = static_cast<std::size_t>(uniform(1, 4));
    RingPtr ring = make_ring(nvars);
    std::vector<int> shifts;
    const int ngens = uniform(1, 3);
    for (int i = 0; i < ngens; ++i) shifts.push_back(uniform(0, 2));
    FreeModule gens(ring, shifts);
    std::vector<ModuleElement> rels;
    const int nrels = uniform(1, 4);
    for (int k = 0; k < nrels; ++k) {
      const int d = *std::max_element(shifts.begin(), shifts.end()) + uniform(1, 2);
      auto e = element(gens, d, 3);
      if (!e.is_zero()) rels.push_back(std::move(e));
    }
    if (rels.size() >= 2 && uniform(0, 1)) {
      const int d = generator_degree(rels[0], gens);
      if (generator_degree(rels[1], gens) == d) rels.push_back(add(rels[0], rels[1], gens.order()));
    }
    if (uniform(0, 1)) {
      // extra generator e_new, killed by e_new + (element of the same degree)
      const int d = uniform(1, 3);
      auto filler = element(gens, d, 2);
      shifts.push_back(d);
      gens = FreeModule(ring, shifts);
      std::vector<ModTerm> t = filler.terms();
      t.push_back({Monomial::one(), static_cast<std::uint32_t>(shifts.size() - 1)});
      rels.push_back(ModuleElement::from_terms(std::move(t), gens.order()));
    }
    return Presentation(gens, inclusion_map(rels, gens));
  }

  /// Σ (random homogeneous polynomial) · g_i, kept homogeneous of degree `deg`.
  ModuleElement combination(const ModuleMap& f, int deg) {
    ModuleElement acc;
    const std::size_t nvars = f.target().ring()->num_vars();
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const int d = deg - f.source().shift(j);
      if (d < 0 || !uniform(0, 1)) continue;
      acc = add(acc, multiply(f.column(j), monomial(nvars, d)), f.target().order());
    }
    return acc;
  }

 private:
  std::mt19937_64 rng_;
};

/// Numerator of Σ_i (-1)^i Σ_j q^{deg F_ij}, the Hilbert numerator predicted by a resolution.
inline HilbertSeries series_from_betti(const FreeResolution& res, std::size_t nvars) {
  HilbertSeries h;
  h.num_vars = nvars;
  int low = 0;
  bool first = true;
  for (const auto& m : res.modules)
    for (int s : m.shifts()) {
      if (first || s < low) low = s;
      first = false;
    }
  h.offset = low;
  for (std::size_t i = 0; i < res.modules.size(); ++i)
    for (int s : res.modules[i].shifts()) {
      const auto k = static_cast<std::size_t>(s - low);
      if (h.coeffs.size() <= k) h.coeffs.resize(k + 1, 0);
      h.coeffs[k] += i % 2 ? -1 : 1;
    }
  h.normalize();
  return h;
}

}  // namespace detail

/// Runs `cases` random presentations; every property is checked on each.
inline PropertySuiteResult run_property_suite(std::uint64_t seed, int cases) {
  detail::RandomModules gen(seed);
  PropertySuiteResult out;
  out.properties = {{"groebner membership soundness"},
                    {"kernel elements annihilate"},
                    {"resolution exactness"},
                    {"minimize idempotent"},
                    {"hilbert series preserved"}};
  auto record = [&](std::size_t which, bool ok, int index, const std::string& what) {
    auto& p = out.properties[which];
    if (ok) {
      ++p.passed;
    } else {
      if (!p.failed) p.first_failure = "case " + std::to_string(index) + ": " + what;
      ++p.failed;
    }
  };
  for (int c = 0; c < cases; ++c) {
    const Presentation p = gen.presentation();
    const std::size_t nvars = p.ring()->num_vars();

    // membership: random combinations of relations reduce to zero, normal forms are stable
    const GroebnerBasis gb = image_basis(p.rels);
    bool member_ok = true;
    for (int k = 0; k < 4 && member_ok; ++k) {
      const int d = 2 + gen.uniform(0, 3);
      const ModuleElement v = gen.combination(p.rels, d);
      if (!contains(gb, v)) member_ok = false;
      const ModuleElement w = gen.element(p.gens, d, 4);
      const ModuleElement nf = normal_form(w, gb);
      if (!(normal_form(nf, gb) == nf) || !contains(gb, add(w, nf, p.gens.order()))) member_ok = false;
    }
    for (const auto& col : p.rels.columns()) member_ok = member_ok && contains(gb, col);
    record(0, member_ok, c, "combination of relations not reduced to zero");

    // kernel
    bool ker_ok = true;
    for (const auto& k : kernel(p.rels)) ker_ok = ker_ok && p.rels.apply(k).is_zero();
    record(1, ker_ok, c, "kernel element with nonzero image");

    // exactness of a non-minimal resolution; it must terminate (injective last map)
    const FreeResolution raw = free_resolution(p, nvars + 1, {false, {}});
    bool exact = true;
    for (std::size_t i = 0; exact && i + 1 < raw.differentials.size(); ++i) {
      const ModuleMap& di = raw.differentials[i];
      const ModuleMap& dn = raw.differentials[i + 1];
      if (!compose(di, dn).is_zero()) exact = false;
      const GroebnerBasis im = image_basis(dn);
      for (const auto& z : kernel(di)) exact = exact && contains(im, z);
    }
    if (exact && !raw.differentials.empty()) exact = kernel(raw.differentials.back()).empty();
    record(2, exact, c, "resolution not exact");

    // minimize
    const FreeResolution once = minimize(raw);
    const FreeResolution twice = minimize(once);
    const bool idem = once.modules == twice.modules && once.differentials == twice.differentials;
    bool no_units = true;
    for (const auto& d : once.differentials) no_units = no_units && !d.has_unit_entry();
    // a minimal resolution has length at most the number of variables
    record(3, idem && no_units && once.length() <= nvars, c, "minimize not idempotent, left a unit or too long");

    // hilbert series: presentation, minimal presentation, both Betti alternating sums
    const HilbertSeries h = hilbert_series(p);
    const bool same = h == hilbert_series(minimal_presentation(p)) && h == hilbert_series(once.presented_module()) &&
                      h == detail::series_from_betti(raw, nvars) && h == detail::series_from_betti(once, nvars);
    record(4, same, c, "hilbert series changed");
  }
  return out;
}

}  // namespace z2syz
