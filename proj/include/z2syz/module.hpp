#pragma once

/// Graded free modules over F2[v1,...,vk], their elements, and matrices
/// between them.
///
/// Module elements are stored flat: a sorted list of (position, monomial)
/// terms in position-over-term order, where a lower basis index dominates
/// and ties are broken by the ring's term order. The leading term of an
/// element therefore sits in its first nonzero slot.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "z2syz/ring.hpp"

namespace z2syz {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModTerm {
  Monomial mon;
  std::uint32_t pos = 0;

  friend bool operator==(const ModTerm&, const ModTerm&) = default;
};

inline std::strong_ordering compare(const ModTerm& a, const ModTerm& b, TermOrder order) {
  if (a.pos != b.pos) return b.pos <=> a.pos;
  return compare(a.mon, b.mon, order);
}

inline bool greater(const ModTerm& a, const ModTerm& b, TermOrder order) {
  return compare(a, b, order) == std::strong_ordering::greater;
}

class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> shifts) : ring_(std::move(ring)), shifts_(std::move(shifts)) {
    if (!ring_) throw ModuleError("free module without ring");
  }
  /// Rank-n module with all basis vectors in degree 0.
  FreeModule(RingPtr ring, std::size_t rank) : FreeModule(std::move(ring), std::vector<int>(rank, 0)) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(std::size_t i) const { return shifts_.at(i); }
  TermOrder order() const { return ring_->term_order(); }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.shifts_ == b.shifts_ && same_ring(a.ring_, b.ring_);
  }

 private:
  RingPtr ring_;
  std::vector<int> shifts_;
};

inline FreeModule direct_sum(const FreeModule& a, const FreeModule& b) {
  if (!same_ring(a.ring(), b.ring())) throw ModuleError("ring mismatch");
  std::vector<int> s = a.shifts();
  s.insert(s.end(), b.shifts().begin(), b.shifts().end());
  return FreeModule(a.ring(), std::move(s));
}

/// Module with the listed basis slots of `m`, in the given order.
inline FreeModule sub_basis(const FreeModule& m, std::span<const std::size_t> slots) {
  std::vector<int> s;
  s.reserve(slots.size());
  for (auto i : slots) s.push_back(m.shift(i));
  return FreeModule(m.ring(), std::move(s));
}

/// The graded dual: same rank, negated shifts.
inline FreeModule dual(const FreeModule& m) {
  std::vector<int> s = m.shifts();
  for (auto& x : s) x = -x;
  return FreeModule(m.ring(), std::move(s));
}

class ModuleElement {
 public:
  ModuleElement() = default;

  /// Terms must already be strictly descending in module order.
  static ModuleElement from_sorted(std::vector<ModTerm> terms) {
    ModuleElement e;
    e.terms_ = std::move(terms);
    return e;
  }

  /// Arbitrary terms; equal terms cancel in pairs.
  static ModuleElement from_terms(std::vector<ModTerm> terms, TermOrder order) {
    std::sort(terms.begin(), terms.end(),
              [order](const ModTerm& a, const ModTerm& b) { return greater(a, b, order); });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) terms[w++] = terms[i];
      i = j;
    }
    terms.resize(w);
    return from_sorted(std::move(terms));
  }

  static ModuleElement from_components(const FreeModule& ambient, std::span<const Polynomial> comps) {
    if (comps.size() != ambient.rank()) throw ModuleError("component count does not match rank");
    std::vector<ModTerm> terms;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!comps[i].is_zero() && !same_ring(comps[i].ring(), ambient.ring()))
        throw ModuleError("ring mismatch");
      for (const auto& m : comps[i].terms()) terms.push_back({m, static_cast<std::uint32_t>(i)});
    }
    return from_sorted(std::move(terms));  // slot-major, each slot already descending
  }

  static ModuleElement basis_vector(std::size_t i, const Monomial& m = Monomial::one()) {
    return from_sorted({{m, static_cast<std::uint32_t>(i)}});
  }

  const std::vector<ModTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModTerm& lead() const {
    if (terms_.empty()) throw ModuleError("leading term of zero element");
    return terms_.front();
  }

  Polynomial component(const FreeModule& ambient, std::size_t i) const {
    std::vector<Monomial> mons;
    for (const auto& t : terms_)
      if (t.pos == i) mons.push_back(t.mon);
    return Polynomial(ambient.ring(), std::move(mons));
  }

  std::vector<Polynomial> components(const FreeModule& ambient) const {
    std::vector<std::vector<Monomial>> mons(ambient.rank());
    for (const auto& t : terms_) mons.at(t.pos).push_back(t.mon);
    std::vector<Polynomial> out;
    out.reserve(mons.size());
    for (auto& m : mons) out.emplace_back(ambient.ring(), std::move(m));
    return out;
  }

  /// Largest position index used, or nullopt for zero.
  std::optional<std::uint32_t> max_pos() const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t p = 0;
    for (const auto& t : terms_) p = std::max(p, t.pos);
    return p;
  }

  /// Common degree (term degree + slot shift) if homogeneous, else nullopt.
  /// Zero is homogeneous of every degree; reported as nullopt too.
  std::optional<int> homogeneous_degree(const FreeModule& ambient) const {
    if (terms_.empty()) return std::nullopt;
    const int d = static_cast<int>(terms_[0].mon.deg) + ambient.shift(terms_[0].pos);
    for (const auto& t : terms_)
      if (static_cast<int>(t.mon.deg) + ambient.shift(t.pos) != d) return std::nullopt;
    return d;
  }

  /// Largest term degree + shift ("sugar"); 0 for the zero element.
  int top_degree(std::span<const int> shifts) const {
    int d = 0;
    bool first = true;
    for (const auto& t : terms_) {
      const int v = static_cast<int>(t.mon.deg) + shifts[t.pos];
      if (first || v > d) d = v;
      first = false;
    }
    return d;
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::vector<ModTerm> terms_;
};

namespace detail {

/// Symmetric difference of two descending term lists.
inline void xor_merge(std::span<const ModTerm> a, std::span<const ModTerm> b, TermOrder order,
                      std::vector<ModTerm>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = compare(a[i], b[j], order);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
}

/// a + m * b, with m a monomial (order is preserved by monomial multiplication).
inline void add_multiple(std::span<const ModTerm> a, const Monomial& m, std::span<const ModTerm> b,
                         TermOrder order, std::vector<ModTerm>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const ModTerm bj{b[j].mon * m, b[j].pos};
    const auto c = compare(a[i], bj, order);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(bj);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  for (; j < b.size(); ++j) out.push_back({b[j].mon * m, b[j].pos});
}

}  // namespace detail

inline ModuleElement add(const ModuleElement& a, const ModuleElement& b, TermOrder order) {
  std::vector<ModTerm> out;
  detail::xor_merge(a.terms(), b.terms(), order, out);
  return ModuleElement::from_sorted(std::move(out));
}

inline ModuleElement add(const ModuleElement& a, const ModuleElement& b, const FreeModule& ambient) {
  return add(a, b, ambient.order());
}

inline ModuleElement multiply(const ModuleElement& e, const Monomial& m) {
  std::vector<ModTerm> out;
  out.reserve(e.terms().size());
  for (const auto& t : e.terms()) out.push_back({t.mon * m, t.pos});
  return ModuleElement::from_sorted(std::move(out));
}

inline ModuleElement multiply(const ModuleElement& e, const Polynomial& p, TermOrder order) {
  std::vector<ModTerm> terms;
  terms.reserve(e.terms().size() * p.size());
  for (const auto& m : p.terms())
    for (const auto& t : e.terms()) terms.push_back({t.mon * m, t.pos});
  return ModuleElement::from_terms(std::move(terms), order);
}

/// Moves slot i to slot map[i]; slots mapped to nullopt must be zero.
inline ModuleElement reindex(const ModuleElement& e, std::span<const std::optional<std::uint32_t>> map,
                             TermOrder order) {
  std::vector<ModTerm> terms;
  terms.reserve(e.terms().size());
  for (const auto& t : e.terms()) {
    const auto& to = map[t.pos];
    if (!to) throw ModuleError("reindex drops a nonzero slot");
    terms.push_back({t.mon, *to});
  }
  return ModuleElement::from_terms(std::move(terms), order);
}

/// Adds `offset` to every slot index (order is preserved).
inline ModuleElement shift_positions(const ModuleElement& e, std::uint32_t offset) {
  std::vector<ModTerm> terms = e.terms();
  for (auto& t : terms) t.pos += offset;
  return ModuleElement::from_sorted(std::move(terms));
}

/// Matrix of a module homomorphism: column j is the image of source basis vector j.
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(FreeModule source, FreeModule target, std::vector<ModuleElement> columns)
      : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
    if (columns_.size() != source_.rank()) throw ModuleError("column count does not match source rank");
    if (!same_ring(source_.ring(), target_.ring())) throw ModuleError("ring mismatch");
    for (const auto& c : columns_)
      if (auto p = c.max_pos(); p && *p >= target_.rank()) throw ModuleError("column outside target");
  }

  /// Zero map.
  static ModuleMap zero(FreeModule source, FreeModule target) {
    std::vector<ModuleElement> cols(source.rank());
    return ModuleMap(std::move(source), std::move(target), std::move(cols));
  }

  /// Builds a map from a row-major matrix of polynomials (rows = target rank).
  static ModuleMap from_rows(FreeModule source, FreeModule target,
                             const std::vector<std::vector<Polynomial>>& rows) {
    if (rows.size() != target.rank()) throw ModuleError("row count does not match target rank");
    std::vector<ModuleElement> cols;
    for (std::size_t j = 0; j < source.rank(); ++j) {
      std::vector<Polynomial> comps;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != source.rank()) throw ModuleError("ragged matrix");
        comps.push_back(rows[i][j].is_zero() ? Polynomial::zero(target.ring()) : rows[i][j]);
      }
      cols.push_back(ModuleElement::from_components(target, comps));
    }
    return ModuleMap(std::move(source), std::move(target), std::move(cols));
  }

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  const std::vector<ModuleElement>& columns() const { return columns_; }
  const ModuleElement& column(std::size_t j) const { return columns_.at(j); }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }

  Polynomial entry(std::size_t row, std::size_t col) const { return columns_.at(col).component(target_, row); }

  std::vector<std::vector<Polynomial>> to_rows() const {
    std::vector<std::vector<Polynomial>> out(rows(), std::vector<Polynomial>(cols(), Polynomial(target_.ring())));
    for (std::size_t j = 0; j < cols(); ++j) {
      auto comps = columns_[j].components(target_);
      for (std::size_t i = 0; i < rows(); ++i) out[i][j] = std::move(comps[i]);
    }
    return out;
  }

  /// Image of a source element.
  ModuleElement apply(const ModuleElement& v) const {
    std::vector<ModTerm> terms;
    for (const auto& t : v.terms())
      for (const auto& c : columns_.at(t.pos).terms()) terms.push_back({c.mon * t.mon, c.pos});
    return ModuleElement::from_terms(std::move(terms), target_.order());
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const ModuleElement& c) { return c.is_zero(); });
  }

  /// Every column is homogeneous of the degree of its source slot.
  bool is_graded() const {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (columns_[j].is_zero()) continue;
      auto d = columns_[j].homogeneous_degree(target_);
      if (!d || *d != source_.shift(j)) return false;
    }
    return true;
  }

  /// Has an entry equal to 1 (a unit over the polynomial ring).
  bool has_unit_entry() const {
    for (const auto& c : columns_)
      for (const auto& t : c.terms())
        if (t.mon.is_one()) return true;
    return false;
  }

  friend bool operator==(const ModuleMap&, const ModuleMap&) = default;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<ModuleElement> columns_;
};

/// Composite g ∘ f.
inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(g.source() == f.target())) throw ModuleError("maps are not composable");
  std::vector<ModuleElement> cols;
  cols.reserve(f.cols());
  for (const auto& c : f.columns()) cols.push_back(g.apply(c));
  return ModuleMap(f.source(), g.target(), std::move(cols));
}

/// Dual map Hom(target, R) -> Hom(source, R) with negated shifts.
inline ModuleMap transpose(const ModuleMap& f) {
  std::vector<std::vector<ModTerm>> rows(f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (const auto& t : f.column(j).terms()) rows[t.pos].push_back({t.mon, static_cast<std::uint32_t>(j)});
  std::vector<ModuleElement> cols;
  cols.reserve(rows.size());
  for (auto& r : rows) cols.push_back(ModuleElement::from_terms(std::move(r), f.target().order()));
  return ModuleMap(dual(f.target()), dual(f.source()), std::move(cols));
}

/// Block-diagonal sum f ⊕ g.
inline ModuleMap direct_sum(const ModuleMap& f, const ModuleMap& g) {
  std::vector<ModuleElement> cols = f.columns();
  const auto off = static_cast<std::uint32_t>(f.rows());
  for (const auto& c : g.columns()) cols.push_back(shift_positions(c, off));
  return ModuleMap(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(cols));
}

/// Finitely presented module coker(rels: F1 -> gens).
struct Presentation {
  FreeModule gens;
  ModuleMap rels;

  Presentation() = default;
  Presentation(FreeModule g, ModuleMap r) : gens(std::move(g)), rels(std::move(r)) {
    if (!(rels.target() == gens)) throw ModuleError("relation target differs from generators");
  }

  /// Free module presented with no relations.
  static Presentation of_free(FreeModule g) {
    FreeModule none(g.ring(), std::vector<int>{});
    ModuleMap r = ModuleMap::zero(none, g);
    return Presentation(std::move(g), std::move(r));
  }

  /// coker of an arbitrary map.
  static Presentation cokernel(const ModuleMap& f) { return Presentation(f.target(), f); }

  const RingPtr& ring() const { return gens.ring(); }
  std::size_t num_gens() const { return gens.rank(); }
  std::size_t num_rels() const { return rels.cols(); }
  bool is_graded() const { return rels.is_graded(); }
  bool is_minimal() const { return !rels.has_unit_entry(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline Presentation direct_sum(const Presentation& a, const Presentation& b) {
  return Presentation(direct_sum(a.gens, b.gens), direct_sum(a.rels, b.rels));
}

}  // namespace z2syz
