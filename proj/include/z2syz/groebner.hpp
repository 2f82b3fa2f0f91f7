#pragma once

/// Buchberger's algorithm for submodules of free modules over F2[v1,...,vk].
///
/// S-pairs are formed only between elements whose leading terms share a
/// basis slot, pruned with the Gebauer-Moeller chain criteria, and selected
/// by smallest degree (leading-term degree plus slot shift). The product
/// criterion is not used since it does not hold for module elements.
///
/// When generators are homogeneous, they are fed to the algorithm degree by
/// degree after all S-pairs of the same degree. A generator whose leading
/// term reduces to zero at that moment lies in the span of the lower-degree
/// part and the generators already kept, so the kept set is a minimal
/// homogeneous generating set (graded Nakayama).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <stop_token>
#include <utility>
#include <vector>

#include "z2syz/module.hpp"

namespace z2syz {

class OperationCancelled : public std::runtime_error {
 public:
  OperationCancelled() : std::runtime_error("operation cancelled") {}
};

/// Reduced Groebner basis; elements sorted by strictly descending leading term.
struct GroebnerBasis {
  FreeModule ambient;
  std::vector<ModuleElement> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

namespace detail {

class Buchberger {
 public:
  using Vec = std::vector<ModTerm>;

  Buchberger(const FreeModule& ambient, std::stop_token stop)
      : order_(ambient.order()), shifts_(ambient.shifts()), stop_(std::move(stop)), by_pos_(ambient.rank()) {}

  /// Runs to completion. If `kept` is given it receives, per generator,
  /// whether the generator survived reduction when it was processed.
  void run(const std::vector<ModuleElement>& gens, std::vector<bool>* kept) {
    std::vector<std::size_t> queue;
    std::vector<int> gen_deg(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      gen_deg[i] = gens[i].top_degree(shifts_);
      queue.push_back(i);
    }
    std::stable_sort(queue.begin(), queue.end(),
                     [&](std::size_t a, std::size_t b) { return gen_deg[a] < gen_deg[b]; });
    if (kept) kept->assign(gens.size(), false);

    std::size_t next_gen = 0;
    while (true) {
      if (stop_.stop_requested()) throw OperationCancelled();
      const std::size_t best = best_pair();
      const bool have_pair = best != kNone;
      const bool have_gen = next_gen < queue.size();
      if (!have_pair && !have_gen) break;
      if (have_gen && (!have_pair || gen_deg[queue[next_gen]] < pairs_[best].deg)) {
        const std::size_t gi = queue[next_gen++];
        Vec h = gens[gi].terms();
        reduce_top(h);
        if (!h.empty()) {
          if (kept) (*kept)[gi] = true;
          insert(std::move(h));
        }
        continue;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Vec s = spoly(p);
      reduce_top(s);
      if (!s.empty()) insert(std::move(s));
    }
  }

  /// Interreduced active elements, sorted by descending leading term.
  std::vector<ModuleElement> reduced_basis() {
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (active_[i]) act.push_back(i);
    std::vector<ModuleElement> out;
    out.reserve(act.size());
    for (auto i : act) {
      Vec tail(elems_[i].begin() + 1, elems_[i].end());
      Vec rem = full_reduce(std::move(tail));
      Vec full;
      full.reserve(rem.size() + 1);
      full.push_back(elems_[i].front());
      full.insert(full.end(), rem.begin(), rem.end());
      out.push_back(ModuleElement::from_sorted(std::move(full)));
    }
    std::sort(out.begin(), out.end(), [this](const ModuleElement& a, const ModuleElement& b) {
      return greater(a.lead(), b.lead(), order_);
    });
    return out;
  }

  /// Full normal form against the current active set.
  Vec full_reduce(Vec h) const {
    Vec rem;
    Vec buf;
    std::size_t start = 0;
    while (start < h.size()) {
      const ModTerm lt = h[start];
      const std::size_t d = find_divisor(lt);
      if (d == kNone) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      const Vec& g = elems_[d];
      add_multiple(std::span<const ModTerm>(h).subspan(start), lt.mon / g.front().mon, g, order_, buf);
      h.swap(buf);
      start = 0;
    }
    return rem;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Pair {
    int deg;
    ModTerm lcm;
    std::uint32_t i, j;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    const auto c = compare(a.lcm, b.lcm, order_);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  std::size_t best_pair() const {
    std::size_t best = kNone;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (best == kNone || pair_less(pairs_[k], pairs_[best])) best = k;
    return best;
  }

  std::size_t find_divisor(const ModTerm& t) const {
    for (auto idx : by_pos_[t.pos])
      if (elems_[idx].front().mon.divides(t.mon)) return idx;
    return kNone;
  }

  void reduce_top(Vec& h) {
    Vec buf;
    while (!h.empty()) {
      const std::size_t d = find_divisor(h.front());
      if (d == kNone) return;
      const Vec& g = elems_[d];
      add_multiple(h, h.front().mon / g.front().mon, g, order_, buf);
      h.swap(buf);
    }
  }

  Vec spoly(const Pair& p) const {
    const Vec& a = elems_[p.i];
    const Vec& b = elems_[p.j];
    Vec ma;
    ma.reserve(a.size());
    const Monomial fa = p.lcm.mon / a.front().mon;
    for (const auto& t : a) ma.push_back({t.mon * fa, t.pos});
    Vec out;
    add_multiple(ma, p.lcm.mon / b.front().mon, b, order_, out);
    return out;
  }

  void insert(Vec h) {
    const auto hi = static_cast<std::uint32_t>(elems_.size());
    const ModTerm lh = h.front();
    const std::uint32_t pos = lh.pos;

    // New pairs with active elements in the same slot, chain-criterion filtered.
    std::vector<Pair> fresh;
    for (auto gi : by_pos_[pos]) {
      const Monomial l = lcm(lh.mon, elems_[gi].front().mon);
      fresh.push_back({static_cast<int>(l.deg) + shifts_[pos], {l, pos}, static_cast<std::uint32_t>(gi), hi});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const Monomial& l = fresh[k].lcm.mon;
      bool drop = false;
      for (std::size_t q = k + 1; q < fresh.size() && !drop; ++q) drop = fresh[q].lcm.mon.divides(l);
      for (std::size_t q = 0; q < kept.size() && !drop; ++q) drop = kept[q].lcm.mon.divides(l);
      if (!drop) kept.push_back(fresh[k]);
    }

    // Old pairs made redundant by the new leading term.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.lcm.pos != pos || !lh.mon.divides(p.lcm.mon)) return false;
      const Monomial li = lcm(elems_[p.i].front().mon, lh.mon);
      const Monomial lj = lcm(elems_[p.j].front().mon, lh.mon);
      return !(li == p.lcm.mon) && !(lj == p.lcm.mon);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    auto& slot = by_pos_[pos];
    std::erase_if(slot, [&](std::size_t gi) {
      if (lh.mon.divides(elems_[gi].front().mon)) {
        active_[gi] = false;
        return true;
      }
      return false;
    });
    elems_.push_back(std::move(h));
    active_.push_back(true);
    slot.push_back(hi);
  }

  TermOrder order_;
  std::vector<int> shifts_;
  std::stop_token stop_;
  std::vector<Vec> elems_;
  std::vector<bool> active_;
  std::vector<std::vector<std::size_t>> by_pos_;
  std::vector<Pair> pairs_;
};

inline void check_ambient(const std::vector<ModuleElement>& gens, const FreeModule& ambient) {
  for (const auto& g : gens)
    if (auto p = g.max_pos(); p && *p >= ambient.rank()) throw ModuleError("generator outside ambient module");
}

}  // namespace detail

/// Reduced Groebner basis of the submodule generated by `gens`.
inline GroebnerBasis groebner(const std::vector<ModuleElement>& gens, const FreeModule& ambient,
                              std::stop_token stop = {}) {
  detail::check_ambient(gens, ambient);
  detail::Buchberger bb(ambient, std::move(stop));
  bb.run(gens, nullptr);
  return {ambient, bb.reduced_basis()};
}

/// Indices of a generating subset of `gens`; minimal when the generators are homogeneous.
inline std::vector<std::size_t> minimal_generators(const std::vector<ModuleElement>& gens,
                                                   const FreeModule& ambient, std::stop_token stop = {}) {
  detail::check_ambient(gens, ambient);
  detail::Buchberger bb(ambient, std::move(stop));
  std::vector<bool> kept;
  bb.run(gens, &kept);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (kept[i]) out.push_back(i);
  return out;
}

/// Fully reduced remainder of `e` modulo the basis.
inline ModuleElement normal_form(const ModuleElement& e, const GroebnerBasis& gb) {
  const TermOrder order = gb.ambient.order();
  std::vector<ModTerm> h = e.terms();
  std::vector<ModTerm> rem, buf;
  std::size_t start = 0;
  while (start < h.size()) {
    const ModTerm lt = h[start];
    const ModuleElement* div = nullptr;
    for (const auto& g : gb.elements) {
      const ModTerm& gl = g.lead();
      if (gl.pos == lt.pos && gl.mon.divides(lt.mon)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    detail::add_multiple(std::span<const ModTerm>(h).subspan(start), lt.mon / div->lead().mon,
                         div->terms(), order, buf);
    h.swap(buf);
    start = 0;
  }
  return ModuleElement::from_sorted(std::move(rem));
}

inline bool contains(const GroebnerBasis& gb, const ModuleElement& e) { return normal_form(e, gb).is_zero(); }

/// Leading terms of the basis, i.e. generators of the initial module.
inline std::vector<ModTerm> initial_terms(const GroebnerBasis& gb) {
  std::vector<ModTerm> out;
  out.reserve(gb.size());
  for (const auto& g : gb.elements) out.push_back(g.lead());
  return out;
}

}  // namespace z2syz
