#pragma once

/// Hilbert series of finitely presented graded modules, read off the
/// initial module of the relation Groebner basis.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "z2syz/groebner.hpp"
#include "z2syz/module.hpp"
#include "z2syz/resolution.hpp"

namespace z2syz {

/// H(q) = q^offset * (c_0 + c_1 q + ...) / (1 - q)^num_vars.
struct HilbertSeries {
  std::size_t num_vars = 0;
  int offset = 0;
  std::vector<long long> coeffs;

  /// Canonical form: no leading or trailing zero coefficients; zero series has offset 0.
  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
    offset = coeffs.empty() ? 0 : offset + static_cast<int>(lead);
  }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
  }

  /// dim_F2 of the degree-d part.
  long long coefficient(int d) const {
    long long total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const int e = d - offset - static_cast<int>(k);
      if (e < 0) continue;
      total += coeffs[k] * binomial(e + static_cast<long long>(num_vars) - 1, static_cast<long long>(num_vars) - 1);
    }
    return total;
  }

  /// Total dimension when finite, i.e. when (1-q)^num_vars divides the numerator.
  std::optional<long long> total_dimension() const {
    std::vector<long long> q = coeffs;
    for (std::size_t i = 0; i < num_vars; ++i) {
      long long at_one = 0;
      for (auto c : q) at_one += c;
      if (at_one != 0) return std::nullopt;
      // divide by (1 - q): running prefix sums
      std::vector<long long> next;
      long long run = 0;
      for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        run += q[k];
        next.push_back(run);
      }
      q = std::move(next);
    }
    long long dim = 0;
    for (auto c : q) dim += c;
    return dim;
  }

  std::string numerator_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      const long long c = coeffs[k];
      const int e = offset + static_cast<int>(k);
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const long long a = c < 0 ? -c : c;
      if (a != 1 || e == 0) out += std::to_string(a);
      if (e != 0) {
        if (a != 1) out += "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(HilbertSeries a, HilbertSeries b) {
    a.normalize();
    b.normalize();
    return a.num_vars == b.num_vars && a.offset == b.offset && a.coeffs == b.coeffs;
  }

 private:
  static long long binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    if (k == 0) return 1;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
};

namespace detail {

inline void add_shifted(std::vector<long long>& acc, const std::vector<long long>& p, std::size_t shift, long long sign) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += sign * p[k];
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.exps < b.exps;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator N with H(R/I) = N(q) / (1-q)^n for the monomial ideal I.
inline std::vector<long long> monomial_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  const Monomial m = gens.back();
  gens.pop_back();
  std::vector<long long> base = monomial_numerator(gens);
  bool coprime = true;
  for (const auto& g : gens)
    if (!gcd(g, m).is_one()) {
      coprime = false;
      break;
    }
  std::vector<long long> out = base;
  if (coprime) {
    add_shifted(out, base, m.deg, -1);
    return out;
  }
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(lcm(g, m) / m);
  add_shifted(out, monomial_numerator(std::move(colon)), m.deg, -1);
  return out;
}

}  // namespace detail

/// Hilbert series of coker(rels).
inline HilbertSeries hilbert_series(const Presentation& p, std::stop_token stop = {}) {
  HilbertSeries h;
  h.num_vars = p.ring()->num_vars();
  if (p.num_gens() == 0) return h;
  const GroebnerBasis gb = image_basis(p.rels, std::move(stop));
  std::vector<std::vector<Monomial>> per_slot(p.num_gens());
  for (const auto& t : initial_terms(gb)) per_slot[t.pos].push_back(t.mon);
  const int low = *std::min_element(p.gens.shifts().begin(), p.gens.shifts().end());
  h.offset = low;
  for (std::size_t i = 0; i < p.num_gens(); ++i) {
    const auto num = detail::monomial_numerator(per_slot[i]);
    detail::add_shifted(h.coeffs, num, static_cast<std::size_t>(p.gens.shift(i) - low), 1);
  }
  h.normalize();
  return h;
}

struct HilbertData {
  HilbertSeries series;
  bool finite = false;
  std::optional<long long> total_dim;
};

/// Graded dimension data of coker(rels).
inline HilbertData graded_dim(const Presentation& p, std::stop_token stop = {}) {
  HilbertData d;
  d.series = hilbert_series(p, std::move(stop));
  d.total_dim = d.series.total_dimension();
  d.finite = d.total_dim.has_value();
  return d;
}

}  // namespace z2syz
