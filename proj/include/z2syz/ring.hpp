#pragma once

/// Polynomial rings F2[v1,...,vk] with at most eight variables.
///
/// A monomial packs its exponent vector into one 64-bit word, one byte per
/// variable (variable i lives in byte i). Exponents are limited to 127 so
/// that divisibility can be tested with a single borrow-free subtraction.
/// Polynomials carry no coefficients: over F2 a polynomial is a set of
/// monomials and addition is symmetric difference.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2syz {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 127;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TermOrder { DegRevLex, Lex };

struct Monomial {
  std::uint64_t exps = 0;
  std::uint32_t deg = 0;

  static constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

  static Monomial one() { return {}; }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    if (i >= kMaxVars) throw RingError("variable index out of range");
    if (power > kMaxExponent) throw RingError("exponent overflow");
    return {std::uint64_t{power} << (8 * i), power};
  }

  static Monomial from_exponents(std::span<const unsigned> e) {
    if (e.size() > kMaxVars) throw RingError("too many exponents");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > kMaxExponent) throw RingError("exponent overflow");
      m.exps |= std::uint64_t{e[i]} << (8 * i);
      m.deg += e[i];
    }
    return m;
  }

  unsigned exponent(std::size_t i) const {
    return static_cast<unsigned>((exps >> (8 * i)) & 0xFFu);
  }

  bool is_one() const { return exps == 0; }

  /// True when *this divides other.
  bool divides(const Monomial& other) const {
    if (deg > other.deg) return false;
    return (((other.exps | kHigh) - exps) & kHigh) == kHigh;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    const std::uint64_t sum = a.exps + b.exps;
    if (sum & kHigh) throw RingError("exponent overflow");
    return {sum, a.deg + b.deg};
  }

  /// Quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.exps - b.exps, a.deg - b.deg};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = std::max(a.exponent(i), b.exponent(i));
    m.exps |= std::uint64_t{e} << (8 * i);
    m.deg += e;
  }
  return m;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = std::min(a.exponent(i), b.exponent(i));
    m.exps |= std::uint64_t{e} << (8 * i);
    m.deg += e;
  }
  return m;
}

/// Monomial comparison. Degrevlex breaks degree ties at the last differing
/// exponent (smaller exponent wins), which for byte-packed exponents is just
/// an inverted integer comparison. Lex compares variable 0 first.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    TermOrder order = TermOrder::DegRevLex) {
  if (order == TermOrder::DegRevLex) {
    if (a.deg != b.deg) return a.deg <=> b.deg;
    return b.exps <=> a.exps;
  }
  return __builtin_bswap64(a.exps) <=> __builtin_bswap64(b.exps);
}

inline bool greater(const Monomial& a, const Monomial& b, TermOrder order) {
  return compare(a, b, order) == std::strong_ordering::greater;
}

class Ring {
 public:
  Ring(std::vector<std::string> names, TermOrder order = TermOrder::DegRevLex)
      : names_(std::move(names)), order_(order) {
    if (names_.empty()) throw RingError("a ring needs at least one variable");
    if (names_.size() > kMaxVars)
      throw RingError("at most " + std::to_string(kMaxVars) + " variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw RingError("duplicate variable name " + names_[i]);
  }

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  TermOrder term_order() const { return order_; }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names,
                         TermOrder order = TermOrder::DegRevLex) {
  return std::make_shared<const Ring>(std::move(names), order);
}

/// Ring with variables prefix1..prefixk.
inline RingPtr make_ring(std::size_t k, std::string_view prefix = "t",
                         TermOrder order = TermOrder::DegRevLex) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make_ring(std::move(names), order);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::string to_string(const Monomial& m, const Ring& ring);

namespace detail {

struct TermGreater {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b, order); }
};

/// Symmetric difference of two descending monomial lists.
inline std::vector<Monomial> xor_merge(std::span<const Monomial> a, std::span<const Monomial> b,
                                       TermOrder order) {
  std::vector<Monomial> out;
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
  return out;
}

/// Sorts descending and cancels monomials that occur an even number of times.
inline void canonicalize(std::vector<Monomial>& terms, TermOrder order) {
  std::sort(terms.begin(), terms.end(), TermGreater{order});
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[w++] = terms[i];
    i = j;
  }
  terms.resize(w);
}

}  // namespace detail

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds a polynomial from arbitrary monomials; repeated monomials cancel in pairs.
  Polynomial(RingPtr ring, std::vector<Monomial> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    check_ring();
    detail::canonicalize(terms_, ring_->term_order());
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial one(RingPtr ring) { return Polynomial(std::move(ring), {Monomial::one()}); }
  static Polynomial monomial(RingPtr ring, const Monomial& m) { return Polynomial(std::move(ring), {m}); }
  static Polynomial variable(RingPtr ring, std::size_t i, unsigned power = 1) {
    if (!ring || i >= ring->num_vars()) throw RingError("variable index out of range");
    return monomial(std::move(ring), Monomial::variable(i, power));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& lead() const {
    if (terms_.empty()) throw RingError("leading term of zero polynomial");
    return terms_.front();
  }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.deg));
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Monomial& m) { return m.deg == terms_.front().deg; });
  }

  bool has_constant_term() const { return !terms_.empty() && terms_.back().is_one(); }

  Polynomial operator*(const Monomial& m) const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(t * m);
    return out;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    const RingPtr& r = require_same(p, q);
    Polynomial out(r);
    out.terms_ = detail::xor_merge(p.terms_, q.terms_, r->term_order());
    return out;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    const RingPtr& r = require_same(p, q);
    std::vector<Monomial> prod;
    prod.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_)
      for (const auto& b : q.terms_) prod.push_back(a * b);
    return Polynomial(r, std::move(prod));
  }

  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_ != q.terms_) return false;
    if (p.terms_.empty()) return true;
    return same_ring(p.ring_, q.ring_);
  }

  std::string to_string() const;

 private:
  void check_ring() const {
    if (!ring_) throw RingError("polynomial without ring");
    const std::uint64_t allowed =
        ring_->num_vars() >= 8 ? ~0ULL : ((1ULL << (8 * ring_->num_vars())) - 1);
    for (const auto& t : terms_)
      if (t.exps & ~allowed) throw RingError("monomial uses a variable outside the ring");
  }

  static const RingPtr& require_same(const Polynomial& p, const Polynomial& q) {
    if (!p.ring_ || !q.ring_) throw RingError("polynomial without ring");
    if (!same_ring(p.ring_, q.ring_)) throw RingError("ring mismatch");
    return p.ring_;
  }

  RingPtr ring_;
  std::vector<Monomial> terms_;  // strictly descending in the ring's term order
};

/// Exact quotient a / b; throws RingError when b does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw RingError("division by zero polynomial");
  std::vector<Monomial> quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    if (!b.lead().divides(rest.lead())) throw RingError("inexact polynomial division");
    const Monomial q = rest.lead() / b.lead();
    quotient.push_back(q);
    rest += b * q;
  }
  return Polynomial(b.ring(), std::move(quotient));
}

inline std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names()[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

/// Canonical text form: terms in decreasing term order joined by " + ", "0" for zero.
inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += z2syz::to_string(terms_[i], *ring_);
  }
  return out;
}

/// Parses the canonical text form (and any reordering of it). Coefficients
/// are not accepted apart from the literal constants 0 and 1.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  auto fail = [&](const std::string& why) -> RingError {
    return RingError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  std::vector<Monomial> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_uint = [&]() -> unsigned {
    std::size_t start = i;
    unsigned v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
      if (v > 100000) throw fail("number too large");
      ++i;
    }
    if (start == i) throw fail("expected a number");
    return v;
  };
  bool any_term = false;
  while (true) {
    skip_ws();
    std::array<unsigned, kMaxVars> e{};
    bool coefficient_zero = false;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        const unsigned c = read_uint();
        if (c > 1) throw fail("coefficients must be 0 or 1");
        if (c == 0) coefficient_zero = true;
      } else {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        const std::string_view name = text.substr(start, i - start);
        if (name.empty()) throw fail("expected a variable");
        const auto& names = ring->var_names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw fail("unknown variable '" + std::string(name) + "'");
        unsigned power = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip_ws();
          power = read_uint();
        }
        e[static_cast<std::size_t>(it - names.begin())] += power;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!coefficient_zero)
      terms.push_back(Monomial::from_exponents(std::span<const unsigned>(e.data(), ring->num_vars())));
    any_term = true;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw fail("expected '+'");
    ++i;
  }
  if (!any_term) throw fail("empty");
  return Polynomial(ring, std::move(terms));
}

}  // namespace z2syz
