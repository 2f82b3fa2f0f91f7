#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "z2syz/chainspace.hpp"

using namespace z2syz;

namespace {

std::vector<Rational> lengths(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

ChainSpaceParams params(std::initializer_list<int> v, Rational c = Rational(0), int m = 2, int n = 1) {
  ChainSpaceParams p;
  p.m = m;
  p.n = n;
  p.ell = lengths(v);
  p.c = c;
  return p;
}

// brute-force l(J)
Rational weight(const std::vector<Rational>& ell, Subset J) {
  Rational w(0);
  for (std::size_t j = 0; j < ell.size(); ++j) {
    if ((J >> j) & 1u) w += ell[j];
    else w -= ell[j];
  }
  return w;
}

// Coefficient of slot `row` (over R̃) in the expansion of s̄_J/t^{m-1} reduced mod the
// S slots, then evaluated at t = 0 and read over R.
Polynomial oracle_iota_entry(const ChainSpaceParams& p, const Presentation& chain, Subset J, Subset I,
                             const RingPtr& R) {
  const auto basis = level_basis(p, p.m - 1);
  std::size_t slot = 0;
  while (basis[slot].set != I) ++slot;
  // the expansion of s̄_J is the multi-term relation with coefficient 1 on slot J
  std::size_t J_slot = 0;
  while (basis[J_slot].set != J) ++J_slot;
  for (const auto& rel : chain.rels.columns()) {
    if (rel.terms().size() < 2) continue;  // an S slot, not an expansion
    bool has_J = false;
    for (const auto& t : rel.terms())
      if (t.pos == J_slot && t.mon.is_one()) has_J = true;
    if (!has_J) continue;
    std::vector<Monomial> mons;
    for (const auto& t : rel.terms()) {
      if (t.pos != slot || t.mon.exponent(0) != 0) continue;
      std::vector<unsigned> e;
      for (std::size_t v = 1; v <= static_cast<std::size_t>(p.r()); ++v) e.push_back(t.mon.exponent(v));
      mons.push_back(Monomial::from_exponents(e));
    }
    return Polynomial(R, mons);
  }
  ADD_FAILURE() << "no expansion for " << subset_to_string(J);
  return Polynomial::zero(R);
}

}  // namespace

TEST(Subsets, WeightsAndFormatting) {
  const auto ell = lengths({1, 2, 4});
  EXPECT_EQ(subset_weight(ell, 0b101), Rational(3));
  EXPECT_EQ(subset_weight(ell, 0), Rational(-7));
  EXPECT_EQ(subset_to_string(0b101), "{1,3}");
  EXPECT_EQ(subset_to_string(0), "{}");
  EXPECT_EQ(all_subsets(3), (std::vector<Subset>{0, 1, 2, 4, 3, 5, 6, 7}));
}

TEST(Genericity, Examples) {
  EXPECT_FALSE(is_generic(lengths({1, 1}), Rational(0)));
  EXPECT_TRUE(is_generic(lengths({1, 2}), Rational(0)));
  EXPECT_FALSE(is_generic(lengths({1, 1, 1}), Rational(1)));
  EXPECT_TRUE(is_generic(lengths({1, 1, 1}), Rational(1, 2)));
}

TEST(Genericity, ErrorNamesTheOffendingSubset) {
  try {
    validate(params({1, 1}));
    FAIL() << "expected NonGenericError";
  } catch (const NonGenericError& e) {
    EXPECT_EQ(std::string(e.what()), "non-generic: l({1}) = 0");
    EXPECT_EQ(e.subset, 1u);
  }
  try {
    validate(params({1, 1, 1}, Rational(1)));
    FAIL() << "expected NonGenericError";
  } catch (const NonGenericError& e) {
    EXPECT_EQ(std::string(e.what()), "non-generic: l({1}) = -1 = -c");
  }
}

TEST(Validation, RangeChecks) {
  EXPECT_THROW(validate(params({1, 2}, Rational(0), 1)), ChainSpaceError);
  EXPECT_THROW(validate(params({1, 2}, Rational(0), 2, 0)), ChainSpaceError);
  EXPECT_THROW(validate(params({1, 2}, Rational(-1))), ChainSpaceError);
  EXPECT_THROW(validate(params({1, -2})), ChainSpaceError);
  EXPECT_THROW(validate(params({})), ChainSpaceError);
  EXPECT_NO_THROW(validate(params({1, 2})));
}

TEST(LongShort, OddAllOnes) {
  // r = 2k+1, c = 0: long iff |J| > k
  for (int k = 1; k <= 3; ++k) {
    std::vector<Rational> ell(static_cast<std::size_t>(2 * k + 1), Rational(1));
    const LongShort ls = long_short_sets(ell, Rational(0));
    for (auto J : ls.long_sets) EXPECT_GT(std::popcount(J), k);
    for (auto I : ls.short_sets) EXPECT_LE(std::popcount(I), k);
    EXPECT_EQ(ls.long_sets.size(), std::size_t{1} << (2 * k));
  }
  const LongShort top = long_short_sets(lengths({1, 1, 1}), Rational(3, 2));
  EXPECT_EQ(top.long_sets, (std::vector<Subset>{0b111}));
  EXPECT_EQ(top.short_sets, (std::vector<Subset>{0}));
}

TEST(LongShort, HalfOfAllSubsetsAreLongAtZero) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> len(1, 9);
  int checked = 0;
  while (checked < 30) {
    std::vector<Rational> ell;
    const int r = 1 + checked % 6;
    for (int j = 0; j < r; ++j) ell.emplace_back(len(rng));
    if (!is_generic(ell, Rational(0))) continue;
    ++checked;
    std::size_t brute = 0;
    for (Subset J = 0; J < (Subset{1} << r); ++J) brute += weight(ell, J) > kZero ? 1 : 0;
    EXPECT_EQ(long_short_sets(ell, Rational(0)).long_sets.size(), brute);
    EXPECT_EQ(brute, std::size_t{1} << (r - 1));
  }
}

TEST(CriticalValues, Examples) {
  const CriticalValues a = critical_values(lengths({1, 1, 1}));
  EXPECT_EQ(a.values, lengths({-3, -1, 1, 3}));
  EXPECT_EQ(a.cr_min, Rational(1));
  EXPECT_EQ(critical_values(lengths({2, 2, 2, 3})).cr_min, Rational(1));
  EXPECT_EQ(critical_values(lengths({1, 2})).values, lengths({-3, -1, 1, 3}));
}

TEST(Chambers, CoverThePositiveHalfLine) {
  const auto ch = chambers(lengths({1, 1, 1}));
  ASSERT_EQ(ch.size(), 3u);
  EXPECT_EQ(ch[0].to_string(), "(0,1)");
  EXPECT_EQ(ch[0].representative, Rational(1, 2));
  EXPECT_EQ(ch[1].representative, Rational(2));
  EXPECT_EQ(ch[2].to_string(), "(3,inf)");
  EXPECT_EQ(ch[2].representative, Rational(4));
}

TEST(Mu, Definition) {
  const auto ell = lengths({1, 1, 1});
  EXPECT_EQ(mu(1, 0b111, ell), 1);
  EXPECT_EQ(mu(1, 0b001, ell), 0);
  EXPECT_EQ(mu(0, 0b111, ell), 0);
  EXPECT_THROW(mu(1, 0b01, lengths({1, 1})), NonGenericError);
}

TEST(Ambient, RecordForSmallestSpheres) {
  const AmbientRecord a = presentation_ambient(params({1, 2, 4}));
  EXPECT_EQ(a.s_degree, 2);
  ASSERT_EQ(a.relations.size(), 3u);
  EXPECT_EQ(a.relations[0], "s1^2 + t*t1*s1");
  EXPECT_EQ(presentation_ambient(params({1})).relations.size(), 1u);
  EXPECT_EQ(presentation_ambient(params({1, 2}, Rational(0), 3, 2)).s_degree, 4);
}

TEST(FixedPoints, Restriction) {
  const RingPtr rt = extended_ring(3);
  EXPECT_EQ(restrict_to_fixed_point(rt, 3, 2, 0b011, 2).to_string(), "t^2*t2^2");
  EXPECT_TRUE(restrict_to_fixed_point(rt, 3, 2, 0b011, 3).is_zero());
  // product rule
  Polynomial prod = Polynomial::one(rt);
  for (int j = 1; j <= 3; ++j)
    if (0b101 & (1u << (j - 1))) prod = prod * restrict_to_fixed_point(rt, 2, 1, 0b111, j);
  EXPECT_EQ(restrict_product_to_fixed_point(rt, 2, 1, 0b111, 0b101), prod);
  EXPECT_TRUE(restrict_product_to_fixed_point(rt, 2, 1, 0b011, 0b101).is_zero());
}

TEST(LevelBasis, Degrees) {
  const auto p = params({1, 1, 1});
  const auto b0 = level_basis(p, 0);
  ASSERT_EQ(b0.size(), 8u);
  for (const auto& s : b0) EXPECT_EQ(s.degree, std::popcount(s.set) * 2);
  for (const auto& s : level_basis(p, 1))
    if (s.set == 0b011) EXPECT_EQ(s.degree, 3);
  EXPECT_THROW(level_basis(p, 2), ChainSpaceError);
  EXPECT_EQ(level_basis(params({1, 2, 4, 8}), 0).size(), 16u);
}

TEST(LevelPresentation, SingleCoordinate) {
  // r = 1: relations s1 and s̄1 = s1 + t*t1, so the quotient is F2[t,t1]/(t*t1)
  const Presentation p = level_presentation(params({1}), 1);
  EXPECT_EQ(p.num_gens(), 2u);
  EXPECT_EQ(p.num_rels(), 2u);
  EXPECT_TRUE(p.rels.is_graded());
  // degree 3 of F2[t,t1]/(t*t1) keeps only t^3 and t1^3
  EXPECT_EQ(oracle::cokernel_dimension(p.rels, 3), 2);
  EXPECT_THROW(level_presentation(params({1}), 3), ChainSpaceError);
}

TEST(LevelPresentation, EveryRelationIsHomogeneous) {
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(level_presentation(params({1, 2, 4}, Rational(0), 3, 2), i).rels.is_graded());
}

TEST(ChainPresentation, VanishesAboveTheTotalLength) {
  const Presentation p = chain_presentation(params({1, 1, 1}, Rational(4)));
  EXPECT_TRUE(p.rels.is_graded());
  for (int d = 0; d <= 8; ++d) EXPECT_EQ(oracle::cokernel_dimension(p.rels, d), 0) << d;
}

TEST(Iota, PaddedKoszulForThreeOnes) {
  const IotaMatrix iota = build_iota(params({1, 1, 1}));
  EXPECT_EQ(iota.rows, (std::vector<Subset>{0, 1, 2, 4}));
  EXPECT_EQ(iota.cols, (std::vector<Subset>{3, 5, 6, 7}));
  std::vector<std::vector<std::string>> text;
  for (const auto& row : iota.map.to_rows()) {
    text.emplace_back();
    for (const auto& e : row) text.back().push_back(e.to_string());
  }
  const std::vector<std::vector<std::string>> want = {
      {"0", "0", "0", "0"}, {"t2", "t3", "0", "0"}, {"t1", "0", "t3", "0"}, {"0", "t1", "t2", "0"}};
  EXPECT_EQ(text, want);
  EXPECT_EQ(iota.map.source().shifts(), (std::vector<int>{3, 3, 3, 5}));
  EXPECT_EQ(iota.map.target().shifts(), (std::vector<int>{0, 2, 2, 2}));
}

TEST(Iota, SmallCases) {
  const IotaMatrix top = build_iota(params({1, 1, 1}, Rational(3, 2)));
  EXPECT_EQ(top.rows.size(), 1u);
  EXPECT_EQ(top.cols.size(), 1u);
  EXPECT_TRUE(top.map.is_zero());
  const IotaMatrix b = build_iota(params({2, 2, 2, 3}));
  ASSERT_EQ(b.cols.back(), 0b1111u);
  EXPECT_TRUE(b.map.columns().back().is_zero());
}

TEST(Iota, AgreesWithReducedExpansion) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(1, 6);
  int checked = 0;
  while (checked < 25) {
    const int r = 2 + checked % 4;
    ChainSpaceParams p;
    p.m = 2 + checked % 3;
    p.n = 1 + checked % 2;
    for (int j = 0; j < r; ++j) p.ell.emplace_back(len(rng));
    p.c = Rational(checked % 4, 2);
    if (!is_generic(p.ell, Rational(0)) || !is_generic(p.ell, p.c)) continue;
    ++checked;
    const IotaMatrix iota = build_iota(p);
    const Presentation chain = chain_presentation(p);
    const RingPtr R = make_ring(static_cast<std::size_t>(r));
    const auto rows = iota.map.to_rows();
    for (std::size_t col = 0; col < iota.cols.size(); ++col)
      for (std::size_t row = 0; row < iota.rows.size(); ++row)
        EXPECT_EQ(rows[row][col], oracle_iota_entry(p, chain, iota.cols[col], iota.rows[row], R))
            << "J=" << subset_to_string(iota.cols[col]) << " I=" << subset_to_string(iota.rows[row]);
  }
}

TEST(Cohomology, AboveTheFirstWallIsFreeOfRankTwo) {
  const Cohomology h = cohomology(params({1, 1, 1}, Rational(3, 2)));
  const Presentation m = minimal_presentation(h.combined);
  EXPECT_EQ(m.num_gens(), 2u);
  EXPECT_EQ(m.num_rels(), 0u);
}

TEST(Cohomology, BeyondTheTotalLengthIsZero) {
  const Cohomology h = cohomology(params({1, 1, 1}, Rational(4)));
  EXPECT_EQ(h.combined.num_gens(), 0u);
}

TEST(Dims, Examples) {
  const Dimensions d = dims(params({1, 1, 1}));
  EXPECT_EQ(d.dim_H, 8);
  EXPECT_EQ(d.dim_H_fixed, 4);
  EXPECT_EQ(d.rank_iota, 2u);
  EXPECT_EQ(dims(params({1, 2, 4, 8}, Rational(1, 2))).dim_H, 16);
  const Dimensions z = dims(params({1, 1, 1}, Rational(4)));
  EXPECT_EQ(z.dim_H, 0);
  EXPECT_EQ(z.dim_H_fixed, 0);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_maximal(params({1, 1, 1}, Rational(1, 2))), 1);
  EXPECT_EQ(classify_maximal(params({2, 2, 3}, Rational(1, 2))), 1);
  EXPECT_FALSE(classify_maximal(params({2, 2, 2, 3}, Rational(1, 2))).has_value());
  EXPECT_FALSE(classify_maximal(params({1, 1, 1}, Rational(2))).has_value());
  // (1,1,1) with a tiny fourth length matches the even-rank pattern
  ChainSpaceParams p = params({4, 4, 4}, Rational(1));
  p.ell.emplace_back(1);
  EXPECT_EQ(classify_maximal(p), 1);
}

TEST(ExtendByZero, AppendsQuarterForThreeOnes) {
  const ChainSpaceParams q = extend_by_zero(params({1, 1, 1}, Rational(1, 2)));
  ASSERT_EQ(q.r(), 4);
  EXPECT_EQ(q.ell.back(), Rational(1, 4));
  EXPECT_TRUE(is_generic(q.ell, q.c));
  EXPECT_EQ(full_report(q).order, SyzygyOrder::of(1));
  const ChainSpaceParams q2 = extend_by_zero(q);
  EXPECT_EQ(q2.r(), 5);
  // long family of the extension: J long iff J minus the new coordinates is long
  const auto base = long_short_sets(lengths({1, 1, 1}), Rational(1, 2)).long_sets;
  for (auto J : long_short_sets(q2.ell, q2.c).long_sets)
    EXPECT_NE(std::find(base.begin(), base.end(), J & 0b111u), base.end());
  EXPECT_EQ(long_short_sets(q2.ell, q2.c).long_sets.size(), base.size() * 4);
}

TEST(FullReport, WorkedExamples) {
  const SyzygyReport a = full_report(params({1, 1, 1}));
  EXPECT_EQ(a.order, SyzygyOrder::of(1));
  EXPECT_FALSE(a.free);
  EXPECT_TRUE(a.consistent);
  EXPECT_EQ(full_report(params({2, 2, 3, 3, 3}, Rational(2))).order, SyzygyOrder::of(1));
  EXPECT_EQ(full_report(params({2, 2, 2, 3})).order, SyzygyOrder::of(0));
  const SyzygyReport f = full_report(params({2, 2, 2, 3}, Rational(2)));
  EXPECT_TRUE(f.free);
  EXPECT_EQ(f.dim_H, f.dim_H_fixed);
}

TEST(FullReport, ChamberInvariance) {
  const auto ell = lengths({2, 2, 3, 3, 3});
  for (const auto& ch : chambers(ell)) {
    const Rational lo = ch.lo + (ch.representative - ch.lo) / 2;
    const SyzygyReport a = full_report(ChainSpaceParams{2, 1, ell, ch.representative});
    const SyzygyReport b = full_report(ChainSpaceParams{2, 1, ell, lo});
    EXPECT_EQ(a.long_sets, b.long_sets) << ch.to_string();
    EXPECT_EQ(a.iota.map.to_rows(), b.iota.map.to_rows()) << ch.to_string();
    EXPECT_EQ(a.order, b.order) << ch.to_string();
    EXPECT_EQ(a.free_rank, b.free_rank) << ch.to_string();
  }
}

TEST(FullReport, GlobalProperties) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> len(1, 7);
  int checked = 0;
  while (checked < 20) {
    const int r = 2 + checked % 4;
    std::vector<Rational> ell;
    for (int j = 0; j < r; ++j) ell.emplace_back(len(rng));
    if (!is_generic(ell, Rational(0))) continue;
    ++checked;
    Rational top(0);
    for (const auto& x : ell) top = std::max(top, x);
    const SyzygyReport zero = full_report(ChainSpaceParams{2, 1, ell, Rational(0)});
    EXPECT_FALSE(zero.free);
    for (const auto& ch : chambers(ell)) {
      const SyzygyReport rep = full_report(ChainSpaceParams{2, 1, ell, ch.representative});
      EXPECT_LE(rep.dim_H_fixed, rep.dim_H);
      EXPECT_EQ(rep.free, rep.dim_H == rep.dim_H_fixed);
      if (ch.representative >= top) EXPECT_TRUE(rep.free);
      if (!rep.free) EXPECT_LT(rep.order.value(), (r + 1) / 2);
      EXPECT_TRUE(rep.consistent);
    }
  }
}
