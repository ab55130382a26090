#include <gtest/gtest.h>

#include "cppforge/constructions.hpp"
#include "cppforge/dickson.hpp"
#include "cppforge/embedding.hpp"
#include "cppforge/frobenius_product.hpp"

namespace cppforge {
namespace {

std::string clause_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const HypothesisViolation& e) {
    return e.clause();
  }
  return "";
}

TEST(Family, TagsRoundTrip) {
  for (Family f : {Family::kThm1_2, Family::kLem2_1, Family::kThm2_2, Family::kThm2_3, Family::kThm2_4,
                   Family::kCor2_5, Family::kAdhoc}) {
    EXPECT_EQ(parse_family(to_string(f)), std::optional<Family>(f));
  }
  EXPECT_EQ(to_string(Family::kThm2_2), "thm2_2");
  EXPECT_FALSE(parse_family("thm9_9").has_value());
}

TEST(Family, Exponents) {
  EXPECT_EQ(family_exponent(Family::kThm1_2, 3, 1, 4), BigInt(41));
  EXPECT_EQ(family_exponent(Family::kThm2_2, 3, 1, 2), BigInt(5));
  EXPECT_EQ(family_exponent(Family::kThm2_3, 5, 1, 4), BigInt(157));
  EXPECT_EQ(family_exponent(Family::kThm2_2, 7, 1, 3), (big_pow(7, 6) - 1) / 6 + 1);
}

TEST(Instance, ValidatesInputs) {
  const FieldCtx& f9 = make_field(3, 2);
  const CPPInstance inst = make_instance(Family::kThm2_2, 3, 1, 2, f9.t());
  EXPECT_EQ(inst.d, BigInt(5));
  const Json j = to_json(inst);
  EXPECT_EQ(j["family"], "thm2_2");
  EXPECT_EQ(j["a"], "3^2:[0,1]");
  EXPECT_THROW(make_instance(Family::kThm2_2, 3, 1, 2, make_field(3, 3).t()), std::invalid_argument);
  EXPECT_THROW(make_instance(Family::kThm2_2, 3, 1, 2, f9.zero()), std::invalid_argument);
}

TEST(Conj1Witness, Gf81Examples) {
  const FieldCtx& f3 = make_field(3, 1);
  for (u64 bi : {1u, 2u}) {
    const Elem b = f3.from_index(bi);
    const Conj1Witness w = conj1_witness(3, 1, 4, b);
    EXPECT_FALSE(w.odd_half_case);
    EXPECT_EQ(w.instance.d, BigInt(41));
    EXPECT_TRUE(w.matches_dickson);
    EXPECT_EQ(w.h_a, dickson_first_kind(5, b));
    EXPECT_EQ(multiplicative_order(w.zeta), 20u);
    EXPECT_EQ(w.c * w.c, embed_subfield(f3, make_field(3, 4), b));
    const FieldCtx& big = make_field(3, 4);
    EXPECT_TRUE(is_cpp(big, FieldMap::monomial(w.instance.a.inv(), w.instance.d)).passed());
  }
  EXPECT_EQ(dickson_first_kind(5, f3.one()), DensePoly::from_ints(f3, {0, 2, 0, 1, 0, 1}));
}

TEST(Conj1Witness, RejectsBadParameters) {
  const FieldCtx& f5 = make_field(5, 1);
  EXPECT_EQ(clause_of([&] { conj1_witness(5, 1, 4, f5.one()); }), "n + 1 != p");
  const FieldCtx& f3 = make_field(3, 1);
  EXPECT_EQ(clause_of([&] { conj1_witness(3, 1, 2, f3.one()); }), "n + 1 != p");
  EXPECT_EQ(clause_of([&] { conj1_witness(3, 1, 4, f3.zero()); }), "b != 0");
  EXPECT_EQ(clause_of([&] { conj1_witness(3, 2, 4, make_field(3, 2).one()); }), "k is odd");
  EXPECT_EQ(clause_of([&] { conj1_witness(3, 1, 3, f3.one()); }), "n + 1 is an odd prime");
}

TEST(ExceptionalLemma, Gf5Example) {
  const FieldCtx& f5 = make_field(5, 1);
  const Elem c = f5.from_index(2);
  const DensePoly g = exceptional_poly(5, 2, c);
  const std::vector<u64> images = {0, 1, 3, 2, 4};
  for (u64 i = 0; i < 5; ++i) EXPECT_EQ(g(f5.from_index(i)).index(), images[i]);
  const auto r = exceptional_lemma_pp(5, 1, 2, c);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.has_event("falsification"));
}

TEST(ExceptionalLemma, AllNonSquaresOfGf25) {
  const FieldCtx& f = make_field(5, 2);
  int count = 0;
  for (const Elem& c : elements(f)) {
    if (c.is_zero() || sqrt(c)) continue;
    ++count;
    EXPECT_TRUE(exceptional_lemma_pp(5, 2, 2, c).passed()) << c.to_string();
  }
  EXPECT_EQ(count, 12);
}

TEST(ExceptionalLemma, RejectsNthPowers) {
  const FieldCtx& f = make_field(5, 1);
  EXPECT_THROW(exceptional_lemma_pp(5, 1, 2, f.from_index(4)), HypothesisViolation);
  EXPECT_THROW(exceptional_lemma_pp(5, 1, 2, f.zero()), HypothesisViolation);
  EXPECT_THROW(exceptional_lemma_pp(5, 1, 3, f.from_index(2)), HypothesisViolation);
}

TEST(Conj2Family, Gf9Instances) {
  const auto fam = conj2_family(3, 1, 2);
  ASSERT_EQ(fam.size(), 2u);
  const FieldCtx& f9 = make_field(3, 2);
  EXPECT_EQ(fam[0].a, f9.t());
  EXPECT_EQ(fam[1].a, f9.from_int(2) * f9.t());
  for (const auto& inst : fam) EXPECT_TRUE(certify(inst).verdict.passed());
  EXPECT_THROW(conj2_family(5, 1, 3), HypothesisViolation);
}

TEST(Conj2Family, CoversNEqualsPMinusOneCase) {
  // n = p - 1 and a^{p^k - 1} = -1.
  for (u64 p : {3u, 5u}) {
    const unsigned n = static_cast<unsigned>(p - 1);
    const auto fam = conj2_family(p, 1, n);
    bool found = false;
    for (const auto& inst : fam) {
      if (inst.a.pow(static_cast<std::int64_t>(p - 1)) == -inst.a.ctx().one()) {
        found = true;
        EXPECT_TRUE(certify(inst).verdict.passed());
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(Thm23Family, Examples) {
  const auto small = thm2_3_family(3, 1, 2);
  const auto conj = conj2_family(3, 1, 2);
  ASSERT_EQ(small.size(), conj.size());
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(small[i].a, conj[i].a);
  for (const auto& inst : thm2_3_family(5, 1, 4)) {
    EXPECT_EQ(inst.d, BigInt(157));
    EXPECT_TRUE(certify(inst).verdict.passed());
  }
  for (const auto& inst : thm2_3_family(5, 1, 2)) EXPECT_TRUE(certify(inst).verdict.passed());
  EXPECT_THROW(thm2_3_family(5, 1, 3), HypothesisViolation);
}

TEST(Thm24, VacuousPairConditionPredictsCpp) {
  for (const auto& inst : primitive_orbit_family(Family::kThm2_4, 5, 1, 4)) {
    const auto r = thm2_4_iff(5, 1, 4, inst.a);
    EXPECT_TRUE(r.passed()) << inst.a.to_string();
    ASSERT_TRUE(r.cross_check);
    EXPECT_EQ(r.cross_check->verdict, Verdict::kPass);
  }
}

TEST(Thm24, RejectsSmallN) {
  const FieldCtx& f = make_field(5, 2);
  EXPECT_THROW(thm2_4_iff(5, 1, 2, f.t()), HypothesisViolation);
}

TEST(Cor25, EllOneCasePredictsCpp) {
  for (const auto& inst : primitive_orbit_family(Family::kCor2_5, 5, 1, 4)) {
    const auto r = cor2_5_check(5, 1, 4, inst.a);
    if (r.verdict == Verdict::kNotApplicable) continue;
    EXPECT_TRUE(r.passed()) << inst.a.to_string();
  }
}

TEST(Certify, Conj2InstanceHasHaTrace) {
  const FieldCtx& f9 = make_field(3, 2);
  const Certificate cert = certify(make_instance(Family::kThm2_2, 3, 1, 2, f9.t()));
  EXPECT_TRUE(cert.verdict.passed());
  ASSERT_TRUE(cert.trace.h_a);
  EXPECT_EQ(*cert.trace.h_a, DensePoly::from_ints(make_field(3, 1), {0, 1, 0, 1}));
  EXPECT_EQ(cert.trace.subfield_verdict, Verdict::kPass);
  for (const auto& h : cert.hypothesis_checks) EXPECT_TRUE(h.passed) << h.name;
}

TEST(Certify, AdhocWithAOneFails) {
  const FieldCtx& f9 = make_field(3, 2);
  const Certificate cert = certify(make_instance(Family::kAdhoc, 3, 1, 2, f9.one()));
  EXPECT_EQ(cert.verdict.verdict, Verdict::kFail);
  ASSERT_TRUE(cert.verdict.cross_check);
  EXPECT_EQ(cert.verdict.cross_check->verdict, Verdict::kFail);
  bool family_check_failed = false;
  for (const auto& h : cert.hypothesis_checks) family_check_failed |= !h.passed;
  EXPECT_TRUE(family_check_failed);
}

TEST(Certify, MalformedExponentIsNoted) {
  const FieldCtx& f9 = make_field(3, 2);
  const Certificate cert = certify(make_instance(Family::kThm2_2, 3, 1, 2, f9.t(), BigInt(7)));
  EXPECT_EQ(cert.verdict.verdict, Verdict::kFail);
  ASSERT_TRUE(cert.verdict.witness);
  EXPECT_NE(cert.verdict.witness->tag.find("d matches family exponent"), std::string::npos);
}

TEST(Certify, BudgetExceededIsRecorded) {
  const FieldCtx& big = make_field(7, 6);
  const auto fam = conj2_family(7, 1, 6);
  ASSERT_FALSE(fam.empty());
  CertifyOptions opts;
  opts.exhaustive.budget = 1000;
  const Certificate cert = certify(fam.front(), opts);
  EXPECT_EQ(big.order(), 117649u);
  EXPECT_TRUE(cert.budget_exceeded || cert.verdict.passed());
}

TEST(Certify, JsonIsDeterministic) {
  const auto fam = conj2_family(5, 1, 2);
  const Json a = to_json(certify(fam.front()));
  const Json b = to_json(certify(fam.front()));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_FALSE(a.dump().find("timing_ms") != std::string::npos);
  const auto rows = summarize({certify(fam[0]), certify(fam[1])});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].instances, 2u);
  EXPECT_EQ(rows[0].passed, 2u);
}

TEST(FamilySoundness, SmallFamiliesCertify) {
  for (const auto& [p, k, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{{3, 1, 2}, {5, 1, 2}, {5, 1, 4}, {7, 1, 2}, {7, 1, 3}}) {
    for (const auto& inst : conj2_family(p, k, n)) {
      const Certificate cert = certify(inst);
      EXPECT_TRUE(cert.verdict.passed()) << p << "," << k << "," << n << " a=" << inst.a.to_string();
      EXPECT_FALSE(cert.verdict.has_event("falsification"));
    }
  }
}

}  // namespace
}  // namespace cppforge
