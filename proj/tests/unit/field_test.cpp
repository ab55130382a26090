#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cppforge/embedding.hpp"
#include "cppforge/field.hpp"
#include "cppforge/number_theory.hpp"

namespace cppforge {
namespace {

Elem at(const FieldCtx& f, u64 i) { return f.from_index(i); }

TEST(NumberTheory, PrimesAndFactors) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(factorize(360), (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(euler_phi(20), 8u);
  EXPECT_EQ(pow_mod(3, 4, 20), 1u);
  EXPECT_EQ(multiplicative_order_mod(3, 20), std::optional<u64>(4));
  EXPECT_FALSE(multiplicative_order_mod(5, 20).has_value());
  EXPECT_FALSE(checked_pow(u64{1} << 32, 2).has_value());
  EXPECT_EQ(big_pow(7, 30), BigInt("22539340290692258087863249"));
  EXPECT_EQ(reduce_mod(BigInt(-1), 8), 7u);
}

TEST(MakeField, PrimeFieldHasNoModulus) {
  const FieldCtx& f = make_field(3, 1);
  EXPECT_EQ(f.order(), 3u);
  EXPECT_TRUE(f.modulus().empty());
}

TEST(MakeField, Gf9UsesTSquaredPlusOne) {
  const FieldCtx& f = make_field(3, 2);
  EXPECT_EQ(f.modulus(), (std::vector<u64>{1, 0, 1}));
  EXPECT_EQ(&f, &make_field(3, 2));
}

TEST(MakeField, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 2), std::invalid_argument);
  EXPECT_THROW(make_field(3, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 64), std::invalid_argument);
}

TEST(MakeField, ModulusIsSmallestIrreducible) {
  // GF(2^3): (1,0,1) precedes (1,1,0), so x^3 + x^2 + 1 wins over x^3 + x + 1.
  EXPECT_EQ(make_field(2, 3).modulus(), (std::vector<u64>{1, 0, 1, 1}));
  // GF(5^2): x^2 + 1 splits since -1 = 2^2, so x^2 + x + 1 comes first.
  EXPECT_EQ(make_field(5, 2).modulus(), (std::vector<u64>{1, 1, 1}));
}

TEST(ElemArith, Examples) {
  const FieldCtx& f7 = make_field(7, 1);
  EXPECT_EQ(at(f7, 3) + at(f7, 5), at(f7, 1));
  EXPECT_EQ(at(f7, 2).pow(6), f7.one());
  const FieldCtx& f5 = make_field(5, 1);
  EXPECT_EQ(at(f5, 2).inv(), at(f5, 3));
  const FieldCtx& f9 = make_field(3, 2);
  EXPECT_EQ(f9.t() * f9.t(), at(f9, 2));
}

TEST(ElemArith, Errors) {
  const FieldCtx& f5 = make_field(5, 1);
  const FieldCtx& f7 = make_field(7, 1);
  EXPECT_THROW(f5.one() + f7.one(), ContextMismatch);
  EXPECT_THROW(f5.zero().inv(), FieldError);
  EXPECT_THROW(f5.zero().pow(-1), FieldError);
  EXPECT_EQ(f5.zero().pow(0), f5.one());
  EXPECT_THROW(f5.from_index(5), std::out_of_range);
}

TEST(ElemArith, HugeExponentsReduce) {
  const FieldCtx& f = make_field(7, 3);
  const BigInt d = big_pow(7, 40) + 5;
  const u64 r = reduce_mod(d, f.order() - 1);
  for (u64 i = 1; i < f.order(); i += 17) {
    EXPECT_EQ(at(f, i).pow(d), at(f, i).pow(static_cast<std::int64_t>(r)));
  }
  EXPECT_EQ(at(f, 5).pow(-1), at(f, 5).inv());
}

TEST(ElemArith, SerializationAndParsing) {
  const FieldCtx& f9 = make_field(3, 2);
  const Elem x = f9.from_coeffs(std::vector<u64>{1, 2});
  EXPECT_EQ(x.to_string(), "3^2:[1,2]");
  EXPECT_EQ(parse_elem(f9, "3^2:[1,2]"), x);
  EXPECT_EQ(parse_elem(f9, "[1, 2]"), x);
  EXPECT_EQ(parse_elem(f9, "[2]"), at(f9, 2));
  EXPECT_THROW(parse_elem(f9, "[3,0]"), std::invalid_argument);
  EXPECT_THROW(parse_elem(f9, "5^1:[1]"), std::invalid_argument);
  EXPECT_THROW(parse_elem(f9, "1,2"), std::invalid_argument);
}

TEST(Frobenius, Examples) {
  const FieldCtx& f9 = make_field(3, 2);
  EXPECT_EQ(frobenius(f9.t(), 1), f9.from_int(2) * f9.t());
  EXPECT_EQ(frobenius(f9.t(), 2), f9.t());
  const FieldCtx& f3 = make_field(3, 1);
  EXPECT_EQ(frobenius(at(f3, 2), 1), at(f3, 2));
}

TEST(Frobenius, IsAnAutomorphismOnSmallFields) {
  for (const auto& [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
    const FieldCtx& f = make_field(p, m);
    for (const Elem& x : elements(f)) {
      EXPECT_EQ(frobenius(x, m), x);
      for (const Elem& y : elements(f)) {
        ASSERT_EQ(frobenius(x * y, 1), frobenius(x, 1) * frobenius(y, 1));
        ASSERT_EQ(frobenius(x + y, 1), frobenius(x, 1) + frobenius(y, 1));
      }
    }
  }
}

TEST(RootsOfUnity, Examples) {
  EXPECT_EQ(primitive_root_of_unity(make_field(5, 1), 4), at(make_field(5, 1), 2));
  EXPECT_EQ(primitive_root_of_unity(make_field(7, 1), 3), at(make_field(7, 1), 2));
  EXPECT_THROW(primitive_root_of_unity(make_field(7, 1), 5), NoSuchRoot);
}

TEST(RootsOfUnity, OrderMatchesRequest) {
  for (const auto& [p, m] : std::vector<std::pair<u64, unsigned>>{{3, 4}, {5, 3}, {7, 2}, {13, 1}}) {
    const FieldCtx& f = make_field(p, m);
    for (u64 t : divisors(f.order() - 1)) {
      const Elem z = primitive_root_of_unity(f, t);
      EXPECT_EQ(multiplicative_order(z), t);
      const auto all = roots_of_unity(f, t);
      ASSERT_EQ(all.size(), t);
      std::set<u64> distinct;
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i], z.pow(static_cast<std::int64_t>(i)));
        distinct.insert(all[i].index());
      }
      EXPECT_EQ(distinct.size(), t);
    }
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(at(make_field(7, 1), 3)), 6u);
  EXPECT_EQ(multiplicative_order(make_field(3, 3).one()), 1u);
  EXPECT_EQ(multiplicative_order(at(make_field(5, 1), 4)), 2u);
  EXPECT_THROW(multiplicative_order(make_field(5, 1).zero()), FieldError);
  EXPECT_EQ(multiplicative_order(make_field(3, 4).generator()), 80u);
}

TEST(Sqrt, InExtension) {
  const FieldCtx& f3 = make_field(3, 1);
  const FieldCtx& f9 = make_field(3, 2);
  const auto two = sqrt_in_ext(embed_subfield(f3, f9, at(f3, 2)), 1);
  EXPECT_EQ(two.root, f9.t());
  EXPECT_FALSE(two.in_subfield);
  const auto one = sqrt_in_ext(f9.one(), 1);
  EXPECT_EQ(one.root, f9.one());
  EXPECT_TRUE(one.in_subfield);
  EXPECT_EQ(sqrt_in_ext(f9.zero(), 1).root, f9.zero());
  EXPECT_FALSE(sqrt(at(make_field(5, 1), 2)).has_value());
  EXPECT_EQ(sqrt(at(make_field(5, 1), 4)), std::optional<Elem>(at(make_field(5, 1), 2)));
}

TEST(Embedding, Examples) {
  const FieldCtx& f3 = make_field(3, 1);
  const FieldCtx& f9 = make_field(3, 2);
  EXPECT_EQ(embed_subfield(f3, f9, at(f3, 2)), at(f9, 2));
  for (const Elem& x : elements(f3)) {
    for (const Elem& y : elements(f3)) {
      EXPECT_EQ(embed_subfield(f3, f9, x * y), embed_subfield(f3, f9, x) * embed_subfield(f3, f9, y));
    }
  }
  EXPECT_THROW(subfield_embedding(f9, make_field(3, 3)), FieldError);
  EXPECT_THROW(subfield_embedding(f3, make_field(5, 2)), FieldError);
}

TEST(Embedding, ImageIsFixedFieldOfFrobenius) {
  const std::vector<std::tuple<u64, unsigned, unsigned>> towers = {
      {2, 1, 4}, {2, 2, 4}, {3, 1, 6}, {3, 2, 6}, {3, 3, 6}, {5, 2, 4}, {3, 2, 4}, {2, 3, 6}};
  for (const auto& [p, k, m] : towers) {
    const FieldCtx& small = make_field(p, k);
    const FieldCtx& big = make_field(p, m);
    const SubfieldEmbedding& emb = subfield_embedding(small, big);
    std::set<u64> image;
    for (const Elem& x : elements(small)) {
      const Elem y = emb.embed(x);
      image.insert(y.index());
      EXPECT_EQ(emb.restrict_or_throw(y), x);
      for (const Elem& z : elements(small)) {
        ASSERT_EQ(emb.embed(x + z), y + emb.embed(z));
        ASSERT_EQ(emb.embed(x * z), y * emb.embed(z));
      }
    }
    std::set<u64> fixed;
    for (const Elem& y : elements(big)) {
      if (frobenius(y, k) == y) fixed.insert(y.index());
      EXPECT_EQ(emb.contains(y), frobenius(y, k) == y);
    }
    EXPECT_EQ(image, fixed) << p << "^" << k << " in " << p << "^" << m;
  }
}

TEST(Embedding, RestrictRejectsOutsiders) {
  const SubfieldEmbedding& emb = subfield_embedding(make_field(3, 1), make_field(3, 2));
  EXPECT_FALSE(emb.restrict(make_field(3, 2).t()).has_value());
  EXPECT_THROW(emb.restrict_or_throw(make_field(3, 2).t()), FieldError);
}

TEST(FieldAxioms, ExhaustiveOnSmallField) {
  const FieldCtx& f = make_field(3, 3);
  const auto xs = elements(f);
  for (const Elem& a : xs) {
    EXPECT_EQ(a + f.zero(), a);
    EXPECT_EQ(a * f.one(), a);
    EXPECT_EQ(a + (-a), f.zero());
    if (!a.is_zero()) EXPECT_EQ(a * a.inv(), f.one());
    for (const Elem& b : xs) {
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a - b, a + (-b));
    }
  }
}

TEST(FieldAxioms, LargeFieldsWithoutTablesAgreeWithTables) {
  // GF(3^14) exceeds the table limit and uses schoolbook arithmetic.
  const FieldCtx& big = make_field(3, 14);
  ASSERT_FALSE(big.has_tables());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> pick(1, big.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const Elem a = big.from_index(pick(rng));
    const Elem b = big.from_index(pick(rng));
    const Elem c = big.from_index(pick(rng));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * a.inv(), big.one());
  }
  EXPECT_EQ(big.generator().pow(static_cast<std::int64_t>(big.order() - 1)), big.one());
}

}  // namespace
}  // namespace cppforge
