#include <gtest/gtest.h>

#include "hallmark/catalog.hpp"
#include "hallmark/errors.hpp"
#include "hallmark/galois_field.hpp"

using namespace hallmark;

TEST(Catalog, EveryEntryMatchesExpectedOrder)
{
  for (const auto& e : defaultCatalog()) {
    auto g = e.builder();
    EXPECT_EQ(g.order(), e.expectedOrder) << e.name;
    EXPECT_EQ(g.name(), e.name);
  }
}

TEST(Catalog, NamedOrders)
{
  EXPECT_EQ(alternating(5).order(), 60);
  EXPECT_EQ(symmetric(5).order(), 120);
  EXPECT_EQ(alternating(7).order(), 2520);
  EXPECT_EQ(psl2(7).order(), 168);
  EXPECT_EQ(psl2(31).order(), 14880);
  EXPECT_EQ(psl2(4).order(), 60);
  EXPECT_EQ(semiAffine(2, 3).order(), 168);
  EXPECT_EQ(semiAffine(2, 3).degree(), 8u);
  EXPECT_EQ(semiAffine(3, 2).order(), 144);
  EXPECT_EQ(semiAffine(3, 2).degree(), 9u);
  EXPECT_EQ(semiAffine(2, 5).order(), 4960);
  EXPECT_EQ(frobenius(7, 3).order(), 21);
  EXPECT_EQ(frobenius(5, 4).order(), 20);
  EXPECT_EQ(frobenius(7, 6).order(), 42);
  EXPECT_EQ(directProduct(cyclic(3), cyclic(5)).order(), 15);
  EXPECT_EQ(directProduct(alternating(5), cyclic(7)).order(), 420);
  EXPECT_EQ(directProduct(symmetric(3), symmetric(3)).order(), 36);
  EXPECT_EQ(dihedral(4).order(), 8);
  EXPECT_EQ(cyclic(1).order(), 1);
  EXPECT_EQ(symmetric(1).order(), 1);
}

TEST(Catalog, Errors)
{
  EXPECT_THROW(alternating(13), CapacityError);
  EXPECT_THROW(symmetric(0), CapacityError);
  EXPECT_THROW(psl2(6), MalformedInput);
  EXPECT_THROW(psl2(37), CapacityError);
  EXPECT_THROW(semiAffine(2, 17), CapacityError);
  EXPECT_THROW(semiAffine(4, 3), MalformedInput);
  EXPECT_THROW(frobenius(7, 4), MalformedInput);
  EXPECT_THROW(directProduct(cyclic(600), cyclic(600)), CapacityError);
  EXPECT_THROW(catalogGroup("no_such_group"), MalformedInput);
}

TEST(Catalog, ParametricNames)
{
  EXPECT_EQ(catalogGroup("psl2_17").order(), 2448);
  EXPECT_EQ(catalogGroup("frobenius_31_5").order(), 155);
  EXPECT_EQ(catalogGroup("semiaffine_5_2").order(), 25 * 24 * 2);
}

TEST(Catalog, J1Order)
{
  auto g = j1();
  EXPECT_EQ(g.degree(), 266u);
  EXPECT_EQ(g.order(), 175560);
}

TEST(GaloisField, LeastIrreducibleAndPrimitive)
{
  GaloisField f8(8);
  // x^3 + x + 1 is the least cubic irreducible over F_2
  EXPECT_EQ(f8.modulus(), (fp::Poly{1, 1, 0, 1}));
  GaloisField f9(9);
  EXPECT_EQ(f9.modulus(), (fp::Poly{1, 0, 1}));
  for (std::uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u}) {
    GaloisField f(q);
    auto w = f.primitiveElement();
    for (std::uint64_t d = 1; d < q - 1; ++d)
      if ((q - 1) % d == 0) EXPECT_NE(f.pow(w, d), 1u) << q;
    for (std::uint32_t a = 1; a < q; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    for (std::uint32_t a = 0; a < q; ++a) EXPECT_EQ(f.add(a, f.neg(a)), 0u);
  }
}
