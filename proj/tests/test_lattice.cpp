#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "a1weyl/error.hpp"
#include "a1weyl/lattice.hpp"
#include "a1weyl/random.hpp"
#include "support/oracle.hpp"

using namespace a1weyl;

namespace {

Semilattice with_cosets(std::size_t rank, std::vector<LatticeVector> cosets) { return Semilattice{rank, std::move(cosets)}; }

Root R(int sign, LatticeVector p) { return Root{sign, std::move(p)}; }

}  // namespace

TEST(Semilattice, BabyAndToroidalAreValid) {
  EXPECT_TRUE(validate_semilattice(with_cosets(2, {{0, 0}, {1, 0}, {0, 1}})).empty());
  EXPECT_TRUE(validate_semilattice(with_cosets(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}})).empty());
  EXPECT_EQ(Semilattice::baby(2).cosets, (std::vector<LatticeVector>{{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(Semilattice::toroidal(2).cosets, (std::vector<LatticeVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  for (std::size_t nu = 0; nu <= 4; ++nu) {
    EXPECT_TRUE(validate_semilattice(Semilattice::baby(nu)).empty());
    EXPECT_TRUE(validate_semilattice(Semilattice::toroidal(nu)).empty());
    EXPECT_EQ(Semilattice::toroidal(nu).cosets.size(), std::size_t{1} << nu);
  }
}

TEST(Semilattice, DuplicateCosetIsReported) {
  const auto errors = validate_semilattice(with_cosets(2, {{0, 0}, {1, 0}, {1, 0}}));
  ASSERT_FALSE(errors.empty());
  bool mentions_duplicate = false;
  for (const auto& e : errors) mentions_duplicate |= e.find("duplicate") != std::string::npos;
  EXPECT_TRUE(mentions_duplicate);
  EXPECT_THROW(require_valid(with_cosets(2, {{0, 0}, {1, 0}, {1, 0}})), ConfigError);
}

TEST(Semilattice, RejectsNonNormalizedInput) {
  EXPECT_FALSE(validate_semilattice(with_cosets(2, {{1, 0}, {0, 0}, {0, 1}})).empty());     // τ0 not first
  EXPECT_FALSE(validate_semilattice(with_cosets(2, {{0, 0}, {0, 1}, {1, 0}})).empty());     // basis order
  EXPECT_FALSE(validate_semilattice(with_cosets(2, {{0, 0}, {2, 0}, {0, 1}})).empty());     // not 0/1
  EXPECT_FALSE(validate_semilattice(with_cosets(2, {{0, 0}, {1, 0}})).empty());             // too few
  EXPECT_FALSE(validate_semilattice(with_cosets(2, {{0, 0}, {1, 0}, {0, 1, 1}})).empty());  // wrong length
  EXPECT_THROW(ReflectableBase(with_cosets(2, {{0, 0}, {1, 0}})), ConfigError);
}

TEST(Roots, MembershipInRx) {
  const auto s = Semilattice::baby(2);
  EXPECT_TRUE(root_in_rx(s, R(1, {3, 0})));
  EXPECT_FALSE(root_in_rx(s, R(1, {1, 1})));
  EXPECT_FALSE(root_in_rx(s, R(0, {0, 0})));
  EXPECT_TRUE(root_in_rx(Semilattice::toroidal(2), R(-1, {1, 1})));
  EXPECT_TRUE(root_in_r0(s, R(0, {4, -2})));
  EXPECT_TRUE(root_in_r0(s, R(0, {1, 0})));
  EXPECT_TRUE(root_in_r0(s, R(0, {1, 1})));
  // S + S misses the coset 111 for the rank-3 baby semilattice
  EXPECT_FALSE(root_in_r0(Semilattice::baby(3), Root{0, {1, 1, 1}}));
  EXPECT_TRUE(root_in_r0(Semilattice::toroidal(3), Root{0, {1, 1, 1}}));
}

TEST(Roots, ReflectExamples) {
  const Root eps = Root::epsilon(2);
  EXPECT_EQ(reflect(eps, eps), -eps);
  // β − 2 sgnβ sgnα α = ε − 2(ε+σ1) = −ε − 2σ1
  EXPECT_EQ(reflect(R(1, {1, 0}), eps), R(-1, {-2, 0}));
  EXPECT_EQ(reflect(R(1, {1, 0}), eps), oracle::reflect(R(1, {1, 0}), eps));
  EXPECT_EQ(reflect(R(0, {1, 0}), eps), eps);
}

TEST(Roots, Supp) {
  const auto s = Semilattice::toroidal(2);
  EXPECT_TRUE(supp(s, Root::epsilon(2)).empty());
  EXPECT_EQ(supp(s, R(1, {1, 0})), (std::vector<std::size_t>{1}));
  EXPECT_EQ(supp(s, R(1, {1, 1})), (std::vector<std::size_t>{1, 2}));
}

TEST(Base, EllipticLikeAndBPi) {
  EXPECT_TRUE(is_elliptic_like(ReflectableBase(Semilattice::baby(3))));
  EXPECT_TRUE(is_elliptic_like(ReflectableBase(Semilattice::toroidal(2))));
  EXPECT_FALSE(is_elliptic_like(ReflectableBase(with_cosets(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}))));

  EXPECT_TRUE(b_pi(ReflectableBase(Semilattice::baby(2))).empty());
  const auto t2 = b_pi(ReflectableBase(Semilattice::toroidal(2)));
  ASSERT_EQ(t2.size(), 1u);
  EXPECT_EQ(t2.at({1, 2}), 3u);
  const auto t3 = b_pi(ReflectableBase(Semilattice::toroidal(3)));
  ASSERT_EQ(t3.size(), 3u);
  EXPECT_TRUE(t3.contains({1, 2}) && t3.contains({1, 3}) && t3.contains({2, 3}));
}

TEST(Base, IndexOfIgnoresSign) {
  const ReflectableBase b(Semilattice::toroidal(2));
  EXPECT_EQ(b.index_of(R(1, {1, 1})), 3u);
  EXPECT_EQ(b.index_of(R(-1, {-1, 0})), 1u);
  EXPECT_FALSE(b.index_of(R(1, {2, 0})).has_value());
}

TEST(Reflectable, Examples) {
  const auto baby = Semilattice::baby(2);
  const ReflectableBase b(baby);
  EXPECT_TRUE(check_reflectable_set(baby, b.roots(), 4).covered);

  const auto tor = Semilattice::toroidal(2);
  const std::vector<Root> only_eps{Root::epsilon(2)};
  const auto r = check_reflectable_set(tor, only_eps, 2);
  EXPECT_FALSE(r.covered);
  EXPECT_TRUE(std::binary_search(r.uncovered.begin(), r.uncovered.end(), R(1, {1, 0})));

  for (const auto& s : {baby, tor, Semilattice::baby(3)}) {
    const auto box = roots_in_box(s, 1);
    EXPECT_TRUE(check_reflectable_set(s, box, 1).covered);
  }
  EXPECT_THROW(check_reflectable_set(baby, only_eps, 0), DomainError);
}

TEST(Reflectable, BoxEnumerationMatchesFilter) {
  const auto s = Semilattice::baby(2);
  const auto box = roots_in_box(s, 2);
  std::size_t expect = 0;
  for (int sg : {-1, 1})
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t c = -2; c <= 2; ++c) expect += root_in_rx(s, R(sg, {a, c}));
  EXPECT_EQ(box.size(), expect);
  EXPECT_TRUE(std::is_sorted(box.begin(), box.end()));
}

// Properties -------------------------------------------------------------

TEST(RootProperties, ReflectionIsInvolutiveAndPreservesRx) {
  Rng rng(11);
  for (const auto& s : {Semilattice::baby(2), Semilattice::toroidal(3), Semilattice::baby(4)}) {
    for (int i = 0; i < 300; ++i) {
      const Root a = random_root(rng, s), b = random_root(rng, s);
      const Root r = reflect(a, b);
      EXPECT_EQ(reflect(a, r), b);
      EXPECT_TRUE(root_in_rx(s, r));
      EXPECT_EQ(r, oracle::reflect(a, b));
    }
  }
}

TEST(RootProperties, SuppDependsOnlyOnResidue) {
  Rng rng(12);
  const auto s = Semilattice::toroidal(3);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const Root a = random_root(rng, s);
    LatticeVector shift(3);
    for (std::size_t k = 0; k < 3; ++k) shift[k] = 2 * d(rng);
    EXPECT_EQ(supp(s, a), supp(s, Root{a.sign, a.p + shift}));
  }
}

TEST(RootProperties, BPiSizes) {
  for (std::size_t nu = 1; nu <= 4; ++nu) {
    EXPECT_TRUE(b_pi(ReflectableBase(Semilattice::baby(nu))).empty());
    EXPECT_EQ(b_pi(ReflectableBase(Semilattice::toroidal(nu))).size(), nu * (nu - 1) / 2);
  }
}

TEST(Reflectable, ResiduesModTwoAreInvariant) {
  // Reflections keep p mod 2, so a base must meet every coset of S.
  const auto s = Semilattice::toroidal(3);
  const ReflectableBase b(s);
  const std::vector<Root> without_top(b.roots().begin(), b.roots().end() - 1);
  const auto r = check_reflectable_set(s, without_top, 2);
  EXPECT_FALSE(r.covered);
  for (const auto& u : r.uncovered) EXPECT_EQ(u.p.mod2(), (LatticeVector{1, 1, 1}));
  EXPECT_FALSE(is_elliptic_like(b));
}

TEST(Lattice, CheckedArithmeticThrowsOnOverflow) {
  const LatticeVector big{std::numeric_limits<std::int64_t>::max()};
  EXPECT_THROW(big + LatticeVector{1}, OverflowError);
  EXPECT_THROW(2 * big, OverflowError);
  EXPECT_THROW((LatticeVector{1} + LatticeVector{1, 2}), DomainError);
}
