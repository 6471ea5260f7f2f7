#include "helpers.hpp"

#include <superdom/random.hpp>

#include <doctest.h>

#include <algorithm>

using namespace testing;

namespace {

/// Sign of theta_I theta_J by bubble-sorting the concatenated label word.
int bubble_sign(MultiIndex a, MultiIndex b) {
  std::vector<unsigned> word = a.labels();
  for (unsigned l : b.labels()) word.push_back(l);
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] == word[j + 1]) return 0;
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (word[j] == word[j + 1]) return 0;
  return sign;
}

}  // namespace

TEST_CASE("multi-indices order by length then lexicographically") {
  CHECK(mi({}) < mi({3}));
  CHECK(mi({3}) < mi({1, 2}));
  CHECK(mi({1, 3}) < mi({2, 3}));
  CHECK(mi({1, 2, 4}) < mi({1, 3, 4}));
  CHECK(mi({2, 5}).labels() == std::vector<unsigned>{2, 5});
  CHECK_THROWS(MultiIndex::from_labels(std::vector<unsigned>{2, 1}));
}

TEST_CASE("monomial products") {
  CHECK(ge("g1", 2) * ge("g2", 2) == GrassmannElement::monomial(2, mi({1, 2}), 1));
  CHECK(ge("g2", 2) * ge("g1", 2) == GrassmannElement::monomial(2, mi({1, 2}), -1));
  CHECK((ge("1 + g1g2", 2) * ge("1 - g1g2", 2)) == ge("1", 2));
  CHECK((ge("g1", 3) * ge("g1", 3)).is_zero());
}

TEST_CASE("product sign agrees with bubble sorting") {
  for (unsigned a = 0; a < 64; ++a)
    for (unsigned b = 0; b < 64; ++b) CHECK(product_sign(MultiIndex(a), MultiIndex(b)) == bubble_sign(MultiIndex(a), MultiIndex(b)));
}

TEST_CASE("body, scaling and sums") {
  CHECK(gbody(ge("2 + 5*g1", 1)) == 2);
  CHECK(gbody(ge("g1g2", 2)) == 0);
  CHECK(gbody(GrassmannElement(3)) == 0);
  CHECK((ge("g1", 1) + (-1) * ge("g1", 1)).is_zero());
  CHECK(2 * ge("1/2 + g1g2", 2) == ge("1 + 2*g1g2", 2));
  CHECK(ge("g1 + g1g2", 2) + ge("g2 - g1g2", 2) == ge("g1 + g2", 2));
}

TEST_CASE("inversion") {
  CHECK(ginvert(ge("1 + g1g2", 2)) == ge("1 - g1g2", 2));
  CHECK(ginvert(ge("2", 0)) == ge("1/2", 0));
  GrassmannElement a = ge("3 + g1g2 + g3g4", 4);
  GrassmannElement inv = ginvert(a);
  CHECK(inv == ge("1/3 - 1/9*g1g2 - 1/9*g3g4 + 2/27*g1g2g3g4", 4));
  CHECK(a * inv == ge("1", 4));
  CHECK_THROWS_AS(ginvert(ge("g1g2", 2)), NotInvertible);
}

TEST_CASE("parity") {
  CHECK(ge("1 + g1g2", 2).is_even());
  CHECK(ge("g1 + g1g2g3", 3).is_odd());
  CHECK(ge("1 + g1", 1).parity() == Parity::mixed);
  CHECK(GrassmannElement(2).is_even());
  CHECK(GrassmannElement(2).is_odd());
}

TEST_CASE("algebra morphisms") {
  CHECK(gapply(GrassmannMorphism::counit(1), ge("2 + 5*g1", 1)) == ge("2", 0));
  std::vector<unsigned> swap{2, 1};
  CHECK(gapply(GrassmannMorphism::permutation(swap), ge("g1g2", 2)) == ge("-1*g1g2", 2));
  GrassmannMorphism shear(2, 2, {ge("g1 + g2", 2), ge("g2", 2)});
  CHECK(gapply(shear, ge("g1g2", 2)) == ge("g1g2", 2));
  CHECK_THROWS_AS(GrassmannMorphism(1, 2, {ge("1 + g1", 2)}), ParityError);
}

TEST_CASE("morphisms are multiplicative and compose") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    GrassmannMorphism m = random_morphism(rng, 5, 4);
    GrassmannMorphism k = random_morphism(rng, 4, 3);
    GrassmannElement a = random_grassmann(rng, 5, Parity::mixed, 5);
    GrassmannElement b = random_grassmann(rng, 5, Parity::mixed, 5);
    CHECK(gapply(m, a * b) == gapply(m, a) * gapply(m, b));
    CHECK(gapply(m, a + b) == gapply(m, a) + gapply(m, b));
    CHECK(gapply(compose(k, m), a) == gapply(k, gapply(m, a)));
  }
}

TEST_CASE("supercommutativity of homogeneous elements") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Parity pa = i % 2 ? Parity::odd : Parity::even;
    Parity pb = i % 3 ? Parity::odd : Parity::even;
    GrassmannElement a = random_grassmann(rng, 6, pa, 4);
    GrassmannElement b = random_grassmann(rng, 6, pb, 4);
    Rational sign = pa == Parity::odd && pb == Parity::odd ? -1 : 1;
    CHECK(a * b == sign * (b * a));
  }
}
