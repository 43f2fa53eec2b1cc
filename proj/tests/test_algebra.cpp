#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ramal/algebra.hpp"
#include "ramal/error.hpp"

using namespace ramal;

TEST_CASE("validation accepts well-formed tables") {
  CHECK_NOTHROW(validate_algebra(cyclic_add(3)));
  CHECK_NOTHROW(validate_algebra(cyclic_ring(6)));
  CHECK_NOTHROW(validate_algebra(unary_algebra({1, 0})));
}

TEST_CASE("validation rejects malformed algebras") {
  FiniteAlgebra nullary{2, {Operation{"c", 0, {1}}}};
  CHECK(kind_of([&] { validate_algebra(nullary); }) ==
        ErrorKind::NullaryOperation);

  FiniteAlgebra short_table{2, {Operation{"f", 1, {0}}}};
  CHECK(kind_of([&] { validate_algebra(short_table); }) ==
        ErrorKind::TableSize);

  FiniteAlgebra stray{2, {Operation{"f", 1, {0, 2}}}};
  CHECK(kind_of([&] { validate_algebra(stray); }) ==
        ErrorKind::EntryOutOfRange);

  FiniteAlgebra negative{2, {Operation{"f", 1, {0, -1}}}};
  CHECK(kind_of([&] { validate_algebra(negative); }) ==
        ErrorKind::EntryOutOfRange);
}

TEST_CASE("operation application indexes row-major") {
  FiniteAlgebra z4 = cyclic_ring(4);
  std::vector<int> args{3, 2};
  CHECK(z4.ops[0].apply(args, 4) == 1);
  CHECK(z4.ops[1].apply(args, 4) == 2);
  CHECK(z4.max_arity() == 2);
}

TEST_CASE("generated subuniverses over the mod-4 ring") {
  FiniteAlgebra z4 = cyclic_ring(4);
  CHECK(generated_subuniverse(z4, 0) == ElementSet{0});
  CHECK(generated_subuniverse(z4, 1) == ElementSet{0, 1, 2, 3});
  CHECK(generated_subuniverse(z4, 2) == ElementSet{0, 2});
  CHECK(generated_subuniverse(z4, 3) == ElementSet{0, 1, 2, 3});
}

TEST_CASE("generated subuniverse is closed and contains its generator") {
  FiniteAlgebra z6 = cyclic_ring(6);
  for (int a = 0; a < 6; ++a) {
    ElementSet gen = generated_subuniverse(z6, a);
    CHECK(is_subuniverse(z6, gen));
    CHECK(std::binary_search(gen.begin(), gen.end(), a));
  }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(cyclic_ring(4)) == ElementSet{0});
  CHECK(idempotents(cyclic_add(5)) == ElementSet{0});

  FiniteAlgebra mul_only{4, {cyclic_ring(4).ops[1]}};
  CHECK(idempotents(mul_only) == ElementSet{0, 1});

  CHECK(idempotents(unary_algebra({1, 0})) == ElementSet{});
  CHECK(idempotents(unary_algebra({0, 0, 2})) == ElementSet{0, 2});
}

TEST_CASE("subuniverse membership test") {
  FiniteAlgebra z4 = cyclic_ring(4);
  CHECK(is_subuniverse(z4, {0}));
  CHECK(is_subuniverse(z4, {0, 2}));
  CHECK(is_subuniverse(z4, {0, 1, 2, 3}));
  CHECK_FALSE(is_subuniverse(z4, {1, 2}));
  CHECK_FALSE(is_subuniverse(z4, {2}));
}

TEST_CASE("subuniverse enumeration is lexicographic and complete") {
  std::vector<ElementSet> subs = all_subuniverses(cyclic_add(4));
  std::vector<ElementSet> expected{{0}, {0, 1, 2, 3}, {0, 2}};
  CHECK(subs == expected);

  std::vector<ElementSet> z6 = all_subuniverses(cyclic_ring(6));
  std::vector<ElementSet> z6_expected{
      {0}, {0, 1, 2, 3, 4, 5}, {0, 2, 4}, {0, 3}};
  CHECK(z6 == z6_expected);

  for (const auto& s : z6) CHECK(is_subuniverse(cyclic_ring(6), s));
}

TEST_CASE("subuniverse enumeration refuses large carriers") {
  CHECK(kind_of([] { all_subuniverses(cyclic_add(17)); }) ==
        ErrorKind::CarrierTooLarge);
  CHECK_NOTHROW(all_subuniverses(cyclic_add(17), 17));
}
