#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <span>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ramal/error.hpp"
#include "ramal/monotone.hpp"

using namespace ramal;

namespace {

MonotonePolynomial poly(std::vector<Monomial> ms) {
  return MonotonePolynomial(std::move(ms));
}

std::vector<BigInt> big(std::initializer_list<int> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("monomial order is length first, then lexicographic") {
  CHECK(monomial_less({1}, {2}));
  CHECK(monomial_less({3}, {1, 2}));
  CHECK(monomial_less({1, 2}, {1, 3}));
  CHECK(monomial_less({1, 3}, {2, 3}));
  CHECK(monomial_less({2, 3}, {1, 2, 3}));
  CHECK_FALSE(monomial_less({1, 2}, {1, 2}));
}

TEST_CASE("polynomial construction validates and normalizes") {
  MonotonePolynomial p = poly({{3}, {1, 2}, {1}});
  CHECK(p.monomials() == std::vector<Monomial>{{1}, {3}, {1, 2}});
  CHECK(p.monomial_count() == 3);
  CHECK(p.total_length() == 4);
  CHECK(p.max_index() == 3);
  CHECK(p.min_index() == 1);
  CHECK(p.contains({1, 2}));
  CHECK_FALSE(p.contains({2}));

  CHECK(MonotonePolynomial().is_zero());
  CHECK(MonotonePolynomial().max_index() == 0);

  CHECK(kind_of([] { poly({{}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { poly({{0}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { poly({{2, 2}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { poly({{3, 1}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { poly({{1}, {1}}); }) == ErrorKind::OverlappingMonomials);
}

TEST_CASE("addition is disjoint set union") {
  MonotonePolynomial sum = mp_add(poly({{1}}), poly({{2}, {1, 2}}));
  CHECK(sum == poly({{1}, {2}, {1, 2}}));
  CHECK(mp_add(MonotonePolynomial(), poly({{1}})) == poly({{1}}));
  CHECK(kind_of([] { mp_add(poly({{1}, {2}}), poly({{2}})); }) ==
        ErrorKind::OverlappingMonomials);
}

TEST_CASE("multiplication concatenates across an index gap") {
  MonotonePolynomial prod = mp_mul(poly({{1}, {2}}), poly({{3}}));
  CHECK(prod == poly({{1, 3}, {2, 3}}));
  CHECK(mp_mul(poly({{1, 2}}), poly({{3, 4}})) == poly({{1, 2, 3, 4}}));
  CHECK(mp_mul(MonotonePolynomial(), poly({{1}})).is_zero());
  CHECK(mp_mul(poly({{1}}), MonotonePolynomial()).is_zero());
  CHECK(kind_of([] { mp_mul(poly({{2}}), poly({{2}})); }) ==
        ErrorKind::IndexOverlap);
  CHECK(kind_of([] { mp_mul(poly({{3}}), poly({{1}})); }) ==
        ErrorKind::IndexOverlap);
}

TEST_CASE("terms translate to polynomials") {
  Signature ring = ring_signature();
  CHECK(translate_term_to_poly(OrderlyTerm::identity()) == poly({{1}}));
  CHECK(translate_term_to_poly(parse_term("add(x, x)", ring)) ==
        poly({{1}, {2}}));
  CHECK(translate_term_to_poly(parse_term("mul(x, x)", ring)) ==
        poly({{1, 2}}));
  CHECK(translate_term_to_poly(parse_term("add(mul(x, x), x)", ring)) ==
        poly({{1, 2}, {3}}));
  CHECK(translate_term_to_poly(parse_term("mul(x, add(x, x))", ring)) ==
        poly({{1, 2}, {1, 3}}));
}

TEST_CASE("translation matches direct evaluation on every small term") {
  Signature ring = ring_signature();
  Interpretation<BigInt> ints = integer_interpretation(true);
  std::vector<BigInt> args = big({2, 3, 5, 7});
  for (int arity = 1; arity <= 4; ++arity) {
    std::span<const BigInt> front(args.data(),
                                  static_cast<std::size_t>(arity));
    for (const OrderlyTerm& t : enumerate_terms(ring, arity, arity - 1)) {
      MonotonePolynomial p = translate_term_to_poly(t);
      CHECK(p.max_index() == arity);
      CHECK(evaluate_poly(p, front) == evaluate_term(t, ints, front));
      std::set<int> used;
      for (const auto& m : p.monomials()) used.insert(m.begin(), m.end());
      CHECK(static_cast<int>(used.size()) == arity);
    }
  }
}

TEST_CASE("reindexing renames variables order-preservingly") {
  MonotonePolynomial p = poly({{1, 2}, {3}});
  std::vector<int> target{2, 5, 7};
  CHECK(reindex_poly(p, target) == poly({{2, 5}, {7}}));

  std::vector<int> short_list{1, 2};
  CHECK(kind_of([&] { reindex_poly(p, short_list); }) ==
        ErrorKind::IndexOutOfRange);
  std::vector<int> unordered{1, 3, 3};
  CHECK(kind_of([&] { reindex_poly(p, unordered); }) ==
        ErrorKind::IndexOutOfRange);
}

TEST_CASE("evaluation sums the monomial products") {
  MonotonePolynomial p = poly({{1, 2}, {3}});
  std::vector<BigInt> args = big({2, 3, 4});
  CHECK(evaluate_poly(p, args) == 10);
  CHECK(evaluate_poly(MonotonePolynomial(), args) == 0);
  std::vector<BigInt> two = big({2, 3});
  CHECK(kind_of([&] { evaluate_poly(p, two); }) ==
        ErrorKind::IndexOutOfRange);
}

TEST_CASE("splitting at the top index and reassembling") {
  MonotonePolynomial p = poly({{1}, {2}, {1, 2}});
  SplitDecomposition d = split_at_top(p, 2);
  CHECK(d.without_top == poly({{1}}));
  CHECK(d.top_cofactors == poly({{1}}));
  CHECK(d.has_singleton);
  CHECK(reassemble(d) == p);

  SplitDecomposition e = split_at_top(poly({{1}}), 4);
  CHECK(e.without_top == poly({{1}}));
  CHECK(e.top_cofactors.is_zero());
  CHECK_FALSE(e.has_singleton);

  CHECK(kind_of([&] { split_at_top(p, 1); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("split round-trips on random polynomials over four indices") {
  std::vector<Monomial> pool = all_monomials(4);
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<Monomial> chosen;
    for (const auto& m : pool)
      if (rng() % 2) chosen.push_back(m);
    MonotonePolynomial p = poly(std::move(chosen));
    CHECK(reassemble(split_at_top(p, 4)) == p);
    CHECK(reassemble(split_at_top(p, 5)) == p);
  }
}

TEST_CASE("forbidden-value equation solutions") {
  std::vector<BigInt> prefix = big({2});
  std::span<const BigInt> pre(prefix);

  CHECK(solve_forbidden_b(poly({{2}}), MonotonePolynomial(), pre, 0) ==
        BigInt(0));
  CHECK(solve_forbidden_b(poly({{2}}), MonotonePolynomial(), pre, 1) ==
        BigInt(1));
  CHECK(solve_forbidden_b(poly({{1}}), poly({{2}}), pre, 0) == BigInt(2));
  CHECK(solve_forbidden_b(poly({{1}}), poly({{2}}), pre, 1) == BigInt(1));
  CHECK(solve_forbidden_b(poly({{1, 2}}), poly({{1}}), pre, 0) == BigInt(1));
  CHECK_FALSE(
      solve_forbidden_b(poly({{1, 2}}), poly({{1}}), pre, 1).has_value());

  std::vector<BigInt> ones = big({1});
  CHECK(kind_of([&] {
          solve_forbidden_b(poly({{1, 2}}), poly({{2}}),
                            std::span<const BigInt>(ones), 0);
        }) == ErrorKind::DegenerateEquation);
  CHECK_FALSE(solve_forbidden_b(poly({{1, 2}}), poly({{2}}),
                                std::span<const BigInt>(ones), 1)
                  .has_value());

  CHECK(kind_of([&] {
          solve_forbidden_b(poly({{1}}), poly({{2}}), pre, 2);
        }) == ErrorKind::EntryOutOfRange);
}

TEST_CASE("witness sequences") {
  WitnessSequence powers = build_witness(3, WitnessMode::Powers);
  CHECK(powers.values == big({8, 512, 134217728}));

  WitnessSequence greedy = build_witness(3, WitnessMode::Greedy);
  CHECK(greedy.values == big({2, 4, 16}));

  CHECK(build_witness(8, WitnessMode::Powers).values.size() == 8);
  CHECK(kind_of([] { build_witness(9, WitnessMode::Powers); }) ==
        ErrorKind::ModeScaleExceeded);
  CHECK(kind_of([] { build_witness(4, WitnessMode::Greedy); }) ==
        ErrorKind::ModeScaleExceeded);
}

TEST_CASE("witness values keep small polynomials apart") {
  for (WitnessMode mode : {WitnessMode::Powers, WitnessMode::Greedy}) {
    WitnessSequence w = build_witness(2, mode);
    std::span<const BigInt> vals(w.values);
    std::vector<BigInt> images;
    for (const auto& p : all_polynomials(2))
      images.push_back(evaluate_poly(p, vals));
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        BigInt d = images[i] - images[j];
        CHECK(d != 0);
        CHECK(d != 1);
        CHECK(d != -1);
      }
    }
  }
}

TEST_CASE("monomial and polynomial enumeration") {
  std::vector<Monomial> ms = all_monomials(3);
  std::vector<Monomial> expected{{1}, {2}, {3}, {1, 2},
                                 {1, 3}, {2, 3}, {1, 2, 3}};
  CHECK(ms == expected);
  CHECK(all_monomials(0).empty());

  std::vector<MonotonePolynomial> ps = all_polynomials(3);
  CHECK(ps.size() == 128);
  CHECK(ps[0].is_zero());
  CHECK(ps[1] == poly({{1}}));
  CHECK(ps[3] == poly({{1}, {2}}));

  CHECK(kind_of([] { all_monomials(21); }) == ErrorKind::ScaleExceeded);
  CHECK(kind_of([] { all_polynomials(5); }) == ErrorKind::ScaleExceeded);
}

TEST_CASE("orderly definability by bounded enumeration") {
  CHECK(is_orderly_definable(poly({{1, 2}, {3}}), 3));
  CHECK_FALSE(is_orderly_definable(poly({{1, 3}, {2}}), 3));
  CHECK(is_orderly_definable(poly({{1}}), 1));
  CHECK(is_orderly_definable(poly({{1}, {2}}), 2));
  CHECK(is_orderly_definable(poly({{1, 2}}), 2));
  CHECK_FALSE(is_orderly_definable(poly({{1}, {2}, {1, 2}}), 2));
  CHECK_FALSE(is_orderly_definable(MonotonePolynomial(), 1));
  CHECK(kind_of([] {
          is_orderly_definable(MonotonePolynomial(), 11);
        }) == ErrorKind::ScaleExceeded);
}

TEST_CASE("sum shape detection") {
  CHECK(has_sum_shape(poly({{1}, {2}})));
  CHECK(has_sum_shape(poly({{1, 2}, {3}})));
  CHECK_FALSE(has_sum_shape(poly({{1, 2}})));
  CHECK_FALSE(has_sum_shape(poly({{1, 3}, {2}})));
  CHECK_FALSE(has_sum_shape(MonotonePolynomial()));

  MonotonePolynomial left = poly({{1}, {1, 2}});
  MonotonePolynomial right = poly({{3}, {3, 4}});
  CHECK(has_sum_shape(mp_add(left, right)));
  CHECK_FALSE(has_sum_shape(mp_mul(left, right)));
}

TEST_CASE("sum and product censuses on witnesses") {
  SumProductReport powers =
      check_sum_product_distinct(build_witness(3, WitnessMode::Powers), 3);
  CHECK(powers.sum_instances == 7);
  CHECK(powers.product_instances == 7);
  CHECK(powers.comparisons == 49);
  CHECK(powers.violations == 0);

  SumProductReport greedy =
      check_sum_product_distinct(build_witness(3, WitnessMode::Greedy), 3);
  CHECK(greedy.sum_instances == 7);
  CHECK(greedy.product_instances == 7);
  CHECK(greedy.violations == 0);

  CHECK(kind_of([] {
          check_sum_product_distinct(build_witness(5, WitnessMode::Powers),
                                     3);
        }) == ErrorKind::ScaleExceeded);
}

TEST_CASE("two-block reductions separate sums from products") {
  NonhomogeneityReport two = nonhomogeneity_report(2, 2);
  CHECK(two.pair_count == 1);
  CHECK(two.sum_in_x == 1);
  CHECK(two.product_outside_x == 1);
  CHECK(two.violations == 0);

  NonhomogeneityReport three = nonhomogeneity_report(3, 3);
  CHECK(three.pair_count == 7);
  CHECK(three.sum_in_x == 7);
  CHECK(three.product_outside_x == 7);
  CHECK(three.violations == 0);

  NonhomogeneityReport four = nonhomogeneity_report(4, 3);
  CHECK(four.pair_count == 42);
  CHECK(four.violations == 0);

  CHECK(kind_of([] { nonhomogeneity_report(5, 3); }) ==
        ErrorKind::ScaleExceeded);
}

TEST_CASE("bit-vector interpretation pads with zeros") {
  Interpretation<BitVector> f2 = f2_interpretation();
  std::vector<BitVector> xs{{1, 0, 1}, {0, 1}};
  CHECK(f2.fns[0](std::span<const BitVector>(xs)) == BitVector{1, 1, 1});
  CHECK(f2.fns[1](std::span<const BitVector>(xs)) == BitVector{0, 0, 0});
}

TEST_CASE("annihilating reduction over bit vectors") {
  std::vector<BitVector> vectors{{1}, {1}, {1}, {0}, {0}};
  F2Reduction red = f2_reduce(vectors, 1);
  REQUIRE(red.schedule.entries.size() == 1);
  CHECK(red.schedule.entries[0].indices == std::vector<int>{0, 1, 2});
  CHECK(red.output == std::vector<BitVector>{{0}});
  CHECK(format_schedule(red.schedule, f2_interpretation().sig) ==
        "[mul(x, add(x, x)) @ [0,1,2]]");

  Interpretation<BitVector> f2 = f2_interpretation();
  CHECK(apply_schedule<BitVector>(red.schedule, f2,
                                  std::span<const BitVector>(vectors)) ==
        red.output);
}

TEST_CASE("bit-vector reduction guards") {
  CHECK(kind_of([] { f2_reduce({{1}, {0}}, 0); }) ==
        ErrorKind::EntryOutOfRange);
  CHECK(kind_of([] { f2_reduce({{0, 1}, {0}, {0}}, 1); }) ==
        ErrorKind::EntryOutOfRange);
  CHECK(kind_of([] { f2_reduce({{1}, {0}}, 1); }) ==
        ErrorKind::InsufficientVectors);
}
