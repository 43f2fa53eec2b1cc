#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <span>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "ramal/decide.hpp"
#include "ramal/error.hpp"
#include "ramal/reduction.hpp"

using namespace ramal;

namespace {

// Confirms the certificate: the term on a constant block of the generator
// evaluates to the claimed element, and that element is idempotent.
void check_certificate(const FiniteAlgebra& alg,
                       const GeneratorCertificate& cert) {
  Interpretation<int> interp = algebra_interpretation(alg);
  std::vector<int> args(static_cast<std::size_t>(term_arity(cert.term)),
                        cert.generator);
  CHECK(evaluate_term(cert.term, interp, std::span<const int>(args)) ==
        cert.idempotent);
  ElementSet idem = idempotents(alg);
  CHECK(std::binary_search(idem.begin(), idem.end(), cert.idempotent));
}

std::vector<std::vector<int>> all_unary_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n - 1) {
      t[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

TEST_CASE("cyclic rings carry certified positive verdicts") {
  for (int k = 2; k <= 6; ++k) {
    FiniteAlgebra ring = cyclic_ring(k);
    FiniteVerdict v = decide_finite_ramsey(ring);
    CHECK(v.ramsey);
    REQUIRE(static_cast<int>(v.reach.size()) == k);
    for (const auto& cert : v.reach) check_certificate(ring, cert);
  }
}

TEST_CASE("a fixed-point-free unary map fails with the smallest culprit") {
  FiniteVerdict v = decide_finite_ramsey(unary_algebra({1, 0}));
  CHECK_FALSE(v.ramsey);
  CHECK(v.culprit == 0);
  CHECK(v.reach.empty());
}

TEST_CASE("reachable idempotent returns a checked witness") {
  FiniteAlgebra z4 = cyclic_ring(4);
  auto hit = reachable_idempotent(z4, 3);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 0);
  check_certificate(z4, {3, hit->first, hit->second});

  CHECK_FALSE(reachable_idempotent(unary_algebra({1, 0}), 0).has_value());
}

TEST_CASE("crosscheck routes agree on the mod-4 ring") {
  CrosscheckReport c = crosscheck_finite_theorem(cyclic_ring(4));
  CHECK(c.via_generated);
  CHECK(c.via_degenerate);
  CHECK(c.via_subalgebras);
  CHECK(c.ramsey);
  CHECK(c.probes.size() == 4);
}

TEST_CASE("crosscheck routes agree on a negative instance") {
  CrosscheckReport c = crosscheck_finite_theorem(unary_algebra({1, 0}));
  CHECK_FALSE(c.via_generated);
  CHECK_FALSE(c.via_degenerate);
  CHECK_FALSE(c.via_subalgebras);
  CHECK_FALSE(c.ramsey);
}

TEST_CASE("crosscheck refuses carriers past its cap") {
  CHECK(kind_of([] { crosscheck_finite_theorem(cyclic_add(7)); }) ==
        ErrorKind::CarrierTooLarge);
  CHECK_NOTHROW(crosscheck_finite_theorem(cyclic_add(7), 8, false));
}

TEST_CASE("unary and general deciders agree on every one-op table, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& table : all_unary_tables(n)) {
      FiniteAlgebra alg = unary_algebra(table);
      UnaryVerdict u = decide_unary_finite(alg);
      FiniteVerdict f = decide_finite_ramsey(alg);
      CHECK(u.ramsey == f.ramsey);
      if (!u.ramsey) CHECK(u.culprit == f.culprit);
    }
  }
}

TEST_CASE("unary decision words stay shortest with op-index ties broken low") {
  FiniteAlgebra alg{3, {Operation{"c", 1, {2, 2, 2}},
                        Operation{"g", 1, {2, 0, 2}}}};
  UnaryVerdict v = decide_unary_finite(alg);
  CHECK(v.ramsey);
  CHECK(v.s == ElementSet{2});
  CHECK(v.words[0] == std::vector<int>{0});
  CHECK(v.words[1] == std::vector<int>{0});
  CHECK(v.words[2] == std::vector<int>{});

  FiniteAlgebra two_step = unary_algebra({0, 0, 1});
  UnaryVerdict w = decide_unary_finite(two_step);
  CHECK(w.ramsey);
  CHECK(w.s == ElementSet{0});
  CHECK(w.words[2] == std::vector<int>{0, 0});
}

TEST_CASE("unary decider wants unary operations") {
  CHECK(kind_of([] { decide_unary_finite(cyclic_add(3)); }) ==
        ErrorKind::ArityMismatch);
}

TEST_CASE("three-part separation for fixed-point-free maps") {
  Partition3 p = katetov_partition(2, {1, 0});
  CHECK(p.part == std::vector<int>{1, 2});

  Partition3 q = katetov_partition(5, {1, 2, 0, 0, 3});
  CHECK(q.part == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(partition_separates(q, {1, 2, 0, 0, 3}));
}

TEST_CASE("separation holds for every fixed-point-free table, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == n) {
        Partition3 p = katetov_partition(n, t);
        CHECK(partition_separates(p, t));
        for (int v : p.part) {
          CHECK(v >= 1);
          CHECK(v <= 3);
        }
        return;
      }
      for (int img = 0; img < n; ++img) {
        if (img == i) continue;
        t[static_cast<std::size_t>(i)] = img;
        fill(i + 1);
      }
    };
    fill(0);
  }
}

TEST_CASE("partition construction rejects fixed points") {
  CHECK(kind_of([] { katetov_partition(2, {0, 1}); }) ==
        ErrorKind::FixedPointPresent);
  CHECK(kind_of([] { katetov_partition(3, {1, 2}); }) == ErrorKind::TableSize);
  CHECK(kind_of([] { katetov_partition(2, {1, 2}); }) ==
        ErrorKind::EntryOutOfRange);
}

TEST_CASE("fixed-point collection across listed unary ops") {
  FiniteAlgebra alg{3, {Operation{"f", 1, {0, 2, 2}},
                        Operation{"g", 1, {0, 1, 2}}}};
  CHECK(fixed_by_all(alg, {0, 1}) == ElementSet{0, 2});
  CHECK(fixed_by_all(alg, {1}) == ElementSet{0, 1, 2});
  CHECK(kind_of([] { fixed_by_all(cyclic_add(2), {0}); }) ==
        ErrorKind::ArityMismatch);
}

TEST_CASE("discriminating partition moves every moved element across parts") {
  FiniteAlgebra swap = unary_algebra({1, 0});
  Partition3 p = build_discriminating_partition(swap, {0});
  CHECK(p.part == std::vector<int>{1, 2});

  FiniteAlgebra alg = unary_algebra({2, 1, 2});
  Partition3 q = build_discriminating_partition(alg, {0});
  CHECK(q.part == std::vector<int>{1, 1, 2});
  ElementSet s = fixed_by_all(alg, {0});
  for (int a = 0; a < alg.carrier_size; ++a) {
    if (std::binary_search(s.begin(), s.end(), a)) continue;
    int image = alg.ops[0].table[static_cast<std::size_t>(a)];
    CHECK(q.part[static_cast<std::size_t>(image)] !=
          q.part[static_cast<std::size_t>(a)]);
  }
}

TEST_CASE("residue systems: the three-class example") {
  ResidueUnarySystem f{3, {{0, -1, 3}}};
  ResidueVerdict vf = decide_unary_residue(f);
  CHECK_FALSE(vf.ramsey);
  CHECK(vf.culprit_class == 2);
  CHECK(vf.s_classes == std::vector<int>{0});

  ResidueUnarySystem g{3, {{0, 3, -2}}};
  ResidueVerdict vg = decide_unary_residue(g);
  CHECK_FALSE(vg.ramsey);
  CHECK(vg.culprit_class == 1);

  ResidueUnarySystem fg{3, {{0, -1, 3}, {0, 3, -2}}};
  ResidueVerdict vfg = decide_unary_residue(fg);
  CHECK(vfg.ramsey);
  CHECK(vfg.s_classes == std::vector<int>{0});
  CHECK(vfg.words[0] == std::vector<int>{});
  CHECK(vfg.words[1] == std::vector<int>{0});
  CHECK(vfg.words[2] == std::vector<int>{1});
}

TEST_CASE("residue systems: degenerate and invalid inputs") {
  ResidueUnarySystem zero{4, {{0, 0, 0, 0}}};
  ResidueVerdict v = decide_unary_residue(zero);
  CHECK(v.ramsey);
  CHECK(v.s_classes == std::vector<int>{0, 1, 2, 3});

  CHECK(kind_of([] {
          validate_residue(ResidueUnarySystem{0, {{}}});
        }) == ErrorKind::TableSize);
  CHECK(kind_of([] {
          validate_residue(ResidueUnarySystem{2, {}});
        }) == ErrorKind::TableSize);
  CHECK(kind_of([] {
          validate_residue(ResidueUnarySystem{2, {{0}}});
        }) == ErrorKind::TableSize);
  CHECK(kind_of([] {
          validate_residue(ResidueUnarySystem{2, {{0, -2}}});
        }) == ErrorKind::EntryOutOfRange);
}
