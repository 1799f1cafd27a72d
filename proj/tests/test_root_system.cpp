#include <doctest.h>

#include <random>

#include "aqh/catalog.hpp"
#include "support.hpp"

using namespace aqh;
using aqh::testing::vec;

TEST_CASE("inner products") {
  CHECK(inner(vec({1, 0, 0}), vec({0, 1, 0})) == 0);
  CHECK(inner(vec({1, -1, 0}), vec({1, -1, 0})) == 2);
  CHECK(inner(vec({1, 1, 1}), vec({1, 1, -1})) == 1);
  CHECK(inner(vec({1, 2}), vec({3, 1}), vec({Rational(1, 2), 2})) == Rational(11, 2));
  CHECK_THROWS_AS(inner(vec({1, 0}), vec({1, 0, 0})), DimensionMismatch);
}

TEST_CASE("reflections") {
  const Vector a = vec({1, -1, 0});
  CHECK(equal(reflect(a, a), Vector(-a)));
  CHECK(equal(reflect(vec({1, 1, 5}), a), vec({1, 1, 5})));
  CHECK(equal(reflect(vec({1, 0, 0}), a), vec({0, 1, 0})));
  CHECK_THROWS_AS(reflect(a, vec({0, 0, 0})), ZeroVector);
}

TEST_CASE("cartan integers") {
  const Vector a = vec({1, -1, 0});
  CHECK(cartan_int(a, a) == 2);
  CHECK(cartan_int(a, vec({0, 1, -1})) == -1);
  const Vector short_root = vec({1, -1, 0});
  const Vector long_root = vec({-2, 1, 1});
  CHECK(cartan_int(short_root, long_root) == -3);
  CHECK(cartan_int(long_root, short_root) == -1);
  CHECK_THROWS_AS(cartan_int(vec({0, 0, 0}), a), ZeroVector);
}

TEST_CASE("validate_root_system") {
  CHECK(validate_root_system(build(parse_label("B3")).roots().items()).ok());
  CHECK(validate_root_system(build(parse_label("B3")).roots().items()).rank == 3);

  const auto lone = validate_root_system({vec({1, 0})});
  CHECK(lone.violates(Axiom::R4));
  CHECK_FALSE(lone.violates(Axiom::R2));

  const auto multiples = validate_root_system({vec({1}), vec({-1}), vec({2}), vec({-2})});
  CHECK(multiples.violates(Axiom::R2));

  CHECK(validate_root_system({}).violates(Axiom::R1));
  CHECK(validate_root_system({vec({0, 0})}).violates(Axiom::R1));
  CHECK(validate_root_system({vec({1, 0}), vec({-1, 0}), vec({1, 0})}).violates(Axiom::R1));
  CHECK(validate_root_system({vec({1, 0}), vec({-1, 0, 0})}).violates(Axiom::R1));

  // <a,b> = 1/2 with |a|^2 = 1, |b|^2 = 5/4: one Cartan number is 4/5.
  const auto skew = validate_root_system({vec({1, 0}), vec({-1, 0}), vec({Rational(1, 2), 1}), vec({Rational(-1, 2), -1})});
  CHECK(skew.violates(Axiom::R3));

  CHECK_THROWS_AS(RootSystem::from_roots({vec({1, 0})}), InvalidRootSystem);
}

TEST_CASE("classify_pair") {
  CHECK(classify_pair(vec({1, -1, 0}), vec({0, 1, -1})) == PairClass{PairClass::Kind::ratio1, -1});
  CHECK(classify_pair(vec({1, 1}), vec({1, -1})).kind == PairClass::Kind::orthogonal);
  const auto g2 = classify_pair(vec({1, -1, 0}), vec({-2, 1, 1}));
  CHECK(g2.kind == PairClass::Kind::ratio3);
  CHECK(g2.cartan_value == -3);
  CHECK(classify_pair(vec({-2, 1, 1}), vec({1, -1, 0})) == g2);
  CHECK(classify_pair(vec({1, 0}), vec({1, 1})) == PairClass{PairClass::Kind::ratio2, 2});
  CHECK_THROWS_AS(classify_pair(vec({1, 0}), vec({-2, 0})), NormscalViolation);
  CHECK_THROWS_AS(classify_pair(vec({1, 0}), vec({1, 3})), NormscalViolation);
}

TEST_CASE("root chains") {
  const auto b2 = build(parse_label("B2"));
  const auto chain = root_chain(vec({1, 0}), vec({1, -1}), b2);
  REQUIRE(chain.size() == 1);
  CHECK(equal(chain[0], vec({0, 1})));
  CHECK_THROWS_AS(root_chain(vec({1, 0}), vec({0, 1}), b2), std::invalid_argument);

  const auto g2 = build(parse_label("G2"));
  const auto long_chain = root_chain(vec({-2, 1, 1}), vec({1, -1, 0}), g2);
  CHECK(long_chain.size() == 3);
  for (const auto& r : long_chain) CHECK(g2.contains(r));

  const auto d2 = RootSystem::from_roots({vec({1, 1}), vec({1, -1}), vec({-1, 1}), vec({-1, -1})});
  CHECK_THROWS_AS(root_chain(vec({1, 1}), vec({1, 0}), d2), ChainBroken);
}

TEST_CASE("reflection_closure") {
  const auto a2 = reflection_closure({vec({1, -1, 0}), vec({0, 1, -1})});
  CHECK(a2.size() == 6);
  CHECK(VectorSet(a2) == build(parse_label("A2")).roots());
  CHECK(reflection_closure(a2) == a2);
  CHECK(reflection_closure({vec({1, 0}), vec({-1, 0})}).size() == 2);
  CHECK(reflection_closure({vec({1, 0})}).size() == 2);
  // The angle between these lines is not a rational multiple of pi.
  CHECK_THROWS_AS(reflection_closure({vec({1, 0}), vec({1, 3})}, 200), ClosureCapExceeded);
}

TEST_CASE("is_root_subsystem") {
  const auto b3 = build(parse_label("B3"));
  std::vector<Vector> weights;
  const VectorSet h(aqh::testing::u3_roots());
  for (const auto& r : b3.roots()) {
    if (!h.contains(r)) weights.push_back(r);
  }
  CHECK(weights.size() == 12);
  CHECK(is_root_subsystem(weights));
  CHECK_FALSE(is_root_subsystem({vec({1}), vec({-1}), vec({2}), vec({-2})}));
  CHECK(is_root_subsystem(build(parse_label("F4")).roots().items()));
}

TEST_CASE("positive, simple and irreducible pieces") {
  const auto b3 = build(parse_label("B3"));
  CHECK(positive_roots(b3.roots()).size() == 9);
  const auto simple = simple_roots(b3.roots());
  CHECK(simple.size() == 3);
  for (const auto& r : positive_roots(b3.roots())) {
    const auto coeffs = solve_in_span(simple, r);
    REQUIRE(coeffs.has_value());
    for (Eigen::Index i = 0; i < coeffs->size(); ++i) {
      CHECK((*coeffs)(i).is_integer());
      CHECK((*coeffs)(i) >= 0);
    }
  }
  CHECK(irreducible_components(b3.roots()).size() == 1);
  CHECK(irreducible_components(build(parse_type("A1+A2+B2")).roots()).size() == 3);
}

// Random pairs of roots from random catalog systems: the reflection of one in
// the other stays in the system, Cartan numbers are integral, lengths are kept.
TEST_CASE("reflection properties on catalog systems") {
  std::mt19937 rng(7);
  const auto labels = catalog_labels(6);
  for (int trial = 0; trial < 400; ++trial) {
    const auto& label = labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)];
    const auto system = build(label);
    std::uniform_int_distribution<std::size_t> pick(0, system.size() - 1);
    const Vector& a = system.roots()[pick(rng)];
    const Vector& b = system.roots()[pick(rng)];
    const Vector image = reflect(b, a);
    CHECK(system.contains(image));
    CHECK(norm2(image) == norm2(b));
    CHECK(cartan_int(a, b).is_integer());
    CHECK(equal(reflect(image, a), b));
  }
}
