#include <doctest.h>

#include <random>

#include <Eigen/LU>

#include "aqh/catalog.hpp"
#include "support.hpp"

using namespace aqh;
using aqh::testing::vec;

TEST_CASE("label parsing") {
  CHECK(parse_label("B3") == CartanLabel{Series::B, 3});
  CHECK(to_string(parse_type("A1+A1")) == "A1+A1");
  CHECK(to_string(parse_type("G2+A1")) == "G2+A1");
  CHECK(to_string(std::vector<CartanLabel>{}) == "T");
  CHECK_THROWS_AS(parse_label("C2"), LabelError);
  CHECK_THROWS_AS(parse_label("D3"), LabelError);
  CHECK_THROWS_AS(parse_label("E9"), LabelError);
  CHECK_THROWS_AS(parse_label("F5"), LabelError);
  CHECK_THROWS_AS(parse_label("X2"), LabelError);
  CHECK_THROWS_AS(parse_label("B"), LabelError);
  CHECK_THROWS_AS(parse_type("A1++A1"), LabelError);
  CHECK_THROWS_AS(parse_type(""), LabelError);
}

TEST_CASE("root counts and validity of every catalog system") {
  for (const auto& label : catalog_labels(kMaxCatalogRank)) {
    CAPTURE(to_string(label));
    const auto system = build(label);
    CHECK(system.size() == aqh::testing::expected_root_count(label));
    CHECK(system.rank() == label.rank);
    CHECK(validate_root_system(system.roots().items()).ok());
    CHECK(identify_type(system) == std::vector<CartanLabel>{label});
  }
}

TEST_CASE("G2 length ratio") {
  const auto g2 = build(parse_label("G2"));
  Rational lo = norm2(g2.roots()[0]), hi = lo;
  for (const auto& r : g2.roots()) {
    lo = std::min(lo, norm2(r));
    hi = std::max(hi, norm2(r));
  }
  CHECK(hi / lo == 3);
}

TEST_CASE("direct sums") {
  const auto a1a1 = build(parse_type("A1+A1"));
  CHECK(a1a1.size() == 4);
  CHECK(a1a1.ambient_dim() == 4);
  CHECK(a1a1.rank() == 2);
  for (const auto& a : a1a1.roots()) {
    for (const auto& b : a1a1.roots()) {
      if (!equal(a, b) && !equal(a, Vector(-b))) CHECK(inner(a, b) == 0);
    }
  }
  const auto b3 = build(parse_label("B3"));
  CHECK(direct_sum({b3}) == b3);
  const auto triple = build(parse_type("A1+A1+A1"));
  CHECK(triple.size() == 6);
  CHECK(triple.rank() == 3);
  CHECK(identify_type(triple) == parse_type("A1+A1+A1"));
  CHECK(to_string(identify_type(build(parse_type("B2+A1")))) == "A1+B2");
}

TEST_CASE("normalize") {
  const auto b3 = build(parse_label("B3"));
  const auto nb3 = normalize(b3);
  CHECK(nb3.normalization() == Normalization::long_squared_2);
  CHECK(nb3.metric() == b3.metric());
  const auto a2 = build(parse_label("A2"));
  CHECK(normalize(a2).metric() == a2.metric());

  const auto c3 = normalize(build(parse_label("C3")));
  CHECK(c3.norm2(vec({2, 0, 0})) == 2);
  CHECK(c3.norm2(vec({1, 1, 0})) == 1);
  CHECK_THROWS_AS(normalize(build(parse_label("G2"))), G2Component);
  CHECK_THROWS_AS(normalize(build(parse_type("A1+G2"))), G2Component);

  // Every long root has squared length 2 after normalization, per component.
  for (const auto& text : {"A3", "B4", "C4", "D5", "F4", "E6", "A2+C3"}) {
    const auto n = normalize(build(parse_type(text)));
    Rational longest = 0;
    for (const auto& r : n.roots()) longest = std::max(longest, n.norm2(r));
    CHECK(longest == 2);
  }
}

TEST_CASE("highest roots") {
  CHECK(equal(highest_root(build(parse_label("A1"))), vec({1, -1})));
  CHECK(equal(highest_root(build(parse_label("B3"))), vec({1, 1, 0})));
  CHECK(equal(highest_root(build(parse_label("C3"))), vec({2, 0, 0})));
  CHECK_THROWS(highest_root(build(parse_type("A1+A1"))));
  // theta + alpha is never a root for positive alpha, and theta is long.
  for (const auto& label : catalog_labels(kMaxCatalogRank)) {
    CAPTURE(to_string(label));
    const auto system = build(label);
    const Vector theta = highest_root(system);
    CHECK(system.contains(theta));
    for (const auto& r : positive_roots(system.roots())) {
      CHECK_FALSE(system.contains(Vector(theta + r)));
      CHECK(norm2(r) <= norm2(theta));
    }
  }
}

TEST_CASE("Weyl group orders") {
  for (const auto& label : catalog_labels(4)) {
    CAPTURE(to_string(label));
    const auto group = weyl_group(build(label));
    CHECK(static_cast<std::int64_t>(group.order()) == aqh::testing::expected_weyl_order(label));
  }
  CHECK(weyl_group(build(parse_type("A1+A1"))).order() == 4);
  CHECK(weyl_group(build(parse_type("A1+G2"))).order() == 24);
  CHECK_THROWS_AS(weyl_group(build(parse_label("A5"))), RankCapExceeded);
}

TEST_CASE("Weyl elements act as their permutations") {
  const auto f4 = build(parse_label("F4"));
  const auto group = weyl_group(f4);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = pick(rng);
    const auto& perm = group.permutation(e);
    for (std::size_t i = 0; i < f4.size(); ++i) {
      CHECK(equal(group.apply(e, f4.roots()[i]), f4.roots()[perm[i]]));
    }
  }
}

TEST_CASE("Cartan matrices") {
  const auto b3 = build(parse_label("B3"));
  const auto m = cartan_matrix(simple_roots(b3.roots()));
  CHECK(m.trace() == 6);
  CHECK(m.cast<double>().determinant() == doctest::Approx(2.0));
  const auto a3 = cartan_matrix(simple_roots(build(parse_label("A3")).roots()));
  CHECK(a3.cast<double>().determinant() == doctest::Approx(4.0));
  const auto e8 = cartan_matrix(simple_roots(build(parse_label("E8")).roots()));
  CHECK(e8.cast<double>().determinant() == doctest::Approx(1.0));
}

TEST_CASE("identify_type on subsets") {
  std::vector<Vector> a2 = aqh::testing::u3_roots();
  CHECK(identify_type(VectorSet(a2)) == parse_type("A2"));
  CHECK(identify_type(build(parse_label("B3"))) == parse_type("B3"));
  CHECK(identify_type(build(parse_type("A1+A1"))) == parse_type("A1+A1"));
  // Low-rank aliases.
  CHECK(to_string(identify_type(VectorSet({vec({1, 0}), vec({-1, 0})}))) == "A1");
  CHECK(to_string(identify_type(VectorSet({vec({1, 1}), vec({1, -1}), vec({-1, 1}), vec({-1, -1})}))) == "A1+A1");
  const auto c2 = RootSystem::from_roots({vec({2, 0}), vec({-2, 0}), vec({0, 2}), vec({0, -2}), vec({1, 1}),
                                          vec({1, -1}), vec({-1, 1}), vec({-1, -1})});
  CHECK(to_string(identify_type(c2)) == "B2");
  std::vector<Vector> d3;
  const auto d4 = build(parse_label("D4"));
  for (const auto& r : d4.roots()) {
    if (r(3) == 0) d3.push_back(r);
  }
  CHECK(to_string(identify_type(VectorSet(d3))) == "A3");
}

TEST_CASE("catalog filters") {
  CHECK(catalog_labels(2).size() == 4);  // A1 A2 B2 G2
  CHECK(catalog_labels(3, "BC").size() == 3);
  CHECK(catalog_labels(8).size() == 31);
}
