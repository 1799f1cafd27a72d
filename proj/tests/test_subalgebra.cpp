#include <doctest.h>

#include <set>

#include "aqh/subalgebra.hpp"
#include "support.hpp"

using namespace aqh;
using aqh::testing::vec;

namespace {

std::multiset<std::string> type_names(const std::vector<ClosedSubsystem>& classes) {
  std::multiset<std::string> out;
  for (const auto& c : classes) out.insert(to_string(c.type));
  return out;
}

std::set<RootIndices> index_sets(const std::vector<ClosedSubsystem>& classes) {
  std::set<RootIndices> out;
  for (const auto& c : classes) out.insert(c.indices);
  return out;
}

}  // namespace

TEST_CASE("is_closed") {
  const auto b2 = build(parse_label("B2"));
  CHECK(is_closed({}, b2));
  CHECK_FALSE(is_closed({vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}, b2));
  CHECK(is_closed({vec({1, 1}), vec({-1, -1}), vec({1, -1}), vec({-1, 1})}, b2));
  const auto a2 = build(parse_label("A2"));
  CHECK(is_closed({vec({1, -1, 0}), vec({-1, 1, 0})}, a2));
  CHECK_FALSE(is_closed({vec({1, -1, 0})}, a2));
  CHECK_THROWS_AS(make_subsystem(b2, std::vector<Vector>{vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}),
                  NotClosed);
  CHECK_THROWS_AS(make_subsystem(b2, std::vector<Vector>{vec({3, 0}), vec({-3, 0})}), NotClosed);
}

TEST_CASE("closed subsystems of G2") {
  const auto classes = enumerate_closed_subsystems(build(parse_label("G2")));
  CHECK(type_names(classes) == std::multiset<std::string>{"T", "A1", "A1", "A1+A1", "A2", "G2"});
  // The two A1 classes are the long and the short root lines.
  std::set<Rational> lengths;
  for (const auto& c : classes) {
    if (to_string(c.type) == "A1") lengths.insert(norm2(c.roots[0]));
  }
  CHECK(lengths == std::set<Rational>{2, 6});
  for (const auto& c : classes) {
    if (to_string(c.type) == "A2") CHECK(norm2(c.roots[0]) == 6);
  }
}

TEST_CASE("closed subsystems of small systems") {
  CHECK(type_names(enumerate_closed_subsystems(build(parse_label("A1")))) == std::multiset<std::string>{"T", "A1"});
  const auto b2 = build(parse_label("B2"));
  const auto classes = enumerate_closed_subsystems(b2);
  CHECK(type_names(classes) == std::multiset<std::string>{"T", "A1", "A1", "A1+A1", "B2"});
  const auto d2 = make_subsystem(b2, std::vector<Vector>{vec({1, 1}), vec({-1, -1}), vec({1, -1}), vec({-1, 1})});
  CHECK(index_sets(classes).count(canonical_form(weyl_group(b2), d2.indices)) == 1);
  for (const auto& c : classes) {
    CHECK_FALSE(c.roots == VectorSet({vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}));
  }
}

TEST_CASE("torus coranks") {
  const auto b3 = build(parse_label("B3"));
  for (const auto& c : enumerate_closed_subsystems(b3)) {
    int rank_sum = 0;
    for (const auto& l : c.type) rank_sum += l.rank;
    CHECK(c.torus_corank == 3 - rank_sum);
  }
}

// Without deduplication the enumeration must produce exactly the closed
// subsets found by brute force; with it, one representative per orbit.
TEST_CASE("enumeration agrees with brute force") {
  for (const auto* text : {"A1", "A2", "B2", "G2", "A1+A1", "A1+A2", "A1+B2", "A1+A1+A1", "A3", "B3", "C3"}) {
    CAPTURE(text);
    const auto parent = build(parse_type(text));
    const auto brute = enumerate_closed_subsystems_brute_force(parent);
    CHECK(index_sets(enumerate_closed_subsystems(parent, false)) == index_sets(brute));

    const auto group = weyl_group(parent);
    std::set<RootIndices> orbits;
    for (const auto& c : brute) orbits.insert(canonical_form(group, c.indices));
    const auto dedup = enumerate_closed_subsystems(parent, true);
    CHECK(index_sets(dedup) == orbits);
    CHECK(dedup.size() == orbits.size());
  }
}

TEST_CASE("enumeration output is sorted by type then indices") {
  const auto classes = enumerate_closed_subsystems(build(parse_label("F4")));
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const auto a = to_string(classes[i - 1].type), b = to_string(classes[i].type);
    CHECK((a < b || (a == b && classes[i - 1].indices < classes[i].indices)));
  }
}

TEST_CASE("Weyl orbits of index sets") {
  const auto b2 = build(parse_label("B2"));
  const auto line = make_subsystem(b2, std::vector<Vector>{vec({1, 1}), vec({-1, -1})});
  CHECK(weyl_orbit(b2, line.indices).size() == 2);
  const auto short_line = make_subsystem(b2, std::vector<Vector>{vec({1, 0}), vec({-1, 0})});
  CHECK(weyl_orbit(b2, short_line.indices).size() == 2);
  CHECK(weyl_orbit(b2, {}).size() == 1);
}

TEST_CASE("isotropy weights") {
  const auto g2 = build(parse_label("G2"));
  const auto torus = isotropy_weights(g2, make_subsystem(g2, RootIndices{}));
  CHECK(torus.weights.size() == 12);
  CHECK(torus.dim_m == 12);
  CHECK(torus.quaternionic_n == 3);
  CHECK(torus.eligible());

  const auto b3 = build(parse_label("B3"));
  const auto u3 = isotropy_weights(b3, make_subsystem(b3, aqh::testing::u3_roots()));
  CHECK(u3.dim_m == 12);
  CHECK(u3.quaternionic_n == 3);
  std::vector<Vector> expected;
  for (int i = 0; i < 3; ++i) {
    expected.push_back(unit_vector(3, i));
    expected.push_back(-unit_vector(3, i));
    for (int j = i + 1; j < 3; ++j) {
      expected.push_back(unit_vector(3, i) + unit_vector(3, j));
      expected.push_back(-unit_vector(3, i) - unit_vector(3, j));
    }
  }
  CHECK(u3.weights == VectorSet(expected));

  const auto b2 = build(parse_label("B2"));
  const auto d2 = isotropy_weights(b2, make_subsystem(b2, std::vector<Vector>{vec({1, 1}), vec({-1, -1}), vec({1, -1}), vec({-1, 1})}));
  CHECK(d2.weights == VectorSet({vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}));
  CHECK(d2.dim_m == 4);
  CHECK(d2.quaternionic_n == 1);

  const auto a2 = build(parse_label("A2"));
  CHECK_FALSE(isotropy_weights(a2, make_subsystem(a2, RootIndices{})).eligible());  // dim 6
}

TEST_CASE("symmetric pairs") {
  const auto b2 = build(parse_label("B2"));
  CHECK(is_symmetric_pair(isotropy_weights(b2, make_subsystem(b2, std::vector<Vector>{vec({1, 1}), vec({-1, -1}), vec({1, -1}), vec({-1, 1})}))));
  const auto b3 = build(parse_label("B3"));
  CHECK_FALSE(is_symmetric_pair(isotropy_weights(b3, make_subsystem(b3, aqh::testing::u3_roots()))));
  const auto a1 = build(parse_label("A1"));
  CHECK(is_symmetric_pair(isotropy_weights(a1, make_subsystem(a1, RootIndices{}))));
}

TEST_CASE("Wolf subsystems") {
  const auto b3 = build(parse_label("B3"));
  const auto wolf = wolf_subsystem(b3);
  CHECK(wolf.roots == VectorSet({vec({1, 1, 0}), vec({-1, -1, 0}), vec({1, -1, 0}), vec({-1, 1, 0}), vec({0, 0, 1}), vec({0, 0, -1})}));
  CHECK(to_string(wolf.type) == "A1+A1+A1");
  CHECK(to_string(wolf_subsystem(build(parse_label("G2"))).type) == "A1+A1");
  const auto a2 = wolf_subsystem(build(parse_label("A2")));
  CHECK(a2.roots.size() == 2);
  CHECK(a2.torus_corank == 1);
}

TEST_CASE("Wolf pair recognition") {
  const auto b3 = build(parse_label("B3"));
  CHECK(is_wolf_pair(b3, wolf_subsystem(b3)));
  // A conjugate of the Wolf subsystem is still recognized.
  const auto conj = make_subsystem(b3, std::vector<Vector>{vec({0, 1, 1}), vec({0, -1, -1}), vec({0, 1, -1}), vec({0, -1, 1}), vec({1, 0, 0}), vec({-1, 0, 0})});
  CHECK(is_wolf_pair(b3, conj));
  CHECK_FALSE(is_wolf_pair(b3, make_subsystem(b3, aqh::testing::u3_roots())));
  const auto g2 = build(parse_label("G2"));
  for (const auto& c : enumerate_closed_subsystems(g2)) {
    CHECK(is_wolf_pair(g2, c) == (to_string(c.type) == "A1+A1"));
  }
}

TEST_CASE("every Wolf pair is symmetric with a quaternionic dimension") {
  for (const auto& label : catalog_labels(kMaxCatalogRank)) {
    CAPTURE(to_string(label));
    const auto g = build(label);
    const auto w = isotropy_weights(g, wolf_subsystem(g));
    CHECK(is_symmetric_pair(w));
    if (label != CartanLabel{Series::A, 1}) CHECK(w.eligible());
  }
}
