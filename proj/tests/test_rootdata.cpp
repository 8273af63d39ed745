#include <doctest.h>

#include "lieaut/errors.hpp"
#include "lieaut/rootdata.hpp"
#include "oracles.hpp"

using namespace lieaut;

namespace {

DynkinType T(const char* name) { return parse_dynkin_type(name); }

} // namespace

TEST_CASE("inadmissible types are rejected") {
  CHECK_THROWS_AS(DynkinType::make(Family::B, 1), InvalidType);
  CHECK_THROWS_AS(DynkinType::make(Family::C, 2), InvalidType);
  CHECK_THROWS_AS(DynkinType::make(Family::D, 3), InvalidType);
  CHECK_THROWS_AS(DynkinType::make(Family::E, 5), InvalidType);
  CHECK_THROWS_AS(DynkinType::make(Family::F, 3), InvalidType);
  CHECK_THROWS_AS(DynkinType::make(Family::G, 3), InvalidType);
  CHECK_THROWS_AS(parse_dynkin_type("A0"), InvalidType);
  CHECK_THROWS_AS(parse_dynkin_type("Q3"), InvalidType);
  CHECK(parse_dynkin_type("e6").name() == "E6");
}

TEST_CASE("admissible types up to rank 2") {
  std::vector<std::string> names;
  for (auto t : admissible_types(2)) names.push_back(t.name());
  CHECK(names == std::vector<std::string>{"A1", "A2", "B2", "G2"});
  CHECK(admissible_types(8).size() == 8 + 7 + 6 + 5 + 3 + 1 + 1);
}

TEST_CASE("root counts match an independent closure") {
  CHECK(build_root_datum(T("A1")).num_roots() == 2);
  CHECK(oracle::root_closure(simple_roots_of(T("D4"))).size() == 24);
  CHECK(oracle::root_closure(simple_roots_of(T("E6"))).size() == 72);
  CHECK(build_root_datum(T("D4")).num_roots() == 24);
  CHECK(build_root_datum(T("E6")).num_roots() == 72);
  for (auto t : admissible_types(8)) {
    CAPTURE(t.name());
    const auto rd = build_root_datum(t);
    const auto closure = oracle::root_closure(rd.simple_roots);
    CHECK(std::set<RationalVector>(rd.roots.begin(), rd.roots.end()) == closure);
  }
}

TEST_CASE("hyperplanes pair each root with its negative") {
  CHECK(root_hyperplanes(build_root_datum(T("A1"))).size() == 1);
  CHECK(root_hyperplanes(build_root_datum(T("A2"))).size() == 3);
  CHECK(root_hyperplanes(build_root_datum(T("G2"))).size() == 6);
  for (auto t : admissible_types(6)) {
    const auto rd = build_root_datum(t);
    const auto planes = root_hyperplanes(rd);
    REQUIRE(planes.size() * 2 == rd.num_roots());
    std::set<std::size_t> seen;
    for (const auto& h : planes) {
      CHECK(rd.roots[h.negative] == negate(rd.roots[h.positive]));
      seen.insert(h.positive);
      seen.insert(h.negative);
    }
    CHECK(seen.size() == rd.num_roots());
  }
}

TEST_CASE("root datum invariants") {
  for (auto t : admissible_types(8)) {
    CAPTURE(t.name());
    const auto rd = build_root_datum(t);
    CHECK(rd.num_roots() % 2 == 0);
    const std::set<RationalVector> roots(rd.roots.begin(), rd.roots.end());
    for (const auto& a : rd.roots) {
      CHECK(roots.count(negate(a)) == 1);
      CHECK(dot(a, coroot(a)) == 2);
      for (const auto& s : rd.simple_roots) CHECK(roots.count(reflect(a, s)) == 1);
    }
    const auto r = static_cast<std::size_t>(rd.rank());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const int c = rd.cartan[i][j];
        if (i == j)
          CHECK(c == 2);
        else
          CHECK((c == 0 || c == -1 || c == -2 || c == -3));
        CHECK(dot(rd.fundamental_weights[i], rd.simple_coroots[j]) == (i == j ? 1 : 0));
        CHECK(dot(rd.simple_roots[j], rd.fundamental_coweights[i]) == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("reflection closure is idempotent") {
  for (auto t : admissible_types(7)) {
    const auto rd = build_root_datum(t);
    const auto once = reflection_closure(rd.simple_roots, rd.simple_roots);
    CHECK(reflection_closure(once, rd.simple_roots) == once);
    CHECK(once == rd.roots);
  }
}

TEST_CASE("D_n and E6 coordinates") {
  const auto d5 = build_root_datum(T("D5"));
  const Rational h(1, 2);
  CHECK(d5.fundamental_weights[4] == RationalVector{h, h, h, h, h});
  CHECK(d5.fundamental_weights[3] == RationalVector{h, h, h, h, -h});
  CHECK(d5.fundamental_weights[0] == RationalVector{1, 0, 0, 0, 0});

  const auto e6 = build_root_datum(T("E6"));
  REQUIRE(e6.ambient_dim == 8);
  const Rational t(2, 3);
  CHECK(e6.fundamental_weights[0] == RationalVector{0, 0, 0, 0, 0, -t, -t, t});
  for (const auto& a : e6.roots) {
    CHECK(a[7] == -a[5]);
    CHECK(a[6] == a[5]);
  }
}
