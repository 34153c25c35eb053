#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "hessjac/fieldgen.hpp"

using namespace testing;

TEST_CASE("tang construction") {
  for (int cf : {1, 2, 3, 5}) {
    auto g = gen_tang(32771, 3, cf, 7);
    const auto& a = g.field->coeffs();
    CHECK(a[2].deg() == cf);
    CHECK(a[1].deg() < 2 * cf);
    CHECK(a[0].deg() == 3 * cf - 1);
    CHECK(g.field->cf() == cf);
    CHECK(g.t == 2);
    CHECK(g.genus == 3 * cf - 2);
    CHECK(g.bound_equality());
  }
  auto g4 = gen_tang(32771, 3, 2, 1);
  CHECK(g4.genus == 4);
  auto g55 = gen_tang(32771, 3, 19, 1);
  CHECK(g55.genus == 55);
  CHECK(g55.genus_bound == 55);
  auto n2 = gen_tang(32771, 2, 3, 1);
  CHECK(n2.genus == 2);
  auto n4 = gen_tang(32771, 4, 2, 3);
  CHECK(n4.field->coeffs()[3].deg() == 2);
  CHECK(n4.field->coeffs()[0].deg() == 7);
}

TEST_CASE("generation is deterministic") {
  auto a = gen_tang(32771, 3, 3, 42), b = gen_tang(32771, 3, 3, 42), c = gen_tang(32771, 3, 3, 43);
  CHECK(a.field->to_json() == b.field->to_json());
  CHECK(a.field->to_json() != c.field->to_json());
  auto x = gen_adhoc(32771, 3, 3, 5), y = gen_adhoc(32771, 3, 3, 5);
  CHECK(x.field->to_json() == y.field->to_json());
  CHECK(x.metadata_json() == y.metadata_json());
}

TEST_CASE("ad-hoc construction") {
  for (u64 seed = 1; seed <= 5; ++seed) {
    auto g = gen_adhoc(32771, 4, 3, seed);
    CHECK(g.field->cf() <= 3);
    CHECK(g.t >= 1);
    CHECK(is_irreducible(g.field->coeffs()));
    CHECK(g.genus <= g.genus_bound);
  }
  auto t = gen_adhoc(32771, 4, 6, 104, 15);
  CHECK(t.genus == 15);
  CHECK(t.field->genus() == 15);
  CHECK_THROWS_WITH(gen_adhoc(32771, 3, 1, 1, 40, 50), doctest::Contains("retry budget exhausted"));
}

TEST_CASE("metadata in field files") {
  auto g = gen_tang(32771, 3, 2, 9);
  auto j = nlohmann::json::parse(g.field->to_json(g.metadata_json()));
  CHECK(j["metadata"]["g"] == 4);
  CHECK(j["metadata"]["n"] == 3);
  CHECK(j["metadata"]["cf"] == 2);
  CHECK(j["metadata"]["t"] == 2);
  CHECK(j["metadata"]["seed"] == 9);
  CHECK(j["metadata"]["bound_equality"] == true);
  CHECK(FunctionField::from_json(j.dump())->coeffs() == g.field->coeffs());
}
