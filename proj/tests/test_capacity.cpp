#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dfly;
using testutil::godel;
using testutil::kv;
using testutil::lukasiewicz;
using testutil::make_capacity;
using testutil::star;

TEST_CASE("universe basics") {
  const Universe u({"A", "B", "C", "D"});
  CHECK(u.size() == 4);
  CHECK(u.full_mask() == 0b1111);
  CHECK(u.subset_name(0b0101) == "{A,C}");
  CHECK(u.subset_name(0) == "{}");
  CHECK(u.index_of("D") == 3);

  CHECK_THROWS_AS(Universe({"A", "A"}), DomainError);
  CHECK_THROWS_AS(Universe({"A,B"}), DomainError);
  CHECK_THROWS_AS(Universe(0), DomainError);
  CHECK_THROWS_AS(Universe(21), DomainError);

  const auto order = subsets_by_cardinality(3);
  const std::vector<SubsetMask> want = {0, 1, 2, 4, 3, 5, 6, 7};
  CHECK(order == want);
}

TEST_CASE("capacity validation") {
  const auto g = godel(3);
  const Universe u(2);

  SECTION("the published two-criteria example passes") {
    // bottom at {}, unknown singletons, top at the full set
    auto mu = make_capacity(g, u, {{0b01, star()}, {0b10, star()}});
    CHECK(validate_capacity(g, mu).passed);
  }

  SECTION("boundary violations") {
    auto mu = Capacity<Level>::minimal(u, g.bottom(), g.top());
    mu.set(0, star());
    const auto report = validate_capacity(g, mu);
    REQUIRE_FALSE(report.passed);
    CHECK(report.issue->kind == CapacityIssue::Kind::boundary_empty);

    auto nu = Capacity<Level>::minimal(u, g.bottom(), g.top());
    nu.set(u.full_mask(), kv(1));
    CHECK(validate_capacity(g, nu).issue->kind ==
          CapacityIssue::Kind::boundary_full);
  }

  SECTION("monotonicity witness is the first violating cover pair") {
    const auto g5 = godel(5);
    auto mu = Capacity<Level>::minimal(u, g5.bottom(), g5.top());
    mu.set(0b01, kv(3));
    mu.set(0b11, kv(2));
    const auto report = validate_capacity(g5, mu);
    REQUIRE_FALSE(report.passed);
    CHECK(report.issue->kind == CapacityIssue::Kind::monotonicity);
    CHECK(report.issue->smaller == 0b01);
    CHECK(report.issue->larger == 0b11);
  }

  SECTION("wrong table size is structural") {
    CHECK_THROWS_AS(Capacity<Level>(u, std::vector<DValue<Level>>(3, kv(0))),
                    DomainError);
  }
}

TEST_CASE("conjugate capacities") {
  const auto g = godel(3);

  SECTION("the all-unknown two-criteria capacity is self-conjugate") {
    const Universe u(2);
    const auto mu = make_capacity(g, u, {{0b01, star()}, {0b10, star()}});
    CHECK(conjugate(g, mu) == mu);
  }

  SECTION("boolean capacities get the classical conjugate") {
    const auto b = godel(2);
    const Universe u(2);
    const auto mu = make_capacity(b, u, {{0b01, kv(1)}, {0b10, kv(0)}});
    const auto conj = conjugate(b, mu);
    CHECK(conj.at(0) == kv(0));
    CHECK(conj.at(0b01) == kv(1));  // complement {B} has value 0
    CHECK(conj.at(0b10) == kv(0));  // complement {A} has value 1
    CHECK(conj.at(0b11) == kv(1));
  }

  SECTION("strict negation flattens positive values to bottom") {
    const auto g5 = godel(5);
    const Universe u(2);
    const auto mu = make_capacity(g5, u, {{0b01, kv(2)}, {0b10, kv(0)}});
    const auto conj = conjugate(g5, mu);
    for (SubsetMask a = 0; a <= u.full_mask(); ++a) {
      const auto& complement_value = mu.at(u.full_mask() & ~a);
      if (classify(complement_value) == ValueClass::positive)
        CHECK(conj.at(a) == kv(0));
    }
  }

  SECTION("conjugation is involutive on {bottom,*,top}-valued capacities") {
    const Universe u(2);
    enumerate_capacities(godel(2), u, true, [&](const Capacity<Level>& mu) {
      // over the boolean chain every capacity is {bottom,*,top}-valued
      CHECK(conjugate(godel(2), conjugate(godel(2), mu)) == mu);
    });
  }

  SECTION("conjugates of valid capacities stay valid on strict systems") {
    const Universe u(2);
    enumerate_capacities(g, u, true, [&](const Capacity<Level>& mu) {
      const auto conj = conjugate(g, mu);
      CHECK(validate_capacity(g, conj).passed);
    });
  }
}

TEST_CASE("capacity enumeration") {
  SECTION("counts on the boolean chain") {
    const auto b = godel(2);
    CHECK(all_capacities(b, Universe(1), false).size() == 1);
    CHECK(all_capacities(b, Universe(2), false).size() == 4);
    CHECK(all_capacities(b, Universe(2), true).size() == 9);
  }

  SECTION("every enumerated capacity validates; order is deterministic") {
    const auto g = godel(3);
    const Universe u(2);
    const auto first = all_capacities(g, u, true);
    const auto second = all_capacities(g, u, true);
    CHECK(first == second);
    CHECK(first.size() == 16);  // two free subsets, four values each
    for (const auto& mu : first) CHECK(validate_capacity(g, mu).passed);
  }

  SECTION("monotonicity prunes invalid assignments") {
    const auto g = godel(3);
    const Universe u(3);
    long count = 0;
    enumerate_capacities(g, u, false, [&](const Capacity<Level>& mu) {
      ++count;
      CHECK(validate_capacity(g, mu).passed);
    });
    CHECK(count > 0);
  }

  SECTION("guard refuses large requests with an estimate") {
    try {
      enumerate_capacities(godel(3), Universe(4), true,
                           [](const Capacity<Level>&) {});
      FAIL("expected a guard error");
    } catch (const GuardError& e) {
      CHECK(std::string(e.what()).find("candidate tables") !=
            std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_capacities(godel(5), Universe(2), true,
                                         [](const Capacity<Level>&) {}),
                    GuardError);
  }
}
