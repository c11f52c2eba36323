#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace dfly;
using testutil::godel;
using testutil::known_vector;
using testutil::kv;
using testutil::lyon_system;
using testutil::make_capacity;
using testutil::star;
using testutil::table3_lower;

namespace {

Capacity<Level> absolutely_unknown(const ChainSystem& sys, int n) {
  const Universe u(n);
  Capacity<Level> mu = Capacity<Level>::minimal(u, sys.bottom(), sys.top());
  for (SubsetMask a = 1; a < u.full_mask(); ++a)
    mu.set(a, DValue<Level>::star());
  return mu;
}

}  // namespace

TEST_CASE("threshold sets") {
  InputVector<Level> f = {kv(1), star(), kv(2), kv(0)};
  CHECK(positive_support(f) == 0b0111);
  CHECK(known_positive_set(f) == 0b0101);
  CHECK(zero_set(f) == 0b1000);
  CHECK(star_set(f) == 0b0010);
  CHECK(at_most_star_set(f) == 0b1010);
  // the support and the at-least-unknown set coincide by construction
  CHECK(positive_support(f) == (known_positive_set(f) | star_set(f)));
}

TEST_CASE("multiplication predicates on the named cases") {
  const auto g = godel(5);

  SECTION("all-bottom input always predicts a bottom result") {
    const Universe u(3);
    const auto mu = absolutely_unknown(g, 3);
    const auto f = known_vector({0, 0, 0});
    CHECK(predict_tnorm_zero(mu, f));
    CHECK(integral_tnorm_d(g, mu, f) == kv(0));
  }

  SECTION("the incomplete water-quality row against the complete-data bounds") {
    // The observation (2,*,3,1) under the published lower bound: its support
    // {A,B,C} carries a positive capacity while {A,C} carries bottom, so the
    // integral is exactly the unknown value and all three verdicts agree.
    const auto sys = lyon_system();
    const auto mu = table3_lower();
    const InputVector<Level> f = {kv(1), star(), kv(2), kv(0)};
    const auto computed = integral_tnorm_d(sys, mu, f);
    CHECK(computed == star());
    CHECK_FALSE(predict_tnorm_zero(mu, f));
    CHECK(predict_tnorm_star(mu, f));
    CHECK_FALSE(predict_tnorm_known(mu, f));
    for (const auto& v : tnorm_verdicts(sys, mu, f)) CHECK(v.agrees);
  }

  SECTION("known capacity over known positive input predicts a known result") {
    const Universe u(2);
    const auto mu = make_capacity(g, u, {{0b01, kv(2)}, {0b10, kv(1)}});
    const auto f = known_vector({3, 2});
    CHECK(predict_tnorm_known(mu, f));
    CHECK(classify(integral_tnorm_d(g, mu, f)) == ValueClass::positive);
  }

  SECTION("unknown capacity at the known-positive set predicts unknown") {
    const auto mu = make_capacity(g, Universe(3),
                                  {{0b100, star()},
                                   {0b101, star()},
                                   {0b110, star()}});
    const InputVector<Level> f = {star(), star(), kv(2)};
    CHECK_FALSE(predict_tnorm_known(mu, f));
    CHECK(predict_tnorm_star(mu, f));
    CHECK(integral_tnorm_d(g, mu, f) == star());
  }

  SECTION("mixed bottom/positive input with an absolutely unknown capacity") {
    const auto mu = absolutely_unknown(g, 3);
    const auto f = known_vector({0, 2, 3});
    CHECK(predict_tnorm_star(mu, f));
    CHECK(integral_tnorm_d(g, mu, f) == star());
    CHECK_FALSE(predict_tnorm_star(mu, known_vector({0, 0, 0})));
  }
}

TEST_CASE("residuum predicates on the named cases") {
  const auto g = godel(5);
  const Universe u2(2);

  SECTION("all-top input cannot reach bottom") {
    const auto mu = absolutely_unknown(g, 2);
    const auto f = known_vector({4, 4});
    CHECK_FALSE(predict_res_zero(g, mu, f));
    CHECK(classify(integral_residuum_d(g, mu, f)) != ValueClass::zero);
  }

  SECTION("unknown singletons, all-bottom input") {
    const auto mu = make_capacity(g, u2, {{0b01, star()}, {0b10, star()}});
    const auto f = known_vector({0, 0});
    CHECK(predict_res_zero(g, mu, f));
    CHECK(integral_residuum_d(g, mu, f) == kv(0));
  }

  SECTION("pair dictatorship over a partly unknown input is unknown") {
    const auto mu = make_capacity(g, Universe(3), {{0b011, kv(4)}},
                                  kv(0));
    // supersets of {1,2} also carry top
    auto nu = mu;
    nu.set(0b111, kv(4));
    const InputVector<Level> f = {star(), star(), kv(2)};
    CHECK_FALSE(predict_res_known(g, nu, f));
    CHECK(predict_res_star(g, nu, f));
    CHECK(integral_residuum_d(g, nu, f) == star());
  }

  SECTION("unknown capacity on the third criterion keeps the known value") {
    const auto mu = make_capacity(g, Universe(3),
                                  {{0b100, star()},
                                   {0b101, star()},
                                   {0b110, star()}});
    const InputVector<Level> f = {star(), star(), kv(2)};
    CHECK(predict_res_known(g, mu, f));
    CHECK(integral_residuum_d(g, mu, f) == kv(2));
  }

  SECTION("absolutely unknown capacity over positive known input is known") {
    const auto mu = absolutely_unknown(g, 3);
    const auto f = known_vector({2, 4, 3});
    CHECK_FALSE(predict_res_star(g, mu, f));
    CHECK(integral_residuum_d(g, mu, f) == kv(2));
  }
}

TEST_CASE("trichotomy oracle is exhaustive and clean") {
  for (int n = 1; n <= 2; ++n)
    for (int size = 2; size <= 3; ++size) {
      const auto report = run_trichotomy_oracle(godel(size), n);
      CAPTURE(n, size);
      CHECK(report.pairs > 0);
      CHECK(report.mismatches == 0);
    }
}

TEST_CASE("trichotomy oracle, extended level") {
  const auto report = run_trichotomy_oracle(godel(3), 3, /*extended=*/true);
  CHECK(report.pairs > 0);
  CHECK(report.mismatches == 0);
}

TEST_CASE("trichotomy oracle guards") {
  CHECK_THROWS_AS(run_trichotomy_oracle(godel(3), 3), GuardError);
  CHECK_THROWS_AS(run_trichotomy_oracle(godel(4), 2), GuardError);
  CHECK_THROWS_AS(run_trichotomy_oracle(godel(3), 4, true), GuardError);
}

TEST_CASE("completions") {
  const auto g = godel(3);

  SECTION("no unknowns yields the vector itself") {
    const auto f = known_vector({1, 2});
    const auto all = completions(g, f);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == f);
  }

  SECTION("one unknown ranges over the positive levels") {
    const InputVector<Level> f = {star(), kv(1)};
    const auto all = completions(g, f);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == known_vector({1, 1}));
    CHECK(all[1] == known_vector({2, 1}));
  }

  SECTION("boolean chain has a single positive level") {
    const auto b = godel(2);
    const InputVector<Level> f = {star(), star()};
    const auto all = completions(b, f);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == known_vector({1, 1}));
  }
}

TEST_CASE("lower-estimation principle") {
  const auto g = godel(3);
  const Universe u(2);

  SECTION("multiplication integral: every capacity, every vector") {
    const auto vectors = all_input_vectors(g, 2);
    for (const auto& mu : all_capacities(g, u, true))
      for (const auto& f : vectors) {
        const auto report =
            verify_lower_estimation(g, mu, f, QIntegral::multiplication);
        CHECK(report.passed);
      }
  }

  SECTION("residuum integral with known capacities") {
    const auto vectors = all_input_vectors(g, 2);
    for (const auto& mu : all_capacities(g, u, false))
      for (const auto& f : vectors) {
        const auto report = verify_lower_estimation(g, mu, f);
        CHECK(report.passed);
        CHECK(report.residuum_checked);
      }
  }

  SECTION("residuum integral with the unknown-singleton capacity fails") {
    const auto mu = make_capacity(g, u, {{0b01, star()}, {0b10, star()}});
    const InputVector<Level> f = {star(), kv(g.top())};
    const auto report =
        verify_lower_estimation(g, mu, f, QIntegral::residuum);
    REQUIRE_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.value_at_f == kv(g.top()));
    CHECK(lt_linear(report.value_at_completion, report.value_at_f));
    // the combined form skips the residuum check for unknown capacities
    const auto combined = verify_lower_estimation(g, mu, f);
    CHECK(combined.passed);
    CHECK_FALSE(combined.residuum_checked);
  }
}

TEST_CASE("verdict rendering") {
  const auto g = godel(3);
  const auto mu = absolutely_unknown(g, 2);
  const auto f = known_vector({0, 1});
  const auto verdicts = tnorm_verdicts(g, mu, f);
  REQUIRE(verdicts.size() == 3);
  CHECK(verdicts[0].render(g) ==
        "theorem=tnorm-zero status=pass witness=computed:*,condition:false");
  CHECK(verdicts[1].render(g) ==
        "theorem=tnorm-star status=pass witness=computed:*,condition:true");
}
