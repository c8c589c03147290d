#include <doctest.h>

#include <cmath>
#include <map>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/errors.hpp"
#include "cubeprobe/poset_sampler.hpp"
#include "cubeprobe/rng.hpp"
#include "cubeprobe/sampler.hpp"
#include "fixtures.hpp"

using namespace cubeprobe;

TEST_CASE("bit strings parse and print") {
  const auto x = BitString::from_string("101");
  CHECK(x.size() == 3);
  CHECK(x[0] == 1);
  CHECK(x[1] == 0);
  CHECK(x.to_string() == "101");
  CHECK(BitString{1, 0, 1} == x);
  CHECK_THROWS_AS(BitString::from_string("10x"), ParseError);
}

TEST_CASE("make_condition") {
  SUBCASE("empty list is the full cube") {
    const auto c = make_condition(3, {});
    CHECK(c.fixed().empty());
    CHECK(c.contains(BitString::from_string("000")));
    CHECK(c.contains(BitString::from_string("111")));
  }
  SUBCASE("conflicting duplicate") {
    CHECK_THROWS_AS(make_condition(3, {{0, 1}, {0, 0}}), DuplicateCoordinate);
  }
  SUBCASE("repeated identical pair collapses") {
    CHECK(make_condition(3, {{1, 1}, {1, 1}}).fixed_count() == 1);
  }
  SUBCASE("out of range") { CHECK_THROWS_AS(make_condition(3, {{3, 0}}), IndexOutOfRange); }
  SUBCASE("all coordinates fixed is a singleton") {
    const auto c = make_condition(3, {{0, 1}, {1, 0}, {2, 1}});
    int members = 0;
    for (int v = 0; v < 8; ++v) {
      BitString x(3);
      for (int i = 0; i < 3; ++i) x.set(static_cast<std::size_t>(i), (v >> (2 - i)) & 1);
      if (c.contains(x)) {
        ++members;
        CHECK(x.to_string() == "101");
      }
    }
    CHECK(members == 1);
  }
}

TEST_CASE("prefix_condition") {
  const auto x = BitString::from_string("110");
  CHECK(prefix_condition(x, 0).fixed().empty());
  const auto two = prefix_condition(x, 2);
  REQUIRE(two.fixed_count() == 2);
  CHECK(two.value(0) == 1);
  CHECK(two.value(1) == 1);
  CHECK_FALSE(two.is_fixed(2));
  const auto all = prefix_condition(x, 3);
  CHECK(all.key() == "0=1,1=1,2=0");
  CHECK_THROWS_AS(all.value(5), IndexOutOfRange);
}

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool differs_c = false, differs_d = false;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a();
    CHECK(va == b());
    differs_c |= va != c();
    differs_d |= va != d();
  }
  CHECK(differs_c);
  CHECK(differs_d);

  // Two streams with adjacent ids should look uncorrelated.
  RngStream s(1, 0), t(1, 1);
  double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  constexpr int kN = 50000;
  for (int i = 0; i < kN; ++i) {
    const double x = s.uniform01(), y = t.uniform01();
    sx += x; sy += y; sxy += x * y; sxx += x * x; syy += y * y;
  }
  const double cov = sxy / kN - (sx / kN) * (sy / kN);
  const double corr = cov / std::sqrt((sxx / kN - sx * sx / kN / kN) * (syy / kN - sy * sy / kN / kN));
  CHECK(std::abs(corr) < 0.03);
}

TEST_CASE("rng helpers stay in range") {
  RngStream r(3, 3);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform01();
    CHECK((u >= 0.0 && u < 1.0));
    CHECK(r.below(7) < 7);
  }
}

TEST_CASE("evaluate_mass") {
  const ProductSampler uniform2({0.5, 0.5});
  CHECK(evaluate_mass(uniform2, BitString::from_string("01")) == doctest::Approx(0.25));
  CHECK_THROWS_AS(evaluate_mass(uniform2, BitString::from_string("011")), DimensionMismatch);

  const UniformExtensionSampler kite(fixtures::kite());
  CHECK(evaluate_mass(kite, BitString::from_string("11")) == doctest::Approx(1.0 / 3.0));
  CHECK(evaluate_mass(kite, BitString::from_string("10")) == doctest::Approx(1.0 / 3.0));
  CHECK(evaluate_mass(kite, BitString::from_string("01")) == doctest::Approx(1.0 / 3.0));
  CHECK(evaluate_mass(kite, BitString::from_string("00")) == 0.0);
}

namespace {

void check_draws_respect(const ConditionalSampler& sampler, const SubcubeCondition& cond) {
  RngStream rng(11, 0);
  const auto bound = sampler.bind(cond);
  for (int i = 0; i < 10000; ++i) {
    if (!cond.contains(bound->draw(rng))) {
      FAIL("draw escaped the condition {" << cond.key() << "}");
    }
  }
}

double exhaustive_sum(const KnownDistribution& q) {
  double total = 0.0;
  const std::size_t n = q.dim();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    BitString x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, (v >> i) & 1U);
    total += q.mass(x);
  }
  return total;
}

}  // namespace

TEST_CASE("conditional draws agree with every fixed coordinate") {
  const ProductSampler product({0.1, 0.5, 0.9, 0.3});
  check_draws_respect(product, make_condition(4, {{0, 1}, {3, 0}}));
  check_draws_respect(product, make_condition(4, {{1, 0}}));

  const UniformExtensionSampler uni(fixtures::antichain(4));
  check_draws_respect(uni, make_condition(6, {{0, 1}, {5, 0}}));
  check_draws_respect(uni, make_condition(6, {{2, 1}, {4, 1}, {1, 0}}));

  const BiasedExtensionSampler biased(fixtures::antichain(4), {5, 1, 2, 0.5});
  check_draws_respect(biased, make_condition(6, {{0, 0}, {3, 1}}));

  // Zero-mass condition: kite bits "00" encode no extension.
  const UniformExtensionSampler kite(fixtures::kite());
  check_draws_respect(kite, make_condition(2, {{0, 0}, {1, 0}}));
}

TEST_CASE("zero-mass conditions fall back to uniform over the subcube") {
  // Coordinate 0 is never 1 under this product, so fixing it to 1 has no mass.
  const ProductSampler product({0.0, 0.9, 0.9});
  const auto bound = product.bind(make_condition(3, {{0, 1}}));
  RngStream rng(5, 5);
  int ones = 0;
  constexpr int kN = 20000;
  for (int i = 0; i < kN; ++i) {
    const auto x = bound->draw(rng);
    CHECK(x[0] == 1);
    ones += x[1];
  }
  // Free coordinates are fair coins, not the 0.9 of the product.
  CHECK(std::abs(ones / double(kN) - 0.5) < 0.02);

  const TableSampler table(2, {{BitString::from_string("00"), 0.5}, {BitString::from_string("01"), 0.5}});
  const auto tb = table.bind(make_condition(2, {{0, 1}}));
  int free_ones = 0;
  for (int i = 0; i < kN; ++i) free_ones += tb->draw(rng)[1];
  CHECK(std::abs(free_ones / double(kN) - 0.5) < 0.02);
}

TEST_CASE("known distributions sum to one") {
  CHECK(exhaustive_sum(ProductSampler({0.2, 0.7, 0.5, 0.9, 0.01})) == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& p : fixtures::zoo()) {
    if (free_bit_map(p).size() > 12) continue;
    const UniformExtensionSampler uni(p);
    CHECK(std::abs(exhaustive_sum(uni) - 1.0) <= 1e-9);
    const BiasedExtensionSampler biased(p, std::vector<double>(p.size(), 1.0));
    CHECK(std::abs(exhaustive_sum(biased) - 1.0) <= 1e-9);
  }
}

TEST_CASE("equal seeds give byte-identical draw sequences") {
  const UniformExtensionSampler uni(fixtures::zoo()[6]);
  auto run = [&] {
    RngStream rng(99, 3);
    std::string out;
    for (int i = 0; i < 500; ++i) out += uni.draw(SubcubeCondition(uni.dim()), rng).to_string();
    return out;
  };
  CHECK(run() == run());
}

TEST_CASE("table sampler conditions exactly") {
  const TableSampler table(2, {{BitString::from_string("00"), 0.1},
                               {BitString::from_string("01"), 0.2},
                               {BitString::from_string("10"), 0.3},
                               {BitString::from_string("11"), 0.4}});
  const auto bound = table.bind(make_condition(2, {{0, 1}}));
  RngStream rng(8, 8);
  int ones = 0;
  constexpr int kN = 40000;
  for (int i = 0; i < kN; ++i) ones += bound->draw(rng)[1];
  // Pr[x1 = 1 | x0 = 1] = 0.4 / 0.7.
  const double expect = 0.4 / 0.7;
  CHECK(std::abs(ones / double(kN) - expect) < 4 * std::sqrt(expect * (1 - expect) / kN));
  CHECK_THROWS_AS(TableSampler(1, {{BitString::from_string("0"), 0.5}}), InvalidParameter);
}
