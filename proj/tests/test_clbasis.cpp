#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace gtcl;

namespace {

const BoundingTuple b420({4, 2, 0});

GtVector combo(const BoundingTuple& b,
               std::initializer_list<std::pair<std::string, Rational>> terms) {
  GtVector v(b);
  for (const auto& [text, coeff] : terms) v.add_term(parse_pattern(text, b), coeff);
  return v;
}

Entry factor_exponent(const ClMonomial& m, int i, int j) {
  for (const ClFactor& f : m.row_factors[j - 1])
    if (f.position == i) return f.exponent;
  FAIL("factor not found");
  return 0;
}

}  // namespace

TEST_CASE("monomial exponents", "[clbasis]") {
  const ClMonomial identity = cl_monomial(highest_pattern(b420));
  REQUIRE(identity.total_exponent() == 0);
  REQUIRE(identity.to_string() == "1");

  const ClMonomial single = cl_monomial(parse_pattern("2;2,2;4,2,0"));
  REQUIRE(factor_exponent(single, 1, 1) == 0);
  REQUIRE(factor_exponent(single, 1, 2) == 2);
  REQUIRE(factor_exponent(single, 2, 2) == 0);
  REQUIRE(single.to_string() == "(x-[1,2])^(2)");
  REQUIRE(single.row_factors[1][0].op() == OperatorSpec::matrix_unit(3, 1));

  const ClMonomial split = cl_monomial(parse_pattern("2;4,0;4,2,0"));
  REQUIRE(factor_exponent(split, 1, 1) == 2);
  REQUIRE(factor_exponent(split, 1, 2) == 0);
  REQUIRE(factor_exponent(split, 2, 2) == 2);
  REQUIRE(split.to_string() == "(x-[1,1])^(2) · (x-[2,2])^(2)");

  // total exponent equals the pattern length; zero only at the top
  for (const Pattern& p : enumerate_patterns(b420)) {
    REQUIRE(cl_monomial(p).total_exponent() == length(p));
    REQUIRE((cl_monomial(p).total_exponent() == 0) == (p == highest_pattern(b420)));
  }
}

TEST_CASE("divided powers", "[clbasis]") {
  const GtVector v = GtVector::unit(parse_pattern("4;4,0", b420));
  REQUIRE(divided_power_apply(OperatorSpec::matrix_unit(2, 1), 0, v) == v);
  REQUIRE(divided_power_apply(OperatorSpec::matrix_unit(2, 1), 2, v) ==
          combo(b420, {{"2;4,0", make_rational(1, 2)}}));
  REQUIRE(divided_power_apply(OperatorSpec::matrix_unit(3, 2), 2,
                              GtVector::highest_weight_vector(b420)) ==
          combo(b420, {{"4;4,0", make_rational(1, 2)}}));
  REQUIRE_THROWS_AS(divided_power_apply(OperatorSpec::matrix_unit(2, 1), -1, v),
                    std::invalid_argument);
}

TEST_CASE("CL vectors in GT coordinates", "[clbasis]") {
  REQUIRE(cl_vector(highest_pattern(b420)) == GtVector::highest_weight_vector(b420));

  REQUIRE(cl_vector(parse_pattern("2;4,0;4,2,0")) ==
          combo(b420, {{"2;4,0", make_rational(1, 4)}}));
  REQUIRE(cl_vector(parse_pattern("2;3,1;4,2,0")) ==
          combo(b420, {{"2;4,0", make_rational(-1, 4)}, {"2;3,1", make_rational(1, 4)}}));
  REQUIRE(cl_vector(parse_pattern("2;2,2;4,2,0")) ==
          combo(b420, {{"2;4,0", make_rational(1, 24)},
                       {"2;3,1", make_rational(-1, 8)},
                       {"2;2,2", make_rational(1, 12)}}));

  const BoundingTuple b210({2, 1, 0});
  REQUIRE(cl_vector(parse_pattern("1;2,0", b210)) ==
          combo(b210, {{"1;2,0", Rational(1)}}));
  REQUIRE(cl_vector(parse_pattern("1;1,1", b210)) ==
          combo(b210, {{"1;2,0", make_rational(-1, 2)}, {"1;1,1", make_rational(1, 2)}}));
}

TEST_CASE("CL vectors are nonzero weight vectors of the pattern weight", "[clbasis]") {
  for (const auto& entries : {std::vector<Entry>{4, 2, 0}, std::vector<Entry>{2, 1, 1, 0}}) {
    const BoundingTuple b(entries);
    for (const Pattern& p : enumerate_patterns(b)) {
      const GtVector v = cl_vector(p);
      REQUIRE_FALSE(v.is_zero());
      for (const auto& [q, c] : v.terms()) REQUIRE(weight(q) == weight(p));
    }
  }
}

TEST_CASE("factor order within a row is immaterial", "[clbasis]") {
  const BoundingTuple b({4, 2, 1, 0});
  const auto all = enumerate_patterns(b);
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);

  for (int trial = 0; trial < 12; ++trial) {
    const Pattern& p = all[pick(rng)];
    const ClMonomial m = cl_monomial(p);
    const GtVector reference = cl_vector(p);

    GtVector v = GtVector::highest_weight_vector(b);
    for (int j = b.rank(); j >= 1; --j) {
      std::vector<ClFactor> group = m.row_factors[j - 1];
      std::shuffle(group.begin(), group.end(), rng);
      for (const ClFactor& f : group)
        if (f.exponent > 0) v = divided_power_apply(f.op(), f.exponent, std::move(v));
    }
    REQUIRE(v == reference);
  }
}

TEST_CASE("single-step recursion rebuilds each CL vector", "[clbasis]") {
  for (const Pattern& p : enumerate_patterns(b420)) {
    if (length(p) == 0) continue;
    const auto [i0, j0] = first_discrepancy(p);
    const Pattern parent = incremented_pattern(p);
    const Entry denom = p.shifted_entry(j0, i0) - p.shifted_entry(j0 - 1, i0);
    REQUIRE(denom > 0);
    REQUIRE(cl_vector(p) ==
            make_rational(1, denom) *
                act(OperatorSpec::matrix_unit(j0, i0), cl_vector(parent)));
  }
}

TEST_CASE("parallel CL assembly matches the serial path", "[clbasis]") {
  const auto order = enumerate_patterns(b420);
  const auto parallel_rows = cl_vectors(order, 4);
  for (std::size_t s = 0; s < order.size(); ++s)
    REQUIRE(parallel_rows[s] == cl_vector(order[s]));
}
