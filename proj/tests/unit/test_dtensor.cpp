#include "dharm/dtensor_algebra.hpp"
#include "dharm/errors.hpp"
#include "dharm/serialization.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dharm;
using enum Variance;
using cd = std::complex<double>;

namespace {

void check_components(const ComponentTensor& t, std::initializer_list<cd> expected, double tol = 1e-13) {
  REQUIRE(t.size() == expected.size());
  std::size_t i = 0;
  for (const cd e : expected) {
    CHECK(std::abs(t[i] - e) < tol);
    ++i;
  }
}

const AnglePoint kPoint = AnglePoint::make(0.7, 1.2, 0.4);

}  // namespace

TEST_CASE("signature grammar round-trips") {
  const HarmonicSignature s = HarmonicSignature::parse("1|2,1;-1,1;v,c");
  CHECK(s.l0 == 1);
  CHECK(s.chain == std::vector<int>{2, 1});
  CHECK(s.variances == std::vector<Variance>{vector, covector});
  CHECK(s.m == -1);
  CHECK(s.n == 1);
  CHECK(s.to_string() == "1|2,1;-1,1;v,c");
  CHECK(HarmonicSignature::parse("2|;1,-2;").rank() == 0);
  CHECK(HarmonicSignature::parse(HarmonicSignature(3, {}, std::vector<Variance>{}, 0, 0).to_string()).l0 == 3);
}

TEST_CASE("signature index conditions") {
  CHECK_THROWS_AS(HarmonicSignature::parse("0|2;0,0;v"), InvalidLabel);   // |l0 - 1| <= l1 <= l0 + 1
  CHECK_THROWS_AS(HarmonicSignature::parse("0|0;0,0;v"), InvalidLabel);   // l0 = l1 = 0 excluded
  CHECK_THROWS_AS(HarmonicSignature::parse("1|1;2,0;v"), InvalidLabel);   // |m| <= l_k
  CHECK_THROWS_AS(HarmonicSignature::parse("1|2;0,2;v"), InvalidLabel);   // |n| <= l0
  CHECK_THROWS_AS(HarmonicSignature::parse("1|1;0,0;x"), InvalidLabel);
  CHECK_THROWS_AS(HarmonicSignature::parse("1|1;0,0;v,v"), InvalidLabel);
  CHECK_THROWS_AS(HarmonicSignature::parse("1|1;0;v"), InvalidLabel);
  CHECK_THROWS_AS(HarmonicSignature::parse("a|1;0,0;v"), InvalidLabel);
}

TEST_CASE("basis vectors and covectors") {
  const double r = 1.0 / std::sqrt(2.0);
  check_components(basis_tensor(0, vector), {0.0, 0.0, 1.0});
  check_components(basis_tensor(1, covector), {-r, cd(0, -r), 0.0});
  check_components(basis_tensor(-1, vector), {r, cd(0, -r), 0.0});
  // (0|1; m, 0) is e_m
  for (int m = -1; m <= 1; ++m)
    CHECK(ComponentTensor::max_abs_diff(evaluate(HarmonicSignature(0, {1}, vector, m, 0), kPoint),
                                        basis_tensor(m, vector)) < 1e-15);
}

TEST_CASE("frozen d-tensor components") {
  check_components(evaluate(HarmonicSignature(1, {1}, vector, 1, 0), kPoint),
                   {cd(0.66237276407442234, 0), cd(0, 0.66237276407442234), cd(-0.20216260994323297, -0.51999288509877699)});
  check_components(evaluate(HarmonicSignature(2, {1}, vector, 0, 1), kPoint),
                   {cd(0.19128311014296549, -0.58939435875437017), cd(-0.21982907127980446, 0.16764409294592262),
                    cd(0.78605601857347782, 0.33233915420118495)});
  const ComponentTensor t = evaluate(HarmonicSignature(1, {2, 1}, vector, -1, 1), kPoint);
  CHECK(std::abs(t.at({0, 0}) - cd(0.066991742982805227, -0.16462675321676652)) < 1e-13);
  CHECK(std::abs(t.at({0, 1}) - cd(-0.051464793715852382, 0.042912804322700259)) < 1e-13);
  CHECK(std::abs(t.at({2, 2}) - cd(0.054952273652752748, -0.056580979750457076)) < 1e-13);
}

TEST_CASE("both constructions agree") {
  const HarmonicSignature s(2, {3, 2, 3}, vector, 2, -1);
  const ExpandedDTensor a = build_recursive(s);
  const ExpandedDTensor b = build_explicit(s);
  REQUIRE(a.terms.size() == b.terms.size());
  for (const auto& [key, c] : a.terms) CHECK(std::abs(c - b.terms.at(key)) < 1e-13);
}

TEST_CASE("Kronecker and epsilon constants") {
  const ComponentTensor d = evaluate(constants::kronecker(), kPoint);
  check_components(d, {1, 0, 0, 0, 1, 0, 0, 0, 1}, 1e-15);
  const ComponentTensor e = evaluate(constants::epsilon(), kPoint);
  CHECK(std::abs(e.at({0, 1, 2}) - 1.0) < 1e-15);
  CHECK(std::abs(e.at({2, 1, 0}) + 1.0) < 1e-15);
  CHECK(std::abs(e.at({0, 0, 2})) < 1e-15);
  // Swapping two covector slots negates epsilon.
  const ComponentTensor swapped = evaluate(transpose_adjacent(constants::epsilon(), 0), kPoint);
  CHECK(ComponentTensor::max_abs_diff(swapped, -1.0 * e) < 1e-14);
  // Trace of the Kronecker tensor is 3.
  const HarmonicCombination tr = contract_adjacent(constants::kronecker(), 0);
  CHECK(tr.size() == 1);
  CHECK(std::abs(evaluate(tr, kPoint)[0] - 3.0) < 1e-14);
}

TEST_CASE("conjugation phase") {
  const HarmonicSignature s(2, {2, 1}, vector, 1, -2);
  const auto [p2, c2] = conjugate_signature(s);
  CHECK(ComponentTensor::max_abs_diff(evaluate(s, kPoint).conj(), double(p2) * evaluate(c2, kPoint)) < 1e-14);
}

TEST_CASE("variance rules") {
  const HarmonicSignature vc(1, {1, 1}, std::vector<Variance>{vector, covector}, 0, 0);
  CHECK_THROWS_AS(transpose_adjacent(vc, 0), VarianceMismatch);
  const HarmonicSignature vv(1, {1, 1}, vector, 0, 0);
  CHECK_THROWS_AS(contract_adjacent(vv, 0), VarianceMismatch);
  CHECK_THROWS_AS(scalar_product(HarmonicSignature(0, {1}, vector, 0, 0), HarmonicSignature(0, {1}, vector, 0, 0)),
                  VarianceMismatch);
  HarmonicCombination c({vector});
  CHECK_THROWS_AS(c.add(HarmonicSignature(0, {1}, covector, 0, 0), 1.0), VarianceMismatch);
  CHECK_THROWS_AS(inner_product_integral(vv, vv), VarianceMismatch);
  CHECK_THROWS_AS(transpose_adjacent(vv, 1), std::out_of_range);
}

TEST_CASE("general contraction does not depend on the path") {
  const HarmonicSignature s(1, {1, 1, 1}, std::vector<Variance>{vector, vector, covector}, 0, 1);
  const auto a = contract_general(s, 0, 2, ContractionPath::first_moves_first);
  const auto b = contract_general(s, 0, 2, ContractionPath::second_moves_first);
  CHECK(ComponentTensor::max_abs_diff(evaluate(a, kPoint), evaluate(b, kPoint)) < 1e-14);
  CHECK(ComponentTensor::max_abs_diff(evaluate(a, kPoint), evaluate(s, kPoint).traced(0, 2)) < 1e-14);
}

TEST_CASE("tensor product of basis vectors") {
  for (int m = -1; m <= 1; ++m)
    for (int mp = -1; mp <= 1; ++mp) {
      const auto c = tensor_product_closed(HarmonicSignature(0, {1}, vector, m, 0), HarmonicSignature(0, {1}, vector, mp, 0));
      const ComponentTensor expected = ComponentTensor::outer(basis_tensor(m, vector), basis_tensor(mp, vector));
      CHECK(ComponentTensor::max_abs_diff(evaluate(c, kPoint), expected) < 1e-14);
    }
  // Kronecker (x) Kronecker contracted over the middle slots is the Kronecker tensor again.
  const auto kk = contract_adjacent(tensor_product_closed(constants::kronecker(), constants::kronecker()), 1);
  CHECK(HarmonicCombination::max_abs_diff(kk, constants::kronecker()) < 1e-14);
}

TEST_CASE("scalar product of basis vectors follows the trace convention") {
  for (int m1 = -1; m1 <= 1; ++m1)
    for (int m2 = -1; m2 <= 1; ++m2) {
      const HarmonicExpansion x =
          scalar_product(HarmonicSignature(0, {1}, vector, m1, 0), HarmonicSignature(0, {1}, covector, m2, 0));
      const double expected = m1 == -m2 ? (m1 % 2 ? -1.0 : 1.0) : 0.0;
      CHECK(std::abs(x.evaluate(kPoint) - expected) < 1e-14);
    }
}

TEST_CASE("d-tensor inner product") {
  const double v = 8 * std::numbers::pi * std::numbers::pi;
  const HarmonicSignature a(2, {1, 2}, vector, 1, -1);
  const HarmonicSignature b = dual_signature(a);
  CHECK(std::abs(inner_product_integral(a, b) - v) < 1e-8 * v);
  HarmonicSignature c = b;
  c.m = 0;
  CHECK(std::abs(inner_product_integral(a, c)) < 1e-8 * v);
  CHECK_THROWS_AS(inner_product_integral(a, b, {2, 2, 2}), QuadratureOrderError);
}

TEST_CASE("signature enumeration counts") {
  const std::vector<std::size_t> l2{35, 70};
  const std::vector<std::size_t> l3{84, 189};
  for (int k = 0; k <= 1; ++k) {
    CHECK(enumerate_signatures(2, std::vector<Variance>(k, vector)).size() == l2[k]);
    CHECK(enumerate_signatures(3, std::vector<Variance>(k, vector)).size() == l3[k]);
  }
}

TEST_CASE("JSON round trips") {
  const HarmonicSignature s = HarmonicSignature::parse("1|2,1;-1,1;v,c");
  const Json js = s;
  CHECK(js.dump() == R"({"l0":1,"chain":[2,1],"variances":["vector","covector"],"m":-1,"n":1})");
  CHECK(js.get<HarmonicSignature>() == s);
  HarmonicCombination c = constants::epsilon();
  const Json jc = c;
  CHECK(HarmonicCombination::max_abs_diff(jc.get<HarmonicCombination>(), c) == 0.0);
  const ExpandedDTensor x = build_explicit(s);
  const Json jx = x;
  const ExpandedDTensor y = jx.get<ExpandedDTensor>();
  CHECK(y.terms == x.terms);
  const ComponentTensor t = evaluate(s, kPoint);
  CHECK(ComponentTensor::max_abs_diff(Json(t).get<ComponentTensor>(), t) == 0.0);
  CHECK_THROWS_AS(Json::parse(R"({"l0":0,"chain":[2],"variances":["v"],"m":0,"n":0})").get<HarmonicSignature>(),
                  InvalidLabel);
}
