#include "dharm/serialization.hpp"

#include "dharm/errors.hpp"

#include <stdexcept>

namespace dharm {

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw std::invalid_argument("complex number must be [re, im] or a number");
}

void to_json(Json& j, Variance v) { j = std::string(variance_name(v)); }

void from_json(const Json& j, Variance& v) {
  const std::string s = j.get<std::string>();
  if (s == "vector" || s == "v")
    v = Variance::vector;
  else if (s == "covector" || s == "c")
    v = Variance::covector;
  else
    throw InvalidLabel("variance \"" + s + "\" is neither vector nor covector");
}

void to_json(Json& j, const AngularTriple& t) { j = Json{{"l", t.l}, {"m", t.m}, {"n", t.n}}; }

void from_json(const Json& j, AngularTriple& t) { t = AngularTriple(j.at("l").get<int>(), j.at("m").get<int>(), j.at("n").get<int>()); }

void to_json(Json& j, const AnglePoint& p) { j = Json{{"theta", p.theta}, {"phi", p.phi}, {"beta", p.beta}}; }

void to_json(Json& j, const HarmonicExpansion& x) {
  Json terms = Json::array();
  for (const auto& [t, c] : x.terms()) terms.push_back(Json{{"triple", t}, {"coefficient", complex_to_json(c)}});
  j = Json{{"terms", std::move(terms)}};
}

void from_json(const Json& j, HarmonicExpansion& x) {
  x = HarmonicExpansion{};
  for (const auto& t : j.at("terms")) x.add(t.at("triple").get<AngularTriple>(), complex_from_json(t.at("coefficient")));
}

void to_json(Json& j, const HarmonicSignature& s) {
  j = Json{{"l0", s.l0}, {"chain", s.chain}, {"variances", s.variances}, {"m", s.m}, {"n", s.n}};
}

void from_json(const Json& j, HarmonicSignature& s) {
  s = HarmonicSignature(j.at("l0").get<int>(), j.at("chain").get<std::vector<int>>(),
                        j.at("variances").get<std::vector<Variance>>(), j.at("m").get<int>(), j.at("n").get<int>());
}

void to_json(Json& j, const ExpandedDTensor& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms)
    terms.push_back(Json{{"m0", key.m0}, {"mus", key.mus}, {"coefficient", complex_to_json(c)}});
  j = Json{{"l0", x.l0}, {"n", x.n}, {"k", x.rank()}, {"variances", x.variances}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, ExpandedDTensor& x) {
  x = ExpandedDTensor{};
  x.l0 = j.at("l0").get<int>();
  x.n = j.at("n").get<int>();
  x.variances = j.at("variances").get<std::vector<Variance>>();
  if (j.contains("k") && j.at("k").get<int>() != x.rank())
    throw InvalidLabel("expanded d-tensor: k does not match the number of variances");
  for (const auto& t : j.at("terms")) {
    ExpandedDTensor::Key key{t.at("m0").get<int>(), t.at("mus").get<std::vector<int>>()};
    if (static_cast<int>(key.mus.size()) != x.rank() || std::abs(key.m0) > x.l0)
      throw InvalidLabel("expanded d-tensor: term key does not fit l0 and rank");
    x.terms[key] += complex_from_json(t.at("coefficient"));
  }
}

void to_json(Json& j, const HarmonicCombination& c) {
  Json terms = Json::array();
  for (const auto& [sig, coeff] : c.terms())
    terms.push_back(Json{{"signature", sig}, {"coefficient", complex_to_json(coeff)}});
  j = Json{{"rank", c.rank()}, {"variances", c.variances()}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, HarmonicCombination& c) {
  c = HarmonicCombination(j.at("variances").get<std::vector<Variance>>());
  for (const auto& t : j.at("terms")) c.add(t.at("signature").get<HarmonicSignature>(), complex_from_json(t.at("coefficient")));
}

void to_json(Json& j, const ComponentTensor& t) {
  Json comps = Json::array();
  for (const auto& z : t.data()) comps.push_back(complex_to_json(z));
  j = Json{{"rank", t.rank()}, {"variances", t.variances()}, {"components", std::move(comps)}};
}

void from_json(const Json& j, ComponentTensor& t) {
  t = ComponentTensor(j.at("variances").get<std::vector<Variance>>());
  const Json& comps = j.at("components");
  if (comps.size() != t.size()) throw std::invalid_argument("component tensor: expected 3^rank components");
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = complex_from_json(comps[i]);
}

Json radial_combination_to_json(const RadialCombination& c, std::span<const std::array<double, 3>> grid) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) terms.push_back(Json{{"coefficient", t.label}, {"combination", t.combination}});
  Json samples = Json::array();
  for (const auto& [r, rho, z] : grid)
    samples.push_back(Json{{"r", r}, {"rhobar", rho}, {"zbar", z}, {"combination", c.bind(r, rho, z)}});
  return Json{{"variances", c.variances()}, {"terms", std::move(terms)}, {"samples", std::move(samples)}};
}

}  // namespace dharm
