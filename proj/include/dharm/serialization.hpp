#pragma once

#include "dharm/dtensor.hpp"
#include "dharm/scalar_harmonics.hpp"
#include "dharm/tangent_geometry.hpp"

#include <json.hpp>

#include <array>
#include <complex>
#include <span>

// JSON schema (complex numbers are [re, im] pairs):
//   AngularTriple        {"l", "m", "n"}
//   HarmonicExpansion    {"terms": [{"triple", "coefficient"}]}
//   HarmonicSignature    {"l0", "chain": [..], "variances": ["vector" | "covector"], "m", "n"}
//   ExpandedDTensor      {"l0", "n", "k", "variances", "terms": [{"m0", "mus": [..], "coefficient"}]}
//   HarmonicCombination  {"rank", "variances", "terms": [{"signature", "coefficient"}]}
//   ComponentTensor      {"rank", "variances", "components": [[re, im], ...]} (slot 0 most significant)
namespace dharm {

using Json = nlohmann::ordered_json;

Json complex_to_json(std::complex<double> z);
/// Accepts [re, im] or a bare number.
std::complex<double> complex_from_json(const Json& j);

void to_json(Json& j, Variance v);
void from_json(const Json& j, Variance& v);
void to_json(Json& j, const AngularTriple& t);
void from_json(const Json& j, AngularTriple& t);
void to_json(Json& j, const AnglePoint& p);
void to_json(Json& j, const HarmonicExpansion& x);
void from_json(const Json& j, HarmonicExpansion& x);
void to_json(Json& j, const HarmonicSignature& s);
void from_json(const Json& j, HarmonicSignature& s);
void to_json(Json& j, const ExpandedDTensor& x);
void from_json(const Json& j, ExpandedDTensor& x);
void to_json(Json& j, const HarmonicCombination& c);
void from_json(const Json& j, HarmonicCombination& c);
void to_json(Json& j, const ComponentTensor& t);
void from_json(const Json& j, ComponentTensor& t);

/// {"variances", "terms": [{"coefficient": label, "combination"}],
///  "samples": [{"r", "rhobar", "zbar", "combination"}]}: the radial
/// coefficients bound at every grid point.
Json radial_combination_to_json(const RadialCombination& c, std::span<const std::array<double, 3>> grid);

}  // namespace dharm
