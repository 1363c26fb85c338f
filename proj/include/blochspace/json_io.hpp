#pragma once

#include "blochspace/bloch_codec.hpp"
#include "blochspace/complex_matrix.hpp"
#include "blochspace/cross_sections.hpp"
#include "blochspace/positivity.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace blochspace {

// All emitters print numbers with 17 significant digits ("%.17g"), which
// round-trips doubles exactly and keeps output byte-deterministic across
// runs and thread counts.  Parsers throw std::invalid_argument on malformed
// documents.

std::string format_double(double x);

// {"dim": N, "entries": [[[re, im], ...], ...]} row-major; row 0 is the
// highest projection m = j.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// {"two_j": n, "params": [N^2 - 1 reals]} in the canonical real packing.
std::string bloch_to_json(const BlochVector& v);
BlochVector bloch_from_json(const nlohmann::json& j);

const char* verdict_name(Verdict v);
const char* method_name(Method m);
std::string report_to_json(const PositivityReport& rep);

// Coefficients of a general operator on the full basis:
// {"two_j": n, "coeffs": [{"L":, "M":, "coeff": [re, im]}, ...]}.
std::string coeffs_to_json(const OperatorCoefficients& oc);

// One grid point per line, "s,t,norm_sq,F,classification", s varying
// slowest; classification is the PointClass integer (0/1/2).
std::string scan_to_csv(const ScanResult& res);

// Boundary polylines and pure states:
// {"section":, "pair":, "resolution":, "tolerance":, "pure_states": [[s,t]..],
//  "boundary": [[[s,t]..]..]}.
std::string scan_to_json(const ScanResult& res);

// A state document is either a density matrix or a Bloch vector; detected by
// its fields ("dim"/"entries" vs "two_j"/"params").
std::variant<ComplexMatrix, BlochVector> state_from_json(const nlohmann::json& j);

}  // namespace blochspace
