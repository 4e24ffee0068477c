#pragma once

#include <string>

#include "json.hpp"

#include "stablab/rate.hpp"
#include "stablab/solver.hpp"

namespace stablab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "stablab";
inline constexpr const char* kToolVersion = "0.1.0";

// Readers throw ParseError on malformed or ill-typed documents; values are
// validated by the domain constructors.

Json to_json(const MetricDescriptor& desc);
MetricDescriptor descriptor_from_json(const Json& j);

Json to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);  // object form or text form

Json to_json(const AlmostHom& phi);
AlmostHom almost_hom_from_json(const Json& j);

Json to_json(const DefectReport& report, const Presentation& p);
Json to_json(const HomDistResult& result);

Json to_json(const SolveTrace& trace);
SolveTrace trace_from_json(const Json& j);

Json to_json(const RateComparison& cmp);
Json to_json(const EquivalenceResult& eq);
Json to_json(const ExponentFit& fit);
Json to_json(const LinearLowerBound& bound);
Json to_json(const RateCurve& curve);
Json to_json(const AsymptoticReport& report);

Json parse_json_text(const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

}  // namespace stablab
