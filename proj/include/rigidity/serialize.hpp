#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/critical.hpp"
#include "rigidity/geometry.hpp"
#include "rigidity/maximizer.hpp"

namespace rigidity {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json partition_to_json(const PartitionAnsatz& p);
PartitionAnsatz partition_from_json(const Json& j);

Json family_to_json(const CriticalFamily& fam);
CriticalFamily family_from_json(const Json& j);

Json functional_to_json(const RigidityFunctional& f);
RigidityFunctional functional_from_json(const Json& j);

Json certificate_to_json(const CertificateReport& report);
CertificateReport certificate_from_json(const Json& j);

Json maximize_to_json(const MaximizeResult& result);
MaximizeResult maximize_from_json(const Json& j);

Json sharp_constant_to_json(const SharpConstantResult& result);
SharpConstantResult sharp_constant_from_json(const Json& j);

Json samples_to_json(const std::vector<SurfaceSample>& samples, const RigidityFunctional& f);
std::vector<SurfaceSample> samples_from_json(const Json& j);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

/// Header row plus records, rendered with a single-character separator.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(char sep) const;
};

Table samples_table(const std::vector<SurfaceSample>& samples, const RigidityFunctional& f);
Table families_table(const std::vector<CriticalFamily>& families);
Table maxima_table(const MaximizeResult& result);

}  // namespace rigidity
