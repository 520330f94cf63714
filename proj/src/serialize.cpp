#include "rigidity/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {
namespace {

Json doubles_to_json(std::span<const double> v) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

std::vector<double> doubles_from_json(const Json& j) {
    std::vector<double> out;
    for (const auto& x : j) out.push_back(x.get<double>());
    return out;
}

std::string join(std::span<const double> v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += format_double(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
    throw InvalidArgument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

Json partition_to_json(const PartitionAnsatz& p) { return p.multiplicities; }

PartitionAnsatz partition_from_json(const Json& j) { return {j.get<std::vector<int>>()}; }

Json family_to_json(const CriticalFamily& fam) {
    Json dir = Json::array();
    for (const auto& x : fam.direction) {
        if (x.get_den() == 1 && x.get_num().fits_slong_p())
            dir.push_back(x.get_num().get_si());
        else
            dir.push_back(format_rational(x));
    }
    return Json{{"direction", dir},
                {"norm_sq", rational_to_json(fam.norm_sq)},
                {"ratio", rational_to_json(fam.ratio)},
                {"value_unit_sphere", rational_to_json(fam.critical_value)},
                {"partition", partition_to_json(fam.partition)},
                {"classification", std::string(to_string(fam.classification))},
                {"hyperplane_multiplier", rational_to_json(fam.hyperplane_multiplier)},
                {"sphere_multiplier", rational_to_json(fam.sphere_multiplier)},
                {"orbit_size", fam.orbit_size}};
}

CriticalFamily family_from_json(const Json& j) {
    CriticalFamily fam;
    for (const auto& x : j.at("direction")) fam.direction.push_back(rational_from_json(x));
    fam.norm_sq = rational_from_json(j.at("norm_sq"));
    fam.ratio = rational_from_json(j.at("ratio"));
    fam.critical_value = rational_from_json(j.at("value_unit_sphere"));
    fam.partition = partition_from_json(j.at("partition"));
    fam.classification = classification_from_string(j.at("classification").get<std::string>());
    fam.hyperplane_multiplier = rational_from_json(j.at("hyperplane_multiplier"));
    fam.sphere_multiplier = rational_from_json(j.at("sphere_multiplier"));
    fam.orbit_size = j.at("orbit_size").get<std::uint64_t>();
    return fam;
}

Json functional_to_json(const RigidityFunctional& f) {
    return Json{{"n", f.n()}, {"coeff", rational_to_json(f.c())}};
}

RigidityFunctional functional_from_json(const Json& j) {
    return RigidityFunctional(j.at("n").get<int>(), rational_from_json(j.at("coeff")));
}

Json certificate_to_json(const CertificateReport& report) {
    Json families = Json::array();
    for (const auto& fam : report.families) families.push_back(family_to_json(fam));
    Json partitions = Json::array();
    for (const auto& p : report.maximizer_partitions) partitions.push_back(partition_to_json(p));
    return Json{{"functional", functional_to_json(report.functional)},
                {"families", families},
                {"max_critical_value", rational_to_json(report.max_critical_value)},
                {"maximizer_partitions", partitions},
                {"verdict", report.verdict}};
}

CertificateReport certificate_from_json(const Json& j) {
    CertificateReport report{functional_from_json(j.at("functional")), {}, Rational(0), {}, false};
    for (const auto& fam : j.at("families")) report.families.push_back(family_from_json(fam));
    report.max_critical_value = rational_from_json(j.at("max_critical_value"));
    for (const auto& p : j.at("maximizer_partitions")) report.maximizer_partitions.push_back(partition_from_json(p));
    report.verdict = j.at("verdict").get<bool>();
    return report;
}

Json maximize_to_json(const MaximizeResult& result) {
    Json maxima = Json::array();
    for (const auto& m : result.local_maxima)
        maxima.push_back(Json{{"point", doubles_to_json(m.point)},
                              {"value", m.value},
                              {"start_index", m.start_index},
                              {"converged", m.converged}});
    return Json{{"best_value", result.best_value},
                {"best_point", doubles_to_json(result.best_point.entries())},
                {"local_maxima", maxima},
                {"iterations_total", result.iterations_total}};
}

MaximizeResult maximize_from_json(const Json& j) {
    MaximizeResult out;
    out.best_value = j.at("best_value").get<double>();
    out.best_point = CurvatureVector<double>(doubles_from_json(j.at("best_point")));
    for (const auto& m : j.at("local_maxima"))
        out.local_maxima.push_back({doubles_from_json(m.at("point")), m.at("value").get<double>(),
                                    m.at("start_index").get<int>(), m.at("converged").get<bool>()});
    out.iterations_total = j.at("iterations_total").get<std::int64_t>();
    return out;
}

Json sharp_constant_to_json(const SharpConstantResult& result) {
    const Rational candidate = sharp_constant_candidate(result.n);
    return Json{{"n", result.n},
                {"sharp_constant", result.value},
                {"maximizer", doubles_to_json(result.maximizer.entries())},
                {"partition", result.partition},
                {"candidate", rational_to_json(candidate)},
                {"candidate_value", candidate.get_d()},
                {"difference", std::fabs(result.value - candidate.get_d())}};
}

SharpConstantResult sharp_constant_from_json(const Json& j) {
    SharpConstantResult out;
    out.n = j.at("n").get<int>();
    out.value = j.at("sharp_constant").get<double>();
    out.maximizer = CurvatureVector<double>(doubles_from_json(j.at("maximizer")));
    out.partition = j.at("partition").get<std::vector<int>>();
    return out;
}

Json samples_to_json(const std::vector<SurfaceSample>& samples, const RigidityFunctional& f) {
    Json arr = Json::array();
    for (const auto& s : samples)
        arr.push_back(Json{{"params", doubles_to_json(s.params)},
                           {"curvatures", doubles_to_json(s.curvatures.entries())},
                           {"s", evaluate_s(s.curvatures, f)},
                           {"weight", s.area_weight}});
    return arr;
}

std::vector<SurfaceSample> samples_from_json(const Json& j) {
    std::vector<SurfaceSample> out;
    for (const auto& s : j)
        out.push_back({doubles_from_json(s.at("params")), CurvatureVector<double>(doubles_from_json(s.at("curvatures"))),
                       s.at("weight").get<double>()});
    return out;
}

std::string Table::render(char sep) const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << sep;
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

Table samples_table(const std::vector<SurfaceSample>& samples, const RigidityFunctional& f) {
    Table t;
    const std::size_t num_params = samples.empty() ? 0 : samples.front().params.size();
    const std::size_t n = samples.empty() ? static_cast<std::size_t>(f.n()) : samples.front().curvatures.size();
    for (std::size_t i = 0; i < num_params; ++i) t.header.push_back("param" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) t.header.push_back("lambda" + std::to_string(i + 1));
    t.header.push_back("s");
    t.header.push_back("weight");
    for (const auto& s : samples) {
        std::vector<std::string> row;
        for (double p : s.params) row.push_back(format_double(p));
        for (double x : s.curvatures.entries()) row.push_back(format_double(x));
        row.push_back(format_double(evaluate_s(s.curvatures, f)));
        row.push_back(format_double(s.area_weight));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table families_table(const std::vector<CriticalFamily>& families) {
    Table t;
    t.header = {"partition", "direction", "norm_sq", "ratio", "value_unit_sphere", "classification", "orbit_size"};
    for (const auto& fam : families) {
        std::string dir;
        for (std::size_t i = 0; i < fam.direction.size(); ++i) {
            if (i) dir += ' ';
            dir += fam.direction[i].get_str();
        }
        t.rows.push_back({join_ints(fam.partition.multiplicities), dir, format_rational(fam.norm_sq),
                          format_rational(fam.ratio), format_rational(fam.critical_value),
                          std::string(to_string(fam.classification)), std::to_string(fam.orbit_size)});
    }
    return t;
}

Table maxima_table(const MaximizeResult& result) {
    Table t;
    t.header = {"start_index", "value", "converged", "point"};
    for (const auto& m : result.local_maxima)
        t.rows.push_back({std::to_string(m.start_index), format_double(m.value), m.converged ? "true" : "false",
                          join(m.point, " ")});
    return t;
}

}  // namespace rigidity
