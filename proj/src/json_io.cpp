#include "wpoly/json_io.hpp"

#include <stdexcept>

namespace wpoly {

nlohmann::json polynomial_to_json(const IntPolynomial& p)
{
    auto coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(c.get_str());
    return {{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON must be an object with a \"coeffs\" array");
    std::vector<Integer> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_string()) {
            Integer v;
            if (v.set_str(c.get<std::string>(), 10) != 0)
                throw std::invalid_argument("bad integer coefficient \"" + c.get<std::string>() + "\"");
            coeffs.push_back(v);
        } else if (c.is_number_integer()) {
            coeffs.emplace_back(c.get<long>());
        } else {
            throw std::invalid_argument("coefficients must be decimal strings or integers");
        }
    }
    return IntPolynomial(std::move(coeffs));
}

nlohmann::json report_to_json(const RootReport& report)
{
    nlohmann::json j = {
        {"degree", report.degree},
        {"zero_root_multiplicity", report.zero_root_multiplicity},
        {"distinct_real_roots", report.distinct_real_roots},
        {"real_roots_with_multiplicity", report.real_roots_with_multiplicity},
        {"nonreal_with_multiplicity", report.nonreal_with_multiplicity},
        {"nonreal_distinct", report.nonreal_distinct},
    };
    auto intervals = nlohmann::json::array();
    for (const auto& iv : report.isolating_intervals)
        intervals.push_back({iv.lo.get_str(), iv.hi.get_str()});
    j["isolating_intervals"] = intervals;
    if (report.nonreal_approx) {
        auto approx = nlohmann::json::array();
        for (const auto& z : *report.nonreal_approx)
            approx.push_back({z.real(), z.imag()});
        j["nonreal_approx"] = approx;
    }
    return j;
}

nlohmann::json search_result_to_json(const SearchResult& result)
{
    return {
        {"m", result.m},
        {"n", result.n},
        {"degree", result.degree},
        {"nonreal_count", result.nonreal_count},
        {"report", report_to_json(result.report)},
    };
}

} // namespace wpoly
