#ifndef WPOLY_JSON_IO_HPP
#define WPOLY_JSON_IO_HPP

#include "wpoly/polynomial.hpp"
#include "wpoly/realroots.hpp"
#include "wpoly/search.hpp"

#include <json.hpp>

namespace wpoly {

/// {"coeffs": ["<int>", ...]}, ascending, integers as decimal strings.
nlohmann::json polynomial_to_json(const IntPolynomial& p);

/// Inverse of polynomial_to_json; also accepts plain JSON integers.
/// Throws std::invalid_argument on malformed input.
IntPolynomial polynomial_from_json(const nlohmann::json& j);

/// Counts, isolating intervals as ["lo", "hi"] decimal-string rationals,
/// and (when computed) non-real approximations as [re, im].
nlohmann::json report_to_json(const RootReport& report);

nlohmann::json search_result_to_json(const SearchResult& result);

} // namespace wpoly

#endif
