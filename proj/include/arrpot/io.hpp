#pragma once

#include "arrpot/arrangement.hpp"
#include "arrpot/elementary.hpp"
#include "arrpot/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace arrpot {

/// Arrangement file:
///   { "name": "...", "columns": [[b_1^1, ..., b_1^k], ...], "weights": [...],
///     "labels": [...], "base_point": [...] }
/// Numbers are JSON integers or "p/q" strings. name, labels and base_point
/// are optional.
struct ArrangementInput {
    std::string name;
    ArrangementFamily arrangement;
    std::optional<BasePoint> base_point;
};

/// Throws InputError on any malformed or invalid content.
ArrangementInput parse_arrangement(const nlohmann::json& doc);
ArrangementInput parse_arrangement_text(const std::string& text);
ArrangementInput load_arrangement(const std::string& path);

/// "0,1,0,2" or "0,1/2,-3"; throws InputError unless it has n entries.
BasePoint parse_base_point(const std::string& text, std::size_t n);

nlohmann::json rat_json(const Rat& value);
nlohmann::json vector_json(const RatVector& v);
nlohmann::json matrix_json(const RatMatrix& m);
/// 1-based index list.
nlohmann::json tuple_json(const IndexTuple& t);

nlohmann::json arrangement_json(const ArrangementFamily& arr, const std::string& name,
                                const std::optional<BasePoint>& z);
nlohmann::json elementary_json(const ArrangementFamily& arr, const ElementarySubarrangement& e);
nlohmann::json report_json(const VerifyReport& report);

}  // namespace arrpot
