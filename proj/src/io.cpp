#include "arrpot/io.hpp"

#include "arrpot/errors.hpp"

#include <fstream>
#include <sstream>

namespace arrpot {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& value, const std::string& where) {
    if (value.is_number_integer()) return Rat(value.dump());
    if (value.is_string()) return parse_rat(value.get<std::string>());
    throw InputError(where + ": expected an integer or a \"p/q\" string");
}

RatVector rat_list(const json& value, const std::string& where) {
    if (!value.is_array()) throw InputError(where + ": expected an array");
    RatVector out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(rat_from_json(value[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

ArrangementInput parse_arrangement(const json& doc) {
    if (!doc.is_object()) throw InputError("arrangement file must hold a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "name" && key != "columns" && key != "weights" && key != "labels" && key != "base_point")
            throw InputError("unknown key '" + key + "'");
    if (!doc.contains("columns")) throw InputError("missing 'columns'");
    if (!doc.contains("weights")) throw InputError("missing 'weights'");

    const json& cols = doc["columns"];
    if (!cols.is_array() || cols.empty()) throw InputError("'columns' must be a non-empty array");
    std::vector<RatVector> columns;
    for (std::size_t j = 0; j < cols.size(); ++j) columns.push_back(rat_list(cols[j], "columns[" + std::to_string(j) + "]"));
    const std::size_t k = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != k) throw InputError("columns have different lengths");
    if (k == 0) throw InputError("columns must not be empty");

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) throw InputError("'labels' must be an array");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string()) throw InputError("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("'name' must be a string");
        name = doc["name"].get<std::string>();
    }

    ArrangementInput input{name,
                           ArrangementFamily(RatMatrix::from_columns(k, columns), rat_list(doc["weights"], "weights"),
                                             std::move(labels)),
                           std::nullopt};
    if (doc.contains("base_point")) {
        RatVector z = rat_list(doc["base_point"], "base_point");
        if (z.size() != input.arrangement.n())
            throw InputError("base_point must have " + std::to_string(input.arrangement.n()) + " entries");
        input.base_point = std::move(z);
    }
    return input;
}

ArrangementInput parse_arrangement_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_arrangement(doc);
}

ArrangementInput load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_arrangement_text(buffer.str());
}

BasePoint parse_base_point(const std::string& text, std::size_t n) {
    BasePoint z;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) z.push_back(parse_rat(item));
    if (z.size() != n) throw InputError("base point needs " + std::to_string(n) + " comma-separated entries");
    return z;
}

json rat_json(const Rat& value) { return to_string(value); }

json vector_json(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_json(x));
    return out;
}

json matrix_json(const RatMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
    return out;
}

json tuple_json(const IndexTuple& t) {
    json out = json::array();
    for (Index i : t) out.push_back(i + 1);
    return out;
}

json arrangement_json(const ArrangementFamily& arr, const std::string& name, const std::optional<BasePoint>& z) {
    json out;
    out["name"] = name;
    out["k"] = arr.k();
    out["n"] = arr.n();
    json cols = json::array();
    for (std::size_t j = 0; j < arr.n(); ++j) cols.push_back(vector_json(arr.column(j)));
    out["columns"] = cols;
    out["weights"] = vector_json(arr.weights());
    out["labels"] = arr.labels();
    if (z) out["base_point"] = vector_json(*z);
    return out;
}

json elementary_json(const ArrangementFamily& arr, const ElementarySubarrangement& e) {
    json blocks = json::array();
    for (const auto& b : e.blocks) blocks.push_back(tuple_json(b));
    json type = json::array();
    for (auto l : e.type()) type.push_back(l);
    const SubarrWeight w = subarr_weight(arr, e);
    json distinguished = json::array();
    for (const auto& d : distinguished_elements(e)) distinguished.push_back(tuple_json(d));
    return {{"blocks", blocks},
            {"type", type},
            {"level_weights", vector_json(w.levels)},
            {"weight", rat_json(w.total)},
            {"distinguished", distinguished},
            {"singular_element", singular_element(arr, e).to_string()}};
}

json report_json(const VerifyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json failures = json::array();
        for (const auto& f : c.failures) {
            json inputs = json::object();
            for (const auto& [key, value] : f.inputs) inputs[key] = value;
            failures.push_back({{"inputs", inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        json entry = {{"identity", c.identity}, {"instances", c.instances}, {"failures", failures}};
        if (!c.notes.empty()) entry["notes"] = c.notes;
        checks.push_back(std::move(entry));
    }
    json basis = json::array();
    for (const auto& b : report.basis) basis.push_back(tuple_json(b));
    return {{"mu", report.mu}, {"basis", basis}, {"passed", report.passed()}, {"checks", checks}};
}

}  // namespace arrpot
