#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "hyperalg/report_io.hpp"

using namespace halg;
using nlohmann::json;

namespace {

// Minimal validator for the subset of JSON Schema the shipped schema uses:
// type, required, properties, additionalProperties, items, enum, pattern
// (only ^[01]+$), minimum.
bool validates(const json& schema, const json& value) {
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& e : schema["enum"]) found = found || e == value;
        if (!found) return false;
    }
    if (schema.contains("type")) {
        const std::string t = schema["type"];
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
        if (t == "integer" && !value.is_number_integer() && !value.is_number_unsigned())
            return false;
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema["minimum"].get<double>())
        return false;
    if (schema.contains("pattern") && value.is_string()) {
        const std::string s = value;
        if (s.empty()) return false;
        for (char c : s)
            if (c != '0' && c != '1') return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!value.contains(k.get<std::string>())) return false;
        const json props =
            schema.contains("properties") ? schema["properties"] : json::object();
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                if (!validates(props[it.key()], it.value())) return false;
            } else if (schema.contains("additionalProperties")) {
                const json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return false;
                if (ap.is_object() && !validates(ap, it.value())) return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validates(schema["items"], item)) return false;
    return true;
}

json load_schema() {
    std::ifstream in(std::string(SOURCE_DIR) + "/docs/blockreport.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("block report JSON matches the shipped schema") {
    json schema = load_schema();
    for (const auto& rep : block_decomposition(2, 1))
        CHECK(validates(schema, report_to_json(rep)));
    for (const auto& rep : block_decomposition(3, 1, 65536, false))
        CHECK(validates(schema, report_to_json(rep)));
    BlockReport r2 = block_report({make_pair(0, 1, 2), make_pair(0, 1, 2)}, 2);
    CHECK(validates(schema, report_to_json(r2)));
}

TEST_CASE("the validator rejects malformed reports") {
    json schema = load_schema();
    json good = report_to_json(block_decomposition(2, 1)[0]);
    json bad1 = good;
    bad1.erase("pims");
    CHECK(!validates(schema, bad1));
    json bad2 = good;
    bad2["pims"][0]["eps"] = "012";
    CHECK(!validates(schema, bad2));
    json bad3 = good;
    bad3["extra"] = 1;
    CHECK(!validates(schema, bad3));
    json bad4 = good;
    bad4["tuple"][0]["case"] = "E";
    CHECK(!validates(schema, bad4));
}

TEST_CASE("JSON field content") {
    BlockReport rep = block_report({make_pair(0, 1, 2)}, 2);
    json j = report_to_json(rep);
    CHECK(j["p"] == 2);
    CHECK(j["r"] == 1);
    CHECK(j["tuple"][0]["a"] == 0);
    CHECK(j["tuple"][0]["two_j"] == 1);
    CHECK(j["tuple"][0]["case"] == "B");
    CHECK(j["w"] == 1);
    CHECK(j["dim"] == 2);
    CHECK(j["pims"].size() == 2);
    CHECK(j["pims"][0]["eps"] == "0");
    CHECK(j["pims"][0]["loewy"] == json::array({1, 1}));
    CHECK(j["symmetric"] == true);
}

TEST_CASE("DOT export") {
    BlockReport rep = block_report({make_pair(0, 1, 2)}, 2);
    std::string dot = report_to_dot(rep, 2);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\" [label=\"0\"]") != std::string::npos);
    CHECK(dot.find("W=1") != std::string::npos);
    // deterministic
    CHECK(dot == report_to_dot(rep, 2));
    // 36 graphs at p=3, r=2: one per pim summed over quick reports
    auto reps = block_decomposition(3, 2, 65536, false);
    CHECK(reps.size() == 36);
    size_t graphs = 0;
    for (const auto& r : reps) {
        std::string d = report_to_dot(r, 3);
        size_t pos = 0;
        while ((pos = d.find("digraph", pos)) != std::string::npos) {
            ++graphs;
            pos += 7;
        }
    }
    size_t expect = 0;
    for (const auto& r : reps) expect += r.pims.size();
    CHECK(graphs == expect);
}

TEST_CASE("checks_to_json") {
    std::vector<CheckResult> cs{{"alpha", "p=2,r=1", true, "ok", 1.5}};
    json j = checks_to_json(cs);
    CHECK(j[0]["name"] == "alpha");
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["grid"] == "p=2,r=1");
}

TEST_CASE("text report mentions the headline facts") {
    BlockReport rep = block_report({make_pair(1, 0, 2)}, 2);
    std::string t = report_to_text(rep);
    CHECK(t.find("block (1:0)") != std::string::npos);
    CHECK(t.find("dim=1") != std::string::npos);
    CHECK(t.find("symmetric=yes") != std::string::npos);
}
