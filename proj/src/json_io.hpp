#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bigint.hpp"
#include "cover.hpp"

namespace tvlab {

using json = nlohmann::json; // std::map-backed: keys come out sorted

// Structural problems with an instance file: bad JSON, missing keys,
// duplicate or unresolved ids, self-loops, duplicate edges. Distinct from
// cover-axiom violations, which validate_cover reports.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance file schema:
//   { "base_vertices": [{"id": 0, "side": "A"}, ...],
//     "base_edges":    [[0, 1], ...],
//     "cover_vertices":[{"id": 0, "owner": 0}, ...],
//     "cover_edges":   [[0, 1], ...] }
// Ids may be arbitrary unique integers; they are re-assigned densely in file
// order at load, and serialization always writes the dense form.
CoverInstance instance_from_json(const json& doc);
CoverInstance instance_from_json_text(const std::string& text);
json instance_to_json(const CoverInstance& inst);

// Numeric report fields are tagged so consumers can tell lossless values
// from floating-point ones: {"exact": "3/4"} vs {"float": 0.75}.
inline json tag_float(double v) { return json{{"float", v}}; }
inline json tag_int(long long v) { return json{{"exact", std::to_string(v)}}; }
inline json tag_uint(unsigned long long v) { return json{{"exact", std::to_string(v)}}; }
inline json tag_exact(const Rational& r) { return json{{"exact", r.to_string()}}; }
inline json tag_exact(const BigUint& b) { return json{{"exact", b.to_string()}}; }

json validation_report_to_json(const ValidationReport& report);
json degree_profile_to_json(const DegreeProfile& profile);

// Pretty-printed with sorted keys, newline-terminated: reports are diffable.
std::string dump_report(const json& doc);

} // namespace tvlab
