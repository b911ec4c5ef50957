#include "json_io.hpp"

#include <unordered_map>
#include <unordered_set>

namespace tvlab {

namespace {

long long require_int(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string(where) + ": missing integer field '" + key + "'");
    return j[key].get<long long>();
}

std::pair<long long, long long> require_edge(const json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError(std::string(where) + ": edge must be a pair of integer ids");
    return {j[0].get<long long>(), j[1].get<long long>()};
}

const json& require_array(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw ParseError(std::string("instance: missing array '") + key + "'");
    return doc[key];
}

} // namespace

CoverInstance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance: top level must be an object");
    CoverInstance inst;

    std::unordered_map<long long, int> base_ids;
    for (const auto& bv : require_array(doc, "base_vertices")) {
        long long id = require_int(bv, "id", "base_vertices");
        if (!bv.contains("side") || !bv["side"].is_string())
            throw ParseError("base_vertices: missing string field 'side'");
        std::string side = bv["side"].get<std::string>();
        if (side != "A" && side != "B")
            throw ParseError("base_vertices: side must be \"A\" or \"B\"");
        if (!base_ids.emplace(id, inst.num_base()).second)
            throw ParseError("base_vertices: duplicate id " + std::to_string(id));
        inst.base_side.push_back(side == "A" ? Side::A : Side::B);
        inst.base_label.push_back(id);
    }

    std::unordered_map<long long, int> cover_ids;
    for (const auto& cv : require_array(doc, "cover_vertices")) {
        long long id = require_int(cv, "id", "cover_vertices");
        long long owner = require_int(cv, "owner", "cover_vertices");
        auto it = base_ids.find(owner);
        if (it == base_ids.end())
            throw ParseError("cover_vertices: owner " + std::to_string(owner) +
                             " is not a base vertex");
        if (!cover_ids.emplace(id, inst.num_cover()).second)
            throw ParseError("cover_vertices: duplicate id " + std::to_string(id));
        inst.cover_owner.push_back(it->second);
        inst.cover_label.push_back(id);
    }

    auto load_edges = [](const json& arr, const char* where,
                         const std::unordered_map<long long, int>& ids,
                         std::vector<std::pair<int, int>>& out) {
        std::unordered_set<uint64_t> seen;
        seen.reserve(arr.size() * 2);
        for (const auto& e : arr) {
            auto [a, b] = require_edge(e, where);
            auto ia = ids.find(a);
            auto ib = ids.find(b);
            if (ia == ids.end() || ib == ids.end())
                throw ParseError(std::string(where) + ": edge endpoint does not resolve");
            int x = ia->second, y = ib->second;
            if (x == y)
                throw ParseError(std::string(where) + ": self-loop at id " + std::to_string(a));
            uint64_t key = (static_cast<uint64_t>(std::min(x, y)) << 32) |
                           static_cast<uint32_t>(std::max(x, y));
            if (!seen.insert(key).second)
                throw ParseError(std::string(where) + ": duplicate edge [" +
                                 std::to_string(a) + "," + std::to_string(b) + "]");
            out.emplace_back(x, y);
        }
    };
    load_edges(require_array(doc, "base_edges"), "base_edges", base_ids, inst.base_edges);
    load_edges(require_array(doc, "cover_edges"), "cover_edges", cover_ids, inst.cover_edges);

    inst.finalize();
    return inst;
}

CoverInstance instance_from_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("instance: not valid JSON");
    return instance_from_json(doc);
}

json instance_to_json(const CoverInstance& inst) {
    json doc;
    auto& bv = doc["base_vertices"] = json::array();
    for (int v = 0; v < inst.num_base(); ++v)
        bv.push_back({{"id", v}, {"side", std::string(1, side_letter(inst.base_side[v]))}});
    auto& be = doc["base_edges"] = json::array();
    for (auto [u, v] : inst.base_edges) be.push_back({u, v});
    auto& cv = doc["cover_vertices"] = json::array();
    for (int c = 0; c < inst.num_cover(); ++c)
        cv.push_back({{"id", c}, {"owner", inst.cover_owner[c]}});
    auto& ce = doc["cover_edges"] = json::array();
    for (auto [x, y] : inst.cover_edges) ce.push_back({x, y});
    return doc;
}

json validation_report_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok;
    if (!report.ok) {
        j["violation"] = violation_name(report.code);
        j["message"] = report.message;
        auto& w = j["witness"] = json::array();
        for (long long id : report.witness) w.push_back(tag_int(id));
    }
    return j;
}

json degree_profile_to_json(const DegreeProfile& p) {
    return json{{"delta_a", tag_int(p.delta_a)}, {"delta_b", tag_int(p.delta_b)},
                {"d_a", tag_int(p.d_a)},         {"d_b", tag_int(p.d_b)},
                {"k_a", tag_int(p.k_a)},         {"k_b", tag_int(p.k_b)}};
}

std::string dump_report(const json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace tvlab
