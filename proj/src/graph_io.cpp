#include "ggr/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ggr {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

void expect_keys(const json& obj, const std::string& path,
                 const std::set<std::string>& allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) fail(path, "unknown key '" + key + "'");
}

std::int64_t get_int(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) fail(path, "missing key '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<std::int64_t>();
}

Rat get_rational(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key)) fail(path, "missing key '" + key + "'");
    const auto& v = obj.at(key);
    if (!v.is_string()) fail(path + "." + key, "expected a \"num/den\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        fail(path + "." + key, e.what());
    }
}

}  // namespace

LoadResult load_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    expect_keys(doc, "$", {"q", "vertices", "edges", "cusps", "funnels"});

    GeomFiniteGraph g;
    std::int64_t q = get_int(doc, "$", "q");
    if (q < 1) fail("$.q", "q must be >= 1");
    g.q = static_cast<int>(q);

    if (!doc.contains("vertices") || !doc.at("vertices").is_array())
        fail("$.vertices", "expected an array");
    if (doc.at("vertices").empty()) fail("$.vertices", "vertex list is empty");
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < doc.at("vertices").size(); ++i) {
        const std::string path = "$.vertices[" + std::to_string(i) + "]";
        const auto& v = doc.at("vertices")[i];
        expect_keys(v, path, {"id", "stab"});
        VertexId id = get_int(v, path, "id");
        if (!seen.insert(id).second) fail(path, "duplicate vertex id");
        g.core.vertices.push_back({id, get_rational(v, path, "stab")});
    }

    if (doc.contains("edges")) {
        if (!doc.at("edges").is_array()) fail("$.edges", "expected an array");
        for (std::size_t i = 0; i < doc.at("edges").size(); ++i) {
            const std::string path = "$.edges[" + std::to_string(i) + "]";
            const auto& e = doc.at("edges")[i];
            expect_keys(e, path, {"u", "v", "stab"});
            g.core.add_edge(get_int(e, path, "u"), get_int(e, path, "v"),
                            get_rational(e, path, "stab"));
        }
    }

    auto load_weights = [&](const char* key, std::map<VertexId, Rat>& into) {
        if (!doc.contains(key)) return;
        const std::string base = std::string("$.") + key;
        if (!doc.at(key).is_array()) fail(base, "expected an array");
        for (std::size_t i = 0; i < doc.at(key).size(); ++i) {
            const std::string path = base + "[" + std::to_string(i) + "]";
            const auto& w = doc.at(key)[i];
            expect_keys(w, path, {"vertex", "weight"});
            VertexId v = get_int(w, path, "vertex");
            if (into.count(v)) fail(path, "duplicate vertex in " + std::string(key));
            into.emplace(v, get_rational(w, path, "weight"));
        }
    };
    load_weights("cusps", g.cusp_weight);
    load_weights("funnels", g.funnel_weight);

    return {g, validate(g)};
}

LoadResult load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string save_graph(const GeomFiniteGraph& g) {
    json doc;
    doc["q"] = g.q;
    doc["vertices"] = json::array();
    for (const auto& v : g.core.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"stab", format_rational(v.stab)}});
    doc["edges"] = json::array();
    for (const auto& e : g.core.edges)
        doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"stab", format_rational(e.stab)}});
    doc["cusps"] = json::array();
    for (const auto& [v, w] : g.cusp_weight)
        doc["cusps"].push_back({{"vertex", v}, {"weight", format_rational(w)}});
    doc["funnels"] = json::array();
    for (const auto& [v, w] : g.funnel_weight)
        doc["funnels"].push_back({{"vertex", v}, {"weight", format_rational(w)}});
    return doc.dump(2) + "\n";
}

void save_graph_file(const GeomFiniteGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << save_graph(g);
}

}  // namespace ggr
