#include "kw/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kw {

using nlohmann::json;

std::string complex_to_json(const Complex2& K, bool pretty) {
    json j;
    j["vertices"] = K.vertex_count();
    json edges = json::array();
    for (const auto& e : K.edges()) edges.push_back({e.v[0], e.v[1]});
    j["edges"] = std::move(edges);
    json tris = json::array();
    for (const auto& t : K.triangles()) tris.push_back({t.v[0], t.v[1], t.v[2]});
    j["triangles"] = std::move(tris);
    return pretty ? j.dump(2) : j.dump();
}

static Complex2 complex_from_parsed(const json& j) {
    if (!j.contains("vertices")) throw std::runtime_error("complex JSON lacks \"vertices\"");
    const int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    std::vector<Triangle> tris;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw std::runtime_error("edge entry must have 2 ids");
            edges.emplace_back(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
        }
    if (j.contains("triangles"))
        for (const auto& t : j.at("triangles")) {
            if (t.size() != 3) throw std::runtime_error("triangle entry must have 3 ids");
            tris.emplace_back(t.at(0).get<VertexId>(), t.at(1).get<VertexId>(),
                              t.at(2).get<VertexId>());
        }
    const size_t ne = edges.size(), nt = tris.size();
    Complex2 K = Complex2::make(n, std::move(edges), std::move(tris));
    if (static_cast<size_t>(K.edge_count()) != ne)
        throw std::runtime_error("duplicate edges in complex JSON");
    if (static_cast<size_t>(K.triangle_count()) != nt)
        throw std::runtime_error("duplicate triangles in complex JSON");
    ValidationReport rep = validate(K);
    if (!rep.valid()) throw std::runtime_error("invalid complex: " + rep.violations.front());
    return K;
}

Complex2 complex_from_json(const std::string& text) {
    return complex_from_parsed(json::parse(text));
}

Complex2 complex_from_stream(std::istream& in) {
    json j;
    in >> j;
    return complex_from_parsed(j);
}

Complex2 load_complex(const std::string& path_or_dash) {
    if (path_or_dash == "-") return complex_from_stream(std::cin);
    std::ifstream f(path_or_dash);
    if (!f) throw std::runtime_error("cannot open " + path_or_dash);
    return complex_from_stream(f);
}

} // namespace kw
