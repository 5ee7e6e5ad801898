#include "stressca/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stressca {

namespace {

Json facets_json(const AbstractComplex& c, const std::vector<int>& labels) {
    Json out = Json::array();
    for (Face f : c.facets()) out.push_back(labeled(f, labels));
    return out;
}

AbstractComplex facets_from_json(const Json& j, const std::map<int, int>& index, int n, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a list of id lists");
    std::vector<Face> facets;
    for (const auto& f : j) {
        if (!f.is_array()) throw std::invalid_argument(std::string(what) + " entries must be id lists");
        Face face;
        for (const auto& id : f) {
            if (!id.is_number_integer()) throw std::invalid_argument("vertex ids must be integers");
            auto it = index.find(id.get<int>());
            if (it == index.end()) throw std::invalid_argument("unknown vertex id " + id.dump() + " in " + what);
            if (face.contains(it->second)) throw std::invalid_argument("repeated vertex id " + id.dump() + " in " + what);
            face.insert(it->second);
        }
        facets.push_back(face);
    }
    return AbstractComplex(n, facets);
}

}  // namespace

Json complex_to_json(const GeometricComplex& g, const std::optional<std::pair<AbstractComplex, AbstractComplex>>& parts) {
    Json out;
    out["ambient_dim"] = g.ambient_dim();
    Json verts = Json::array();
    for (int v = 0; v < g.ground_size(); ++v) {
        Json vj;
        vj["id"] = g.label(v);
        Json coords = Json::array();
        for (int i = 0; i < g.ambient_dim(); ++i) coords.push_back(format_rational(g.coords()(i, v)));
        vj["coords"] = coords;
        if (g.coloring()) vj["color"] = (*g.coloring())[static_cast<std::size_t>(v)];
        verts.push_back(vj);
    }
    out["vertices"] = verts;
    out["facets"] = facets_json(g.complex(), g.labels());
    if (parts) out["parts"] = {facets_json(parts->first, g.labels()), facets_json(parts->second, g.labels())};
    return out;
}

LoadedComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("complex file must hold a JSON object");
    for (const char* key : {"ambient_dim", "vertices", "facets"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    if (!j["ambient_dim"].is_number_integer() || j["ambient_dim"].get<int>() < 0)
        throw std::invalid_argument("ambient_dim must be a nonnegative integer");
    const int d = j["ambient_dim"].get<int>();
    const Json& verts = j["vertices"];
    if (!verts.is_array()) throw std::invalid_argument("vertices must be a list");
    const int n = static_cast<int>(verts.size());
    if (n > VertexSet::kMaxVertices) throw std::invalid_argument("at most 64 vertices are supported");

    MatrixQ coords(d, n);
    std::vector<int> labels;
    Coloring colors;
    std::map<int, int> index;
    int colored = 0;
    for (int v = 0; v < n; ++v) {
        const Json& vj = verts[static_cast<std::size_t>(v)];
        if (!vj.is_object() || !vj.contains("id") || !vj["id"].is_number_integer())
            throw std::invalid_argument("vertex " + std::to_string(v) + " needs an integer id");
        const int id = vj["id"].get<int>();
        if (!index.emplace(id, v).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        labels.push_back(id);
        if (!vj.contains("coords") || !vj["coords"].is_array() || static_cast<int>(vj["coords"].size()) != d)
            throw std::invalid_argument("vertex " + std::to_string(id) + " needs " + std::to_string(d) + " coords");
        for (int i = 0; i < d; ++i) {
            const Json& c = vj["coords"][static_cast<std::size_t>(i)];
            if (c.is_string()) coords(i, v) = parse_rational(c.get<std::string>());
            else if (c.is_number_integer()) coords(i, v) = Rational(c.get<long long>());
            else throw std::invalid_argument("coordinates must be \"p/q\" strings or integers");
        }
        if (vj.contains("color") && !vj["color"].is_null()) {
            if (!vj["color"].is_number_integer()) throw std::invalid_argument("colors must be integers");
            colors.push_back(vj["color"].get<int>());
            ++colored;
        } else {
            colors.push_back(0);
        }
    }
    if (colored != 0 && colored != n) throw std::invalid_argument("either every vertex has a color or none does");

    AbstractComplex complex = facets_from_json(j["facets"], index, n, "facets");
    std::optional<Coloring> coloring;
    if (colored == n && n > 0) coloring = colors;
    LoadedComplex out{GeometricComplex(complex, coords, coloring, labels), std::nullopt};
    if (j.contains("parts")) {
        const Json& p = j["parts"];
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("parts must hold exactly two facet lists");
        out.parts = std::make_pair(facets_from_json(p[0], index, n, "parts"), facets_from_json(p[1], index, n, "parts"));
    }
    return out;
}

LoadedComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return complex_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace stressca
