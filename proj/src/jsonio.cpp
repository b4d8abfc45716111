#include "semieq/jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace semieq {

namespace {

using nlohmann::json;

constexpr const char* kLibraryVersion = "semieq 1.0.0";

Face normalize_face(const Face& f) {
    int n = (int)f.size();
    int pos = (int)(std::min_element(f.begin(), f.end()) - f.begin());
    Face fwd(n), bwd(n);
    for (int j = 0; j < n; ++j) {
        fwd[j] = f[(pos + j) % n];
        bwd[j] = f[((pos - j) % n + n) % n];
    }
    return std::min(fwd, bwd);
}

RepParams rep_from_string(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw IoError("bad rep string: " + s);
    std::string kind = s.substr(0, colon);
    std::vector<std::string> parts;
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    try {
        if (kind == "planar" && parts.size() == 3)
            return RepParams::planar(std::stoi(parts[0]), std::stoi(parts[1]),
                                     std::stoi(parts[2]));
        if (kind == "mobius" && parts.size() == 3)
            return RepParams::mobius(parts[0], std::stoi(parts[1]),
                                     std::stoi(parts[2]));
    } catch (const std::exception&) {
    }
    throw IoError("bad rep string: " + s);
}

}  // namespace

std::string map_to_json(const PolygonalMap& m) {
    json j;
    j["format"] = "semieq-map/1";
    if (m.type_hint) j["type"] = dotted_name(*m.type_hint);
    j["n"] = m.n_vertices;
    std::vector<Face> faces;
    faces.reserve(m.faces.size());
    for (const Face& f : m.faces) faces.push_back(normalize_face(f));
    std::sort(faces.begin(), faces.end());
    j["faces"] = faces;
    json meta = json::object();
    if (m.rep) meta["rep"] = m.rep->to_string();
    if (!m.rows.empty()) meta["rows"] = m.rows;
    j["meta"] = meta;
    return j.dump(2) + "\n";
}

PolygonalMap map_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != "semieq-map/1")
        throw IoError("not a semieq-map/1 document");
    PolygonalMap m;
    try {
        m.n_vertices = j.at("n").get<int>();
        m.faces = j.at("faces").get<std::vector<Face>>();
        if (j.contains("type"))
            m.type_hint = parse_type(j["type"].get<std::string>());
        if (j.contains("meta") && j["meta"].is_object()) {
            const json& meta = j["meta"];
            if (meta.contains("rep"))
                m.rep = rep_from_string(meta["rep"].get<std::string>());
            if (meta.contains("rows"))
                m.rows = meta["rows"].get<std::vector<std::vector<int>>>();
        }
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError(std::string("malformed semieq-map/1 document: ") +
                      e.what());
    }
    return m;
}

std::string map_to_off(const PolygonalMap& m) {
    // Generic positions on a circle; only combinatorics matter.
    std::set<std::pair<int, int>> edges;
    for (const Face& f : m.faces)
        for (size_t a = 0; a < f.size(); ++a)
            edges.insert(edge_key(f[a], f[(a + 1) % f.size()]));
    std::ostringstream os;
    os << "OFF\n"
       << m.n_vertices << " " << m.faces.size() << " " << edges.size()
       << "\n";
    const double pi = 3.14159265358979323846;
    for (int v = 0; v < m.n_vertices; ++v) {
        double ang = 2.0 * pi * v / std::max(1, m.n_vertices);
        os << std::cos(ang) << " " << std::sin(ang) << " 0\n";
    }
    for (const Face& f : m.faces) {
        os << f.size();
        for (int v : f) os << " " << v;
        os << "\n";
    }
    return os.str();
}

std::string map_to_dot(const PolygonalMap& m) {
    std::set<std::pair<int, int>> edges;
    for (const Face& f : m.faces)
        for (size_t a = 0; a < f.size(); ++a)
            edges.insert(edge_key(f[a], f[(a + 1) % f.size()]));
    std::ostringstream os;
    os << "graph semieq {\n";
    for (const auto& [u, v] : edges)
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string census_to_json(const std::vector<CensusEntry>& entries) {
    // One report object per type, in first-appearance order.
    std::vector<MapType> order;
    for (const CensusEntry& e : entries)
        if (std::find(order.begin(), order.end(), e.type) == order.end())
            order.push_back(e.type);
    json reports = json::array();
    for (MapType t : order) {
        json rep;
        rep["format"] = "semieq-census/1";
        rep["version"] = kLibraryVersion;
        rep["type"] = dotted_name(t);
        json arr = json::array();
        for (const CensusEntry& e : entries) {
            if (e.type != t) continue;
            json je;
            je["n"] = e.n;
            je["formula"] = e.formula;
            je["classes"] = e.constructed_classes;
            je["verdict"] = e.match ? "match" : "mismatch";
            json w = json::array();
            for (const std::string& s : e.collision_witnesses) w.push_back(s);
            for (const std::string& s : e.unslotted_digests)
                w.push_back("unslotted digest " + s);
            je["witnesses"] = w;
            if (!e.note.empty()) je["note"] = e.note;
            arr.push_back(je);
        }
        rep["entries"] = arr;
        reports.push_back(rep);
    }
    if (reports.size() == 1) return reports[0].dump(2) + "\n";
    return reports.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw IoError("read error on " + path);
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write error on " + path);
}

}  // namespace semieq
