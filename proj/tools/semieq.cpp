// semieq: build, verify, compare, dualize, decompose, count, and census
// semi-equivelar maps on the Klein bottle.
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semieq/census.hpp"
#include "semieq/iso.hpp"
#include "semieq/jsonio.hpp"
#include "semieq/map.hpp"
#include "semieq/reps.hpp"
#include "semieq/types.hpp"
#include "semieq/walkers.hpp"

namespace {

using namespace semieq;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;

MapType require_type(const std::string& name) {
    auto t = parse_type(name);
    if (!t) throw InadmissibleParams("unknown type '" + name + "'");
    return *t;
}

RepParams parse_rep_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InadmissibleParams("rep-spec must be planar:r,s,k or "
                                 "mobius:variant,l,t");
    std::string kind = spec.substr(0, colon);
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(colon + 1));
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
    throw InadmissibleParams("rep-spec must be planar:r,s,k or "
                             "mobius:variant,l,t");
}

long edge_count(const PolygonalMap& m) {
    std::set<std::pair<int, int>> edges;
    for (const Face& f : m.faces)
        for (size_t a = 0; a < f.size(); ++a)
            edges.insert(edge_key(f[a], f[(a + 1) % f.size()]));
    return (long)edges.size();
}

void write_map(const PolygonalMap& m, const std::string& out,
               const std::string& format) {
    std::string body;
    if (format == "off") body = map_to_off(m);
    else if (format == "dot") body = map_to_dot(m);
    else body = map_to_json(m);
    write_file(out, body);
}

int cmd_build(const std::string& type_name, const std::string& rep_spec,
              const std::string& out, const std::string& format) {
    MapType t = require_type(type_name);
    RepParams p = parse_rep_spec(rep_spec);
    PolygonalMap m = build(t, p);
    std::cout << "n=" << m.n_vertices << " E=" << edge_count(m)
              << " F=" << m.faces.size()
              << " chi=" << euler_characteristic(m) << " orientable="
              << (is_orientable(m) ? "true" : "false") << "\n";
    if (!out.empty()) write_map(m, out, format);
    return kExitOk;
}

int cmd_verify(const std::string& file) {
    PolygonalMap m = map_from_json(read_file(file));
    const std::vector<int>* sig =
        m.type_hint ? &signature(*m.type_hint) : nullptr;
    ValidityReport rep = validate(m, sig, true);
    nlohmann::json j;
    j["ok"] = rep.ok;
    if (!rep.ok) j["detail"] = rep.detail;
    std::cout << j.dump() << "\n";
    return rep.ok ? kExitOk : kExitDomain;
}

int cmd_iso(const std::string& f1, const std::string& f2, bool digest) {
    PolygonalMap a = map_from_json(read_file(f1));
    PolygonalMap b = map_from_json(read_file(f2));
    if (digest) {
        std::cout << canonical_digest(a) << "\n"
                  << canonical_digest(b) << "\n";
        return kExitOk;
    }
    IsoResult r = are_isomorphic(a, b);
    nlohmann::json j;
    j["isomorphic"] = r.isomorphic;
    if (r.isomorphic) {
        j["witness"] = r.witness;
        j["witness_verified"] = verify_witness(a, b, r.witness);
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_dual(const std::string& file, const std::string& out) {
    PolygonalMap m = map_from_json(read_file(file));
    PolygonalMap d = dual(m);
    if (m.type_hint) {
        // The dual of {3^6} is {6^3} and vice versa; other types are not
        // self-listed duals, so drop the hint there.
        if (*m.type_hint == MapType::T3_3_3_3_3_3)
            d.type_hint = MapType::T6_6_6;
        else if (*m.type_hint == MapType::T6_6_6)
            d.type_hint = MapType::T3_3_3_3_3_3;
        else if (*m.type_hint == MapType::T4_4_4_4)
            d.type_hint = MapType::T4_4_4_4;
    }
    if (!out.empty()) write_file(out, map_to_json(d));
    else std::cout << map_to_json(d);
    return kExitOk;
}

std::vector<int> parse_cycle_spec(const PolygonalMap& m,
                                  const std::string& spec) {
    if (spec.rfind("row:", 0) == 0) {
        int idx = std::stoi(spec.substr(4));
        auto rows = row_cycles(m);
        if (idx < 0 || idx >= (int)rows.size())
            throw NotACycle("row index out of range");
        return rows[idx];
    }
    std::vector<int> c;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(std::stoi(item));
    return c;
}

int cmd_decompose(const std::string& file, const std::string& cycle_spec) {
    PolygonalMap m = map_from_json(read_file(file));
    std::vector<int> cycle = parse_cycle_spec(m, cycle_spec);
    StripClassification sc = classify_strip(m, cycle);
    nlohmann::json j;
    j["kind"] = sc.kind == StripKind::Cylinder       ? "cylinder"
                : sc.kind == StripKind::MobiusStrip  ? "mobius"
                                                     : "cylinder+mobius";
    j["boundary"] = sc.boundary_cycles;
    nlohmann::json fc = nlohmann::json::object();
    for (const auto& [gon, cnt] : sc.face_content)
        fc[std::to_string(gon)] = cnt;
    j["faces"] = fc;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

int cmd_count(const std::string& type_name, long n) {
    std::cout << formula_count(require_type(type_name), n) << "\n";
    return kExitOk;
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

int cmd_census(const std::string& type_name, const std::string& range,
               const std::string& out, int workers) {
    std::vector<MapType> types;
    if (type_name == "all")
        types.assign(kAllTypes.begin(), kAllTypes.end());
    else
        types.push_back(require_type(type_name));
    auto [lo, hi] = parse_range(range);
    auto entries = run_census(types, lo, hi, workers);
    std::string body = census_to_json(entries);
    long mismatches = 0;
    for (const auto& e : entries)
        if (!e.match) ++mismatches;
    if (!out.empty()) write_file(out, body);
    else std::cout << body;
    std::cerr << entries.size() << " entries, " << mismatches
              << " mismatches\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-equivelar maps on the Klein bottle"};
    app.require_subcommand(1);

    std::string type_name, rep_spec, out, format = "json", file, file2;
    std::string cycle_spec, range;
    long n = 0, budget = 0;
    int workers = 1, seed = 0;
    bool digest = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed,
                      "fix randomized orderings (reproducibility)");
        c->add_option("--budget", budget, "override exploration budget");
    };

    CLI::App* b = app.add_subcommand("build", "construct a map");
    b->add_option("--type", type_name)->required();
    b->add_option("--rep", rep_spec)->required();
    b->add_option("--out", out);
    b->add_option("--format", format)
        ->check(CLI::IsMember({"json", "off", "dot"}));
    add_common(b);

    CLI::App* v = app.add_subcommand("verify", "validate a map file");
    v->add_option("file", file)->required();
    add_common(v);

    CLI::App* i = app.add_subcommand("iso", "compare two map files");
    i->add_option("file1", file)->required();
    i->add_option("file2", file2)->required();
    i->add_flag("--digest", digest, "print canonical digests only");
    add_common(i);

    CLI::App* d = app.add_subcommand("dual", "dualize a map file");
    d->add_option("file", file)->required();
    d->add_option("--out", out);
    add_common(d);

    CLI::App* dc = app.add_subcommand("decompose", "classify a cycle strip");
    dc->add_option("file", file)->required();
    dc->add_option("cycle", cycle_spec,
                   "cycle spec: row:i or comma-separated vertices")
        ->required();
    add_common(dc);

    CLI::App* c = app.add_subcommand("count", "closed-form count");
    c->add_option("--type", type_name)->required();
    c->add_option("--n", n)->required();
    add_common(c);

    CLI::App* cs = app.add_subcommand("census", "formula vs construction");
    cs->add_option("--type", type_name)->required();
    cs->add_option("--n", range, "n or lo..hi")->required();
    cs->add_option("--out", out);
    cs->add_option("--workers", workers);
    add_common(cs);

    CLI11_PARSE(app, argc, argv);

    if (budget > 0) {
        setenv("SEMIEQ_BUDGET", std::to_string(budget).c_str(), 1);
    }

    try {
        if (b->parsed()) return cmd_build(type_name, rep_spec, out, format);
        if (v->parsed()) return cmd_verify(file);
        if (i->parsed()) return cmd_iso(file, file2, digest);
        if (d->parsed()) return cmd_dual(file, out);
        if (dc->parsed()) return cmd_decompose(file, cycle_spec);
        if (c->parsed()) return cmd_count(type_name, n);
        if (cs->parsed()) return cmd_census(type_name, range, out, workers);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InadmissibleParams& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const NotACycle& e) {
        std::cerr << "not a cycle: " << e.what() << "\n";
        return kExitDomain;
    } catch (const MetadataMissing& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const MapError& e) {
        std::cerr << "invalid map: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
