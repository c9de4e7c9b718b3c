#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "series.hpp"
#include "toric.hpp"

namespace toricdisk {

using json = nlohmann::ordered_json;

// Geometry + branes as stored on disk.
struct GeometryFile {
    ToricCY3 geom;
    std::vector<BraneSpec> branes;
};

inline GeometryFile geometry_from_json(const json& j) {
    GeometryFile gf;
    try {
        gf.geom.name = j.at("name").get<std::string>();
        gf.geom.k = j.at("k").get<Int>();
        gf.geom.r = j.at("r").get<Int>();
        for (const auto& row : j.at("charge_vectors"))
            gf.geom.charge.push_back(row.get<std::vector<Int>>());
        for (const auto& c : j.at("max_cones")) {
            auto cone = c.get<std::vector<Int>>();
            std::sort(cone.begin(), cone.end());
            gf.geom.max_cones.push_back(cone);
        }
        if (j.contains("rays")) {
            gf.geom.rays.emplace();
            for (const auto& rj : j.at("rays")) {
                auto v = rj.get<std::vector<Int>>();
                if (v.size() == 2) v.push_back(1);
                if (v.size() != 3) throw ConfigError("ray must have 2 or 3 coordinates");
                gf.geom.rays->push_back({v[0], v[1], v[2]});
            }
        }
        for (const auto& bj : j.at("branes")) {
            BraneSpec b;
            b.label = bj.at("label").get<std::string>();
            std::string kind = bj.at("kind").get<std::string>();
            if (kind == "inner")
                b.kind = BraneKind::inner;
            else if (kind == "outer")
                b.kind = BraneKind::outer;
            else
                throw ConfigError("brane kind must be \"inner\" or \"outer\"");
            b.i1 = bj.at("i1").get<Int>();
            b.i2 = bj.at("i2").get<Int>();
            b.i3 = bj.at("i3").get<Int>();
            if (bj.contains("i4")) b.i4 = bj.at("i4").get<Int>();
            gf.branes.push_back(b);
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad geometry JSON: ") + e.what());
    }
    return gf;
}

inline GeometryFile load_geometry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open geometry file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad geometry JSON: ") + e.what());
    }
    return geometry_from_json(j);
}

inline json geometry_to_json(const GeometryFile& gf) {
    json j;
    j["name"] = gf.geom.name;
    j["k"] = gf.geom.k;
    j["r"] = gf.geom.r;
    j["charge_vectors"] = gf.geom.charge;
    j["max_cones"] = gf.geom.max_cones;
    if (gf.geom.rays) {
        json rays = json::array();
        for (const auto& u : *gf.geom.rays) rays.push_back({u[0], u[1], u[2]});
        j["rays"] = rays;
    }
    json branes = json::array();
    for (const auto& b : gf.branes) {
        json bj;
        bj["label"] = b.label;
        bj["kind"] = b.kind == BraneKind::inner ? "inner" : "outer";
        bj["i1"] = b.i1;
        bj["i2"] = b.i2;
        bj["i3"] = b.i3;
        if (b.kind == BraneKind::inner) bj["i4"] = b.i4;
        branes.push_back(bj);
    }
    j["branes"] = branes;
    return j;
}

inline GeometryFile catalog_to_file(const CatalogGeometry& c) {
    GeometryFile gf;
    gf.geom = c.geom;
    for (const auto& p : c.phases) gf.branes.push_back(p.brane);
    return gf;
}

// One row per monomial: winding, closed degrees, exact value.
struct ResultRow {
    ExtExponent term;
    Rational value;
};

struct ResultTable {
    std::string title;
    Int k = 0;
    // (key, value) metadata rendered only in JSON: geometry, phase, f, order,
    // pipeline, and the like.
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<ResultRow> rows;  // sorted by (w; d)
};

inline ResultTable table_from_series(const std::string& title, Int k,
                                     const TruncatedSeries& s) {
    ResultTable t;
    t.title = title;
    t.k = k;
    for (const auto& [e, c] : s.terms()) t.rows.push_back({e, c});
    return t;
}

inline std::string render_table_json(const ResultTable& t) {
    json j;
    j["title"] = t.title;
    if (!t.meta.empty()) {
        json m;
        for (const auto& [key, val] : t.meta) m[key] = val;
        j["metadata"] = m;
    }
    json cols = json::array();
    cols.push_back("w");
    for (Int a = 1; a <= t.k; ++a) {
        std::ostringstream c;
        c << "d" << a;
        cols.push_back(c.str());
    }
    cols.push_back("value");
    j["columns"] = cols;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = json::array();
        row.push_back(r.term.w);
        for (Int x : r.term.d) row.push_back(x);
        row.push_back(to_string(r.value));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

inline std::string render_table_csv(const ResultTable& t) {
    std::ostringstream out;
    out << "w";
    for (Int a = 1; a <= t.k; ++a) out << ",d" << a;
    out << ",value\n";
    for (const auto& r : t.rows) {
        out << r.term.w;
        for (Int x : r.term.d) out << "," << x;
        out << "," << to_string(r.value) << "\n";
    }
    return out.str();
}

inline std::string render_table(const ResultTable& t, const std::string& fmt) {
    if (fmt == "json") return render_table_json(t);
    if (fmt == "csv") return render_table_csv(t);
    throw ConfigError("unknown output format: " + fmt);
}

inline void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + out_path);
    f << text;
}

}  // namespace toricdisk
