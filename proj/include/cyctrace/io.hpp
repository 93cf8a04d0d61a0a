#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "barcat.hpp"
#include "report.hpp"
#include "rings.hpp"
#include "simplicial.hpp"
#include "witt.hpp"

namespace cyctrace::io {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("parse error in " + path + " at byte offset " + std::to_string(e.byte) +
                          ": " + e.what());
    }
}

inline void save_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << j.dump(2) << "\n";
}

inline std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("missing required \"kind\" field");
    return j["kind"].get<std::string>();
}

// ---------------------------------------------------------------------------
// simplicial / cyclic sets
// ---------------------------------------------------------------------------

inline json complex_to_json(const simp::SimplicialSet& X) {
    json j;
    j["kind"] = "simplicial";
    j["truncation"] = X.trunc;
    j["counts"] = X.counts;
    json faces = json::array();
    for (int k = 1; k <= X.trunc; ++k)
        for (int i = 0; i <= k; ++i) faces.push_back({k, i, X.faces[k][i]});
    j["faces"] = faces;
    json degens = json::array();
    for (int k = 0; k <= X.trunc - 1; ++k)
        for (int i = 0; i <= k; ++i) degens.push_back({k, i, X.degens[k][i]});
    j["degeneracies"] = degens;
    if (X.has_cyclic()) {
        json cyc = json::array();
        for (int k = 0; k <= X.trunc; ++k) cyc.push_back({k, X.cyclic[k]});
        j["cyclic"] = cyc;
        if (X.cyclic_order_mult != 1) j["cyclic_order_multiplier"] = X.cyclic_order_mult;
    }
    return j;
}

inline simp::SimplicialSet complex_from_json(const json& j) {
    if (kind_of(j) != "simplicial") throw SchemaError("expected kind \"simplicial\"");
    simp::SimplicialSet X;
    try {
        X.trunc = j.at("truncation").get<int>();
        X.counts = j.at("counts").get<std::vector<simp::Idx>>();
        if (X.trunc < 0 || static_cast<int>(X.counts.size()) != X.trunc + 1)
            throw SchemaError("counts size must equal truncation+1");
        X.faces.resize(X.trunc + 1);
        X.degens.resize(X.trunc + 1);
        for (int k = 1; k <= X.trunc; ++k) X.faces[k].resize(k + 1);
        for (int k = 0; k <= X.trunc - 1; ++k) X.degens[k].resize(k + 1);
        for (const auto& row : j.at("faces")) {
            int k = row.at(0).get<int>(), i = row.at(1).get<int>();
            if (k < 1 || k > X.trunc || i < 0 || i > k) throw SchemaError("face row out of range");
            X.faces[k][i] = row.at(2).get<std::vector<simp::Idx>>();
        }
        for (const auto& row : j.at("degeneracies")) {
            int k = row.at(0).get<int>(), i = row.at(1).get<int>();
            if (k < 0 || k > X.trunc - 1 || i < 0 || i > k)
                throw SchemaError("degeneracy row out of range");
            X.degens[k][i] = row.at(2).get<std::vector<simp::Idx>>();
        }
        if (j.contains("cyclic")) {
            X.cyclic.resize(X.trunc + 1);
            for (const auto& row : j.at("cyclic")) {
                int k = row.at(0).get<int>();
                if (k < 0 || k > X.trunc) throw SchemaError("cyclic row out of range");
                X.cyclic[k] = row.at(1).get<std::vector<simp::Idx>>();
            }
            X.cyclic_order_mult = j.value("cyclic_order_multiplier", 1);
        }
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed simplicial document: ") + e.what());
    }
    auto schema = simp::schema_check(X);
    if (!schema.ok()) throw SchemaError("simplicial document: " + schema.violations.front().str());
    return X;
}

// ---------------------------------------------------------------------------
// categories and monoids
// ---------------------------------------------------------------------------

inline json category_to_json(const cat::FinCategory& C) {
    json j;
    j["kind"] = "category";
    j["objects"] = C.objects;
    json mors = json::array();
    for (const auto& m : C.mors)
        mors.push_back({{"id", m.name}, {"src", C.objects[m.src]}, {"dst", C.objects[m.dst]}});
    j["morphisms"] = mors;
    json ids = json::array();
    for (int o = 0; o < C.n_obj(); ++o) ids.push_back(C.mors[C.identity[o]].name);
    j["identities"] = ids;
    json comp = json::array();
    for (int g = 0; g < C.n_mor(); ++g)
        for (int f = 0; f < C.n_mor(); ++f)
            if (C.composable(g, f) && C.comp[g][f] >= 0)
                comp.push_back({C.mors[g].name, C.mors[f].name, C.mors[C.comp[g][f]].name});
    j["compose"] = comp;
    if (C.truncated) j["truncated"] = true;
    return j;
}

inline cat::FinCategory category_from_json(const json& j) {
    if (kind_of(j) != "category") throw SchemaError("expected kind \"category\"");
    cat::FinCategory C;
    try {
        C.objects = j.at("objects").get<std::vector<std::string>>();
        auto obj_index = [&](const std::string& name) {
            for (int o = 0; o < C.n_obj(); ++o)
                if (C.objects[o] == name) return o;
            throw SchemaError("unknown object " + name);
        };
        for (const auto& m : j.at("morphisms"))
            C.mors.push_back({m.at("id").get<std::string>(),
                              obj_index(m.at("src").get<std::string>()),
                              obj_index(m.at("dst").get<std::string>())});
        auto mor_index = [&](const std::string& name) {
            int i = C.find_mor(name);
            if (i < 0) throw SchemaError("unknown morphism " + name);
            return i;
        };
        for (const auto& name : j.at("identities"))
            C.identity.push_back(mor_index(name.get<std::string>()));
        C.comp.assign(C.n_mor(), std::vector<int>(C.n_mor(), -1));
        for (const auto& row : j.at("compose"))
            C.comp[mor_index(row.at(0).get<std::string>())]
                  [mor_index(row.at(1).get<std::string>())] =
                mor_index(row.at(2).get<std::string>());
        C.truncated = j.value("truncated", false);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed category document: ") + e.what());
    }
    auto schema = cat::schema_check(C);
    if (!schema.ok()) throw SchemaError("category document: " + schema.violations.front().str());
    return C;
}

inline json monoid_to_json(const bar::Monoid& M) {
    return {{"kind", "monoid"}, {"elements", M.names}, {"table", M.table}, {"unit", M.unit}};
}

inline bar::Monoid monoid_from_json(const json& j) {
    if (kind_of(j) != "monoid") throw SchemaError("expected kind \"monoid\"");
    bar::Monoid M;
    try {
        M.names = j.at("elements").get<std::vector<std::string>>();
        M.table = j.at("table").get<std::vector<std::vector<int>>>();
        M.unit = j.value("unit", 0);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed monoid document: ") + e.what());
    }
    const int n = M.size();
    if (static_cast<int>(M.table.size()) != n) throw SchemaError("monoid table size");
    for (const auto& row : M.table) {
        if (static_cast<int>(row.size()) != n) throw SchemaError("monoid table row size");
        for (int v : row)
            if (v < 0 || v >= n) throw SchemaError("monoid table entry out of range");
    }
    if (M.unit < 0 || M.unit >= n) throw SchemaError("monoid unit out of range");
    return M;
}

/// Named builtin monoids accepted anywhere a monoid file is expected.
inline bar::Monoid builtin_monoid(const std::string& name) {
    if (name.rfind("z", 0) == 0 && name.size() > 1) {
        int n = std::stoi(name.substr(1));
        if (n >= 1) return bar::cyclic_group(n);
    }
    if (name == "s3") return bar::symmetric_s3();
    if (name == "idem2") return bar::idempotent2();
    if (name == "trivial") return bar::trivial_monoid();
    throw SchemaError("unknown builtin monoid: " + name);
}

// ---------------------------------------------------------------------------
// Witt vectors (ring-tag dispatch)
// ---------------------------------------------------------------------------

template <class F>
auto with_ring(const std::string& tag, F&& f) {
    if (tag == "q") return f(rings::QRing{});
    if (tag == "z" || tag == "z:0") return f(rings::ZRing{});
    if (tag.rfind("z:", 0) == 0) {
        long long m = std::stoll(tag.substr(2));
        return f(rings::ZmodRing(static_cast<std::uint64_t>(m)));
    }
    throw SchemaError("unknown ring tag: " + tag + " (expected z:0, z:m, or q)");
}

template <class R>
json witt_to_json(const R& ring, const witt::WittVec<R>& x) {
    json j;
    j["kind"] = "witt";
    j["ring"] = ring.tag();
    j["S"] = x.S.elems;
    json coords = json::array();
    for (const auto& c : x.a) coords.push_back(ring.str(c));
    j["coords"] = coords;
    return j;
}

template <class R>
witt::WittVec<R> witt_from_json(const R& ring, const json& j) {
    if (kind_of(j) != "witt") throw SchemaError("expected kind \"witt\"");
    witt::WittVec<R> x;
    try {
        x.S = witt::make_trunc(j.at("S").get<std::vector<int>>());
        for (const auto& c : j.at("coords")) x.a.push_back(ring.parse(c.get<std::string>()));
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed witt document: ") + e.what());
    }
    if (static_cast<int>(x.a.size()) != x.S.size())
        throw SchemaError("witt coords must match the truncation set");
    return x;
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline json report_to_json(const SuiteReport& R) {
    json j;
    j["kind"] = "report";
    j["version"] = R.version;
    j["seed"] = R.seed;
    json checks = json::array();
    for (const auto& c : R.checks)
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"seed", c.seed},
                          {"ms", c.ms},
                          {"notes", c.notes}});
    j["checks"] = checks;
    return j;
}

/// Equality up to timings: the determinism contract of the suite.
inline bool reports_equivalent(const json& a, const json& b) {
    json x = a, y = b;
    for (auto* j : {&x, &y})
        if (j->contains("checks"))
            for (auto& c : (*j)["checks"]) c.erase("ms");
    return x == y;
}

// ---------------------------------------------------------------------------
// inspect: identify any artifact file and summarize it
// ---------------------------------------------------------------------------

inline std::string inspect(const json& j) {
    std::ostringstream out;
    const std::string kind = kind_of(j);
    if (kind == "simplicial") {
        auto X = complex_from_json(j);
        out << "kind: simplicial" << (X.has_cyclic() ? " (cyclic" : "");
        if (X.has_cyclic()) {
            if (X.cyclic_order_mult != 1) out << ", order multiplier " << X.cyclic_order_mult;
            out << ")";
        }
        out << "\ntruncation: " << X.trunc << "\ncounts:";
        for (auto c : X.counts) out << " " << c;
        out << "\nnondegenerate:";
        for (int k = 0; k <= X.trunc; ++k) out << " " << simp::nondegenerate(X, k).size();
        out << "\n";
    } else if (kind == "category") {
        auto C = category_from_json(j);
        out << "kind: category\nobjects: " << C.n_obj() << "\nmorphisms: " << C.n_mor() << "\n";
    } else if (kind == "monoid") {
        auto M = monoid_from_json(j);
        out << "kind: monoid\nelements: " << M.size() << " (unit " << M.names[M.unit] << ")\n";
    } else if (kind == "witt") {
        std::string tag = j.at("ring").get<std::string>();
        with_ring(tag, [&](auto ring) {
            auto x = witt_from_json(ring, j);
            out << "kind: witt vector\nring: " << ring.tag() << "\nS: " << x.S.str()
                << "\ncoords: " << witt::witt_str(ring, x) << "\nghost:";
            for (const auto& w : witt::ghost(ring, x)) out << " " << ring.str(w);
            out << "\n";
        });
    } else if (kind == "report") {
        out << "kind: report\nversion: " << j.value("version", "?") << "\nseed: "
            << j.value("seed", 0ULL) << "\nchecks:\n";
        for (const auto& c : j.at("checks"))
            out << "  " << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << " "
                << c.at("name").get<std::string>() << "\n";
    } else {
        throw SchemaError("unknown kind: " + kind);
    }
    return out.str();
}

}  // namespace cyctrace::io
