#include "unicell/io.hpp"

#include <fstream>
#include <set>

namespace unicell {

namespace {

void require_keys(const Json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& where) {
    if (!j.is_object()) throw DataError(where + ": expected an object");
    for (const auto& k : required)
        if (!j.contains(k)) throw DataError(where + ": missing key '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw DataError(where + ": unknown key '" + it.key() + "'");
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw DataError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

long long get_int(const Json& j, const char* key, const std::string& where) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw DataError(where + ": '" + key + "' must be an integer");
    return v.get<long long>();
}

Json node_to_json(const PdNode& n) {
    Json children = Json::array();
    for (const auto& e : n.children) children.push_back({{"slot", e.slot}, {"node", node_to_json(e.node)}});
    return {{"cell", n.cell}, {"children", children}};
}

PdNode node_from_json(const Json& j, const std::string& where) {
    require_keys(j, {"cell", "children"}, {}, where);
    PdNode n{get_string(j, "cell", where), {}};
    if (!j.at("children").is_array()) throw DataError(where + ": 'children' must be an array");
    std::size_t i = 0;
    for (const auto& e : j.at("children")) {
        const std::string w = where + ".children[" + std::to_string(i++) + "]";
        require_keys(e, {"slot", "node"}, {}, w);
        long long slot = get_int(e, "slot", w);
        if (slot < 0) throw DataError(w + ": negative slot");
        n.children.push_back(PdEdge{static_cast<std::size_t>(slot), node_from_json(e.at("node"), w + ".node")});
    }
    for (std::size_t k = 1; k < n.children.size(); ++k)
        if (n.children[k - 1].slot >= n.children[k].slot)
            throw DataError(where + ": children must be listed in strictly increasing slot order");
    return n;
}

}  // namespace

Json diagram_to_json(const PastingDiagram& pd) { return node_to_json(pd.root); }

PastingDiagram diagram_from_json(const Json& j, int dim) {
    return PastingDiagram{dim, node_from_json(j, "source")};
}

Json to_json(const OpetopicSet& x) {
    Json cells = Json::array();
    for (const Cell& c : x.cells()) {
        Json jc = {{"id", c.id}, {"dim", c.dim}};
        if (c.target) jc["target"] = *c.target;
        if (c.source) jc["source"] = diagram_to_json(*c.source);
        cells.push_back(std::move(jc));
    }
    return {{"name", x.name()},
            {"truncation", x.truncation()},
            {"virtual_ceiling", x.virtual_ceiling()},
            {"cells", cells}};
}

OpetopicSet opetopic_set_from_json(const Json& j) {
    require_keys(j, {"name", "truncation", "virtual_ceiling", "cells"}, {}, "document");
    if (!j.at("cells").is_array()) throw DataError("document: 'cells' must be an array");
    std::vector<Cell> cells;
    std::size_t i = 0;
    for (const auto& jc : j.at("cells")) {
        const std::string where = "cells[" + std::to_string(i++) + "]";
        require_keys(jc, {"id", "dim"}, {"target", "source"}, where);
        Cell c;
        c.id = get_string(jc, "id", where);
        c.dim = static_cast<int>(get_int(jc, "dim", where));
        if (c.dim == 0) {
            if (jc.contains("target") || jc.contains("source"))
                throw DataError(where + ": a 0-cell has no source or target");
        } else {
            if (!jc.contains("target") || !jc.contains("source"))
                throw DataError(where + ": cells of dimension >= 1 need 'source' and 'target'");
            c.target = get_string(jc, "target", where);
            c.source = PastingDiagram{c.dim - 1, node_from_json(jc.at("source"), where + ".source")};
            if (c.dim == 1 && !c.source->root.children.empty())
                throw DataError(where + ": a 1-cell's source is a single 0-cell");
        }
        cells.push_back(std::move(c));
    }
    return OpetopicSet(get_string(j, "name", "document"), static_cast<int>(get_int(j, "truncation", "document")),
                       static_cast<int>(get_int(j, "virtual_ceiling", "document")), std::move(cells));
}

Json to_json(const ValidationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"cell", x.cell}, {"path", x.path}, {"message", x.message}});
    return {{"ok", r.ok()}, {"violations", v}};
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DataError("'" + path.string() + "': " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

}  // namespace unicell
