#include "unicell/dot.hpp"

#include <functional>
#include <sstream>

namespace unicell {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const OpetopicSet& x, const CellId& cell) {
    const Cell& c = x.at(cell);
    std::ostringstream out;
    out << "digraph " << quote(cell) << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    if (!c.source) {
        out << "  n0 [label=" << quote(cell + " (dim 0)") << "];\n}\n";
        return out.str();
    }
    std::size_t next = 0;
    std::ostringstream edges;
    std::function<std::size_t(const PdNode&)> walk = [&](const PdNode& node) {
        const std::size_t id = next++;
        const Cell* nc = x.find(node.cell);
        const std::string dim = nc ? std::to_string(nc->dim) : "?";
        out << "  n" << id << " [label=" << quote(node.cell + " (dim " + dim + ")") << "];\n";
        for (const auto& e : node.children) {
            const std::size_t child = walk(e.node);
            edges << "  n" << child << " -> n" << id << " [label=\"" << e.slot << "\"];\n";
        }
        return id;
    };
    walk(c.source->root);
    out << edges.str() << "}\n";
    return out.str();
}

}  // namespace unicell
