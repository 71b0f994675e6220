#include "unicell/cell.hpp"

#include <sstream>

namespace unicell {

bool operator==(const PdNode& a, const PdNode& b) {
    return a.cell == b.cell && a.children == b.children;
}

bool operator==(const PdEdge& a, const PdEdge& b) {
    return a.slot == b.slot && a.node == b.node;
}

PastingDiagram PastingDiagram::single(int dim, CellId cell) {
    return PastingDiagram{dim, PdNode{std::move(cell), {}}};
}

PastingDiagram PastingDiagram::binary(int dim, CellId root, std::size_t slot, CellId child) {
    PastingDiagram pd{dim, PdNode{std::move(root), {}}};
    pd.root.children.push_back(PdEdge{slot, PdNode{std::move(child), {}}});
    return pd;
}

namespace {

std::size_t count_nodes(const PdNode& n) {
    std::size_t total = 1;
    for (const auto& e : n.children) total += count_nodes(e.node);
    return total;
}

void collect(const PdNode& n, std::vector<CellId>& out) {
    out.push_back(n.cell);
    for (const auto& e : n.children) collect(e.node, out);
}

void encode(const PdNode& n, std::string& out) {
    out += std::to_string(n.cell.size());
    out += '#';
    out += n.cell;
    if (n.children.empty()) return;
    out += '[';
    for (const auto& e : n.children) {
        out += std::to_string(e.slot);
        out += ':';
        encode(e.node, out);
        out += ';';
    }
    out += ']';
}

void render(const PdNode& n, std::ostringstream& os) {
    os << n.cell;
    if (n.children.empty()) return;
    os << '(';
    bool first = true;
    for (const auto& e : n.children) {
        if (!first) os << ", ";
        first = false;
        os << e.slot << ':';
        render(e.node, os);
    }
    os << ')';
}

}  // namespace

std::size_t PastingDiagram::size() const { return count_nodes(root); }

std::vector<CellId> PastingDiagram::preorder() const {
    std::vector<CellId> out;
    collect(root, out);
    return out;
}

std::string PastingDiagram::key() const {
    std::string out = std::to_string(dim);
    out += '|';
    encode(root, out);
    return out;
}

std::string to_string(const PastingDiagram& pd) {
    std::ostringstream os;
    render(pd.root, os);
    return os.str();
}

const CellId& s1(const Cell& c) {
    if (!c.is_two_ary()) throw DataError("s1 requested for non-2-ary cell " + c.id);
    return c.source->root.cell;
}

const CellId& s2(const Cell& c) {
    if (!c.is_two_ary()) throw DataError("s2 requested for non-2-ary cell " + c.id);
    return c.source->root.children.front().node.cell;
}

std::size_t paste_slot(const Cell& c) {
    if (!c.is_two_ary()) throw DataError("paste slot requested for non-2-ary cell " + c.id);
    return c.source->root.children.front().slot;
}

}  // namespace unicell
