#include "unicell/boundary.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace unicell {

namespace {

// Mutable working tree used during grafting. `origin` points at the node of
// the tree whose boundary is being computed, together with the source
// position of that node the leaf entry stands for.
struct WNode {
    CellId cell;
    WNode* origin = nullptr;
    std::size_t origin_slot = 0;
    std::vector<std::pair<std::size_t, std::unique_ptr<WNode>>> children;
};

std::unique_ptr<WNode> from_pd(const PdNode& n) {
    auto w = std::make_unique<WNode>();
    w->cell = n.cell;
    for (const auto& e : n.children) w->children.emplace_back(e.slot, from_pd(e.node));
    return w;
}

PdNode to_pd(const WNode& w) {
    PdNode n{w.cell, {}};
    std::vector<const std::pair<std::size_t, std::unique_ptr<WNode>>*> kids;
    for (const auto& c : w.children) kids.push_back(&c);
    std::sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return a->first < b->first; });
    for (auto* c : kids) n.children.push_back(PdEdge{c->first, to_pd(*c->second)});
    return n;
}

void preorder(WNode* n, std::vector<WNode*>& out) {
    out.push_back(n);
    std::vector<std::pair<std::size_t, WNode*>> kids;
    for (auto& c : n->children) kids.emplace_back(c.first, c.second.get());
    std::sort(kids.begin(), kids.end());
    for (auto& [slot, k] : kids) preorder(k, out);
}

const Cell& lookup(const OpetopicSet& x, const CellId& id, int dim) {
    const Cell* c = x.find(id);
    if (!c) throw DataError("unknown cell '" + id + "' in pasting diagram");
    if (c->dim != dim)
        throw DataError("cell '" + id + "' has dimension " + std::to_string(c->dim) +
                        ", expected " + std::to_string(dim));
    return *c;
}

std::unique_ptr<WNode> leaf(const OpetopicSet& x, WNode& t, int d);

// Replace `target` inside the tree rooted at `root` by `repl`, moving
// target's children onto the unfilled positions of `repl`.
void substitute(const OpetopicSet& x, std::unique_ptr<WNode>& root, WNode* target,
                std::unique_ptr<WNode> repl, int d) {
    // Unfilled positions of repl, in the preorder of its own leaf string.
    auto repl_leaf = leaf(x, *repl, d);
    std::vector<WNode*> positions;
    preorder(repl_leaf.get(), positions);
    const Cell& tc = lookup(x, target->cell, d);
    if (positions.size() != tc.source->size())
        throw DataError("graft of '" + target->cell + "' has " + std::to_string(positions.size()) +
                        " open positions, expected " + std::to_string(tc.source->size()));
    for (auto& [slot, child] : target->children) {
        if (slot >= positions.size()) throw DataError("slot out of range under '" + target->cell + "'");
        WNode* host = positions[slot]->origin;
        host->children.emplace_back(positions[slot]->origin_slot, std::move(child));
    }
    target->children.clear();

    if (root.get() == target) {
        root = std::move(repl);
        return;
    }
    std::function<bool(WNode*)> swap_in = [&](WNode* n) {
        for (auto& c : n->children) {
            if (c.second.get() == target) {
                c.second = std::move(repl);
                return true;
            }
            if (swap_in(c.second.get())) return true;
        }
        return false;
    };
    if (!swap_in(root.get())) throw ConstructionError("graft target vanished");
}

std::unique_ptr<WNode> leaf(const OpetopicSet& x, WNode& t, int d) {
    const Cell& rc = lookup(x, t.cell, d);
    if (d == 1) {
        WNode* n = &t;
        for (;;) {
            const Cell& c = lookup(x, n->cell, 1);
            if (n->children.empty()) {
                auto out = std::make_unique<WNode>();
                out->cell = c.source->root.cell;
                out->origin = n;
                out->origin_slot = 0;
                return out;
            }
            if (n->children.size() != 1 || n->children.front().first != 0)
                throw DataError("1-cell '" + n->cell + "' has a single source slot");
            WNode* child = n->children.front().second.get();
            const Cell& cc = lookup(x, child->cell, 1);
            if (*cc.target != c.source->root.cell)
                throw DataError("target of '" + child->cell + "' does not fill the source of '" +
                                n->cell + "'");
            n = child;
        }
    }

    auto s = from_pd(rc.source->root);
    std::vector<WNode*> slots;
    preorder(s.get(), slots);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        slots[i]->origin = &t;
        slots[i]->origin_slot = i;
    }

    std::vector<std::size_t> seen;
    for (auto& [slot, child] : t.children) {
        if (slot >= slots.size())
            throw DataError("slot " + std::to_string(slot) + " out of range for '" + t.cell + "'");
        if (std::find(seen.begin(), seen.end(), slot) != seen.end())
            throw DataError("slot " + std::to_string(slot) + " of '" + t.cell + "' filled twice");
        seen.push_back(slot);
        const Cell& cc = lookup(x, child->cell, d);
        if (*cc.target != slots[slot]->cell)
            throw DataError("target of '" + child->cell + "' is '" + *cc.target + "', but slot " +
                            std::to_string(slot) + " of '" + t.cell + "' holds '" + slots[slot]->cell + "'");
    }
    for (auto& [slot, child] : t.children) {
        auto sub = leaf(x, *child, d);
        substitute(x, s, slots[slot], std::move(sub), d - 1);
    }
    return s;
}

void check_node(const OpetopicSet& x, const PdNode& n, int dim) {
    lookup(x, n.cell, dim);
    for (const auto& e : n.children) check_node(x, e.node, dim);
}

}  // namespace

void check_diagram(const OpetopicSet& x, const PastingDiagram& pd) {
    if (pd.dim < 0) throw DataError("negative diagram dimension");
    if (pd.dim == 0 && !pd.root.children.empty())
        throw DataError("a 0-dimensional diagram is a single 0-cell");
    check_node(x, pd.root, pd.dim);
}

Boundary compute_boundary(const OpetopicSet& x, const PastingDiagram& pd) {
    if (pd.dim < 1) throw DataError("boundary needs a diagram of dimension >= 1");
    check_diagram(x, pd);
    auto w = from_pd(pd.root);
    auto l = leaf(x, *w, pd.dim);
    Boundary b{PastingDiagram{pd.dim - 1, to_pd(*l)}, *x.at(pd.root.cell).target};
    return b;
}

}  // namespace unicell
