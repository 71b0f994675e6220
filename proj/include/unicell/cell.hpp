#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unicell {

using CellId = std::string;

/// Malformed input: unresolved ids, bad trees, schema violations.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query needed a dimension the fragment does not provide.
class FragmentTooShallow : public std::runtime_error {
public:
    FragmentTooShallow(int needed_dim, const std::string& what)
        : std::runtime_error(what + " (needs dimension " + std::to_string(needed_dim) + ")"),
          needed_dim_(needed_dim) {}
    int needed_dimension() const noexcept { return needed_dim_; }

private:
    int needed_dim_;
};

/// Internal inconsistency detected while constructing derived structure.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PdEdge;

/// Node of a planar pasting tree. Children are kept sorted by slot.
struct PdNode {
    CellId cell;
    std::vector<PdEdge> children;
};

/// Edge from a parent to the child whose target fills the parent's
/// source position `slot` (preorder index into the parent's source tree).
struct PdEdge {
    std::size_t slot;
    PdNode node;
};

bool operator==(const PdNode& a, const PdNode& b);
bool operator==(const PdEdge& a, const PdEdge& b);

/// Rooted planar tree of cells of a common dimension `dim`.
/// A dimension-0 diagram is a single 0-cell with no children.
struct PastingDiagram {
    int dim = 0;
    PdNode root;

    static PastingDiagram single(int dim, CellId cell);
    /// Two-node diagram: `root` with `child` pasted at source position `slot`.
    static PastingDiagram binary(int dim, CellId root, std::size_t slot, CellId child);

    std::size_t size() const;
    /// Node cells in preorder (root first, children in slot order).
    std::vector<CellId> preorder() const;
    /// Injective string encoding; equal keys iff equal diagrams.
    std::string key() const;

    friend bool operator==(const PastingDiagram& a, const PastingDiagram& b) {
        return a.dim == b.dim && a.root == b.root;
    }
};

std::string to_string(const PastingDiagram& pd);

struct Cell {
    CellId id;
    int dim = 0;
    std::optional<PastingDiagram> source;  // absent for dim 0
    std::optional<CellId> target;          // absent for dim 0
    bool is_virtual = false;

    std::size_t arity() const { return source ? source->size() : 0; }
    bool is_two_ary() const { return source && source->size() == 2; }
};

/// s1 of a 2-ary cell: the root of its source tree.
const CellId& s1(const Cell& c);
/// s2 of a 2-ary cell: the unique child of the root.
const CellId& s2(const Cell& c);
/// Source position at which s2 is pasted into s1.
std::size_t paste_slot(const Cell& c);

/// A source diagram awaiting a target.
struct Niche {
    PastingDiagram source;
};

struct Frame {
    PastingDiagram source;
    CellId target;
};

}  // namespace unicell
