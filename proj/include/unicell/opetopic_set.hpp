#pragma once

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unicell/cell.hpp"

namespace unicell {

/// Leaf string and target of a pasting diagram of dimension >= 1.
struct Boundary {
    PastingDiagram leaf;
    CellId target;
};

/// Finite, truncated opetopic set.
///
/// Cells of dimension <= truncation() are materialized. Dimensions in
/// (truncation(), virtual_ceiling()] are virtual: each niche whose leaf frame
/// has exactly one occupant one level down carries exactly one canonical
/// filler, interned on first use. The set is logically immutable; the
/// filler table and boundary cache are internal and guarded by a mutex.
class OpetopicSet {
public:
    OpetopicSet();
    OpetopicSet(std::string name, int truncation, int virtual_ceiling, std::vector<Cell> cells);
    OpetopicSet(const OpetopicSet& other);
    OpetopicSet& operator=(const OpetopicSet& other);
    OpetopicSet(OpetopicSet&&) noexcept;
    OpetopicSet& operator=(OpetopicSet&&) noexcept;
    ~OpetopicSet();

    const std::string& name() const { return name_; }
    int truncation() const { return truncation_; }
    int virtual_ceiling() const { return virtual_ceiling_; }
    bool is_virtual_dim(int d) const { return d > truncation_; }

    /// Materialized cells in document order.
    const std::vector<Cell>& cells() const { return cells_; }
    std::vector<const Cell*> cells_of_dim(int d) const;

    /// Materialized or already-interned virtual cell, or nullptr.
    const Cell* find(const CellId& id) const;
    const Cell& at(const CellId& id) const;

    /// Cells (including a virtual filler) whose source equals `source`.
    std::vector<const Cell*> niche_occupants(const PastingDiagram& source) const;
    /// niche_occupants filtered on target.
    std::vector<const Cell*> frame_occupants(const PastingDiagram& source, const CellId& target) const;
    /// Cells of dimension dim(target)+1 with the given target. Virtual
    /// levels are searched over diagrams of at most `max_nodes` nodes.
    std::vector<const Cell*> cells_with_target(const CellId& target, std::size_t max_nodes = 2) const;

    /// All pasting diagrams of `node_dim`-cells with at most `max_nodes`
    /// nodes. When `root_target` is given, only roots with that target.
    std::vector<PastingDiagram> enumerate_diagrams(int node_dim, std::size_t max_nodes,
                                                   const CellId* root_target = nullptr) const;
    /// Cells of dimension d: the materialized ones, or for d = truncation()+1
    /// the fillers of all diagrams with at most `max_nodes` nodes.
    std::vector<const Cell*> enumerate_cells(int d, std::size_t max_nodes = 2) const;

    /// Cached boundary; throws DataError on malformed diagrams.
    const Boundary& boundary(const PastingDiagram& pd) const;

    /// Canonical occupant of a niche at a virtual level, or nullptr when the
    /// leaf frame has no occupant.
    const Cell* virtual_filler(const PastingDiagram& source) const;

    /// Largest dimension of any cell handed out by an occupant query since
    /// the last reset.
    int max_dimension_touched() const { return max_touched_.load(); }
    void reset_touch_tracking() const { max_touched_.store(-1); }

    std::size_t virtual_cell_count() const;

private:
    void build_indices();
    void touch(int d) const;
    void check_ceiling(int d, const char* what) const;

    std::string name_;
    int truncation_ = 0;
    int virtual_ceiling_ = 0;
    std::vector<Cell> cells_;
    std::unordered_map<CellId, std::size_t> by_id_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_source_;
    std::unordered_map<CellId, std::vector<std::size_t>> by_target_;
    std::map<int, std::vector<std::size_t>> by_dim_;

    struct Cache;
    std::unique_ptr<Cache> cache_;
    mutable std::atomic<int> max_touched_{-1};
};

/// All m-cells whose source diagram has exactly two nodes. A virtual level
/// is enumerated over two-node diagrams of materialized cells.
std::vector<const Cell*> two_ary_cells(const OpetopicSet& x, int m);

}  // namespace unicell
