#pragma once

#include <map>
#include <string>
#include <vector>

#include "unicell/opetopic_set.hpp"

namespace unicell {

/// The hom-structure X(s, c): 0-cells are the k-cells of X with source s
/// and target c; j-cells are (k+j)-cells whose source nodes and target are
/// (j-1)-cells of the hom. A 1-cell of the hom has a single source node.
class HomStructure {
public:
    /// Throws DataError when no k-cell could have this source and target.
    HomStructure(const OpetopicSet& x, PastingDiagram source, CellId target);

    const OpetopicSet& base() const { return *x_; }
    int offset() const { return offset_; }
    const PastingDiagram& source() const { return source_; }
    const CellId& target() const { return target_; }

    const std::vector<const Cell*>& level0() const { return level0_; }
    bool contains(const Cell& c, int j) const;
    bool contains(const CellId& id, int j) const;

    /// j-cells of the hom with single source node `from` and target `to`.
    std::vector<const Cell*> frame_cells(const CellId& from, const CellId& to, int j) const;
    /// Level j, restricted to single-source-node cells for j >= 1.
    std::vector<const Cell*> level(int j) const;

private:
    const OpetopicSet* x_;
    int offset_;
    PastingDiagram source_;
    CellId target_;
    std::vector<const Cell*> level0_;
    mutable std::map<std::pair<CellId, int>, bool> member_memo_;
};

}  // namespace unicell
