#pragma once

#include "unicell/opetopic_set.hpp"

namespace unicell {

/// Leaf string (unfilled source positions of the tree, as a pasting
/// diagram one dimension down) and target (target of the root).
///
/// Computed by grafting: the root's source tree has each child subtree's
/// own leaf string substituted at the child's slot, with the grandchildren
/// re-attached at the matching unfilled positions. Throws DataError for
/// unknown cells, dimension mismatches, out-of-range or duplicate slots,
/// and edges whose child target differs from the slot's cell.
Boundary compute_boundary(const OpetopicSet& x, const PastingDiagram& pd);

/// Structural checks on a diagram without computing its boundary.
void check_diagram(const OpetopicSet& x, const PastingDiagram& pd);

}  // namespace unicell
