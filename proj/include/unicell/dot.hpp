#pragma once

#include <string>

#include "unicell/opetopic_set.hpp"

namespace unicell {

/// DOT digraph of a cell's source tree. Nodes are numbered in preorder and
/// labelled with cell id and dimension; edges carry the paste slot.
std::string export_dot(const OpetopicSet& x, const CellId& cell);

}  // namespace unicell
