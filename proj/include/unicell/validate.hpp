#pragma once

#include <string>
#include <vector>

#include "unicell/opetopic_set.hpp"

namespace unicell {

struct Violation {
    CellId cell;
    std::string path;     // e.g. "cells[4] 'alpha'"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Referential integrity, tree well-formedness and the frame condition for
/// every materialized cell. Violations are reported, never thrown.
ValidationReport validate(const OpetopicSet& x);

/// True when a k-cell with this source and target would satisfy the frame
/// condition (k = source.dim + 1).
bool frame_compatible(const OpetopicSet& x, const PastingDiagram& source, const CellId& target);

}  // namespace unicell
