#include "unicell/validate.hpp"

#include "unicell/boundary.hpp"

namespace unicell {

namespace {

// Empty string when compatible, otherwise the reason.
std::string frame_problem(const OpetopicSet& x, const PastingDiagram& source, const CellId& target) {
    const Cell* t = x.find(target);
    if (!t) return "target '" + target + "' does not resolve";
    const int k = source.dim + 1;
    if (t->dim != k - 1)
        return "target '" + target + "' has dimension " + std::to_string(t->dim) + ", expected " +
               std::to_string(k - 1);
    if (k == 1) {
        try {
            check_diagram(x, source);
        } catch (const DataError& e) {
            return e.what();
        }
        return {};
    }
    Boundary b;
    try {
        b = compute_boundary(x, source);
    } catch (const DataError& e) {
        return std::string("malformed source: ") + e.what();
    }
    if (!(*t->source == b.leaf))
        return "source of target '" + target + "' is " + to_string(*t->source) + " but the leaf string is " +
               to_string(b.leaf);
    if (*t->target != b.target)
        return "target of target '" + target + "' is '" + *t->target + "' but the root's target is '" + b.target +
               "'";
    return {};
}

}  // namespace

bool frame_compatible(const OpetopicSet& x, const PastingDiagram& source, const CellId& target) {
    return frame_problem(x, source, target).empty();
}

ValidationReport validate(const OpetopicSet& x) {
    ValidationReport report;
    const auto& cells = x.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        if (c.dim == 0) continue;
        std::string problem = frame_problem(x, *c.source, *c.target);
        if (!problem.empty())
            report.violations.push_back(
                Violation{c.id, "cells[" + std::to_string(i) + "] '" + c.id + "'", std::move(problem)});
    }
    return report;
}

}  // namespace unicell
