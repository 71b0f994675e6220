#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unicell/io.hpp"
#include "unicell/opetopic_set.hpp"

namespace unicell {

struct FragmentBounds {
    int truncation = 0;
    int virtual_ceiling = 0;
    std::size_t enumeration_bound = 0;
};

FragmentBounds bounds_of(const OpetopicSet& x, std::size_t enumeration_bound = 0);

struct TraceEntry {
    int dimension = 0;
    std::string object;
    bool verdict = false;
    std::string detail;
};

struct UniversalityReport {
    std::string subject;
    int n = 0;
    bool verdict = false;
    std::vector<TraceEntry> trace;
    FragmentBounds bounds;
    int max_dimension_touched = -1;
};

struct UniversalityOptions {
    bool memoize = true;
    /// Quantify only over factorisations that are themselves universal
    /// cells. With false, every occupant of the factorisation frame counts.
    bool universal_factorisers = true;
    /// Levels of nested explanation kept in reports.
    int trace_depth = 2;
};

/// Recursive n-universality of cells and factorisations over a fixed set.
/// Holds a memo table; use one checker per thread.
class UniversalityChecker {
public:
    explicit UniversalityChecker(const OpetopicSet& x, UniversalityOptions opt = {});

    bool cell(const CellId& alpha, int n);
    bool factorisation(const CellId& u, int n);

    UniversalityReport is_universal_cell(const CellId& alpha, int n);
    UniversalityReport is_universal_factorisation(const CellId& u, int n);

    const OpetopicSet& set() const { return *x_; }
    const UniversalityOptions& options() const { return opt_; }
    std::size_t evaluations() const { return evaluations_; }

private:
    using Key = std::pair<std::string, int>;

    bool guarded(const Cell& c, int n, bool is_factorisation, std::vector<TraceEntry>* trace, int depth);
    bool cell_impl(const Cell& a, int n, std::vector<TraceEntry>* trace, int depth);
    bool factorisation_impl(const Cell& u, int n, std::vector<TraceEntry>* trace, int depth);
    std::vector<const Cell*> factorisers(const PastingDiagram& source, const CellId& target, int n);
    void require_depth(const Cell& c, int n, int extra) const;
    UniversalityReport report(const CellId& id, int n, bool is_factorisation);

    const OpetopicSet* x_;
    UniversalityOptions opt_;
    std::map<Key, bool> memo_;
    std::set<Key> active_;
    std::size_t evaluations_ = 0;
};

/// One-shot helpers with a fresh checker.
UniversalityReport is_universal_cell(const OpetopicSet& x, const CellId& alpha, int n, UniversalityOptions opt = {});
UniversalityReport is_universal_factorisation(const OpetopicSet& x, const CellId& u, int n,
                                              UniversalityOptions opt = {});

struct AxiomViolation {
    int axiom = 0;  // 1: niche without universal occupant, 2: composite of universals
    int dimension = 0;
    std::string object;
    std::string detail;
};

struct AxiomReport {
    int n = 0;
    bool axiom_i = true;
    bool axiom_ii = true;
    std::size_t niches_checked = 0;
    std::size_t composites_checked = 0;
    std::vector<AxiomViolation> violations;
    FragmentBounds bounds;
    bool ok() const { return axiom_i && axiom_ii; }
};

struct AxiomOptions {
    /// Node bound for niches at virtual dimensions. Materialized dimensions
    /// use the largest source diagram present there.
    std::size_t virtual_niche_bound = 2;
    UniversalityOptions universality{};
};

/// Both axioms of an n-category over niches of dimension 1..n+1.
AxiomReport check_n_category(const OpetopicSet& x, int n, const AxiomOptions& opt = {});

Json to_json(const FragmentBounds& b);
Json to_json(const UniversalityReport& r);
Json to_json(const AxiomReport& r);

}  // namespace unicell
