#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unicell/hom.hpp"
#include "unicell/span.hpp"
#include "unicell/universality.hpp"

namespace unicell {

/// A graded family of cells in which every cell above level 0 has a single
/// source cell and a target cell one level down.
struct GradedCell {
    std::string id;
    std::optional<std::size_t> source;
    std::optional<std::size_t> target;
};

struct GradedStructure {
    std::vector<std::vector<GradedCell>> levels;

    std::size_t depth() const { return levels.size(); }
};

/// Levels 0..m of a hom-structure; ids are cell ids of the ambient set.
GradedStructure graded_hom(const HomStructure& h, int m);
/// Levels of a composition span; ids join the tuple components with '|'.
GradedStructure graded_span(const CompositionSpan& s);

/// Per-level functions between graded structures, as indices.
struct GradedMap {
    const GradedStructure* domain = nullptr;
    const GradedStructure* codomain = nullptr;
    std::vector<std::vector<std::size_t>> maps;
};

/// tau: span levels to X(a, c) levels by tau image.
GradedMap tau_map(const CompositionSpan& s, const GradedStructure& dom, const GradedStructure& cod);
GradedMap identity_map(const GradedStructure& g);
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// Empty when every level function commutes with source and target.
std::string shape_problem(const GradedMap& f);

struct EquivalenceResult {
    bool verdict = false;
    std::vector<std::string> trace;
};

/// Decides whether F is an m-equivalence. Essential surjectivity uses
/// 1-cells of the codomain that pass `universal`; when `universal` is null
/// every such 1-cell counts.
EquivalenceResult is_m_equivalence(const GradedMap& f, int m,
                                   const std::function<bool(const std::string&)>& universal = nullptr);

/// Level-wise surjectivity per frame, with injectivity at level m.
EquivalenceResult is_on_the_nose(const GradedMap& f, int m);

enum class P2Variant { OnTheNose, Equivalence };

const char* to_string(P2Variant v);
P2Variant parse_variant(const std::string& s);

/// (k-1)-cells c sharing the frame of t(f).
std::vector<const Cell*> span_targets(const OpetopicSet& x, const CellId& f);

UniversalityReport is_p2_universal(const OpetopicSet& x, const CellId& f, int n, P2Variant variant,
                                   UniversalityChecker& chk, const SpanOptions& opt = {});
UniversalityReport is_p2_universal(const OpetopicSet& x, const CellId& f, int n,
                                   P2Variant variant = P2Variant::OnTheNose, const SpanOptions& opt = {});

}  // namespace unicell
