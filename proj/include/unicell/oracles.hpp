#pragma once

#include <set>
#include <string>
#include <vector>

#include "unicell/category.hpp"
#include "unicell/equivalence.hpp"
#include "unicell/universality.hpp"

namespace unicell {

/// Names accepted by fixture().
std::vector<std::string> fixture_names();
/// Built-in fixture; throws DataError for an unknown name.
OpetopicSet fixture(const std::string& name);
/// Categories behind the nerve fixtures and the comparison corpus.
FiniteCategory named_category(const std::string& name);
std::vector<std::string> corpus_names();
std::vector<FiniteCategory> category_corpus();
/// The locally preordered 2-categories behind the two-cat-* fixtures.
ThinTwoCategory named_thin_category(const std::string& fixture_name);

struct ComparisonRow {
    CellId cell;
    int dimension = 0;
    bool p1 = false;
    bool p2_equivalence = false;
    bool p2_on_the_nose = false;
    bool agree() const { return p1 == p2_equivalence && p1 == p2_on_the_nose; }
};

struct ComparisonReport {
    std::string instance;
    int n = 0;
    std::vector<ComparisonRow> rows;
    FragmentBounds bounds;

    std::size_t agreements() const;
    std::size_t universal_count() const;
    bool all_agree() const { return agreements() == rows.size(); }
};

/// Runs P1 and both P2 variants on every cell of the given dimensions.
ComparisonReport compare_p1_p2(const OpetopicSet& x, int n, const std::set<int>& dims,
                               const SpanOptions& opt = {});

Json to_json(const ComparisonReport& r);
std::string to_table(const ComparisonReport& r);

}  // namespace unicell
