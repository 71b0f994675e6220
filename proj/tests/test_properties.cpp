#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unicell/oracles.hpp"
#include "unicell/validate.hpp"

using namespace unicell;

namespace {

constexpr int kTrials = 24;

// Preorder on up to 4 objects, one arrow p_i_j whenever i <= j.
FiniteCategory random_preorder(std::mt19937& rng, int trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rng() % 3 == 0) le[i][j] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    auto arrow = [](int i, int j) { return "p_" + std::to_string(i) + "_" + std::to_string(j); };
    std::vector<std::string> objects;
    std::vector<Morphism> ms;
    std::map<std::string, std::string> ids;
    std::vector<std::array<std::string, 3>> table;
    for (int i = 0; i < n; ++i) {
        objects.push_back(std::to_string(i));
        ids[objects.back()] = arrow(i, i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le[i][j]) ms.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (le[i][j] && le[j][k]) table.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
    return FiniteCategory("preorder-" + std::to_string(trial), objects, ms, ids, table);
}

// Submonoid of the transformations of {0, 1, 2} generated by one or two
// random maps; redrawn until it has at most 8 elements.
FiniteCategory random_transformation_monoid(std::mt19937& rng, int trial) {
    using T = std::array<int, 3>;
    for (;;) {
        std::vector<T> elems{{0, 1, 2}};
        const int gens = 1 + static_cast<int>(rng() % 2);
        std::vector<T> gen;
        for (int g = 0; g < gens; ++g) gen.push_back({int(rng() % 3), int(rng() % 3), int(rng() % 3)});
        // a·b = a after b
        auto mul = [](const T& a, const T& b) { return T{a[b[0]], a[b[1]], a[b[2]]}; };
        for (std::size_t i = 0; i < elems.size() && elems.size() <= 8; ++i)
            for (const T& g : gen) {
                T t = mul(g, elems[i]);
                if (std::find(elems.begin(), elems.end(), t) == elems.end()) elems.push_back(t);
            }
        if (elems.size() > 8) continue;
        std::vector<std::string> names{"e"};
        for (std::size_t i = 1; i < elems.size(); ++i) names.push_back("m" + std::to_string(i));
        std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b)
                table[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), mul(elems[a], elems[b])) -
                                               elems.begin());
        return monoid_category("transformations-" + std::to_string(trial), names, table);
    }
}

std::vector<FiniteCategory> random_categories(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<FiniteCategory> out;
    for (int t = 0; t < kTrials; ++t)
        out.push_back(t % 2 ? random_transformation_monoid(rng, t) : random_preorder(rng, t));
    return out;
}

}  // namespace

TEST_CASE("random nerves are valid opetopic sets") {
    for (const auto& c : random_categories(11)) {
        CAPTURE(c.name());
        auto x = nerve_of_category(c);
        CHECK(validate(x).ok());
    }
}

TEST_CASE("universal 1-cells are exactly the isomorphisms") {
    for (const auto& c : random_categories(23)) {
        CAPTURE(c.name());
        auto x = nerve_of_category(c);
        UniversalityChecker chk(x);
        std::set<std::string> universal;
        for (const Cell* f : x.cells_of_dim(1))
            if (chk.cell(f->id, 1)) universal.insert(f->id);
        CHECK(universal == isomorphism_oracle(c));
    }
}

TEST_CASE("memoized and naive agree, touching at most n + 2") {
    UniversalityOptions naive;
    naive.memoize = false;
    for (const auto& c : random_categories(37)) {
        CAPTURE(c.name());
        auto x = nerve_of_category(c);
        UniversalityChecker memo(x);
        for (const Cell* f : x.cells_of_dim(1)) {
            UniversalityChecker fresh(x, naive);
            auto r = fresh.is_universal_cell(f->id, 1);
            CHECK(r.verdict == memo.cell(f->id, 1));
            CHECK(r.max_dimension_touched <= 3);
        }
    }
}

TEST_CASE("P1 and both P2 variants agree on 1-cells") {
    std::mt19937 rng(41);
    for (int t = 0; t < 8; ++t) {
        auto c = t % 2 ? random_transformation_monoid(rng, t) : random_preorder(rng, t);
        CAPTURE(c.name());
        auto r = compare_p1_p2(nerve_of_category(c), 1, {1});
        CHECK(r.all_agree());
    }
}

TEST_CASE("json round trip") {
    for (const auto& c : random_categories(53)) {
        auto x = nerve_of_category(c);
        const Json j = to_json(x);
        auto back = opetopic_set_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(back.cells().size() == x.cells().size());
        CHECK(category_from_json(to_json(c)).composition_table() == c.composition_table());
    }
}

TEST_CASE("niches split into frames and contain their cells") {
    for (const auto& c : random_categories(67)) {
        auto x = nerve_of_category(c);
        for (const Cell& cell : x.cells()) {
            if (cell.dim == 0) continue;
            auto all = x.niche_occupants(*cell.source);
            CHECK(std::any_of(all.begin(), all.end(), [&](const Cell* o) { return o->id == cell.id; }));
            std::set<CellId> targets;
            for (const Cell* o : all) targets.insert(*o->target);
            std::size_t total = 0;
            for (const auto& t : targets) total += x.frame_occupants(*cell.source, t).size();
            CHECK(total == all.size());
            if (cell.dim >= 2) CHECK(x.frame_occupants(*cell.source, *cell.target).size() == 1);
        }
    }
}
