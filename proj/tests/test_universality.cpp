#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "unicell/oracles.hpp"
#include "unicell/universality.hpp"

using namespace unicell;

namespace {

// Removes `drop` and everything that refers to it.
OpetopicSet cascade_delete(const OpetopicSet& x, std::set<CellId> drop) {
    std::vector<Cell> kept;
    for (bool changed = true; changed;) {
        changed = false;
        kept.clear();
        for (const Cell& c : x.cells()) {
            bool gone = drop.count(c.id) > 0;
            if (!gone && c.dim > 0) {
                if (drop.count(*c.target)) gone = true;
                for (const auto& node : c.source->preorder())
                    if (drop.count(node)) gone = true;
            }
            if (gone) {
                changed |= drop.insert(c.id).second;
            } else {
                kept.push_back(c);
            }
        }
    }
    return OpetopicSet(x.name() + "-mutant", x.truncation(), x.virtual_ceiling(), kept);
}

const Cell* cell_with_source(const OpetopicSet& x, int dim, const PastingDiagram& pd) {
    for (const Cell* c : x.cells_of_dim(dim))
        if (*c->source == pd) return c;
    return nullptr;
}

}  // namespace

TEST_CASE("cells of a nerve at n = 1") {
    SUBCASE("the generator of Z/2 is universal") {
        auto r = is_universal_cell(fixture("nerve-z2"), "s", 1);
        CHECK(r.verdict);
        CHECK(r.trace.size() == 2);
    }
    SUBCASE("the arrow of the two-object poset is not universal") {
        auto r = is_universal_cell(fixture("nerve-poset-2"), "f", 1);
        CHECK_FALSE(r.verdict);
        REQUIRE_FALSE(r.trace.empty());
        CHECK(r.trace.back().object == "id_0");
        CHECK_FALSE(r.trace.back().verdict);
    }
    SUBCASE("every 2-cell is unique in its niche") {
        auto x = fixture("nerve-poset-3chain");
        UniversalityChecker chk(x);
        for (const Cell* c : x.cells_of_dim(2)) CHECK(chk.cell(c->id, 1));
    }
    SUBCASE("identities are universal") {
        auto x = fixture("nerve-poset-3chain");
        for (const auto& id : {"id_0", "id_1", "id_2"}) CHECK(is_universal_cell(x, id, 1).verdict);
    }
}

TEST_CASE("factorisations") {
    SUBCASE("k > n is the base case") {
        auto x = fixture("nerve-z2");
        for (const Cell* u : two_ary_cells(x, 2)) CHECK(is_universal_factorisation(x, u->id, 0).verdict);
    }
    SUBCASE("every binary compositor of a nerve at n = 1") {
        for (const auto& name : {"nerve-z2", "nerve-poset-3chain"}) {
            auto x = fixture(name);
            UniversalityChecker chk(x);
            for (const Cell* u : two_ary_cells(x, 2)) CHECK(chk.factorisation(u->id, 1));
        }
    }
    SUBCASE("a missing 3-cell filler makes the factorisation fail at the named pair") {
        auto x = fixture("nerve-z2");
        const Cell* w = cell_with_source(x, 3, PastingDiagram::binary(2, "[s,s]", 0, "[s]"));
        REQUIRE(w != nullptr);
        CHECK(*w->target == "[s,s]");
        auto broken = cascade_delete(x, {w->id});
        CHECK(is_universal_factorisation(x, "[s,s]", 1).verdict);
        auto r = is_universal_factorisation(broken, "[s,s]", 1);
        CHECK_FALSE(r.verdict);
        REQUIRE_FALSE(r.trace.empty());
        CHECK(r.trace.back().object == "(b' = s, v = [s,s])");
        // and the cell it factorised through is no longer universal
        CHECK_FALSE(is_universal_cell(broken, "s", 1).verdict);
    }
    SUBCASE("non-2-ary input") {
        CHECK_THROWS_AS(is_universal_factorisation(fixture("nerve-z2"), "[s]", 1), DataError);
    }
}

TEST_CASE("domain and fragment errors") {
    CHECK_THROWS_AS(is_universal_cell(fixture("nerve-z2"), "*", 1), DataError);
    CHECK_THROWS_AS(is_universal_cell(fixture("nerve-z2"), "nope", 1), DataError);
    NerveOptions shallow;
    shallow.truncation = 3;
    shallow.virtual_ceiling = 3;
    auto x = nerve_of_category(named_category("z2"), shallow);
    CHECK(is_universal_cell(x, "s", 1).verdict);
    try {
        is_universal_cell(x, "[s,s]", 2);
        FAIL("expected FragmentTooShallow");
    } catch (const FragmentTooShallow& e) {
        CHECK(e.needed_dimension() == 4);
    }
    // virtual levels must sit above n
    CHECK_THROWS_AS(is_universal_cell(fixture("two-cat-mixed"), "s", 3), DataError);
}

TEST_CASE("base case agrees with the unique-in-niche predicate") {
    for (const auto& name : fixture_names()) {
        if (std::string(name) == "corrupt-span") continue;
        auto x = fixture(name);
        for (int n = 0; n <= std::min(2, x.truncation()); ++n) {
            UniversalityChecker chk(x);
            for (const Cell& c : x.cells()) {
                if (c.dim <= n) continue;
                auto occ = x.niche_occupants(*c.source);
                CHECK(chk.cell(c.id, n) == (occ.size() == 1));
            }
        }
    }
}

TEST_CASE("memoized and naive evaluation agree and stay below n + 2") {
    UniversalityOptions naive;
    naive.memoize = false;
    for (const auto& name : fixture_names()) {
        auto x = fixture(name);
        if (x.cells().size() > 200) continue;
        const int top = x.truncation() >= 3 ? 1 : std::min(2, x.truncation());
        for (int n = 0; n <= top; ++n) {
            UniversalityChecker memo(x);
            for (const Cell& c : x.cells()) {
                if (c.dim == 0 || c.dim > n + 1) continue;
                UniversalityChecker fresh(x, naive);
                auto r = fresh.is_universal_cell(c.id, n);
                CHECK(r.verdict == memo.cell(c.id, n));
                CHECK(r.max_dimension_touched <= n + 2);
            }
        }
    }
}

TEST_CASE("memoization saves work") {
    auto x = fixture("two-cat-mixed");
    UniversalityOptions naive;
    naive.memoize = false;
    UniversalityChecker a(x), b(x, naive);
    for (int round = 0; round < 2; ++round)
        for (const Cell* c : x.cells_of_dim(1)) {
            a.cell(c->id, 2);
            b.cell(c->id, 2);
        }
    CHECK(2 * a.evaluations() == b.evaluations());
}

TEST_CASE("the literal reading of factorisations is stricter") {
    UniversalityOptions literal;
    literal.universal_factorisers = false;
    auto x = fixture("two-cat-nonuniv");
    CHECK(is_universal_cell(x, "1", 2).verdict);
    CHECK_FALSE(is_universal_cell(x, "1", 2, literal).verdict);
}

TEST_CASE("deleting cells away from the witness keeps a false verdict false") {
    for (const auto& name : {"nerve-poset-2", "nerve-poset-3chain"}) {
        auto x = fixture(name);
        for (const Cell* a : x.cells_of_dim(1)) {
            auto r = is_universal_cell(x, a->id, 1);
            if (r.verdict) continue;
            std::set<CellId> keep{a->id};
            for (const auto& t : r.trace)
                if (!t.verdict) keep.insert(t.object);
            int mutants = 0;
            for (const Cell& z : x.cells()) {
                if (z.dim != 2 || keep.count(z.id)) continue;
                auto m = cascade_delete(x, {z.id});
                bool survived = true;
                for (const auto& k : keep) survived &= m.find(k) != nullptr;
                if (!survived) continue;
                ++mutants;
                CHECK_FALSE(is_universal_cell(m, a->id, 1).verdict);
            }
            CHECK(mutants > 0);
        }
    }
}

TEST_CASE("n-category axioms") {
    SUBCASE("nerves at n = 1") {
        for (const auto& name : {"nerve-poset-2", "nerve-z2", "nerve-poset-3chain"}) {
            auto r = check_n_category(fixture(name), 1);
            CHECK(r.ok());
            CHECK(r.niches_checked > 0);
            CHECK(r.composites_checked > 0);
        }
    }
    SUBCASE("locally preordered 2-categories at n = 2") {
        for (const auto& name : {"two-cat-equivalence", "two-cat-nonuniv", "two-cat-mixed"})
            CHECK(check_n_category(fixture(name), 2).ok());
    }
    SUBCASE("a missing binary filler fails axiom (i) and names the niche") {
        auto r = check_n_category(fixture("broken-no-filler"), 1);
        CHECK_FALSE(r.axiom_i);
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].axiom == 1);
        CHECK(r.violations[0].dimension == 2);
        CHECK(r.violations[0].object == to_string(PastingDiagram::binary(1, "id_1", 0, "f")));
    }
    SUBCASE("a removed factoriser fails axiom (ii)") {
        auto r = check_n_category(fixture("mutation-composite"), 1);
        CHECK_FALSE(r.axiom_ii);
        bool named = false;
        for (const auto& v : r.violations)
            if (v.axiom == 2 && v.object == "e") named = true;
        CHECK(named);
    }
    SUBCASE("fragment too shallow") {
        CHECK_THROWS_AS(check_n_category(fixture("nerve-z2"), 5), FragmentTooShallow);
    }
    SUBCASE("json") {
        Json j = to_json(check_n_category(fixture("broken-no-filler"), 1));
        CHECK(j["ok"] == false);
        CHECK(j["violations"].size() == 1);
    }
}
