// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "unicell/oracles.hpp"

using namespace unicell;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << std::endl;
    if (!ok) ++failures;
}

void criterion(int id, const std::string& title, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    report(id, title, ok, detail.str());
}

struct Instance {
    std::string name;
    OpetopicSet x;
    int n;
};

std::vector<Instance> corpus_nerves() {
    std::vector<Instance> out;
    for (const auto& c : category_corpus()) out.push_back({c.name(), nerve_of_category(c), 1});
    return out;
}

const std::vector<std::string> kTwoCats{"two-cat-equivalence", "two-cat-nonuniv", "two-cat-mixed"};

// (fixture, n) pairs whose 1-cells get spans.
std::vector<Instance> span_instances() {
    std::vector<Instance> out;
    for (const auto& name : fixture_names()) {
        if (name == "empty") continue;
        const bool two = std::find(kTwoCats.begin(), kTwoCats.end(), name) != kTwoCats.end();
        out.push_back({name, fixture(name), two ? 2 : 1});
    }
    return out;
}

// Spans of every 1- and (at n = 2) 2-cell. Each goes to the level P2 needs
// (n - k), or further up to `J` while the chain nodes are materialized.
template <class F>
void for_each_span(int J, F&& visit) {
    for (const auto& inst : span_instances()) {
        UniversalityChecker chk(inst.x);
        for (int d = 1; d <= inst.n; ++d) {
            const auto cells = d == 1 ? inst.x.cells_of_dim(1) : two_ary_cells(inst.x, d);
            for (const Cell* f : cells) {
                for (const Cell* c : span_targets(inst.x, f->id)) {
                    int top = std::max(inst.n - d, std::min(J, inst.x.truncation() - d));
                    // the bogus cell has no boundary above level 1
                    if (inst.name == "corrupt-span") top = std::min(top, 1);
                    visit(inst, build_span(inst.x, f->id, c->id, inst.n, top, chk));
                }
            }
        }
    }
}

}  // namespace

int main() {
    const auto t_all = Clock::now();

    criterion(1, "universal 1-cells of nerves equal isomorphisms", [](std::ostringstream& d) {
        std::size_t discrepancies = 0, instances = 0;
        double worst = 0;
        bool non_thin = false;
        for (const auto& c : category_corpus()) {
            const auto t0 = Clock::now();
            auto x = nerve_of_category(c);
            UniversalityChecker chk(x);
            std::set<std::string> p1;
            for (const Cell* f : x.cells_of_dim(1))
                if (chk.cell(f->id, 1)) p1.insert(f->id);
            const auto iso = isomorphism_oracle(c);
            for (const auto& m : c.morphisms())
                if (p1.count(m.id) != iso.count(m.id)) ++discrepancies;
            for (const auto& a : c.objects())
                for (const auto& b : c.objects())
                    if (c.hom(a, b).size() > 1) non_thin = true;
            worst = std::max(worst, seconds_since(t0));
            ++instances;
        }
        d << instances << " categories, " << discrepancies << " discrepancies, slowest " << worst << " s"
          << (non_thin ? ", includes non-thin" : "");
        return instances >= 10 && discrepancies == 0 && worst < 10 && non_thin;
    });

    criterion(2, "P1, P2(equivalence), P2(on_the_nose) agree at n = 1", [](std::ostringstream& d) {
        std::size_t cells = 0, disagree = 0, tau0_mismatch = 0;
        for (const auto& inst : corpus_nerves()) {
            auto r = compare_p1_p2(inst.x, 1, {1});
            cells += r.rows.size();
            disagree += r.rows.size() - r.agreements();
            UniversalityChecker chk(inst.x);
            for (const auto& row : r.rows) {
                // tau_0 a bijection onto X(a, c) level 0 for every c
                bool bijective = true;
                for (const Cell* c : span_targets(inst.x, row.cell)) {
                    auto s = build_span(inst.x, row.cell, c->id, 1, 0, chk);
                    std::set<CellId> image;
                    for (const auto& t : s.levels[0])
                        if (!image.insert(t.tau_image).second) bijective = false;
                    std::set<CellId> level0;
                    for (const Cell* g : s.x2.level0()) level0.insert(g->id);
                    if (image != level0) bijective = false;
                }
                if (bijective != row.p2_on_the_nose) ++tau0_mismatch;
            }
        }
        d << cells << " 1-cells, " << disagree << " disagreements, " << tau0_mismatch << " tau_0 mismatches";
        return cells > 0 && disagree == 0 && tau0_mismatch == 0;
    });

    criterion(3, "P1 = P2 on 1- and 2-cells at n = 2", [](std::ostringstream& d) {
        std::size_t cells = 0, disagree = 0;
        std::set<bool> one, two;
        for (const auto& name : kTwoCats) {
            auto r = compare_p1_p2(fixture(name), 2, {1, 2});
            cells += r.rows.size();
            disagree += r.rows.size() - r.agreements();
            for (const auto& row : r.rows) (row.dimension == 1 ? one : two).insert(row.p1);
        }
        d << kTwoCats.size() << " fixtures, " << cells << " cells, " << disagree << " disagreements; "
          << "1-cell verdicts seen " << one.size() << ", 2-cell verdicts seen " << two.size();
        return disagree == 0 && one.size() == 2 && two.size() == 2;
    });

    criterion(4, "k > n base case equals unique-in-niche", [](std::ostringstream& d) {
        std::vector<Instance> all = corpus_nerves();
        for (const auto& name : fixture_names())
            if (name != "corrupt-span") all.push_back({name, fixture(name), 0});
        std::size_t checked = 0, bad = 0;
        for (const auto& inst : all) {
            for (int n = 0; n <= std::min(2, inst.x.truncation() - 1); ++n) {
                UniversalityChecker chk(inst.x);
                for (const Cell& c : inst.x.cells()) {
                    if (c.dim <= n) continue;
                    auto occ = inst.x.niche_occupants(*c.source);
                    const bool unique = occ.size() == 1;
                    const bool p1 = chk.cell(c.id, n);
                    const bool eq = is_p2_universal(inst.x, c.id, n, P2Variant::Equivalence, chk).verdict;
                    const bool otn = is_p2_universal(inst.x, c.id, n, P2Variant::OnTheNose, chk).verdict;
                    ++checked;
                    if (p1 != unique || eq != unique || otn != unique) ++bad;
                }
            }
        }
        d << all.size() << " instances, " << checked << " (cell, n) pairs, " << bad << " mismatches";
        return checked > 0 && bad == 0;
    });

    criterion(5, "span shape invariants", [](std::ostringstream& d) {
        std::size_t tuples = 0, bad_count = 0, bad_shape = 0, c1_mismatch = 0, spans = 0, l1 = 0, l2 = 0, compared = 0;
        for_each_span(2, [&](const Instance& inst, const CompositionSpan& s) {
            ++spans;
            for (std::size_t j = 0; j < s.levels.size(); ++j)
                for (const auto& t : s.levels[j]) {
                    ++tuples;
                    if (t.components.size() != (std::size_t{1} << j)) ++bad_count;
                    auto at = [&](std::size_t i) -> const Cell& { return inst.x.at(t.components[i]); };
                    if (j == 1) {
                        ++l1;
                        if (!(*at(0).target == *at(1).target && t.middles == std::vector<CellId>{*at(0).target}))
                            ++bad_shape;
                    }
                    if (j == 2) {
                        ++l2;
                        const std::vector<CellId> mids{*at(0).target, s1(at(1)), *at(2).target};
                        if (!(*at(1).target == mids[0] && s1(at(2)) == mids[1] && *at(3).target == mids[2] &&
                              t.middles == mids))
                            ++bad_shape;
                    }
                }
            if (s.levels.size() < 2) return;
            ++compared;
            UniversalityChecker chk(inst.x);
            CompositionSpan base = s;
            base.levels.resize(1);
            base.rejections.clear();
            std::vector<SpanRejection> r1, r2;
            if (!(build_c1(base, chk, &r1) == build_cj(base, 1, chk, &r2)) || r1.size() != r2.size()) ++c1_mismatch;
        });
        d << spans << " spans, " << tuples << " tuples (" << l1 << " at level 1, " << l2 << " at level 2); "
          << bad_count << " wrong sizes, " << bad_shape << " shape mismatches; level-1 rule vs pullback on "
          << compared << " spans, " << c1_mismatch << " mismatches";
        return l1 > 0 && l2 > 0 && compared > 0 && bad_count == 0 && bad_shape == 0 && c1_mismatch == 0;
    });

    criterion(6, "boundary commutativity of span tuples", [](std::ostringstream& d) {
        std::size_t tuples = 0, failing = 0, rejections = 0, bogus = 0;
        for_each_span(2, [&](const Instance& inst, const CompositionSpan& s) {
            for (const auto& level : s.levels)
                for (const auto& t : level) {
                    ++tuples;
                    if (!commutativity_problem(s, t).empty()) ++failing;
                }
            rejections += s.rejections.size();
            if (inst.name == "corrupt-span")
                for (const auto& r : s.rejections)
                    if (std::find(r.components.begin(), r.components.end(), "bogus") != r.components.end() &&
                        !r.reason.empty())
                        ++bogus;
        });
        d << tuples << " emitted tuples, " << failing << " failing; " << rejections << " rejections reported, "
          << bogus << " naming the corrupted cell";
        return tuples > 0 && failing == 0 && bogus > 0;
    });

    criterion(7, "n-category axiom checker", [](std::ostringstream& d) {
        bool nerves_ok = true;
        std::size_t nerves = 0;
        for (const auto& inst : corpus_nerves()) {
            ++nerves;
            if (!check_n_category(inst.x, 1).ok()) nerves_ok = false;
        }
        for (const auto& name : {"nerve-poset-2", "nerve-z2", "nerve-poset-3chain"})
            if (!check_n_category(fixture(name), 1).ok()) nerves_ok = false;
        auto broken = check_n_category(fixture("broken-no-filler"), 1);
        std::string niche;
        for (const auto& v : broken.violations)
            if (v.axiom == 1) niche = v.object;
        auto mutant = check_n_category(fixture("mutation-composite"), 1);
        d << nerves << " corpus nerves " << (nerves_ok ? "pass" : "FAIL") << "; broken-no-filler fails at niche "
          << (niche.empty() ? "(none)" : niche) << "; mutation-composite axiom (ii) "
          << (mutant.axiom_ii ? "holds" : "fails");
        return nerves_ok && !broken.axiom_i && !niche.empty() && !mutant.axiom_ii;
    });

    criterion(8, "termination and memoization", [&](std::ostringstream& d) {
        UniversalityOptions naive;
        naive.memoize = false;
        std::size_t checks = 0, disagree = 0, too_deep = 0, instances = 0;
        int deepest = 0;
        for (const auto& name : fixture_names()) {
            auto x = fixture(name);
            if (x.cells().size() > 200) continue;
            ++instances;
            const int top = std::min(2, x.truncation() >= 3 ? 1 : x.truncation());
            for (int n = 0; n <= top; ++n) {
                UniversalityChecker memo(x);
                for (const Cell& c : x.cells()) {
                    if (c.dim == 0 || c.dim > n + 2) continue;
                    UniversalityChecker fresh(x, naive);
                    auto r = fresh.is_universal_cell(c.id, n);
                    ++checks;
                    if (r.verdict != memo.cell(c.id, n)) ++disagree;
                    if (r.max_dimension_touched > n + 2) ++too_deep;
                    deepest = std::max(deepest, r.max_dimension_touched - n);
                }
            }
        }
        const double elapsed = seconds_since(t_all);
        d << instances << " fixtures, " << checks << " checks, " << disagree << " memo/naive disagreements, "
          << too_deep << " above n + 2 (max touched n + " << deepest << "); acceptance run " << elapsed << " s";
        return instances > 0 && disagree == 0 && too_deep == 0 && elapsed < 300;
    });

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
