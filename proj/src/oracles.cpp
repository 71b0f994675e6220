#include "unicell/oracles.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace unicell {

namespace {

using Table = std::vector<std::array<std::string, 3>>;

// Category on `objects` with every composite listed in `extra` plus the
// identity laws filled in.
FiniteCategory with_identities(std::string name, std::vector<std::string> objects, std::vector<Morphism> arrows,
                               const Table& extra) {
    std::map<std::string, std::string> ids;
    std::vector<Morphism> all;
    for (const auto& o : objects) {
        ids[o] = "id_" + o;
        all.push_back({"id_" + o, o, o});
    }
    for (auto& m : arrows) all.push_back(m);
    Table table = extra;
    for (const auto& m : all) {
        if (m.id != ids[m.src]) table.push_back({m.id, ids[m.src], m.id});
        table.push_back({ids[m.tgt], m.id, m.id});
    }
    return FiniteCategory(std::move(name), std::move(objects), std::move(all), std::move(ids), table);
}

// Codiscrete groupoid on `objects` times the cyclic group of order `order`.
FiniteCategory codiscrete_times_cyclic(std::string name, const std::vector<std::string>& objects, int order) {
    auto arrow = [](const std::string& x, const std::string& y, int g) { return x + y + std::to_string(g); };
    std::vector<Morphism> ms;
    std::map<std::string, std::string> ids;
    Table table;
    for (const auto& x : objects) {
        ids[x] = arrow(x, x, 0);
        for (const auto& y : objects)
            for (int g = 0; g < order; ++g) ms.push_back({arrow(x, y, g), x, y});
    }
    for (const auto& x : objects)
        for (const auto& y : objects)
            for (const auto& z : objects)
                for (int g = 0; g < order; ++g)
                    for (int h = 0; h < order; ++h)
                        table.push_back({arrow(y, z, h), arrow(x, y, g), arrow(x, z, (g + h) % order)});
    return FiniteCategory(std::move(name), objects, ms, ids, table);
}

OpetopicSet without(const OpetopicSet& x, const std::string& name, const CellId& drop) {
    std::vector<Cell> cells;
    bool found = false;
    for (const auto& c : x.cells()) {
        if (c.id == drop) {
            found = true;
            continue;
        }
        cells.push_back(c);
    }
    if (!found) throw ConstructionError("fixture " + name + ": no cell '" + drop + "' to remove");
    return OpetopicSet(name, x.truncation(), x.virtual_ceiling(), std::move(cells));
}

OpetopicSet nerve_fixture(const std::string& category, const std::string& name, int truncation) {
    NerveOptions opt;
    opt.truncation = truncation;
    OpetopicSet x = nerve_of_category(named_category(category), opt);
    return OpetopicSet(name, x.truncation(), x.virtual_ceiling(), x.cells());
}

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> names{
        "trivial",      "z2",           "z3",           "idempotent",   "cyclic-1-2",   "poset-2",
        "poset-3chain", "poset-vee",    "poset-diamond", "parallel-pair", "split-idempotent",
        "iso-pair",     "discrete-2",   "z2-pair"};
    return names;
}

}  // namespace

FiniteCategory named_category(const std::string& name) {
    if (name == "trivial") return cyclic_monoid(0, 1);
    if (name == "z2") return monoid_category("z2", {"e", "s"}, {{0, 1}, {1, 0}});
    if (name == "z3") return cyclic_monoid(0, 3);
    if (name == "idempotent") return cyclic_monoid(1, 1);
    if (name == "cyclic-1-2") return cyclic_monoid(1, 2);
    if (name == "poset-2") return with_identities("poset-2", {"0", "1"}, {{"f", "0", "1"}}, {});
    if (name == "poset-3chain")
        return with_identities("poset-3chain", {"0", "1", "2"},
                               {{"f", "0", "1"}, {"g12", "1", "2"}, {"g02", "0", "2"}}, {{"g12", "f", "g02"}});
    if (name == "poset-vee") return poset_category("poset-vee", 3, {{0, 1}, {0, 2}});
    if (name == "poset-diamond") return poset_category("poset-diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    if (name == "parallel-pair")
        return with_identities("parallel-pair", {"0", "1"}, {{"p", "0", "1"}, {"q", "0", "1"}}, {});
    if (name == "split-idempotent")
        return with_identities("split-idempotent", {"a", "b"}, {{"f", "a", "b"}, {"r", "b", "a"}, {"e", "b", "b"}},
                               {{"r", "f", "id_a"}, {"f", "r", "e"}, {"e", "e", "e"}, {"e", "f", "f"}, {"r", "e", "r"}});
    if (name == "iso-pair")
        return with_identities("iso-pair", {"a", "b"}, {{"i", "a", "b"}, {"j", "b", "a"}},
                               {{"j", "i", "id_a"}, {"i", "j", "id_b"}});
    if (name == "discrete-2") return with_identities("discrete-2", {"a", "b"}, {}, {});
    if (name == "z2-pair") return codiscrete_times_cyclic("z2-pair", {"a", "b"}, 2);
    if (name == "span-square")
        return with_identities("span-square", {"a", "b", "c"},
                               {{"f", "a", "b"}, {"b1", "b", "c"}, {"b2", "b", "c"}, {"g", "a", "c"}},
                               {{"b1", "f", "g"}, {"b2", "f", "g"}});
    throw DataError("unknown category '" + name + "'");
}

std::vector<std::string> corpus_names() { return corpus(); }

std::vector<FiniteCategory> category_corpus() {
    std::vector<FiniteCategory> out;
    for (const auto& n : corpus()) out.push_back(named_category(n));
    return out;
}

ThinTwoCategory named_thin_category(const std::string& fixture_name) {
    if (fixture_name == "two-cat-equivalence" || fixture_name == "two-cat-nonuniv") {
        // Monoid {1, e} with e idempotent.
        auto m = monoid_category("idempotent-monoid", {"1", "e"}, {{0, 1}, {1, 1}});
        if (fixture_name == "two-cat-equivalence") return ThinTwoCategory(m, {{"1", "e"}, {"e", "1"}});
        return ThinTwoCategory(m, {{"1", "e"}});
    }
    if (fixture_name == "two-cat-mixed") {
        // Monoid {1, s, z}: s an involution, z absorbing.
        auto m = monoid_category("involution-zero", {"1", "s", "z"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
        return ThinTwoCategory(m, {{"1", "s"}, {"s", "1"}, {"1", "z"}, {"s", "z"}});
    }
    throw DataError("unknown 2-dimensional fixture '" + fixture_name + "'");
}

std::vector<std::string> fixture_names() {
    return {"empty",          "nerve-poset-2",    "nerve-z2",         "nerve-poset-3chain",
            "two-cat-equivalence", "two-cat-nonuniv", "two-cat-mixed",  "broken-no-filler",
            "mutation-composite",  "corrupt-span"};
}

OpetopicSet fixture(const std::string& name) {
    if (name == "empty") return OpetopicSet("empty", 3, 6, {});
    if (name == "nerve-poset-2") return nerve_fixture("poset-2", name, 3);
    if (name == "nerve-z2") return nerve_fixture("z2", name, 3);
    if (name == "nerve-poset-3chain") return nerve_fixture("poset-3chain", name, 3);
    if (name == "two-cat-equivalence" || name == "two-cat-nonuniv" || name == "two-cat-mixed")
        return opetopic_set_of(named_thin_category(name), name);
    if (name == "broken-no-filler") return without(nerve_fixture("poset-2", name, 2), name, "[f,id_1]");
    if (name == "mutation-composite") return without(nerve_fixture("z2", name, 2), name, "[e,s]");
    if (name == "corrupt-span") {
        // A 3-cell pasting the identity on b1 into the b2 slot of [f,b2].
        OpetopicSet x = nerve_fixture("span-square", name, 3);
        std::vector<Cell> cells = x.cells();
        cells.push_back(Cell{"bogus", 3, PastingDiagram::binary(2, "[f,b2]", 0, "[b1]"), "[f,b1]", false});
        return OpetopicSet(name, x.truncation(), x.virtual_ceiling(), std::move(cells));
    }
    throw DataError("unknown fixture '" + name + "'");
}

std::size_t ComparisonReport::agreements() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.agree(); }));
}

std::size_t ComparisonReport::universal_count() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.p1; }));
}

ComparisonReport compare_p1_p2(const OpetopicSet& x, int n, const std::set<int>& dims, const SpanOptions& opt) {
    ComparisonReport rep;
    rep.instance = x.name();
    rep.n = n;
    rep.bounds = bounds_of(x);
    UniversalityChecker chk(x);
    for (int d : dims) {
        if (d < 1) throw DataError("comparison dimensions start at 1");
        for (const Cell* c : x.enumerate_cells(d)) {
            try {
                ComparisonRow row{c->id, d, chk.cell(c->id, n), false, false};
                row.p2_equivalence = is_p2_universal(x, c->id, n, P2Variant::Equivalence, chk, opt).verdict;
                row.p2_on_the_nose = is_p2_universal(x, c->id, n, P2Variant::OnTheNose, chk, opt).verdict;
                rep.rows.push_back(row);
            } catch (const FragmentTooShallow& e) {
                throw FragmentTooShallow(e.needed_dimension(), "cell '" + c->id + "': " + e.what());
            }
        }
    }
    return rep;
}

Json to_json(const ComparisonReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"cell", row.cell},
                        {"dimension", row.dimension},
                        {"p1", row.p1},
                        {"p2_equivalence", row.p2_equivalence},
                        {"p2_on_the_nose", row.p2_on_the_nose},
                        {"agree", row.agree()}});
    return {{"instance", r.instance},
            {"n", r.n},
            {"rows", rows},
            {"summary",
             {{"cells", r.rows.size()}, {"agreements", r.agreements()}, {"universal", r.universal_count()}}},
            {"bounds", to_json(r.bounds)}};
}

std::string to_table(const ComparisonReport& r) {
    std::size_t width = 4;
    for (const auto& row : r.rows) width = std::max(width, row.cell.size());
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << std::left << std::setw(static_cast<int>(width)) << "cell" << "  dim  P1   P2(eq)  P2(otn)  agree\n";
    for (const auto& row : r.rows)
        out << std::left << std::setw(static_cast<int>(width)) << row.cell << "  " << std::setw(3) << row.dimension
            << "  " << std::setw(3) << yn(row.p1) << "  " << std::setw(6) << yn(row.p2_equivalence) << "  "
            << std::setw(7) << yn(row.p2_on_the_nose) << "  " << yn(row.agree()) << "\n";
    out << r.agreements() << "/" << r.rows.size() << " cells agree (" << r.universal_count() << " universal), n = "
        << r.n << ", instance " << r.instance << "\n";
    return out.str();
}

}  // namespace unicell
