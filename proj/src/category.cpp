#include "unicell/category.hpp"

#include <algorithm>

#include "unicell/boundary.hpp"

namespace unicell {

FiniteCategory::FiniteCategory(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::map<std::string, std::string> identities,
                               const std::vector<std::array<std::string, 3>>& table)
    : name_(std::move(name)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
    std::set<std::string> objs(objects_.begin(), objects_.end());
    if (objs.size() != objects_.size()) throw DataError("category: duplicate object");
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        const auto& m = morphisms_[i];
        if (objs.count(m.id)) throw DataError("category: morphism id '" + m.id + "' clashes with an object");
        if (!index_.emplace(m.id, i).second) throw DataError("category: duplicate morphism '" + m.id + "'");
        if (!objs.count(m.src) || !objs.count(m.tgt))
            throw DataError("category: morphism '" + m.id + "' has an unknown endpoint");
    }
    for (const auto& o : objects_) {
        auto it = identities_.find(o);
        if (it == identities_.end()) throw DataError("category: no identity for object '" + o + "'");
        const auto& m = morphism(it->second);
        if (m.src != o || m.tgt != o) throw DataError("category: identity '" + m.id + "' is not an endomorphism of '" + o + "'");
    }
    if (identities_.size() != objects_.size()) throw DataError("category: identity for unknown object");
    for (const auto& [g, f, gf] : table) {
        const auto& mg = morphism(g);
        const auto& mf = morphism(f);
        const auto& mgf = morphism(gf);
        if (mf.tgt != mg.src)
            throw DataError("category: (" + g + ", " + f + ", " + gf + ") composes non-composable arrows");
        if (mgf.src != mf.src || mgf.tgt != mg.tgt)
            throw DataError("category: (" + g + ", " + f + ", " + gf + ") has a composite with wrong endpoints");
        if (!compose_.emplace(std::make_pair(g, f), gf).second)
            throw DataError("category: (" + g + ", " + f + ") composed twice");
    }
    for (const auto& mf : morphisms_)
        for (const auto& mg : morphisms_)
            if (mf.tgt == mg.src && !compose_.count({mg.id, mf.id}))
                throw DataError("category: composite of (" + mg.id + ", " + mf.id + ") missing");
    for (const auto& m : morphisms_) {
        if (compose(identity(m.tgt), m.id) != m.id)
            throw DataError("category: identity law fails for (" + identity(m.tgt) + ", " + m.id + ")");
        if (compose(m.id, identity(m.src)) != m.id)
            throw DataError("category: identity law fails for (" + m.id + ", " + identity(m.src) + ")");
    }
    for (const auto& f : morphisms_)
        for (const auto& g : morphisms_) {
            if (f.tgt != g.src) continue;
            for (const auto& h : morphisms_) {
                if (g.tgt != h.src) continue;
                if (compose(h.id, compose(g.id, f.id)) != compose(compose(h.id, g.id), f.id))
                    throw DataError("category: associativity fails for (" + h.id + ", " + g.id + ", " + f.id + ")");
            }
        }
}

const Morphism& FiniteCategory::morphism(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw DataError("category: unknown morphism '" + id + "'");
    return morphisms_[it->second];
}

const std::string& FiniteCategory::identity(const std::string& object) const {
    auto it = identities_.find(object);
    if (it == identities_.end()) throw DataError("category: unknown object '" + object + "'");
    return it->second;
}

bool FiniteCategory::is_identity(const std::string& id) const {
    const auto& m = morphism(id);
    return m.src == m.tgt && identity(m.src) == id;
}

const std::string& FiniteCategory::compose(const std::string& g, const std::string& f) const {
    auto it = compose_.find({g, f});
    if (it == compose_.end()) throw DataError("category: (" + g + ", " + f + ") not composable");
    return it->second;
}

std::vector<std::string> FiniteCategory::hom(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms_)
        if (m.src == a && m.tgt == b) out.push_back(m.id);
    return out;
}

std::vector<std::array<std::string, 3>> FiniteCategory::composition_table() const {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& [gf, r] : compose_) out.push_back({gf.first, gf.second, r});
    return out;
}

FiniteCategory category_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("category: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "objects" && it.key() != "morphisms" && it.key() != "identities" && it.key() != "compose" &&
            it.key() != "name")
            throw DataError("category: unknown key '" + it.key() + "'");
    for (const char* k : {"objects", "morphisms", "identities", "compose"})
        if (!j.contains(k)) throw DataError(std::string("category: missing key '") + k + "'");
    try {
        std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
        std::vector<Morphism> morphisms;
        for (const auto& m : j.at("morphisms"))
            morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                                 m.at("tgt").get<std::string>()});
        auto identities = j.at("identities").get<std::map<std::string, std::string>>();
        std::vector<std::array<std::string, 3>> compose;
        for (const auto& t : j.at("compose")) {
            auto v = t.get<std::vector<std::string>>();
            if (v.size() != 3) throw DataError("category: compose entries are [g, f, gf]");
            compose.push_back({v[0], v[1], v[2]});
        }
        return FiniteCategory(j.value("name", std::string("category")), std::move(objects), std::move(morphisms),
                              std::move(identities), compose);
    } catch (const Json::exception& e) {
        throw DataError(std::string("category: ") + e.what());
    }
}

Json to_json(const FiniteCategory& c) {
    Json morphisms = Json::array();
    for (const auto& m : c.morphisms()) morphisms.push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
    Json ids = Json::object();
    for (const auto& o : c.objects()) ids[o] = c.identity(o);
    Json compose = Json::array();
    for (const auto& t : c.composition_table()) compose.push_back({t[0], t[1], t[2]});
    return {{"name", c.name()}, {"objects", c.objects()}, {"morphisms", morphisms}, {"identities", ids},
            {"compose", compose}};
}

FiniteCategory poset_category(std::string name, int n, const std::vector<std::pair<int, int>>& less) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (auto [a, b] : less) le.at(a).at(b) = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][k] && le[k][j]) le[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && le[i][j] && le[j][i]) throw DataError("poset relation has a cycle");
    auto arrow = [](int i, int j) {
        return i == j ? "id_" + std::to_string(i) : "f_" + std::to_string(i) + "_" + std::to_string(j);
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::map<std::string, std::string> ids;
    for (int i = 0; i < n; ++i) {
        objects.push_back(std::to_string(i));
        ids[std::to_string(i)] = arrow(i, i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (le[i][j]) morphisms.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
    std::vector<std::array<std::string, 3>> compose;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (le[i][j] && le[j][k]) compose.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
    return FiniteCategory(std::move(name), objects, morphisms, ids, compose);
}

FiniteCategory monoid_category(std::string name, const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table) {
    std::vector<Morphism> morphisms;
    for (const auto& e : elements) morphisms.push_back({e, "*", "*"});
    std::vector<std::array<std::string, 3>> compose;
    for (std::size_t a = 0; a < elements.size(); ++a)
        for (std::size_t b = 0; b < elements.size(); ++b)
            compose.push_back({elements[a], elements[b], elements.at(table.at(a).at(b))});
    return FiniteCategory(std::move(name), {"*"}, morphisms, {{"*", elements.at(0)}}, compose);
}

FiniteCategory cyclic_monoid(int tail, int period) {
    const int size = tail + period;
    std::vector<std::string> elements;
    elements.push_back("e");
    for (int i = 1; i < size; ++i) elements.push_back("x" + std::to_string(i));
    std::vector<std::vector<int>> table(size, std::vector<int>(size));
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            int s = a + b;
            table[a][b] = s < size ? s : tail + (s - tail) % period;
        }
    return monoid_category("cyclic-" + std::to_string(tail) + "-" + std::to_string(period), elements, table);
}

std::set<std::string> isomorphism_oracle(const FiniteCategory& c) {
    std::set<std::string> out;
    for (const auto& f : c.morphisms())
        for (const auto& g : c.morphisms()) {
            if (g.src != f.tgt || g.tgt != f.src) continue;
            if (c.compose(g.id, f.id) == c.identity(f.src) && c.compose(f.id, g.id) == c.identity(f.tgt)) {
                out.insert(f.id);
                break;
            }
        }
    return out;
}

std::string string_cell_id(const std::vector<std::string>& arrows) {
    std::string id = "[";
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i) id += ",";
        id += arrows[i];
    }
    return id + "]";
}

namespace {

// Linear source tree of a string: last arrow at the root.
PastingDiagram string_diagram(const std::vector<std::string>& arrows) {
    PdNode node{arrows.front(), {}};
    for (std::size_t i = 1; i < arrows.size(); ++i) {
        PdNode parent{arrows[i], {}};
        parent.children.push_back(PdEdge{0, std::move(node)});
        node = std::move(parent);
    }
    return PastingDiagram{1, std::move(node)};
}

std::vector<std::vector<std::string>> composable_strings(const FiniteCategory& c, int max_len) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::vector<std::string>> frontier;
    for (const auto& m : c.morphisms()) frontier.push_back({m.id});
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<std::string>> next;
        for (auto& s : frontier) {
            out.push_back(s);
            if (len == max_len) continue;
            const auto& last = c.morphism(s.back());
            for (const auto& m : c.morphisms())
                if (m.src == last.tgt) {
                    auto t = s;
                    t.push_back(m.id);
                    next.push_back(std::move(t));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

std::string composite(const FiniteCategory& c, const std::vector<std::string>& s) {
    std::string acc = s.front();
    for (std::size_t i = 1; i < s.size(); ++i) acc = c.compose(s[i], acc);
    return acc;
}

std::vector<Cell> low_cells(const FiniteCategory& c) {
    std::vector<Cell> cells;
    for (const auto& o : c.objects()) cells.push_back(Cell{o, 0, std::nullopt, std::nullopt, false});
    for (const auto& m : c.morphisms())
        cells.push_back(Cell{m.id, 1, PastingDiagram::single(0, m.src), m.tgt, false});
    return cells;
}

// Turn the fillers of all niches with at most `bound` nodes at dimension
// x.truncation()+1 into materialized cells.
std::vector<Cell> materialize_next_level(const OpetopicSet& x, int bound) {
    const int d = x.truncation() + 1;
    std::vector<Cell> out;
    std::map<CellId, CellId> renamed;
    for (const Cell* f : x.enumerate_cells(d, static_cast<std::size_t>(bound))) {
        std::string id = "w" + std::to_string(d) + "." + std::to_string(out.size());
        out.push_back(Cell{id, d, f->source, f->target, false});
    }
    return out;
}

}  // namespace

OpetopicSet nerve_of_category(const FiniteCategory& c, const NerveOptions& opt) {
    if (opt.max_string < 1) throw DataError("nerve: string bound must be >= 1");
    if (opt.truncation < 2) throw DataError("nerve: truncation must be >= 2");
    if (opt.virtual_ceiling < opt.truncation) throw DataError("nerve: virtual ceiling below truncation");
    std::vector<Cell> cells = low_cells(c);
    for (const auto& s : composable_strings(c, opt.max_string))
        cells.push_back(Cell{string_cell_id(s), 2, string_diagram(s), composite(c, s), false});
    const std::string name = "nerve(" + c.name() + ")";
    for (int d = 3; d <= opt.truncation; ++d) {
        OpetopicSet partial(name, d - 1, d, cells);
        for (auto& w : materialize_next_level(partial, opt.tree_bound)) cells.push_back(std::move(w));
    }
    return OpetopicSet(name, opt.truncation, opt.virtual_ceiling, std::move(cells));
}

ThinTwoCategory::ThinTwoCategory(FiniteCategory base, const std::vector<std::pair<std::string, std::string>>& leq)
    : base_(std::move(base)) {
    for (const auto& m : base_.morphisms()) leq_.insert({m.id, m.id});
    for (const auto& [p, q] : leq) {
        const auto& mp = base_.morphism(p);
        const auto& mq = base_.morphism(q);
        if (mp.src != mq.src || mp.tgt != mq.tgt) throw DataError("2-cell " + p + " => " + q + " is not between parallel arrows");
        leq_.insert({p, q});
    }
    for (bool changed = true; changed;) {
        changed = false;
        auto snapshot = leq_;
        for (const auto& [a, b] : snapshot)
            for (const auto& [b2, c2] : snapshot)
                if (b == b2 && leq_.insert({a, c2}).second) changed = true;
    }
    for (const auto& [p, q] : leq_) {
        const auto& mp = base_.morphism(p);
        for (const auto& r : base_.morphisms()) {
            if (r.src == mp.tgt && !this->leq(base_.compose(r.id, p), base_.compose(r.id, q)))
                throw DataError("preorder not compatible with composition: " + r.id + "∘" + p + " vs " + r.id + "∘" + q);
            if (r.tgt == mp.src && !this->leq(base_.compose(p, r.id), base_.compose(q, r.id)))
                throw DataError("preorder not compatible with composition: " + p + "∘" + r.id + " vs " + q + "∘" + r.id);
        }
    }
}

OpetopicSet opetopic_set_of(const ThinTwoCategory& tc, std::string name, int max_string, int virtual_ceiling) {
    const auto& c = tc.base();
    std::vector<Cell> cells = low_cells(c);
    for (const auto& s : composable_strings(c, max_string)) {
        const std::string comp = composite(c, s);
        const auto& m = c.morphism(comp);
        for (const auto& h : c.hom(m.src, m.tgt))
            if (tc.leq(comp, h)) cells.push_back(Cell{string_cell_id(s) + ">" + h, 2, string_diagram(s), h, false});
    }
    return OpetopicSet(std::move(name), 2, virtual_ceiling, std::move(cells));
}

std::set<std::string> equivalence_oracle(const ThinTwoCategory& tc) {
    const auto& c = tc.base();
    std::set<std::string> out;
    for (const auto& f : c.morphisms())
        for (const auto& g : c.hom(f.tgt, f.src))
            if (tc.equivalent(c.compose(g, f.id), c.identity(f.src)) &&
                tc.equivalent(c.compose(f.id, g), c.identity(f.tgt))) {
                out.insert(f.id);
                break;
            }
    return out;
}

}  // namespace unicell
