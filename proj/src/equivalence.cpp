#include "unicell/equivalence.hpp"

#include <map>
#include <set>

namespace unicell {

namespace {

std::map<std::string, std::size_t> index_level(const std::vector<GradedCell>& level) {
    std::map<std::string, std::size_t> out;
    for (std::size_t i = 0; i < level.size(); ++i) out.emplace(level[i].id, i);
    return out;
}

std::string join(const std::vector<CellId>& ids) {
    std::string s;
    for (const auto& id : ids) s += (s.empty() ? "" : "|") + id;
    return s;
}

const std::string& id_at(const GradedStructure& g, std::size_t level, std::size_t i) { return g.levels[level][i].id; }

std::vector<std::size_t> frame_members(const GradedStructure& g, std::size_t level, std::size_t src, std::size_t tgt) {
    std::vector<std::size_t> out;
    const auto& cells = g.levels.at(level);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].source == src && cells[i].target == tgt) out.push_back(i);
    return out;
}

bool parallel(const GradedCell& a, const GradedCell& b) { return a.source == b.source && a.target == b.target; }

bool equivalence_at(const GradedMap& f, std::size_t level, const std::vector<std::size_t>& dom,
                    const std::vector<std::size_t>& cod, int m,
                    const std::function<bool(const std::string&)>& universal, std::vector<std::string>& trace,
                    const std::string& where) {
    if (dom.empty() && cod.empty()) return true;
    const auto& fmap = f.maps.at(level);
    const std::set<std::size_t> cod_set(cod.begin(), cod.end());
    if (m == 0) {
        std::set<std::size_t> image;
        for (auto x : dom) {
            const auto y = fmap.at(x);
            if (!cod_set.count(y)) {
                trace.push_back(where + ": image of " + id_at(*f.domain, level, x) + " leaves the hom");
                return false;
            }
            if (!image.insert(y).second) {
                trace.push_back(where + ": " + id_at(*f.codomain, level, y) + " is hit twice");
                return false;
            }
        }
        for (auto y : cod)
            if (!image.count(y)) {
                trace.push_back(where + ": " + id_at(*f.codomain, level, y) + " is not hit");
                return false;
            }
        return true;
    }
    if (level + 1 >= f.domain->depth() || level + 1 >= f.codomain->depth())
        throw DataError("graded structures are truncated below the requested m");
    for (auto x : dom)
        for (auto y : dom) {
            const auto hd = frame_members(*f.domain, level + 1, x, y);
            const auto hc = frame_members(*f.codomain, level + 1, fmap.at(x), fmap.at(y));
            const std::string sub =
                where + " / hom(" + id_at(*f.domain, level, x) + ", " + id_at(*f.domain, level, y) + ")";
            if (!equivalence_at(f, level + 1, hd, hc, m - 1, universal, trace, sub)) return false;
        }
    const auto& next = f.codomain->levels.at(level + 1);
    for (auto b : cod) {
        bool reached = false;
        for (auto a : dom) {
            for (const auto& e : next)
                if (e.source == fmap.at(a) && e.target == b && (!universal || universal(e.id))) {
                    reached = true;
                    break;
                }
            if (reached) break;
        }
        if (!reached) {
            trace.push_back(where + ": " + id_at(*f.codomain, level, b) + " is not reached by a universal 1-cell");
            return false;
        }
    }
    return true;
}

}  // namespace

GradedStructure graded_hom(const HomStructure& h, int m) {
    GradedStructure g;
    g.levels.emplace_back();
    for (const Cell* c : h.level0()) g.levels[0].push_back({c->id, std::nullopt, std::nullopt});
    for (int j = 1; j <= m; ++j) {
        const auto prev = index_level(g.levels.back());
        std::vector<GradedCell> level;
        for (const Cell* c : h.level(j)) {
            auto s = prev.find(c->source->root.cell);
            auto t = prev.find(*c->target);
            if (s == prev.end() || t == prev.end()) continue;
            level.push_back({c->id, s->second, t->second});
        }
        g.levels.push_back(std::move(level));
    }
    return g;
}

GradedStructure graded_span(const CompositionSpan& s) {
    GradedStructure g;
    for (const auto& level : s.levels) {
        std::vector<GradedCell> cells;
        for (const auto& t : level) cells.push_back({join(t.components), t.frame_source, t.frame_target});
        g.levels.push_back(std::move(cells));
    }
    return g;
}

GradedMap tau_map(const CompositionSpan& s, const GradedStructure& dom, const GradedStructure& cod) {
    GradedMap f{&dom, &cod, {}};
    for (std::size_t j = 0; j < dom.depth(); ++j) {
        if (j >= cod.depth()) throw DataError("codomain has fewer levels than the span");
        const auto idx = index_level(cod.levels[j]);
        std::vector<std::size_t> level;
        for (const auto& t : s.levels.at(j)) {
            auto it = idx.find(t.tau_image);
            if (it == idx.end())
                throw ConstructionError("tau image " + t.tau_image + " at level " + std::to_string(j) +
                                        " is missing from X(a, c)");
            level.push_back(it->second);
        }
        f.maps.push_back(std::move(level));
    }
    return f;
}

GradedMap identity_map(const GradedStructure& g) {
    GradedMap f{&g, &g, {}};
    for (const auto& level : g.levels) {
        std::vector<std::size_t> ids(level.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
        f.maps.push_back(std::move(ids));
    }
    return f;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.codomain != g.domain) throw DataError("graded maps are not composable");
    GradedMap h{f.domain, g.codomain, {}};
    for (std::size_t j = 0; j < f.maps.size() && j < g.maps.size(); ++j) {
        std::vector<std::size_t> level;
        for (auto x : f.maps[j]) level.push_back(g.maps[j].at(x));
        h.maps.push_back(std::move(level));
    }
    return h;
}

std::string shape_problem(const GradedMap& f) {
    for (std::size_t j = 1; j < f.maps.size(); ++j)
        for (std::size_t i = 0; i < f.maps[j].size(); ++i) {
            const auto& x = f.domain->levels[j][i];
            const auto& y = f.codomain->levels[j].at(f.maps[j][i]);
            if (!x.source || !x.target || !y.source || !y.target)
                return "cell " + x.id + " at level " + std::to_string(j) + " lacks a frame";
            if (f.maps[j - 1].at(*x.source) != *y.source || f.maps[j - 1].at(*x.target) != *y.target)
                return "cell " + x.id + " at level " + std::to_string(j) + " maps to " + y.id +
                       " whose frame is not the image frame";
        }
    return {};
}

EquivalenceResult is_m_equivalence(const GradedMap& f, int m, const std::function<bool(const std::string&)>& universal) {
    if (m < 0) throw DataError("m must be non-negative");
    if (f.maps.size() < static_cast<std::size_t>(m) + 1) throw DataError("graded map is truncated below m");
    EquivalenceResult r;
    std::vector<std::size_t> dom(f.domain->levels.at(0).size()), cod(f.codomain->levels.at(0).size());
    for (std::size_t i = 0; i < dom.size(); ++i) dom[i] = i;
    for (std::size_t i = 0; i < cod.size(); ++i) cod[i] = i;
    r.verdict = equivalence_at(f, 0, dom, cod, m, universal, r.trace, "level 0");
    return r;
}

EquivalenceResult is_on_the_nose(const GradedMap& f, int m) {
    if (m < 0) throw DataError("m must be non-negative");
    if (f.maps.size() < static_cast<std::size_t>(m) + 1) throw DataError("graded map is truncated below m");
    EquivalenceResult r;
    auto check = [&](std::size_t level, const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod,
                     bool injective, const std::string& where) {
        std::set<std::size_t> image;
        for (auto x : dom) {
            if (!image.insert(f.maps[level].at(x)).second && injective) {
                r.trace.push_back(where + ": " + id_at(*f.codomain, level, f.maps[level][x]) + " is hit twice");
                return false;
            }
        }
        for (auto y : cod)
            if (!image.count(y)) {
                r.trace.push_back(where + ": " + id_at(*f.codomain, level, y) + " is not hit");
                return false;
            }
        return true;
    };
    std::vector<std::size_t> dom(f.domain->levels.at(0).size()), cod(f.codomain->levels.at(0).size());
    for (std::size_t i = 0; i < dom.size(); ++i) dom[i] = i;
    for (std::size_t i = 0; i < cod.size(); ++i) cod[i] = i;
    if (!check(0, dom, cod, m == 0, "level 0")) return r;
    for (int j = 1; j <= m; ++j) {
        const auto& below = f.domain->levels[j - 1];
        for (std::size_t x = 0; x < below.size(); ++x)
            for (std::size_t y = 0; y < below.size(); ++y) {
                if (j >= 2 && !parallel(below[x], below[y])) continue;
                const auto hd = frame_members(*f.domain, j, x, y);
                const auto hc = frame_members(*f.codomain, j, f.maps[j - 1][x], f.maps[j - 1][y]);
                const std::string where = "level " + std::to_string(j) + " frame (" + below[x].id + ", " +
                                          below[y].id + ")";
                if (!check(j, hd, hc, j == m, where)) return r;
            }
    }
    r.verdict = true;
    return r;
}

const char* to_string(P2Variant v) { return v == P2Variant::OnTheNose ? "on_the_nose" : "equivalence"; }

P2Variant parse_variant(const std::string& s) {
    if (s == "on_the_nose") return P2Variant::OnTheNose;
    if (s == "equivalence") return P2Variant::Equivalence;
    throw DataError("unknown variant '" + s + "' (expected on_the_nose or equivalence)");
}

std::vector<const Cell*> span_targets(const OpetopicSet& x, const CellId& f) {
    const Cell& fc = x.at(f);
    if (fc.dim < 1) throw DataError("'" + f + "' is a 0-cell");
    const Cell& b = x.at(*fc.target);
    if (b.dim == 0) return x.cells_of_dim(0);
    return x.frame_occupants(*b.source, *b.target);
}

UniversalityReport is_p2_universal(const OpetopicSet& x, const CellId& f, int n, P2Variant variant,
                                   UniversalityChecker& chk, const SpanOptions& opt) {
    UniversalityReport rep;
    rep.subject = f;
    rep.n = n;
    rep.bounds = bounds_of(x);
    const Cell& fc = x.at(f);
    if (fc.dim == 0) throw DataError("'" + f + "' is a 0-cell; universality applies to cells of dimension >= 1");
    const int k = fc.dim;
    x.reset_touch_tracking();
    if (k > n) {
        auto occ = x.niche_occupants(*fc.source);
        rep.verdict = occ.size() == 1 && occ.front()->id == f;
        rep.trace.push_back({k, f, rep.verdict, "k > n; niche has " + std::to_string(occ.size()) + " occupant(s)"});
        rep.max_dimension_touched = x.max_dimension_touched();
        return rep;
    }
    const int m = n - k;
    rep.verdict = true;
    for (const Cell* c : span_targets(x, f)) {
        CompositionSpan s = build_span(x, f, c->id, n, m, chk, opt);
        const GradedStructure dom = graded_span(s);
        const GradedStructure cod = graded_hom(s.x2, m);
        const GradedMap tau = tau_map(s, dom, cod);
        if (auto p = shape_problem(tau); !p.empty()) throw ConstructionError("tau does not preserve shapes: " + p);
        EquivalenceResult r = variant == P2Variant::OnTheNose
                                  ? is_on_the_nose(tau, m)
                                  : is_m_equivalence(tau, m, [&](const std::string& id) { return chk.cell(id, n); });
        std::string detail = "span levels";
        for (std::size_t j = 0; j < dom.depth(); ++j)
            detail += (j ? "/" : " ") + std::to_string(dom.levels[j].size());
        detail += ", X(a, c) levels";
        for (std::size_t j = 0; j < cod.depth(); ++j)
            detail += (j ? "/" : " ") + std::to_string(cod.levels[j].size());
        if (!r.verdict && !r.trace.empty()) detail += "; " + r.trace.back();
        rep.trace.push_back({k - 1, c->id, r.verdict, detail});
        if (!r.verdict) {
            rep.verdict = false;
            break;
        }
    }
    rep.max_dimension_touched = x.max_dimension_touched();
    return rep;
}

UniversalityReport is_p2_universal(const OpetopicSet& x, const CellId& f, int n, P2Variant variant,
                                   const SpanOptions& opt) {
    UniversalityChecker chk(x);
    return is_p2_universal(x, f, n, variant, chk, opt);
}

}  // namespace unicell
