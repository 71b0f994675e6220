#include "unicell/universality.hpp"

#include <algorithm>

namespace unicell {

FragmentBounds bounds_of(const OpetopicSet& x, std::size_t enumeration_bound) {
    return FragmentBounds{x.truncation(), x.virtual_ceiling(), enumeration_bound};
}

UniversalityChecker::UniversalityChecker(const OpetopicSet& x, UniversalityOptions opt) : x_(&x), opt_(opt) {}

void UniversalityChecker::require_depth(const Cell& c, int n, int extra) const {
    const int needed = c.dim + extra;
    if (needed > x_->virtual_ceiling())
        throw FragmentTooShallow(needed, "universality of '" + c.id + "' at n = " + std::to_string(n) +
                                             " exceeds virtual ceiling " + std::to_string(x_->virtual_ceiling()));
}

bool UniversalityChecker::guarded(const Cell& c, int n, bool is_factorisation, std::vector<TraceEntry>* trace,
                                  int depth) {
    if (n > x_->truncation() && x_->virtual_ceiling() > x_->truncation())
        throw DataError("virtual levels start at dimension " + std::to_string(x_->truncation() + 1) +
                        ", which is not above n = " + std::to_string(n));
    const Key key{(is_factorisation ? "f:" : "c:") + c.id, n};
    if (!trace && opt_.memoize)
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (active_.count(key))
        throw ConstructionError("cyclic dependency while checking '" + c.id + "'; the data is corrupt");
    active_.insert(key);
    ++evaluations_;
    bool r = false;
    try {
        r = is_factorisation ? factorisation_impl(c, n, trace, depth) : cell_impl(c, n, trace, depth);
    } catch (...) {
        active_.erase(key);
        throw;
    }
    active_.erase(key);
    if (opt_.memoize) memo_[key] = r;
    return r;
}

bool UniversalityChecker::cell(const CellId& alpha, int n) { return guarded(x_->at(alpha), n, false, nullptr, 0); }

bool UniversalityChecker::factorisation(const CellId& u, int n) {
    return guarded(x_->at(u), n, true, nullptr, 0);
}

std::vector<const Cell*> UniversalityChecker::factorisers(const PastingDiagram& source, const CellId& target, int n) {
    std::vector<const Cell*> out;
    for (const Cell* u : x_->frame_occupants(source, target))
        if (!opt_.universal_factorisers || cell(u->id, n)) out.push_back(u);
    return out;
}

bool UniversalityChecker::cell_impl(const Cell& a, int n, std::vector<TraceEntry>* trace, int depth) {
    if (a.dim == 0) throw DataError("'" + a.id + "' is a 0-cell; universality applies to cells of dimension >= 1");
    const int k = a.dim;
    if (k > n) {
        auto occ = x_->niche_occupants(*a.source);
        const bool r = occ.size() == 1 && occ.front()->id == a.id;
        if (trace)
            trace->push_back({k, a.id, r, "k > n; niche has " + std::to_string(occ.size()) + " occupant(s)"});
        return r;
    }
    require_depth(a, n, 2);
    const auto beta_source = PastingDiagram::single(k - 1, *a.target);
    for (const Cell* gamma : x_->niche_occupants(*a.source)) {
        std::vector<const Cell*> us;
        for (const Cell* beta : x_->frame_occupants(beta_source, *gamma->target))
            for (const Cell* u : factorisers(PastingDiagram::binary(k, beta->id, 0, a.id), gamma->id, n))
                us.push_back(u);
        if (us.empty()) {
            if (trace) trace->push_back({k, gamma->id, false, "no factorisation (beta, " + a.id + ") -> " + gamma->id});
            return false;
        }
        for (const Cell* u : us) {
            if (!factorisation(u->id, n)) {
                if (trace) {
                    trace->push_back({k + 1, u->id, false,
                                      "factorisation of " + gamma->id + " through " + a.id + " is not universal"});
                    if (depth > 0) factorisation_impl(*u, n, trace, depth - 1);
                }
                return false;
            }
        }
        if (trace)
            trace->push_back({k, gamma->id, true,
                              "factors via " + us.front()->id +
                                  (us.size() > 1 ? " and " + std::to_string(us.size() - 1) + " more" : "")});
    }
    return true;
}

bool UniversalityChecker::factorisation_impl(const Cell& u, int n, std::vector<TraceEntry>* trace, int depth) {
    if (!u.is_two_ary()) throw DataError("'" + u.id + "' is not a 2-ary cell");
    const int k = u.dim - 1;
    if (k > n) {
        if (trace) trace->push_back({u.dim, u.id, true, "factorisation of k-cells with k > n"});
        return true;
    }
    require_depth(u, n, 1);
    const Cell& b = x_->at(s1(u));
    const CellId& a = s2(u);
    const std::size_t slot = paste_slot(u);
    const CellId& c = *u.target;
    for (const Cell* bp : x_->frame_occupants(*b.source, *b.target)) {
        for (const Cell* v : x_->frame_occupants(PastingDiagram::binary(k, bp->id, slot, a), c)) {
            std::vector<const Cell*> ws;
            for (const Cell* y : x_->frame_occupants(PastingDiagram::single(k, bp->id), b.id))
                for (const Cell* w : factorisers(PastingDiagram::binary(k + 1, u.id, 0, y->id), v->id, n))
                    ws.push_back(w);
            const std::string pair = "(b' = " + bp->id + ", v = " + v->id + ")";
            if (ws.empty()) {
                if (trace) trace->push_back({k + 1, pair, false, "no (u, y) -> v factorisation"});
                return false;
            }
            for (const Cell* w : ws) {
                if (!factorisation(w->id, n)) {
                    if (trace) {
                        trace->push_back({k + 2, w->id, false, pair + ": factorisation is not universal"});
                        if (depth > 0) factorisation_impl(*w, n, trace, depth - 1);
                    }
                    return false;
                }
            }
            if (trace) trace->push_back({k + 1, pair, true, "factors via " + ws.front()->id});
        }
    }
    return true;
}

UniversalityReport UniversalityChecker::report(const CellId& id, int n, bool is_factorisation) {
    UniversalityReport r;
    r.subject = id;
    r.n = n;
    r.bounds = bounds_of(*x_);
    x_->reset_touch_tracking();
    r.verdict = guarded(x_->at(id), n, is_factorisation, &r.trace, opt_.trace_depth);
    r.max_dimension_touched = x_->max_dimension_touched();
    return r;
}

UniversalityReport UniversalityChecker::is_universal_cell(const CellId& alpha, int n) { return report(alpha, n, false); }

UniversalityReport UniversalityChecker::is_universal_factorisation(const CellId& u, int n) {
    return report(u, n, true);
}

UniversalityReport is_universal_cell(const OpetopicSet& x, const CellId& alpha, int n, UniversalityOptions opt) {
    UniversalityChecker chk(x, opt);
    return chk.is_universal_cell(alpha, n);
}

UniversalityReport is_universal_factorisation(const OpetopicSet& x, const CellId& u, int n, UniversalityOptions opt) {
    UniversalityChecker chk(x, opt);
    return chk.is_universal_factorisation(u, n);
}

namespace {

std::size_t niche_bound(const OpetopicSet& x, int k, const AxiomOptions& opt) {
    if (x.is_virtual_dim(k)) return opt.virtual_niche_bound;
    std::size_t bound = 1;
    for (const Cell* c : x.cells_of_dim(k)) bound = std::max(bound, c->arity());
    return bound;
}

}  // namespace

AxiomReport check_n_category(const OpetopicSet& x, int n, const AxiomOptions& opt) {
    if (n < 0) throw DataError("n must be non-negative");
    if (x.virtual_ceiling() < n + 2) throw FragmentTooShallow(n + 2, "n-category check");
    if (x.truncation() < n) throw FragmentTooShallow(n + 1, "n-category check enumerates niches of materialized cells");
    AxiomReport rep;
    rep.n = n;
    rep.bounds = bounds_of(x, opt.virtual_niche_bound);
    UniversalityChecker chk(x, opt.universality);

    for (int k = 1; k <= n + 1; ++k) {
        for (const auto& pd : x.enumerate_diagrams(k - 1, niche_bound(x, k, opt))) {
            if (k >= 2) {
                const Boundary* b = nullptr;
                try {
                    b = &x.boundary(pd);
                } catch (const DataError&) {
                    continue;
                }
                if (x.frame_occupants(b->leaf, b->target).empty()) continue;
            }
            ++rep.niches_checked;
            auto occ = x.niche_occupants(pd);
            const bool ok = std::any_of(occ.begin(), occ.end(), [&](const Cell* c) { return chk.cell(c->id, n); });
            if (!ok) {
                rep.axiom_i = false;
                rep.violations.push_back(
                    {1, k, to_string(pd),
                     occ.empty() ? "niche has no occupant"
                                 : "none of " + std::to_string(occ.size()) + " occupant(s) is universal"});
            }
        }
    }

    for (int d = 2; d <= n + 1; ++d) {
        for (const Cell* u : x.enumerate_cells(d, niche_bound(x, d, opt))) {
            if (!chk.cell(u->id, n)) continue;
            const auto nodes = u->source->preorder();
            if (!std::all_of(nodes.begin(), nodes.end(), [&](const CellId& c) { return chk.cell(c, n); })) continue;
            ++rep.composites_checked;
            if (!chk.cell(*u->target, n)) {
                rep.axiom_ii = false;
                rep.violations.push_back({2, d - 1, *u->target, "composite via universal " + u->id + " is not universal"});
            }
        }
    }
    return rep;
}

Json to_json(const FragmentBounds& b) {
    return {{"truncation", b.truncation}, {"virtual_ceiling", b.virtual_ceiling},
            {"enumeration_bound", b.enumeration_bound}};
}

Json to_json(const UniversalityReport& r) {
    Json trace = Json::array();
    for (const auto& t : r.trace)
        trace.push_back({{"dimension", t.dimension}, {"object", t.object}, {"verdict", t.verdict}, {"detail", t.detail}});
    return {{"subject", r.subject},           {"n", r.n},         {"verdict", r.verdict},
            {"trace", trace},                 {"bounds", to_json(r.bounds)},
            {"max_dimension_touched", r.max_dimension_touched}};
}

Json to_json(const AxiomReport& r) {
    Json v = Json::array();
    for (const auto& a : r.violations)
        v.push_back({{"axiom", a.axiom}, {"dimension", a.dimension}, {"object", a.object}, {"detail", a.detail}});
    return {{"n", r.n},
            {"ok", r.ok()},
            {"axiom_i", r.axiom_i},
            {"axiom_ii", r.axiom_ii},
            {"niches_checked", r.niches_checked},
            {"composites_checked", r.composites_checked},
            {"violations", v},
            {"bounds", to_json(r.bounds)}};
}

}  // namespace unicell
