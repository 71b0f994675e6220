#include "unicell/span.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace unicell {

namespace {

enum class Leg { S1, S2, T };

Leg left_role(std::size_t i) {
    switch (i % 4) {
        case 1: return Leg::S2;
        case 3: return Leg::S1;
        default: return Leg::T;
    }
}

Leg right_role(std::size_t i) {
    switch (i % 4) {
        case 2: return Leg::S1;
        case 0: return Leg::S2;
        default: return Leg::T;
    }
}

const CellId& leg(const Cell& w, Leg l) {
    switch (l) {
        case Leg::S1: return s1(w);
        case Leg::S2: return s2(w);
        default: return *w.target;
    }
}

std::size_t slot_of(Leg l) { return l == Leg::S1 ? 0 : 1; }

// Candidate generation for chain components at one dimension.
class Search {
public:
    Search(const OpetopicSet& x, UniversalityChecker& chk, int n, int dim) : x_(x), chk_(chk), n_(n), dim_(dim) {
        if (!x_.is_virtual_dim(dim_)) {
            for (const Cell* c : x_.cells_of_dim(dim_))
                if (c->is_two_ary()) by_root_[s1(*c)].push_back(c);
        }
    }

    bool usable(const Cell* w) { return w->is_two_ary() && chk_.cell(w->id, n_); }

    // 2-ary cells with root `root` and child pasted at `slot`.
    std::vector<const Cell*> rooted(const CellId& root, std::size_t slot) {
        std::vector<const Cell*> out;
        if (!x_.is_virtual_dim(dim_)) {
            if (auto it = by_root_.find(root); it != by_root_.end())
                for (const Cell* w : it->second)
                    if (paste_slot(*w) == slot && usable(w)) out.push_back(w);
            return out;
        }
        const Cell& r = x_.at(root);
        const auto positions = r.source->preorder();
        if (slot >= positions.size()) return out;
        for (const Cell* child : x_.cells_with_target(positions[slot]))
            for (const Cell* w : x_.niche_occupants(PastingDiagram::binary(dim_ - 1, root, slot, child->id)))
                if (usable(w)) out.push_back(w);
        return out;
    }

    std::vector<const Cell*> rooted_any(const CellId& root) {
        std::vector<const Cell*> out;
        const std::size_t slots = x_.at(root).arity();
        for (std::size_t p = 0; p < slots; ++p)
            for (const Cell* w : rooted(root, p)) out.push_back(w);
        return out;
    }

    std::vector<const Cell*> pasted(const CellId& root, std::size_t slot, const CellId& child) {
        std::vector<const Cell*> out;
        if (!x_.is_virtual_dim(dim_)) {
            for (const Cell* w : rooted(root, slot))
                if (s2(*w) == child) out.push_back(w);
            return out;
        }
        for (const Cell* w : x_.niche_occupants(PastingDiagram::binary(dim_ - 1, root, slot, child)))
            if (usable(w)) out.push_back(w);
        return out;
    }

    std::vector<const Cell*> targeted(const CellId& t) {
        std::vector<const Cell*> out;
        for (const Cell* w : x_.cells_with_target(t))
            if (usable(w)) out.push_back(w);
        return out;
    }

private:
    const OpetopicSet& x_;
    UniversalityChecker& chk_;
    int n_;
    int dim_;
    std::map<CellId, std::vector<const Cell*>> by_root_;
};

void check_cap(std::size_t size, int level, const SpanOptions& opt) {
    if (size > opt.level_cap)
        throw SpanCapExceeded("span level " + std::to_string(level) + " exceeds cap of " +
                              std::to_string(opt.level_cap) + " tuples");
}

void require_level(const CompositionSpan& s, int j) {
    const int needed = s.k + j + 1;
    if (needed > s.x1.base().virtual_ceiling())
        throw FragmentTooShallow(needed, "span level " + std::to_string(j));
    if (j >= 1 && static_cast<int>(s.levels.size()) < j)
        throw DataError("span level " + std::to_string(j) + " requested before level " + std::to_string(j - 1));
}

bool tuple_less(const SpanTuple& a, const SpanTuple& b) {
    if (a.components != b.components) return a.components < b.components;
    if (a.frame_source != b.frame_source) return a.frame_source < b.frame_source;
    return a.frame_target < b.frame_target;
}

// Sorts, dedups, and splits off tuples failing the commutativity check.
std::vector<SpanTuple> finish_level(const CompositionSpan& s, std::vector<SpanTuple> raw,
                                    std::vector<SpanRejection>* rejected) {
    std::sort(raw.begin(), raw.end(), tuple_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<SpanTuple> out;
    for (auto& t : raw) {
        std::string problem = commutativity_problem(s, t);
        if (problem.empty()) {
            out.push_back(std::move(t));
        } else if (rejected) {
            rejected->push_back({t.level, t.components, std::move(problem)});
        }
    }
    return out;
}

bool parallel(const SpanTuple& a, const SpanTuple& b) {
    return a.frame_source == b.frame_source && a.frame_target == b.frame_target;
}

}  // namespace

SpanOptions span_options_from_env() {
    SpanOptions opt;
    if (const char* v = std::getenv("UNICELL_SPAN_CAP")) {
        try {
            opt.level_cap = std::stoull(v);
        } catch (const std::exception&) {
            throw DataError(std::string("UNICELL_SPAN_CAP is not a number: '") + v + "'");
        }
    }
    return opt;
}

CellId left_leg(const Cell& w, std::size_t i) { return leg(w, left_role(i)); }
CellId right_leg(const Cell& w, std::size_t i) { return leg(w, right_role(i)); }
bool is_constrained_position(std::size_t i) { return i % 4 == 0 || i % 4 == 1; }

std::vector<const Cell*> universal_2ary(const OpetopicSet& x, int m, int n, UniversalityChecker& chk) {
    std::vector<const Cell*> out;
    for (const Cell* c : two_ary_cells(x, m))
        if (chk.cell(c->id, n)) out.push_back(c);
    return out;
}

CompositionSpan make_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n) {
    const Cell& fc = x.at(f);
    const Cell& cc = x.at(c);
    if (fc.dim < 1) throw DataError("'" + f + "' is a 0-cell; spans need k >= 1");
    const Cell& b = x.at(*fc.target);
    if (cc.dim != b.dim) throw DataError("'" + c + "' does not have the dimension of t(" + f + ") = " + b.id);
    if (b.dim >= 1 && !(*cc.source == *b.source && *cc.target == *b.target))
        throw DataError("'" + c + "' does not share the frame of t(" + f + ") = " + b.id);
    CompositionSpan s{f,
                      c,
                      n,
                      fc.dim,
                      HomStructure(x, PastingDiagram::single(fc.dim - 1, b.id), c),
                      HomStructure(x, *fc.source, c),
                      {},
                      {},
                      bounds_of(x)};
    return s;
}

std::vector<SpanTuple> build_c0(const CompositionSpan& s, UniversalityChecker& chk) {
    require_level(s, 0);
    const OpetopicSet& x = s.x1.base();
    std::vector<SpanTuple> raw;
    for (const Cell* beta : s.x1.level0())
        for (const Cell* u : x.niche_occupants(PastingDiagram::binary(s.k, beta->id, 0, s.f)))
            if (chk.cell(u->id, s.n))
                raw.push_back(SpanTuple{0, {u->id}, {}, beta->id, *u->target, std::nullopt, std::nullopt});
    return finish_level(s, std::move(raw), nullptr);
}

std::vector<SpanTuple> build_c1(const CompositionSpan& s, UniversalityChecker& chk, std::vector<SpanRejection>* rejected,
                                const SpanOptions& opt) {
    require_level(s, 1);
    const OpetopicSet& x = s.x1.base();
    const auto& c0 = s.levels.at(0);
    Search search(x, chk, s.n, s.k + 2);
    std::vector<SpanTuple> raw;
    for (std::size_t t2 = 0; t2 < c0.size(); ++t2) {
        const CellId& u2 = c0[t2].components.front();
        // {u | s1(u) = u2}, keyed by the middle t(u)
        std::multimap<CellId, const Cell*> left;
        for (const Cell* u : search.rooted(u2, 0))
            if (s.x1.contains(s2(*u), 1)) left.emplace(*u->target, u);
        if (left.empty()) continue;
        for (std::size_t t1 = 0; t1 < c0.size(); ++t1) {
            const CellId& u1 = c0[t1].components.front();
            // {u' | s2(u') = u1}
            for (const Cell* tgt : s.x2.level0())
                for (const Cell* xcell : s.x2.frame_cells(c0[t1].tau_image, tgt->id, 1))
                    for (const Cell* up : search.pasted(xcell->id, 0, u1)) {
                        auto [lo, hi] = left.equal_range(*up->target);
                        for (auto it = lo; it != hi; ++it) {
                            const Cell* u = it->second;
                            raw.push_back(SpanTuple{1, {u->id, up->id}, {*up->target}, s2(*u), s1(*up), t1, t2});
                            check_cap(raw.size(), 1, opt);
                        }
                    }
        }
    }
    return finish_level(s, std::move(raw), rejected);
}

std::vector<SpanTuple> build_cj(const CompositionSpan& s, int j, UniversalityChecker& chk,
                                std::vector<SpanRejection>* rejected, const SpanOptions& opt) {
    if (j < 1) throw DataError("build_cj needs j >= 1");
    require_level(s, j);
    const OpetopicSet& x = s.x1.base();
    const auto& prev = s.levels.at(j - 1);
    const std::size_t len = std::size_t{1} << j;
    Search search(x, chk, s.n, s.k + j + 1);
    std::vector<SpanTuple> raw;

    for (std::size_t ti = 0; ti < prev.size(); ++ti) {
        const SpanTuple& alpha = prev[ti];
        // Slot of alpha's m-th component (0-based) facing the new chain.
        auto facing_slot = [&](std::size_t m) -> std::size_t {
            if (j == 1) return 0;
            const std::size_t pos = m + 1;
            return slot_of(pos % 2 == 1 ? left_role(pos) : right_role(pos));
        };
        std::vector<const Cell*> chain;
        std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t i, std::size_t m) {
            if (i > len) {
                SpanTuple t{j, {}, {}, s2(*chain.front()), right_leg(*chain.back(), len), std::nullopt, ti};
                for (std::size_t p = 0; p < len; ++p) {
                    t.components.push_back(chain[p]->id);
                    if (p + 1 < len) t.middles.push_back(right_leg(*chain[p], p + 1));
                }
                if (j == 1) {
                    const CellId& u1 = s2(*chain.back());
                    for (std::size_t q = 0; q < prev.size(); ++q)
                        if (prev[q].components.front() == u1) t.frame_source = q;
                } else {
                    const Cell& sg = x.at(t.sigma_image);
                    const Cell& tu = x.at(t.tau_image);
                    if (sg.arity() == 1 && tu.arity() == 1)
                        for (std::size_t q = 0; q < prev.size() && !t.frame_source; ++q)
                            if (parallel(prev[q], alpha) && prev[q].sigma_image == sg.source->root.cell &&
                                prev[q].tau_image == tu.source->root.cell)
                                t.frame_source = q;
                }
                raw.push_back(std::move(t));
                check_cap(raw.size(), j, opt);
                return;
            }
            const Leg l = left_role(i);
            std::vector<const Cell*> cands;
            if (is_constrained_position(i)) {
                const CellId& pin = alpha.components.at(m);
                const std::size_t slot = facing_slot(m);
                if (i == 1) {
                    cands = search.rooted(pin, slot);
                } else {
                    const CellId phi = right_leg(*chain.back(), i - 1);
                    cands = l == Leg::S2 ? search.pasted(pin, slot, phi) : search.rooted(pin, slot);
                }
            } else {
                const CellId phi = right_leg(*chain.back(), i - 1);
                cands = l == Leg::T ? search.targeted(phi) : search.rooted_any(phi);
                if (j == 1) {
                    // The free s2 of the last position is the frame source.
                    std::vector<const Cell*> pinned;
                    for (const Cell* w : cands)
                        for (const auto& u : prev)
                            if (s2(*w) == u.components.front()) pinned.push_back(w);
                    cands = std::move(pinned);
                }
            }
            for (const Cell* w : cands) {
                if (i > 1 && leg(*w, l) != right_leg(*chain.back(), i - 1)) continue;
                if (is_constrained_position(i) && s1(*w) != alpha.components.at(m)) continue;
                chain.push_back(w);
                extend(i + 1, is_constrained_position(i) ? m + 1 : m);
                chain.pop_back();
            }
        };
        extend(1, 0);
    }
    return finish_level(s, std::move(raw), rejected);
}

std::string commutativity_problem(const CompositionSpan& s, const SpanTuple& t) {
    const OpetopicSet& x = s.x1.base();
    const std::size_t expected = std::size_t{1} << t.level;
    if (t.components.size() != expected)
        return "has " + std::to_string(t.components.size()) + " components, expected " + std::to_string(expected);
    if (t.level == 0) {
        const Cell& u = x.at(t.components.front());
        if (s2(u) != s.f) return "s2 is " + s2(u) + ", not " + s.f;
        if (!s.x1.contains(t.sigma_image, 0)) return "sigma image " + t.sigma_image + " is not a 0-cell of X(b, c)";
        if (!s.x2.contains(t.tau_image, 0)) return "tau image " + t.tau_image + " is not a 0-cell of X(a, c)";
        return {};
    }
    const int j = t.level;
    if (!s.x1.contains(t.sigma_image, j))
        return "sigma image " + t.sigma_image + " is not a " + std::to_string(j) + "-cell of X(b, c)";
    if (!s.x2.contains(t.tau_image, j))
        return "tau image " + t.tau_image + " is not a " + std::to_string(j) + "-cell of X(a, c)";
    const auto& prev = s.levels.at(j - 1);
    if (!t.frame_target || *t.frame_target >= prev.size()) return "no frame target";
    const SpanTuple& alpha = prev[*t.frame_target];
    const Cell& sg = x.at(t.sigma_image);
    const Cell& tu = x.at(t.tau_image);
    if (*sg.target != alpha.sigma_image)
        return "t(sigma) = " + *sg.target + " but sigma of the frame target is " + alpha.sigma_image;
    if (*tu.target != alpha.tau_image)
        return "t(tau) = " + *tu.target + " but tau of the frame target is " + alpha.tau_image;
    if (!t.frame_source || *t.frame_source >= prev.size()) return "no frame source matches the sigma/tau sources";
    const SpanTuple& theta = prev[*t.frame_source];
    if (!parallel(theta, alpha)) return "frame source and target are not parallel";
    if (!(*sg.source == PastingDiagram::single(sg.dim - 1, theta.sigma_image)))
        return "source of sigma is " + to_string(*sg.source) + " but sigma of the frame source is " + theta.sigma_image;
    if (!(*tu.source == PastingDiagram::single(tu.dim - 1, theta.tau_image)))
        return "source of tau is " + to_string(*tu.source) + " but tau of the frame source is " + theta.tau_image;
    return {};
}

CompositionSpan build_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n, int J,
                           UniversalityChecker& chk, const SpanOptions& opt) {
    if (J < 0) throw DataError("max level must be >= 0");
    CompositionSpan s = make_span(x, f, c, n);
    if (s.k + J + 1 > x.virtual_ceiling()) throw FragmentTooShallow(s.k + J + 1, "span up to level " + std::to_string(J));
    s.levels.push_back(build_c0(s, chk));
    check_cap(s.levels.back().size(), 0, opt);
    for (int j = 1; j <= J; ++j)
        s.levels.push_back(j == 1 ? build_c1(s, chk, &s.rejections, opt) : build_cj(s, j, chk, &s.rejections, opt));
    return s;
}

CompositionSpan build_span(const OpetopicSet& x, const CellId& f, const CellId& c, int n, int J,
                           const SpanOptions& opt) {
    UniversalityChecker chk(x);
    return build_span(x, f, c, n, J, chk, opt);
}

Json to_json(const SpanTuple& t) {
    Json j = {{"level", t.level},
              {"components", t.components},
              {"middles", t.middles},
              {"sigma", t.sigma_image},
              {"tau", t.tau_image}};
    if (t.frame_source) j["frame_source"] = *t.frame_source;
    if (t.frame_target) j["frame_target"] = *t.frame_target;
    return j;
}

Json to_json(const CompositionSpan& s) {
    Json levels = Json::array();
    for (const auto& level : s.levels) {
        Json l = Json::array();
        for (const auto& t : level) l.push_back(to_json(t));
        levels.push_back(std::move(l));
    }
    Json rej = Json::array();
    for (const auto& r : s.rejections)
        rej.push_back({{"level", r.level}, {"components", r.components}, {"reason", r.reason}});
    return {{"f", s.f},           {"c", s.c},           {"n", s.n},
            {"k", s.k},           {"levels", levels},   {"rejections", rej},
            {"bounds", to_json(s.bounds)}};
}

}  // namespace unicell
