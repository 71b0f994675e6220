#include "unicell/opetopic_set.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "unicell/boundary.hpp"

namespace unicell {

struct OpetopicSet::Cache {
    std::mutex mu;
    std::unordered_map<std::string, Boundary> boundaries;
    // niche key -> filler (nullptr when the niche has no filler)
    std::unordered_map<std::string, const Cell*> fillers;
    std::unordered_map<CellId, std::unique_ptr<Cell>> virtual_cells;
};

OpetopicSet::OpetopicSet() : cache_(std::make_unique<Cache>()) {}

OpetopicSet::OpetopicSet(std::string name, int truncation, int virtual_ceiling, std::vector<Cell> cells)
    : name_(std::move(name)),
      truncation_(truncation),
      virtual_ceiling_(virtual_ceiling),
      cells_(std::move(cells)),
      cache_(std::make_unique<Cache>()) {
    if (truncation_ < 0) throw DataError("truncation must be >= 0");
    if (virtual_ceiling_ < truncation_) throw DataError("virtual_ceiling must be >= truncation");
    if (virtual_ceiling_ > truncation_ && truncation_ < 1)
        throw DataError("virtual levels need truncation >= 1");
    build_indices();
}

OpetopicSet::OpetopicSet(const OpetopicSet& other)
    : OpetopicSet(other.name_, other.truncation_, other.virtual_ceiling_, other.cells_) {}

OpetopicSet& OpetopicSet::operator=(const OpetopicSet& other) {
    if (this != &other) *this = OpetopicSet(other);
    return *this;
}

OpetopicSet::OpetopicSet(OpetopicSet&& other) noexcept
    : name_(std::move(other.name_)),
      truncation_(other.truncation_),
      virtual_ceiling_(other.virtual_ceiling_),
      cells_(std::move(other.cells_)),
      by_id_(std::move(other.by_id_)),
      by_source_(std::move(other.by_source_)),
      by_target_(std::move(other.by_target_)),
      by_dim_(std::move(other.by_dim_)),
      cache_(std::move(other.cache_)),
      max_touched_(other.max_touched_.load()) {}

OpetopicSet& OpetopicSet::operator=(OpetopicSet&& other) noexcept {
    name_ = std::move(other.name_);
    truncation_ = other.truncation_;
    virtual_ceiling_ = other.virtual_ceiling_;
    cells_ = std::move(other.cells_);
    by_id_ = std::move(other.by_id_);
    by_source_ = std::move(other.by_source_);
    by_target_ = std::move(other.by_target_);
    by_dim_ = std::move(other.by_dim_);
    cache_ = std::move(other.cache_);
    max_touched_.store(other.max_touched_.load());
    return *this;
}

OpetopicSet::~OpetopicSet() = default;

void OpetopicSet::build_indices() {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        Cell& c = cells_[i];
        c.is_virtual = false;
        if (c.id.empty()) throw DataError("cell with empty id");
        if (c.id.front() == '~') throw DataError("cell id '" + c.id + "' uses the reserved '~' prefix");
        if (!by_id_.emplace(c.id, i).second) throw DataError("duplicate cell id '" + c.id + "'");
        if (c.dim < 0) throw DataError("cell '" + c.id + "' has negative dimension");
        if (c.dim > truncation_)
            throw DataError("cell '" + c.id + "' lies above the truncation " + std::to_string(truncation_));
        if (c.dim == 0) {
            if (c.source || c.target) throw DataError("0-cell '" + c.id + "' cannot have source or target");
        } else {
            if (!c.source || !c.target) throw DataError("cell '" + c.id + "' needs a source and a target");
            if (c.source->dim != c.dim - 1)
                throw DataError("source of '" + c.id + "' has dimension " + std::to_string(c.source->dim));
            by_source_[c.source->key()].push_back(i);
            by_target_[*c.target].push_back(i);
        }
        by_dim_[c.dim].push_back(i);
    }
}

void OpetopicSet::touch(int d) const {
    int cur = max_touched_.load();
    while (d > cur && !max_touched_.compare_exchange_weak(cur, d)) {
    }
}

void OpetopicSet::check_ceiling(int d, const char* what) const {
    if (d > virtual_ceiling_)
        throw FragmentTooShallow(d, std::string(what) + " above virtual ceiling " +
                                        std::to_string(virtual_ceiling_));
}

std::vector<const Cell*> OpetopicSet::cells_of_dim(int d) const {
    std::vector<const Cell*> out;
    auto it = by_dim_.find(d);
    if (it != by_dim_.end())
        for (auto i : it->second) out.push_back(&cells_[i]);
    return out;
}

const Cell* OpetopicSet::find(const CellId& id) const {
    if (auto it = by_id_.find(id); it != by_id_.end()) return &cells_[it->second];
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->virtual_cells.find(id); it != cache_->virtual_cells.end()) return it->second.get();
    return nullptr;
}

const Cell& OpetopicSet::at(const CellId& id) const {
    if (const Cell* c = find(id)) return *c;
    throw DataError("unknown cell '" + id + "'");
}

const Boundary& OpetopicSet::boundary(const PastingDiagram& pd) const {
    const std::string key = pd.key();
    {
        std::lock_guard lock(cache_->mu);
        if (auto it = cache_->boundaries.find(key); it != cache_->boundaries.end()) return it->second;
    }
    Boundary b = compute_boundary(*this, pd);
    std::lock_guard lock(cache_->mu);
    return cache_->boundaries.emplace(key, std::move(b)).first->second;
}

namespace {

std::string hash_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace

const Cell* OpetopicSet::virtual_filler(const PastingDiagram& source) const {
    const int d = source.dim + 1;
    if (!is_virtual_dim(d)) throw DataError("virtual filler requested at materialized dimension");
    check_ceiling(d, "virtual filler");
    const std::string key = source.key();
    {
        std::lock_guard lock(cache_->mu);
        if (auto it = cache_->fillers.find(key); it != cache_->fillers.end()) return it->second;
    }
    const Boundary& b = boundary(source);
    auto targets = frame_occupants(b.leaf, b.target);
    if (targets.size() > 1)
        throw DataError("virtual filler for niche " + to_string(source) + " is ambiguous: " +
                        std::to_string(targets.size()) + " candidate targets");
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->fillers.find(key); it != cache_->fillers.end()) return it->second;
    const Cell* result = nullptr;
    if (!targets.empty()) {
        std::string id = "~" + std::to_string(d) + ":" + hash_hex(key);
        for (int salt = 1; cache_->virtual_cells.count(id) || by_id_.count(id); ++salt)
            id = "~" + std::to_string(d) + ":" + hash_hex(key + "#" + std::to_string(salt));
        auto cell = std::make_unique<Cell>(Cell{id, d, source, targets.front()->id, true});
        result = cell.get();
        cache_->virtual_cells.emplace(id, std::move(cell));
    }
    cache_->fillers.emplace(key, result);
    return result;
}

std::vector<const Cell*> OpetopicSet::niche_occupants(const PastingDiagram& source) const {
    const int d = source.dim + 1;
    check_ceiling(d, "niche");
    touch(d);
    std::vector<const Cell*> out;
    if (is_virtual_dim(d)) {
        if (const Cell* f = virtual_filler(source)) out.push_back(f);
        return out;
    }
    if (auto it = by_source_.find(source.key()); it != by_source_.end())
        for (auto i : it->second) out.push_back(&cells_[i]);
    return out;
}

std::vector<const Cell*> OpetopicSet::frame_occupants(const PastingDiagram& source, const CellId& target) const {
    auto all = niche_occupants(source);
    std::vector<const Cell*> out;
    for (const Cell* c : all)
        if (*c->target == target) out.push_back(c);
    return out;
}

std::vector<PastingDiagram> OpetopicSet::enumerate_diagrams(int node_dim, std::size_t max_nodes,
                                                            const CellId* root_target) const {
    std::vector<PastingDiagram> out;
    if (max_nodes == 0) return out;
    if (node_dim > truncation_)
        throw FragmentTooShallow(node_dim, "enumeration of virtual cells as diagram nodes");
    touch(node_dim);
    auto nodes = cells_of_dim(node_dim);
    if (node_dim == 0) {
        for (const Cell* c : nodes) out.push_back(PastingDiagram::single(0, c->id));
        return out;
    }

    // Trees rooted at cells with the given target, using at most `budget` nodes.
    std::function<std::vector<std::pair<PdNode, std::size_t>>(const CellId*, std::size_t)> grow;
    grow = [&](const CellId* tgt, std::size_t budget) {
        std::vector<std::pair<PdNode, std::size_t>> trees;
        if (budget == 0) return trees;
        std::vector<const Cell*> roots;
        if (tgt) {
            if (auto it = by_target_.find(*tgt); it != by_target_.end())
                for (auto i : it->second)
                    if (cells_[i].dim == node_dim) roots.push_back(&cells_[i]);
        } else {
            roots = nodes;
        }
        for (const Cell* r : roots) {
            const auto positions = r->source->preorder();
            // Partial trees after deciding slots [0, i).
            std::vector<std::pair<PdNode, std::size_t>> partial{{PdNode{r->id, {}}, 1}};
            for (std::size_t slot = 0; slot < positions.size() && node_dim >= 1; ++slot) {
                std::vector<std::pair<PdNode, std::size_t>> next;
                for (auto& [tree, used] : partial) {
                    next.emplace_back(tree, used);
                    if (used >= budget) continue;
                    for (auto& [sub, n] : grow(&positions[slot], budget - used)) {
                        PdNode t = tree;
                        t.children.push_back(PdEdge{slot, sub});
                        next.emplace_back(std::move(t), used + n);
                    }
                }
                partial = std::move(next);
            }
            for (auto& p : partial) trees.push_back(std::move(p));
        }
        return trees;
    };

    for (auto& [tree, n] : grow(root_target, max_nodes)) out.push_back(PastingDiagram{node_dim, std::move(tree)});
    return out;
}

std::vector<const Cell*> OpetopicSet::enumerate_cells(int d, std::size_t max_nodes) const {
    check_ceiling(d, "enumeration");
    if (!is_virtual_dim(d)) {
        touch(d);
        return cells_of_dim(d);
    }
    if (d > truncation_ + 1)
        throw FragmentTooShallow(d - 1, "enumerating virtual cells needs materialized nodes");
    std::vector<const Cell*> out;
    for (const auto& pd : enumerate_diagrams(d - 1, max_nodes)) {
        const Cell* f = nullptr;
        try {
            f = virtual_filler(pd);
        } catch (const DataError&) {
            continue;  // ill-formed tree from loose data; not a niche
        }
        if (f) out.push_back(f);
    }
    touch(d);
    return out;
}

std::vector<const Cell*> OpetopicSet::cells_with_target(const CellId& target, std::size_t max_nodes) const {
    const Cell& t = at(target);
    const int d = t.dim + 1;
    check_ceiling(d, "target query");
    touch(d);
    std::vector<const Cell*> out;
    if (!is_virtual_dim(d)) {
        if (auto it = by_target_.find(target); it != by_target_.end())
            for (auto i : it->second) out.push_back(&cells_[i]);
        return out;
    }
    if (d > truncation_ + 1)
        throw FragmentTooShallow(d - 1, "target query at a virtual level needs materialized nodes");
    if (t.dim == 0) return out;
    // A filler's target has source = leaf(niche) and target = target(root).
    for (const auto& pd : enumerate_diagrams(d - 1, max_nodes, &*t.target)) {
        const Boundary* b = nullptr;
        try {
            b = &boundary(pd);
        } catch (const DataError&) {
            continue;
        }
        if (!(b->leaf == *t.source)) continue;
        if (const Cell* f = virtual_filler(pd); f && *f->target == target) out.push_back(f);
    }
    return out;
}

std::size_t OpetopicSet::virtual_cell_count() const {
    std::lock_guard lock(cache_->mu);
    return cache_->virtual_cells.size();
}

std::vector<const Cell*> two_ary_cells(const OpetopicSet& x, int m) {
    std::vector<const Cell*> out;
    if (m < 2) return out;
    for (const Cell* c : x.enumerate_cells(m, 2))
        if (c->is_two_ary()) out.push_back(c);
    return out;
}

}  // namespace unicell
