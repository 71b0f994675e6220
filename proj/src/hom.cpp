#include "unicell/hom.hpp"

#include "unicell/validate.hpp"

namespace unicell {

HomStructure::HomStructure(const OpetopicSet& x, PastingDiagram source, CellId target)
    : x_(&x), offset_(source.dim + 1), source_(std::move(source)), target_(std::move(target)) {
    if (!frame_compatible(x, source_, target_))
        throw DataError("hom(" + to_string(source_) + ", " + target_ + "): source and target do not share a frame");
    level0_ = x.frame_occupants(source_, target_);
}

bool HomStructure::contains(const Cell& c, int j) const {
    if (j < 0 || c.dim != offset_ + j) return false;
    if (j == 0) return c.source && *c.source == source_ && *c.target == target_;
    auto key = std::make_pair(c.id, j);
    if (auto it = member_memo_.find(key); it != member_memo_.end()) return it->second;
    bool ok = true;
    if (j == 1 && c.source->size() != 1) ok = false;
    if (ok) {
        for (const auto& node : c.source->preorder())
            if (!contains(node, j - 1)) {
                ok = false;
                break;
            }
    }
    if (ok) ok = contains(*c.target, j - 1);
    member_memo_[key] = ok;
    return ok;
}

bool HomStructure::contains(const CellId& id, int j) const {
    const Cell* c = x_->find(id);
    return c && contains(*c, j);
}

std::vector<const Cell*> HomStructure::frame_cells(const CellId& from, const CellId& to, int j) const {
    std::vector<const Cell*> out;
    if (j < 1 || !contains(from, j - 1) || !contains(to, j - 1)) return out;
    auto pd = PastingDiagram::single(offset_ + j - 1, from);
    for (const Cell* c : x_->frame_occupants(pd, to))
        if (contains(*c, j)) out.push_back(c);
    return out;
}

std::vector<const Cell*> HomStructure::level(int j) const {
    if (j == 0) return level0_;
    std::vector<const Cell*> out;
    auto below = level(j - 1);
    for (const Cell* a : below)
        for (const Cell* b : below) {
            if (j >= 2 && !(*a->source == *b->source && *a->target == *b->target)) continue;
            for (const Cell* c : frame_cells(a->id, b->id, j)) out.push_back(c);
        }
    return out;
}

}  // namespace unicell
