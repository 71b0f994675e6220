#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unicell/io.hpp"
#include "unicell/opetopic_set.hpp"

namespace unicell {

struct Morphism {
    std::string id;
    std::string src;
    std::string tgt;
};

/// Finite category with an explicit composition table. The constructor
/// checks totality, identity laws and associativity exhaustively and throws
/// DataError naming the first failing morphisms.
class FiniteCategory {
public:
    FiniteCategory() = default;
    /// `compose` entries are (g, f, g∘f).
    FiniteCategory(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   std::map<std::string, std::string> identities,
                   const std::vector<std::array<std::string, 3>>& compose);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Morphism>& morphisms() const { return morphisms_; }
    const Morphism& morphism(const std::string& id) const;
    const std::string& identity(const std::string& object) const;
    bool is_identity(const std::string& id) const;
    /// g∘f; throws DataError when not composable.
    const std::string& compose(const std::string& g, const std::string& f) const;
    std::vector<std::string> hom(const std::string& a, const std::string& b) const;

    std::vector<std::array<std::string, 3>> composition_table() const;

private:
    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::string> identities_;
    std::map<std::pair<std::string, std::string>, std::string> compose_;
};

// {objects, morphisms: [{id, src, tgt}], identities: {object: morphism},
//  compose: [[g, f, gf]]}, optional "name".
FiniteCategory category_from_json(const Json& j);
Json to_json(const FiniteCategory& c);

/// Poset on objects "0".."n-1" with the given strict relations (closed
/// transitively). Morphisms are named id_i and f_i_j.
FiniteCategory poset_category(std::string name, int n, const std::vector<std::pair<int, int>>& less);
/// One-object category from a monoid multiplication table over elements
/// "e", "m1", ... ; `table[a][b]` is the index of a·b, element 0 the unit.
FiniteCategory monoid_category(std::string name, const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table);
/// Cyclic monoid <x | x^(tail+period) = x^tail>.
FiniteCategory cyclic_monoid(int tail, int period);

/// Morphisms f admitting g with g∘f = id and f∘g = id, by table search.
std::set<std::string> isomorphism_oracle(const FiniteCategory& c);

struct NerveOptions {
    int max_string = 2;      // L: longest composable string given a 2-cell
    int truncation = 3;      // D: materialized up to here
    int virtual_ceiling = 6; // D_v
    int tree_bound = 3;      // node bound for materialized fillers in dims 3..D
};

/// Nerve of a finite category: objects, morphisms, one 2-cell per
/// composable string of length <= L targeting its composite, unique
/// fillers in dims 3..D, virtual fillers above.
OpetopicSet nerve_of_category(const FiniteCategory& c, const NerveOptions& opt = {});

/// Identifier of the nerve 2-cell for a composable string (first arrow first).
std::string string_cell_id(const std::vector<std::string>& arrows);

/// A 2-category whose hom-categories are preorders: a 2-cell p => q exists
/// (uniquely) iff p <= q. `leq` lists generating pairs; the constructor
/// closes them reflexively and transitively and checks compatibility with
/// composition on both sides.
class ThinTwoCategory {
public:
    ThinTwoCategory(FiniteCategory base, const std::vector<std::pair<std::string, std::string>>& leq);

    const FiniteCategory& base() const { return base_; }
    bool leq(const std::string& p, const std::string& q) const { return leq_.count({p, q}) > 0; }
    bool equivalent(const std::string& p, const std::string& q) const { return leq(p, q) && leq(q, p); }

private:
    FiniteCategory base_;
    std::set<std::pair<std::string, std::string>> leq_;
};

/// Opetopic set of a locally preordered 2-category: 2-cells are pairs
/// (composable string of length <= L, parallel h with composite <= h);
/// everything above dimension 2 is virtual.
OpetopicSet opetopic_set_of(const ThinTwoCategory& c, std::string name, int max_string = 2, int virtual_ceiling = 5);

/// Brute force: f is an equivalence iff some g has g∘f ≅ id and f∘g ≅ id.
std::set<std::string> equivalence_oracle(const ThinTwoCategory& c);

}  // namespace unicell
