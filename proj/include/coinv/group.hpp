#ifndef COINV_GROUP_HPP
#define COINV_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coinv/matrix.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

// One group element, stored by its action on the variable set: row i of
// `action` is the image of variable i as a linear form.
struct GroupElement {
    MatrixGF action;
    std::vector<std::uint32_t> word; // generator indices, empty = identity

    std::string word_string() const;
};

// Substitution composition: act(compose(outer, inner), f) equals
// act(outer, act(inner, f)). Substitution matrices compose contravariantly,
// so the stored product is inner.action * outer.action.
GroupElement compose(const GroupElement& outer, const GroupElement& inner);

// A finite p-group presented by generator actions on the variables, with
// the full element list precomputed by breadth-first closure.
struct GroupRep {
    std::uint32_t p = 2;
    std::size_t nvars = 0;
    std::vector<GroupElement> elements; // BFS order, identity first
    std::vector<std::size_t> generators; // indices into `elements`

    std::size_t order() const { return elements.size(); }
    const GroupElement& identity() const { return elements.front(); }
    std::vector<const GroupElement*> generator_elements() const;
};

inline constexpr std::size_t kDefaultGroupOrderCap = 4096;

// Breadth-first closure of the generating set. Errors on a non-invertible
// generator, a group order that is not a power of p, or a closure larger
// than `order_cap`.
GroupRep generate_group(std::uint32_t p, const std::vector<MatrixGF>& gens,
                        std::size_t order_cap = kDefaultGroupOrderCap);

// Images of the variables under g, as linear forms over `ring`.
std::vector<Polynomial> variable_images(const RingPtr& ring,
                                        const GroupElement& g);

Polynomial act(const GroupElement& g, const Polynomial& f);

// The set {act(g, f) : g in G}, deduplicated, in a deterministic order.
std::vector<Polynomial> orbit(const Polynomial& f, const GroupRep& G);

// True iff every generator fixes f (generators suffice).
bool is_invariant(const Polynomial& f, const GroupRep& G);

// Product over the orbit of f; invariant by construction (re-checked).
Polynomial norm(const Polynomial& f, const GroupRep& G);

} // namespace coinv

#endif
