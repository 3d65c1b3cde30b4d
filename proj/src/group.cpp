#include "coinv/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coinv/error.hpp"

namespace coinv {

std::string GroupElement::word_string() const
{
    if (word.empty())
        return "e";
    std::ostringstream out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out << "*";
        out << "g" << word[i];
    }
    return out.str();
}

GroupElement compose(const GroupElement& outer, const GroupElement& inner)
{
    GroupElement r{inner.action * outer.action, outer.word};
    r.word.insert(r.word.end(), inner.word.begin(), inner.word.end());
    return r;
}

std::vector<const GroupElement*> GroupRep::generator_elements() const
{
    std::vector<const GroupElement*> out;
    out.reserve(generators.size());
    for (std::size_t i : generators)
        out.push_back(&elements[i]);
    return out;
}

GroupRep generate_group(std::uint32_t p, const std::vector<MatrixGF>& gens,
                        std::size_t order_cap)
{
    expect(!gens.empty(), "need at least one generator");
    std::size_t n = gens.front().rows();
    expect(n > 0, "generators must be nonempty square matrices");
    for (const MatrixGF& g : gens) {
        expect(g.p() == p, "generator modulus differs from p");
        expect(g.rows() == n && g.cols() == n,
               "generators must be square matrices of one size");
        expect(invertible(g), "generator matrix is not invertible");
    }

    GroupRep G;
    G.p = p;
    G.nvars = n;

    auto key = [n](const MatrixGF& m) {
        std::vector<std::uint32_t> k(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                k[i * n + j] = m.at(i, j);
        return k;
    };

    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    G.elements.push_back({MatrixGF::identity(p, n), {}});
    seen.emplace(key(G.elements[0].action), 0);

    std::vector<GroupElement> gen_elems;
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi)
        gen_elems.push_back({gens[gi], {gi}});

    for (std::size_t head = 0; head < G.elements.size(); ++head) {
        for (const GroupElement& g : gen_elems) {
            GroupElement next = compose(G.elements[head], g);
            auto [it, fresh] = seen.emplace(key(next.action),
                                            G.elements.size());
            if (fresh) {
                expect(G.elements.size() < order_cap,
                       "group closure exceeds the order cap");
                G.elements.push_back(std::move(next));
            }
        }
    }

    std::size_t o = G.elements.size();
    while (o % p == 0)
        o /= p;
    expect(o == 1, "group order is not a power of p");

    // Generator indices in the closed list; closure guarantees presence.
    for (const GroupElement& g : gen_elems) {
        auto it = seen.find(key(g.action));
        self_check(it != seen.end(), "generator missing after closure");
        G.generators.push_back(it->second);
    }

    // A finite set closed under an associative product with identity and
    // cancellation is a group; verify inverses explicitly anyway.
    for (const GroupElement& e : G.elements) {
        bool found = false;
        for (const GroupElement& f : G.elements)
            if ((e.action * f.action).is_identity()) {
                found = true;
                break;
            }
        self_check(found, "closure is missing an inverse");
    }
    return G;
}

std::vector<Polynomial> variable_images(const RingPtr& ring,
                                        const GroupElement& g)
{
    expect(g.action.cols() == ring->nvars() &&
               g.action.rows() == ring->nvars(),
           "group element does not match the ring's variable count");
    expect(g.action.p() == ring->p(), "group element modulus differs");
    std::vector<Polynomial> images;
    images.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < ring->nvars(); ++j) {
            std::uint32_t c = g.action.at(i, j);
            if (c != 0)
                terms.push_back({Monomial::variable(ring->nvars(), j), c});
        }
        images.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return images;
}

Polynomial act(const GroupElement& g, const Polynomial& f)
{
    return substitute_linear(f, variable_images(f.ring(), g));
}

std::vector<Polynomial> orbit(const Polynomial& f, const GroupRep& G)
{
    std::vector<Polynomial> out;
    for (const GroupElement& g : G.elements) {
        Polynomial h = act(g, f);
        bool dup = false;
        for (const Polynomial& o : out)
            if (o == h) {
                dup = true;
                break;
            }
        if (!dup)
            out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), poly_less);

    // Orbit-stabilizer: variable orbits have size dividing |G|.
    if (f.terms().size() == 1 && f.degree() == 1 && f.lead_coeff() == 1)
        self_check(G.order() % out.size() == 0,
                   "variable orbit size does not divide the group order");
    return out;
}

bool is_invariant(const Polynomial& f, const GroupRep& G)
{
    for (const GroupElement* g : G.generator_elements())
        if (!(act(*g, f) == f))
            return false;
    return true;
}

Polynomial norm(const Polynomial& f, const GroupRep& G)
{
    std::vector<Polynomial> orb = orbit(f, G);
    Polynomial r = Polynomial::one(f.ring());
    for (const Polynomial& h : orb)
        r = r * h;
    self_check(is_invariant(r, G), "orbit product failed invariance");
    return r;
}

} // namespace coinv
