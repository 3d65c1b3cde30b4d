#ifndef COINV_POLYNOMIAL_HPP
#define COINV_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coinv/gf.hpp"
#include "coinv/monomial.hpp"

namespace coinv {

// Ambient polynomial ring context: the field GF(p) and an ordered variable
// list. Index order doubles as monomial-order priority (index 0 highest),
// so module constructors list terminal variables first.
struct PolyRing {
    Gf field;
    std::vector<std::string> vars;

    std::uint32_t p() const { return field.p(); }
    std::size_t nvars() const { return vars.size(); }
    std::size_t var_index(const std::string& name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    std::uint32_t coeff; // never zero in a stored polynomial

    bool operator==(const Term&) const = default;
};

// Multivariate polynomial over GF(p). Terms are kept in strictly
// descending monomial order with nonzero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, std::uint32_t c);
    static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, std::uint32_t c = 1);
    // Normalizes: merges duplicate monomials, drops zeros, sorts descending.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& lead_monomial() const;
    std::uint32_t lead_coeff() const;

    // Total degree of the highest term; zero polynomial has degree 0.
    std::uint32_t degree() const;
    bool is_homogeneous() const;
    // Highest exponent of the given variable across all terms.
    std::uint16_t deg_in_var(std::size_t var) const;

    std::uint32_t coeff(const Monomial& m) const;
    // Sum of the terms whose exponent of `var` equals e, divided by var^e.
    Polynomial coefficient_in_var(std::size_t var, std::uint16_t e) const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial negated() const;
    Polynomial times_monomial(const Monomial& m, std::uint32_t c = 1) const;
    Polynomial monic() const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& g) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Arbitrary total order on polynomials of one ring, for deterministic sets.
bool poly_less(const Polynomial& a, const Polynomial& b);

// Replace each variable by its image and expand. Every image must be a
// homogeneous linear form (or zero) in the same ring.
Polynomial substitute_linear(const Polynomial& f,
                             const std::vector<Polynomial>& images);

} // namespace coinv

#endif
