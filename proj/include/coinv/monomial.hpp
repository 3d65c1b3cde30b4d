#ifndef COINV_MONOMIAL_HPP
#define COINV_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace coinv {

// Dense exponent-vector monomial. Comparison is graded reverse
// lexicographic over the ambient variable list, with variable 0 highest:
// higher total degree wins, ties go to the monomial whose rightmost
// (lowest-priority) differing exponent is smaller.
class Monomial {
public:
    explicit Monomial(std::size_t nvars)
        : exps_(nvars, 0), degree_(0)
    {
    }

    static Monomial of(std::vector<std::uint16_t> exps);
    static Monomial variable(std::size_t nvars, std::size_t index,
                             std::uint16_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint16_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return exps_; }
    bool is_unit() const { return degree_ == 0; }

    bool divides(const Monomial& m) const;
    bool coprime(const Monomial& m) const;

    Monomial operator*(const Monomial& m) const;
    // Exact division; caller guarantees divisibility.
    Monomial divided_by(const Monomial& m) const;
    Monomial pow(std::uint16_t e) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& m) const = default;
    std::strong_ordering operator<=>(const Monomial& m) const;

private:
    std::vector<std::uint16_t> exps_;
    std::uint32_t degree_;
};

inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b)
{
    return a <=> b;
}

// Descending comparator, for term maps ordered lead-first.
struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return a > b;
    }
};

// All monomials of the given total degree, listed in descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

// Number of such monomials, saturating at UINT64_MAX on overflow.
std::uint64_t monomial_count(std::size_t nvars, std::uint32_t d);

} // namespace coinv

#endif
