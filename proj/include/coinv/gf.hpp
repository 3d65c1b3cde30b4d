#ifndef COINV_GF_HPP
#define COINV_GF_HPP

#include <cstdint>

namespace coinv {

bool is_prime(std::uint32_t n);

// Arithmetic context for the prime field GF(p). Elements are canonical
// residues in [0, p). p is kept small enough that products fit in 64 bits.
class Gf {
public:
    explicit Gf(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const
    {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }

    // Inverse via the extended Euclidean algorithm; a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Canonical residue of an arbitrary signed integer.
    std::uint32_t reduce(std::int64_t v) const;

    // Binomial coefficient mod p via Lucas' digit-wise product.
    std::uint32_t binomial(std::uint64_t n, std::uint64_t k) const;

    bool operator==(const Gf& o) const { return p_ == o.p_; }

private:
    std::uint32_t small_binomial(std::uint32_t n, std::uint32_t k) const;

    std::uint32_t p_;
};

} // namespace coinv

#endif
