#include "coinv/gf.hpp"

#include "coinv/error.hpp"

namespace coinv {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Gf::Gf(std::uint32_t p) : p_(p)
{
    expect(p >= 2, "field modulus must be at least 2");
    expect(p <= (1u << 20), "field modulus too large");
    expect(is_prime(p), "field modulus must be prime");
}

std::uint32_t Gf::inv(std::uint32_t a) const
{
    expect(a % p_ != 0, "division by zero in GF(p)");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

std::uint32_t Gf::pow(std::uint32_t a, std::uint64_t e) const
{
    std::uint32_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Gf::reduce(std::int64_t v) const
{
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0)
        m += p_;
    return static_cast<std::uint32_t>(m);
}

std::uint32_t Gf::small_binomial(std::uint32_t n, std::uint32_t k) const
{
    // n, k < p here, so every factor below is a unit mod p.
    if (k > n)
        return 0;
    std::uint32_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num = mul(num, n - i);
        den = mul(den, i + 1);
    }
    return mul(num, inv(den == 0 ? 1 : den));
}

std::uint32_t Gf::binomial(std::uint64_t n, std::uint64_t k) const
{
    std::uint32_t r = 1 % p_;
    while (n || k) {
        std::uint32_t nd = static_cast<std::uint32_t>(n % p_);
        std::uint32_t kd = static_cast<std::uint32_t>(k % p_);
        if (kd > nd)
            return 0;
        r = mul(r, small_binomial(nd, kd));
        n /= p_;
        k /= p_;
    }
    return r;
}

} // namespace coinv
