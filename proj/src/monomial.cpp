#include "coinv/monomial.hpp"

#include <algorithm>
#include <limits>

#include "coinv/error.hpp"

namespace coinv {

Monomial Monomial::of(std::vector<std::uint16_t> exps)
{
    Monomial m(exps.size());
    std::uint32_t d = 0;
    for (std::uint16_t e : exps)
        d += e;
    m.exps_ = std::move(exps);
    m.degree_ = d;
    return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            std::uint16_t e)
{
    expect(index < nvars, "variable index out of range");
    Monomial m(nvars);
    m.exps_[index] = e;
    m.degree_ = e;
    return m;
}

bool Monomial::divides(const Monomial& m) const
{
    expect(nvars() == m.nvars(), "monomial variable lists differ");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i])
            return false;
    return true;
}

bool Monomial::coprime(const Monomial& m) const
{
    expect(nvars() == m.nvars(), "monomial variable lists differ");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] && m.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const
{
    expect(nvars() == m.nvars(), "monomial variable lists differ");
    Monomial r(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] + m.exps_[i]);
    r.degree_ = degree_ + m.degree_;
    return r;
}

Monomial Monomial::divided_by(const Monomial& m) const
{
    expect(nvars() == m.nvars(), "monomial variable lists differ");
    Monomial r(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        self_check(exps_[i] >= m.exps_[i], "inexact monomial division");
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - m.exps_[i]);
    }
    r.degree_ = degree_ - m.degree_;
    return r;
}

Monomial Monomial::pow(std::uint16_t e) const
{
    Monomial r(nvars());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] = static_cast<std::uint16_t>(exps_[i] * e);
    r.degree_ = degree_ * e;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    expect(a.nvars() == b.nvars(), "monomial variable lists differ");
    Monomial r(a.nvars());
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& m) const
{
    expect(nvars() == m.nvars(), "monomial variable lists differ");
    if (degree_ != m.degree_)
        return degree_ <=> m.degree_;
    for (std::size_t i = exps_.size(); i-- > 0;) {
        if (exps_[i] != m.exps_[i])
            return exps_[i] < m.exps_[i] ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate(std::size_t pos, std::uint32_t remaining,
               std::vector<std::uint16_t>& cur, std::vector<Monomial>& out)
{
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<std::uint16_t>(remaining);
        out.push_back(Monomial::of(cur));
        return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
        cur[pos] = static_cast<std::uint16_t>(e);
        enumerate(pos + 1, remaining - e, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d)
{
    expect(nvars >= 1, "need at least one variable");
    expect(d <= std::numeric_limits<std::uint16_t>::max(),
           "degree exceeds exponent range");
    std::vector<Monomial> out;
    std::vector<std::uint16_t> cur(nvars, 0);
    enumerate(0, d, cur, out);
    std::sort(out.begin(), out.end(), MonomialDesc{});
    return out;
}

std::uint64_t monomial_count(std::size_t nvars, std::uint32_t d)
{
    // C(d + nvars - 1, nvars - 1) with saturation.
    std::uint64_t r = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
        std::uint64_t num = d + i;
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            return std::numeric_limits<std::uint64_t>::max();
        r = r * num / i;
    }
    return r;
}

} // namespace coinv
