#include "coinv/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "coinv/error.hpp"

namespace coinv {

std::size_t PolyRing::var_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return i;
    throw input_error("unknown variable name: " + name);
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars)
{
    expect(!vars.empty(), "a ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            expect(vars[i] != vars[j], "duplicate variable name: " + vars[i]);
    return std::make_shared<const PolyRing>(PolyRing{Gf(p), std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->p() == b->p() && a->vars == b->vars;
}

namespace {

void check_context(const Polynomial& f, const Polynomial& g)
{
    expect(same_ring(f.ring(), g.ring()), "polynomial ring contexts differ");
}

} // namespace

Polynomial Polynomial::constant(RingPtr ring, std::uint32_t c)
{
    std::size_t n = ring->nvars();
    c %= ring->p();
    Polynomial f(std::move(ring));
    if (c != 0)
        f.terms_.push_back({Monomial(n), c});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index)
{
    expect(index < ring->nvars(), "variable index out of range");
    std::size_t n = ring->nvars();
    Polynomial f(std::move(ring));
    f.terms_.push_back({Monomial::variable(n, index), 1});
    return f;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, std::uint32_t c)
{
    expect(m.nvars() == ring->nvars(), "monomial does not fit ring");
    c %= ring->p();
    Polynomial f(std::move(ring));
    if (c != 0)
        f.terms_.push_back({std::move(m), c});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms)
{
    const Gf& k = ring->field;
    std::map<Monomial, std::uint32_t, MonomialDesc> acc;
    for (auto& t : terms) {
        expect(t.mono.nvars() == ring->nvars(), "monomial does not fit ring");
        auto [it, fresh] = acc.emplace(std::move(t.mono), t.coeff % k.p());
        if (!fresh)
            it->second = k.add(it->second, t.coeff % k.p());
    }
    Polynomial f(std::move(ring));
    for (auto& [m, c] : acc)
        if (c != 0)
            f.terms_.push_back({m, c});
    return f;
}

const Monomial& Polynomial::lead_monomial() const
{
    expect(!terms_.empty(), "zero polynomial has no lead monomial");
    return terms_.front().mono;
}

std::uint32_t Polynomial::lead_coeff() const
{
    expect(!terms_.empty(), "zero polynomial has no lead coefficient");
    return terms_.front().coeff;
}

std::uint32_t Polynomial::degree() const
{
    std::uint32_t d = 0;
    for (const Term& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    std::uint32_t d = terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d)
            return false;
    return true;
}

std::uint16_t Polynomial::deg_in_var(std::size_t var) const
{
    std::uint16_t d = 0;
    for (const Term& t : terms_)
        d = std::max(d, t.mono.exp(var));
    return d;
}

std::uint32_t Polynomial::coeff(const Monomial& m) const
{
    for (const Term& t : terms_)
        if (t.mono == m)
            return t.coeff;
    return 0;
}

Polynomial Polynomial::coefficient_in_var(std::size_t var,
                                          std::uint16_t e) const
{
    expect(var < ring_->nvars(), "variable index out of range");
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (t.mono.exp(var) != e)
            continue;
        Monomial m = t.mono.divided_by(
            Monomial::variable(ring_->nvars(), var, e));
        out.push_back({std::move(m), t.coeff});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const
{
    check_context(*this, g);
    const Gf& k = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        auto ord = terms_[i].mono <=> g.terms_[j].mono;
        if (ord == std::strong_ordering::greater) {
            r.terms_.push_back(terms_[i++]);
        } else if (ord == std::strong_ordering::less) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            std::uint32_t c = k.add(terms_[i].coeff, g.terms_[j].coeff);
            if (c != 0)
                r.terms_.push_back({terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        r.terms_.push_back(g.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const
{
    return *this + g.negated();
}

Polynomial Polynomial::operator*(const Polynomial& g) const
{
    check_context(*this, g);
    const Gf& k = ring_->field;
    std::map<Monomial, std::uint32_t, MonomialDesc> acc;
    for (const Term& a : terms_) {
        for (const Term& b : g.terms_) {
            Monomial m = a.mono * b.mono;
            std::uint32_t c = k.mul(a.coeff, b.coeff);
            auto [it, fresh] = acc.emplace(std::move(m), c);
            if (!fresh)
                it->second = k.add(it->second, c);
        }
    }
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
        if (c != 0)
            r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const
{
    const Gf& k = ring_->field;
    c %= k.p();
    Polynomial r(ring_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.mono, k.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::negated() const
{
    const Gf& k = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.mono, k.neg(t.coeff)});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m,
                                      std::uint32_t c) const
{
    const Gf& k = ring_->field;
    c %= k.p();
    Polynomial r(ring_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        r.terms_.push_back({t.mono * m, k.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty())
        return *this;
    return scaled(ring_->field.inv(lead_coeff()));
}

Polynomial Polynomial::pow(std::uint32_t e) const
{
    Polynomial r = one(ring_);
    for (std::uint32_t i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const
{
    return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first)
            out << " + ";
        first = false;
        if (t.mono.is_unit()) {
            out << t.coeff;
            continue;
        }
        bool lead = true;
        if (t.coeff != 1) {
            out << t.coeff;
            lead = false;
        }
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            std::uint16_t e = t.mono.exp(i);
            if (e == 0)
                continue;
            if (!lead)
                out << "*";
            lead = false;
            out << ring_->vars[i];
            if (e > 1)
                out << "^" << e;
        }
    }
    return out.str();
}

bool poly_less(const Polynomial& a, const Polynomial& b)
{
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        auto ord = ta[i].mono <=> tb[i].mono;
        if (ord != std::strong_ordering::equal)
            return ord == std::strong_ordering::less;
        if (ta[i].coeff != tb[i].coeff)
            return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
}

Polynomial substitute_linear(const Polynomial& f,
                             const std::vector<Polynomial>& images)
{
    const RingPtr& ring = f.ring();
    expect(images.size() == ring->nvars(),
           "need exactly one image per variable");
    for (const Polynomial& im : images) {
        expect(same_ring(im.ring(), ring), "image ring context differs");
        expect(im.is_zero() || (im.is_homogeneous() && im.degree() == 1),
               "images must be homogeneous linear forms");
    }
    Polynomial out = Polynomial::zero(ring);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(ring, t.coeff);
        for (std::size_t v = 0; v < ring->nvars(); ++v) {
            for (std::uint16_t e = 0; e < t.mono.exp(v); ++e)
                prod = prod * images[v];
        }
        out = out + prod;
    }
    return out;
}

} // namespace coinv
