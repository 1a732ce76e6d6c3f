#include "mouldinv/poly.hpp"

#include <algorithm>
#include <numeric>

namespace mouldinv {

int monomial_weight(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Poly::Poly(const Rational& c)
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(int s, const Rational& c)
{
    Poly p;
    p.add(Monomial{s}, c);
    return p;
}

void Poly::add(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::truncated(int cap) const
{
    Poly out;
    for (auto& [m, c] : terms_)
        if (monomial_weight(m) <= cap) out.terms_.emplace(m, c);
    return out;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Poly operator-(Poly a, const Poly& b)
{
    for (auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.add(mono_mul(ma, mb), ca * cb);
    return out;
}

}  // namespace mouldinv
