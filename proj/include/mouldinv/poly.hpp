#pragma once

#include "mouldinv/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace mouldinv {

// Multiset of generator weights, kept sorted.
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);

// Polynomial in the coefficients g_s (or g_{*s}), keyed by weight multisets.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly var(int s, const Rational& c = 1);

    void add(const Monomial& m, const Rational& c);
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Drop monomials of total weight above cap.
    Poly truncated(int cap) const;

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, Rational> terms_;
};

int monomial_weight(const Monomial& m);

template <>
struct RingOps<Poly> {
    static Poly zero() { return {}; }
    static Poly one() { return Poly(Rational(1)); }
    static Poly from(const Rational& q) { return Poly(q); }
    static bool is_zero(const Poly& a) { return a.is_zero(); }
    static long double dist(const Poly& a, const Poly& b) { return a == b ? 0.0L : 1.0L; }
};

}  // namespace mouldinv
