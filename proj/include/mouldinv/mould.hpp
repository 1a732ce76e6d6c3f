#pragma once

#include "mouldinv/ring.hpp"
#include "mouldinv/seq.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mouldinv {

// Dense table over the empty sequence and all sequences of weight <= cap.
template <class T>
class Mould {
public:
    explicit Mould(int cap = 0) : cap_(cap) {}

    int cap() const { return cap_; }
    const std::map<Seq, T>& values() const { return values_; }

    T at(const Seq& s) const
    {
        auto it = values_.find(s);
        return it == values_.end() ? RingOps<T>::zero() : it->second;
    }
    void set(const Seq& s, T v)
    {
        if (weight(s) > cap_) throw std::out_of_range("sequence beyond mould cap");
        if (RingOps<T>::is_zero(v))
            values_.erase(s);
        else
            values_[s] = std::move(v);
    }

    static Mould tabulate(int cap, const std::function<T(const Seq&)>& f)
    {
        Mould m(cap);
        m.set({}, f({}));
        for (auto& s : sequences_up_to(cap)) m.set(s, f(s));
        return m;
    }

private:
    int cap_;
    std::map<Seq, T> values_;
};

namespace detail {

// Calls f(pieces) for every factorization of s into nonempty consecutive pieces.
inline void for_each_factorization(const Seq& s, const std::function<void(const std::vector<Seq>&)>& f)
{
    const size_t r = s.size();
    if (r == 0) return;
    std::vector<Seq> pieces;
    for (unsigned long mask = 0; mask < (1UL << (r - 1)); ++mask) {
        pieces.clear();
        Seq cur{s[0]};
        for (size_t i = 1; i < r; ++i) {
            if (mask & (1UL << (i - 1))) {
                pieces.push_back(cur);
                cur.clear();
            }
            cur.push_back(s[i]);
        }
        pieces.push_back(cur);
        f(pieces);
    }
}

template <class T>
T factorization_sum(const Mould<T>& m, const Seq& s, const std::function<Rational(size_t)>& coef)
{
    T total = RingOps<T>::zero();
    for_each_factorization(s, [&](const std::vector<Seq>& pieces) {
        Rational c = coef(pieces.size());
        if (c == 0) return;
        T prod = RingOps<T>::from(c);
        for (auto& p : pieces) {
            prod = prod * m.at(p);
            if (RingOps<T>::is_zero(prod)) return;
        }
        total = total + prod;
    });
    return total;
}

template <class T>
Mould<T> shifted(const Mould<T>& m)
{
    Mould<T> n = m;
    n.set({}, RingOps<T>::zero());
    return n;
}

}  // namespace detail

template <class T>
Mould<T> mould_mul(const Mould<T>& a, const Mould<T>& b)
{
    if (a.cap() != b.cap()) throw std::invalid_argument("mould cap mismatch");
    return Mould<T>::tabulate(a.cap(), [&](const Seq& s) {
        T total = RingOps<T>::zero();
        for (size_t k = 0; k <= s.size(); ++k) {
            Seq l(s.begin(), s.begin() + k), r(s.begin() + k, s.end());
            total = total + a.at(l) * b.at(r);
        }
        return total;
    });
}

template <class T>
Mould<T> mould_compose(const Mould<T>& a, const Mould<T>& b)
{
    if (a.cap() != b.cap()) throw std::invalid_argument("mould cap mismatch");
    if (!RingOps<T>::is_zero(b.at({}))) throw std::invalid_argument("composition needs B^{} = 0");
    return Mould<T>::tabulate(a.cap(), [&](const Seq& s) {
        if (s.empty()) return a.at({});
        T total = RingOps<T>::zero();
        detail::for_each_factorization(s, [&](const std::vector<Seq>& pieces) {
            Seq outer;
            for (auto& p : pieces) outer.push_back(weight(p));
            T prod = a.at(outer);
            for (auto& p : pieces) {
                if (RingOps<T>::is_zero(prod)) return;
                prod = prod * b.at(p);
            }
            total = total + prod;
        });
        return total;
    });
}

template <class T>
Mould<T> mould_logmu(const Mould<T>& m)
{
    if (RingOps<T>::dist(m.at({}), RingOps<T>::one()) != 0) throw std::invalid_argument("logmu needs M^{} = 1");
    Mould<T> n = detail::shifted(m);
    return Mould<T>::tabulate(m.cap(), [&](const Seq& s) {
        if (s.empty()) return RingOps<T>::zero();
        return detail::factorization_sum<T>(n, s, [](size_t k) {
            return Rational(k % 2 ? 1 : -1, static_cast<long>(k));
        });
    });
}

template <class T>
Mould<T> mould_expmu(const Mould<T>& m)
{
    if (!RingOps<T>::is_zero(m.at({}))) throw std::invalid_argument("expmu needs M^{} = 0");
    return Mould<T>::tabulate(m.cap(), [&](const Seq& s) {
        if (s.empty()) return RingOps<T>::one();
        return detail::factorization_sum<T>(m, s, [](size_t k) -> Rational { return 1 / factorial(static_cast<int>(k)); });
    });
}

template <class T>
Mould<T> mould_inverse(const Mould<T>& m)
{
    if (RingOps<T>::dist(m.at({}), RingOps<T>::one()) != 0) throw std::invalid_argument("inverse needs M^{} = 1");
    Mould<T> n = detail::shifted(m);
    return Mould<T>::tabulate(m.cap(), [&](const Seq& s) {
        if (s.empty()) return RingOps<T>::one();
        return detail::factorization_sum<T>(n, s, [](size_t k) { return Rational(k % 2 ? -1 : 1); });
    });
}

enum class Symmetry { Symmetral, Symmetrel, Alternal, Alternel };

struct SymmetryReport {
    bool ok = true;
    size_t checked = 0;
    long double max_defect = 0;
    Seq u, v;  // first violating pair
};

template <class T>
SymmetryReport check_symmetry(const Mould<T>& m, Symmetry type, int cap, long double tol = 0)
{
    SymmetryReport rep;
    bool contract = type == Symmetry::Symmetrel || type == Symmetry::Alternel;
    bool product = type == Symmetry::Symmetral || type == Symmetry::Symmetrel;
    auto seqs = sequences_up_to(cap);
    for (auto& u : seqs)
        for (auto& v : seqs) {
            if (weight(u) + weight(v) > cap) continue;
            T lhs = RingOps<T>::zero();
            for (auto& [w, mult] : contract ? she_set(u, v) : sha_set(u, v))
                lhs = lhs + RingOps<T>::from(Rational(mult)) * m.at(w);
            T rhs = product ? m.at(u) * m.at(v) : RingOps<T>::zero();
            long double d = RingOps<T>::dist(lhs, rhs);
            ++rep.checked;
            if (d > rep.max_defect) rep.max_defect = d;
            if (d > tol && rep.ok) {
                rep.ok = false;
                rep.u = u;
                rep.v = v;
            }
        }
    return rep;
}

// Coefficients of 2 tan(t/2), index = power of t.
std::vector<Rational> tan_half_coefficients(int rmax);

template <class T>
Mould<T> unit_mould(int cap)
{
    return Mould<T>::tabulate(cap, [](const Seq& s) { return s.empty() ? RingOps<T>::one() : RingOps<T>::zero(); });
}

template <class T>
Mould<T> ident_mould(int cap)
{
    return Mould<T>::tabulate(cap, [](const Seq& s) { return s.size() == 1 ? RingOps<T>::one() : RingOps<T>::zero(); });
}

template <class T>
Mould<T> e_minus_one_mould(int cap)
{
    return Mould<T>::tabulate(cap, [](const Seq& s) {
        return s.empty() ? RingOps<T>::zero() : RingOps<T>::from(1 / factorial(static_cast<int>(s.size())));
    });
}

template <class T>
Mould<T> D_mould(const Rational& a, int cap)
{
    return Mould<T>::tabulate(cap, [&](const Seq& s) {
        if (s.empty()) return RingOps<T>::zero();
        Rational p = 1;
        for (size_t i = 1; i < s.size(); ++i) p *= a;
        return RingOps<T>::from(p);
    });
}

template <class T>
Mould<T> K_mould(int cap)
{
    auto k = tan_half_coefficients(cap);
    return Mould<T>::tabulate(cap, [&](const Seq& s) { return RingOps<T>::from(k[s.size()]); });
}

inline Mould<cld> Je_mould(cld z, int cap)
{
    return Mould<cld>::tabulate(cap, [&](const Seq& s) {
        return s.size() == 1 ? std::pow(z, -static_cast<long double>(s[0])) : cld(0);
    });
}

}  // namespace mouldinv
