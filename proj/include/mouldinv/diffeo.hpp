#pragma once

#include "mouldinv/ring.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace mouldinv {

// Coefficients c[d] of sum_d c_d z^{-d}, truncated at degree size()-1.
template <class T>
using ZSeries = std::vector<T>;

// z + sum_{s>=2} c_s z^{1-s}; the weight s lives at degree d = s-1.
template <class T>
struct FormalDiffeo {
    int cap = 0;
    ZSeries<T> disp;  // size cap, disp[0] = 0

    explicit FormalDiffeo(int w = 0) : cap(w), disp(static_cast<size_t>(w), RingOps<T>::zero()) {}
    T coeff(int s) const { return s >= 2 && s <= cap ? disp[s - 1] : RingOps<T>::zero(); }
    void set(int s, T v)
    {
        if (s < 2 || s > cap) throw std::out_of_range("coefficient weight outside 2..cap");
        disp[s - 1] = std::move(v);
    }
};

// g_*(z) = sum_{s>=2} g_{*s} z^{1-s}; same storage.
template <class T>
using Generator = FormalDiffeo<T>;

template <class T>
ZSeries<T> series_mul(const ZSeries<T>& a, const ZSeries<T>& b, size_t n)
{
    ZSeries<T> out(n, RingOps<T>::zero());
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (RingOps<T>::is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            if (!RingOps<T>::is_zero(b[j])) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

template <class T>
ZSeries<T> series_deriv(const ZSeries<T>& a, size_t n)
{
    ZSeries<T> out(n, RingOps<T>::zero());
    for (size_t d = 1; d < a.size() && d + 1 < n; ++d)
        out[d + 1] = RingOps<T>::from(Rational(-static_cast<long>(d))) * a[d];
    return out;
}

template <class T>
bool series_zero(const ZSeries<T>& a)
{
    for (auto& x : a)
        if (!RingOps<T>::is_zero(x)) return false;
    return true;
}

// F(z + G) for displacement series F, G with G of positive valuation.
template <class T>
ZSeries<T> shift_by(const ZSeries<T>& F, const ZSeries<T>& G, size_t n)
{
    ZSeries<T> out(n, RingOps<T>::zero()), deriv = F, gpow(n, RingOps<T>::zero());
    deriv.resize(n, RingOps<T>::zero());
    gpow[0] = RingOps<T>::one();
    Rational kfact = 1;
    for (int k = 0;; ++k) {
        if (series_zero(deriv) || series_zero(gpow)) break;
        auto term = series_mul(gpow, deriv, n);
        T scale = RingOps<T>::from(1 / kfact);
        for (size_t d = 0; d < n; ++d) out[d] = out[d] + scale * term[d];
        deriv = series_deriv(deriv, n);
        gpow = series_mul(gpow, G, n);
        kfact *= k + 1;
    }
    return out;
}

template <class T>
FormalDiffeo<T> compose(const FormalDiffeo<T>& f, const FormalDiffeo<T>& g)
{
    if (f.cap != g.cap) throw std::invalid_argument("cap mismatch in composition");
    FormalDiffeo<T> out(f.cap);
    auto shifted = shift_by(f.disp, g.disp, f.disp.size());
    for (size_t d = 0; d < out.disp.size(); ++d) out.disp[d] = g.disp[d] + shifted[d];
    return out;
}

template <class T>
FormalDiffeo<T> diffeo_from_generator(const Generator<T>& gs)
{
    const size_t n = gs.disp.size();
    FormalDiffeo<T> out(gs.cap);
    ZSeries<T> t = gs.disp;  // t_1 = g_* . z
    Rational kfact = 1;
    for (int k = 1; !series_zero(t); ++k) {
        kfact *= k;
        T scale = RingOps<T>::from(1 / kfact);
        for (size_t d = 0; d < n; ++d) out.disp[d] = out.disp[d] + scale * t[d];
        t = series_mul(gs.disp, series_deriv(t, n), n);
    }
    return out;
}

template <class T>
Generator<T> generator_from_diffeo(const FormalDiffeo<T>& g)
{
    Generator<T> gs(g.cap);
    for (size_t d = 1; d < g.disp.size(); ++d) {
        auto e = diffeo_from_generator(gs);
        gs.disp[d] = gs.disp[d] + (g.disp[d] - e.disp[d]);
    }
    return gs;
}

// Fixed point H = -G(z + H); each pass gains at least two degrees.
template <class T>
FormalDiffeo<T> inverse_diffeo(const FormalDiffeo<T>& g)
{
    const size_t n = g.disp.size();
    FormalDiffeo<T> h(g.cap);
    for (size_t pass = 0; pass <= n; ++pass) {
        auto s = shift_by(g.disp, h.disp, n);
        ZSeries<T> next(n);
        for (size_t d = 0; d < n; ++d) next[d] = RingOps<T>::zero() - s[d];
        if (next == h.disp) break;
        h.disp = next;
    }
    return h;
}

// Coefficients g^{+/-}_{n,s} of (g^{+/-1}(z) - z)^n = sum_s g_{n,s} z^{1-s}.
template <class T>
std::map<int, T> power_coefficients(const FormalDiffeo<T>& g, int sign, int n)
{
    if (n < 1) throw std::invalid_argument("power must be positive");
    const FormalDiffeo<T> base = sign > 0 ? g : inverse_diffeo(g);
    const size_t len = base.disp.size();
    ZSeries<T> p(len, RingOps<T>::zero());
    if (len) p[0] = RingOps<T>::one();
    for (int k = 0; k < n; ++k) p = series_mul(p, base.disp, len);
    std::map<int, T> out;
    for (size_t d = 1; d < len; ++d)
        if (!RingOps<T>::is_zero(p[d])) out[static_cast<int>(d) + 1] = p[d];
    return out;
}

// f^* = z + sum_{n>=1} a_n z^{-n} solving f^* o f = f^* + 1 for f = g + 1.
template <class T>
std::vector<T> iterator_coefficients(const ZSeries<T>& h, int N)
{
    // h[d]: coefficient of z^{-d} in g(z) - z, d = 0..; P_k = (1 + (1+h)/z)^{-k}
    auto hc = [&](int d) { return d < static_cast<int>(h.size()) ? h[d] : RingOps<T>::zero(); };
    if (!RingOps<T>::is_zero(hc(0))) throw std::domain_error("g - z must vanish at infinity");
    if (!RingOps<T>::is_zero(hc(1))) throw std::domain_error("iterative residue is nonzero; numeric iterator needs rho = 0");
    const size_t len = static_cast<size_t>(N) + 2;
    ZSeries<T> u(len, RingOps<T>::zero());
    u[1] = RingOps<T>::one();
    for (size_t d = 1; d + 1 < len; ++d) u[d + 1] = u[d + 1] + hc(static_cast<int>(d));
    // q = (1+u)^{-1}
    ZSeries<T> q(len, RingOps<T>::zero());
    q[0] = RingOps<T>::one();
    for (size_t m = 1; m < len; ++m) {
        T acc = RingOps<T>::zero();
        for (size_t j = 1; j <= m; ++j) acc = acc - u[j] * q[m - j];
        q[m] = acc;
    }
    std::vector<T> a(static_cast<size_t>(N) + 1, RingOps<T>::zero());
    // P[k][m] = [z^{-m}] P_k, only m <= N + 1 - k is ever read
    std::vector<ZSeries<T>> P;
    P.push_back(ZSeries<T>(len, RingOps<T>::zero()));
    P[0][0] = RingOps<T>::one();
    for (int n = 1; n <= N; ++n) {
        P.push_back(series_mul(P.back(), q, len - static_cast<size_t>(n)));
        T acc = hc(n + 1);
        for (int k = 1; k < n; ++k)
            if (!RingOps<T>::is_zero(a[k])) acc = acc + a[k] * P[k][n + 1 - k];
        a[n] = acc * RingOps<T>::from(Rational(1, n));
    }
    return a;
}

}  // namespace mouldinv
