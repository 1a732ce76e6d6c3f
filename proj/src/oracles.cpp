#include "mouldinv/oracles.hpp"
#include "mouldinv/mp.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mouldinv {

namespace {

const long double kPi = std::numbers::pi_v<long double>;

struct Map {
    std::vector<cld> c;  // c[d]: coefficient of z^{-d}

    cld operator()(cld z) const
    {
        cld inv = 1.0L / z, p = 1, s = z + 1.0L;
        for (size_t d = 1; d < c.size(); ++d) {
            p *= inv;
            if (c[d] != cld(0)) s += c[d] * p;
        }
        return s;
    }
};

struct Fatou {
    std::vector<cld> a;  // a[n]: coefficient of z^{-n}

    // Optimally truncated asymptotic series, with derivative.
    cld eval(cld w, cld* deriv = nullptr) const
    {
        cld inv = 1.0L / w, p = 1, s = w, ds = 1;
        long double last = INFINITY;
        for (size_t n = 1; n < a.size(); ++n) {
            p *= inv;
            cld t = a[n] * p;
            long double m = std::abs(t);
            if (m > last && n > 4) break;
            if (m != 0) last = m;
            s += t;
            ds -= static_cast<long double>(n) * t * inv;
        }
        if (deriv) *deriv = ds;
        return s;
    }

    cld inverse(cld u) const
    {
        cld w = u;
        for (int it = 0; it < 60; ++it) {
            cld d;
            cld step = (eval(w, &d) - u) / d;
            w -= step;
            if (std::abs(step) < 1e-19L * std::abs(w)) break;
        }
        return w;
    }
};

std::vector<cld> fatou_coefficients(const FormalDiffeo<Rational>& g, int n)
{
    ZSeries<Mp> h(g.disp.size());
    for (size_t d = 0; d < g.disp.size(); ++d) h[d] = mp_from(g.disp[d]);
    auto a = iterator_coefficients(h, n);
    std::vector<cld> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<long double>(a[i]);
    return out;
}

cld horn_coefficient(const Map& f, const Fatou* fatou, const Frequency& w, int k, const FourierConfig& cfg)
{
    const cld omega = w.value();
    cld total = 0;
    for (int j = 0; j < cfg.nodes; ++j) {
        cld z(cfg.re_z0 + static_cast<long double>(j) / cfg.nodes, cfg.im_z0);
        cld p = fatou ? fatou->inverse(z - static_cast<long double>(k)) : z - static_cast<long double>(k);
        for (int step = 0; step < 2 * k; ++step) {
            if (std::abs(p) < 0.25L || !std::isfinite(std::abs(p)))
                throw std::runtime_error("orbit escape near the singularity; increase im_z0");
            p = f(p);
        }
        cld back = fatou ? fatou->eval(p) : p;
        total += (back - static_cast<long double>(k) - z) * std::exp(omega * z);
    }
    return total / static_cast<long double>(cfg.nodes);
}

FourierResult run_fourier(const std::vector<cld>& disp, const Fatou& fatou, const Frequency& w, const FourierConfig& cfg)
{
    if (cfg.k < 1 || cfg.nodes < 8) throw std::invalid_argument("fourier oracle needs k >= 1 and nodes >= 8");
    if ((w.n < 0) != (cfg.im_z0 > 0)) throw std::invalid_argument("base point must lie in the half-plane of omega");
    Map f{disp};
    const Fatou* fp = cfg.end_correction ? &fatou : nullptr;
    FourierResult r;
    r.k = cfg.k;
    r.value = horn_coefficient(f, fp, w, cfg.k, cfg);
    r.value_2k = horn_coefficient(f, fp, w, 2 * cfg.k, cfg);
    r.k_change = std::abs(r.value_2k - r.value);
    return r;
}

}  // namespace

FourierResult fourier_oracle(const FormalDiffeo<Rational>& g, const Frequency& w, const FourierConfig& cfg)
{
    if (g.coeff(2) != 0) throw std::domain_error("fourier oracle needs rho = 0");
    std::vector<cld> disp;
    for (auto& x : g.disp) disp.push_back(to_ld(x));
    Fatou fatou;
    if (cfg.end_correction) fatou.a = fatou_coefficients(g, cfg.fatou_terms);
    return run_fourier(disp, fatou, w, cfg);
}

FourierResult fourier_oracle(const std::vector<cld>& disp, const Frequency& w, const FourierConfig& cfg)
{
    if (disp.size() > 1 && disp[1] != cld(0)) throw std::domain_error("fourier oracle needs rho = 0");
    Fatou fatou;
    if (cfg.end_correction) fatou.a = iterator_coefficients(ZSeries<cld>(disp.begin(), disp.end()), cfg.fatou_terms);
    return run_fourier(disp, fatou, w, cfg);
}

namespace {

struct C {
    Mp re, im;
};

C operator+(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
C operator-(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
C operator*(const C& a, const C& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
C operator*(const C& a, const Mp& s) { return {a.re * s, a.im * s}; }
C conj(const C& a) { return {a.re, -a.im}; }
Mp norm2(const C& a) { return a.re * a.re + a.im * a.im; }
C inv(const C& a)
{
    Mp n = norm2(a);
    return {a.re / n, -a.im / n};
}
cld to_cld(const C& a) { return cld(static_cast<long double>(a.re), static_cast<long double>(a.im)); }

// Sign of the logarithmic part relative to the pole in the singular germ.
constexpr int kLogSign = 1;

// exp(G) - 1 for a series G with G[0] = 0.
std::vector<C> exp_minus_one(const std::vector<C>& G)
{
    const size_t n = G.size();
    std::vector<C> E(n, C{Mp(0), Mp(0)});
    E[0] = {Mp(1), Mp(0)};
    for (size_t m = 1; m < n; ++m) {
        C acc{Mp(0), Mp(0)};
        for (size_t k = 1; k <= m; ++k) acc = acc + G[k] * E[m - k] * Mp(static_cast<long>(k));
        E[m] = acc * (Mp(1) / Mp(static_cast<long>(m)));
    }
    E[0] = {Mp(0), Mp(0)};
    return E;
}

// Borel coefficient n of the singular germ at omega = 2 pi i s, per unit residue.
C model(int n, const std::vector<C>& phi, int s)
{
    const Mp tpi = 2 * boost::math::constants::pi<Mp>();
    const C omega{Mp(0), tpi * s};
    const C iomega = inv(omega);
    const C itpi = inv(C{Mp(0), tpi});
    // omega^{-m} for m = 0..n+1
    std::vector<C> ip(static_cast<size_t>(n) + 2);
    ip[0] = {Mp(1), Mp(0)};
    for (size_t m = 1; m < ip.size(); ++m) ip[m] = ip[m - 1] * iomega;
    C pole = ip[static_cast<size_t>(n) + 1] * itpi * Mp(-1);
    C logs{Mp(0), Mp(0)};
    // (n-j-1)!/n! built from j = n-1 downward
    Mp fr = 1;
    for (int i = 2; i <= n; ++i) fr /= i;
    // terms past j = n/2 grow again; they belong to the singularities at 0 and 2 omega
    for (int j = n - 1; j >= 0; --j) {
        if (2 * j <= n && static_cast<size_t>(j + 1) < phi.size()) logs = logs + phi[static_cast<size_t>(j) + 1] * ip[static_cast<size_t>(n - j)] * fr;
        if (j > 0) fr = fr * Mp(n - j);
    }
    return pole - logs * itpi * Mp(kLogSign);
}

}  // namespace

// Pole residue of the Borel germ at omega over the invariant A_omega.
cld borel_residue_factor() { return cld(0, -2 * kPi); }

BorelResult borel_asymptotics_oracle(const FormalDiffeo<Rational>& g, const BorelConfig& cfg)
{
    if (cfg.N < 20 || cfg.window < 2 || cfg.window >= cfg.N / 2)
        throw std::invalid_argument("borel oracle needs N >= 20 and 2 <= window < N/2");
    if (g.coeff(2) != 0) throw std::domain_error("borel oracle needs rho = 0");
    ZSeries<Mp> h(g.disp.size());
    for (size_t d = 0; d < g.disp.size(); ++d) h[d] = mp_from(g.disp[d]);
    auto a = iterator_coefficients(h, cfg.N);
    // b_n = a_{n+1} / n!
    std::vector<Mp> b(static_cast<size_t>(cfg.N));
    Mp fact = 1;
    for (int n = 0; n < cfg.N; ++n) {
        if (n) fact *= n;
        b[static_cast<size_t>(n)] = a[static_cast<size_t>(n) + 1] / fact;
    }
    const Mp tpi = 2 * boost::math::constants::pi<Mp>();
    std::vector<C> phi[2];
    for (int side = 0; side < 2; ++side) {
        int s = side ? 1 : -1;
        // -omega F with omega = 2 pi i s
        std::vector<C> G(a.size(), C{Mp(0), Mp(0)});
        for (size_t k = 1; k < a.size(); ++k) G[k] = {Mp(0), -tpi * s * a[k]};
        phi[side] = exp_minus_one(G);
    }
    C s11{Mp(0), Mp(0)}, s12 = s11, s22 = s11, r1 = s11, r2 = s11;
    std::vector<std::pair<C, C>> rows;
    for (int n = cfg.N - cfg.window; n < cfg.N; ++n) {
        C m1 = model(n, phi[0], -1), m2 = model(n, phi[1], +1);
        C bn{b[static_cast<size_t>(n)], Mp(0)};
        s11 = s11 + conj(m1) * m1;
        s12 = s12 + conj(m1) * m2;
        s22 = s22 + conj(m2) * m2;
        r1 = r1 + conj(m1) * bn;
        r2 = r2 + conj(m2) * bn;
        rows.emplace_back(m1, m2);
    }
    C det = s11 * s22 - s12 * conj(s12);
    C cm = (r1 * s22 - s12 * r2) * inv(det);
    C cp = (s11 * r2 - conj(s12) * r1) * inv(det);
    Mp worst = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        int n = cfg.N - cfg.window + static_cast<int>(i);
        C fit = cm * rows[i].first + cp * rows[i].second;
        C bn{b[static_cast<size_t>(n)], Mp(0)};
        Mp rel = sqrt(norm2(fit - bn)) / abs(b[static_cast<size_t>(n)]);
        if (rel > worst) worst = rel;
    }
    BorelResult r;
    const cld f = borel_residue_factor();
    r.A_minus = to_cld(cm) / f;
    r.A_plus = to_cld(cp) / f;
    r.residual = static_cast<long double>(worst);
    r.digits = r.residual > 0 ? -std::log10(r.residual) : 40;
    if (r.digits < 10) r.warnings.push_back("borel fit reached only " + std::to_string(static_cast<double>(r.digits)) + " digits");
    return r;
}

}  // namespace mouldinv
