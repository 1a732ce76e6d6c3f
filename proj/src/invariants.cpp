#include "mouldinv/invariants.hpp"

#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace mouldinv {

FormalDiffeo<Rational> diffeo_of(const DiffeoInput& in)
{
    FormalDiffeo<Rational> g(in.cap);
    for (auto& [s, c] : in.coeffs)
        if (s <= in.cap) g.set(s, c);
    return in.kind == Basis::G ? g : diffeo_from_generator(g);
}

Generator<Rational> generator_of(const DiffeoInput& in)
{
    Generator<Rational> g(in.cap);
    for (auto& [s, c] : in.coeffs)
        if (s <= in.cap) g.set(s, c);
    return in.kind == Basis::GStar ? g : generator_from_diffeo(g);
}

void ExactConnector::add(const Monomial& m, int power, const ZetaExpr& e)
{
    if (e.is_zero()) return;
    auto& p = terms[m];
    p.add(power, e);
    if (p.is_zero()) terms.erase(m);
}

ExactConnector ExactConnector::scaled(const Rational& c, int power_shift) const
{
    ExactConnector out;
    for (auto& [m, p] : terms)
        for (auto& [k, e] : p.coeffs) out.add(m, k + power_shift, e * c);
    return out;
}

cld ExactConnector::eval(const std::map<int, cld>& values) const
{
    cld s = 0;
    for (auto& [m, p] : terms) {
        cld v = monomial_value(m, values);
        if (v != cld(0)) s += v * p.eval();
    }
    return s;
}

bool operator==(const ExactConnector& a, const ExactConnector& b) { return a.terms == b.terms; }

namespace {

void require_reduced(const CollectorExpansion& e)
{
    if (!e.reduced) throw std::invalid_argument("collector must be reduced to monotangents first");
}

}  // namespace

ExactConnector connector_fourier(const CollectorExpansion& e, const Frequency& w)
{
    require_reduced(e);
    ExactConnector out;
    for (auto& [k, z] : e.terms) {
        PiSeries m = monotangent_fourier(k.seq[0], w);
        for (auto& [p, c] : m.coeffs) out.add(k.mono, p, z * c);
    }
    return out;
}

ExactConnector borel_values(const CollectorExpansion& e, const Frequency& w)
{
    require_reduced(e);
    ExactConnector out;
    for (auto& [k, z] : e.terms) {
        const int sigma = k.seq[0];
        mpz_class np;
        mpz_pow_ui(np.get_mpz_t(), mpz_class(w.n).get_mpz_t(), static_cast<unsigned long>(sigma - 1));
        out.add(k.mono, sigma - 1, z * (Rational(np) / factorial(sigma - 1)));
    }
    return out;
}

ExactConnector invariant_exact(const CollectorExpansion& reduced, Invariant which, const Frequency& w, Route route)
{
    const bool north = w.n < 0;
    const bool sym = reduced.scheme == Scheme::Symmetric;
    if ((which == Invariant::A) != sym) throw std::invalid_argument("A needs the symmetric collector, A+/- the direct ones");
    if (which != Invariant::A) {
        bool plus_collector = reduced.scheme == Scheme::DirectPlus;
        // Omega^-: A+ from pi^+, A- from pi^-; Omega^+: swapped.
        bool matches = north ? (plus_collector == (which == Invariant::APlus))
                             : (plus_collector == (which == Invariant::AMinus));
        if (!matches) throw std::invalid_argument("collector sign does not carry the requested invariant here");
    }
    if (route == Route::Fourier) {
        ExactConnector pi = connector_fourier(reduced, w);
        if (which != Invariant::A) return pi;
        return pi.scaled(north ? 1 : -1, -1);
    }
    ExactConnector ph = borel_values(reduced, w);
    if (which == Invariant::A) return ph.scaled(-1, 0);
    return ph.scaled(north ? -1 : 1, 1);
}

namespace {

std::mutex cache_mutex;
std::map<std::tuple<int, Support, int>, CollectorExpansion> cache;

}  // namespace

const CollectorExpansion& cached_reduced_collector(Scheme scheme, const Support& gens, int W)
{
    auto key = std::make_tuple(static_cast<int>(scheme), gens, W);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CollectorExpansion e;
    switch (scheme) {
    case Scheme::Symmetric:
        e = collector_symmetric(gens, W);
        break;
    case Scheme::SymmetricPrime:
        e = collector_symmetric(gens, W, true);
        break;
    case Scheme::DirectPlus:
        e = collector_direct(gens, +1, W);
        break;
    case Scheme::DirectMinus:
        e = collector_direct(gens, -1, W);
        break;
    }
    CollectorExpansion red = reduce_collector(e);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(red)).first->second;
}

namespace {

Support support_of(const ZSeries<Rational>& disp)
{
    Support s;
    for (size_t d = 1; d < disp.size(); ++d)
        if (disp[d] != 0) s.insert(static_cast<int>(d) + 1);
    return s;
}

std::map<int, cld> values_of(const ZSeries<Rational>& disp)
{
    std::map<int, cld> v;
    for (size_t d = 1; d < disp.size(); ++d)
        if (disp[d] != 0) v[static_cast<int>(d) + 1] = to_ld(disp[d]);
    return v;
}

// Contribution of the highest weight that actually occurs (g_3 alone only fills multiples of 3).
cld top_weight_part(const CollectorExpansion& e, const Frequency& w, const std::map<int, cld>& v, int W)
{
    for (int u = W; u >= 1; --u) {
        CollectorExpansion top = e;
        top.terms.clear();
        for (auto& [k, z] : e.terms)
            if (monomial_weight(k.mono) == u) top.terms.emplace(k, z);
        if (top.terms.empty()) continue;
        cld x = connector_fourier(top, w).eval(v);
        if (x != cld(0)) return x;
    }
    return 0;
}

}  // namespace

InvariantSet invariants_numeric(const DiffeoInput& in, const std::vector<long>& ns, int W, long double tol)
{
    DiffeoInput capped = in;
    capped.cap = W;
    auto g = diffeo_of(capped);
    auto gs = generator_of(capped);
    if (gs.coeff(2) != 0) throw std::domain_error("symbolic only: numeric invariants need rho = 0 (g_*2 = 0)");
    const auto& sym = cached_reduced_collector(Scheme::Symmetric, support_of(gs.disp), W);
    const auto& dplus = cached_reduced_collector(Scheme::DirectPlus, support_of(g.disp), W);
    const auto& dminus = cached_reduced_collector(Scheme::DirectMinus, support_of(g.disp), W);
    auto vs = values_of(gs.disp), vg = values_of(g.disp);
    const long double tpi = 2 * std::numbers::pi_v<long double>;
    InvariantSet out;
    out.W = W;
    out.method = "collector";
    for (long n : ns) {
        Frequency w{n};
        InvariantValue iv;
        iv.n = n;
        const bool north = n < 0;
        cld pistar = connector_fourier(sym, w).eval(vs);
        iv.A = pistar / cld(0, north ? tpi : -tpi);
        cld pp = connector_fourier(dplus, w).eval(vg);
        cld pm = connector_fourier(dminus, w).eval(vg);
        iv.Aplus = north ? pp : pm;
        iv.Aminus = north ? pm : pp;
        long double e1 = std::abs(top_weight_part(sym, w, vs, W)) / tpi;
        long double e2 = std::abs(top_weight_part(dplus, w, vg, W));
        long double e3 = std::abs(top_weight_part(dminus, w, vg, W));
        iv.est_err = std::max({e1, e2, e3});
        if (iv.est_err > tol)
            out.warnings.push_back("omega=" + std::to_string(n) + ": weight-" + std::to_string(W) +
                                   " remainder " + std::to_string(static_cast<double>(iv.est_err)) +
                                   " exceeds tolerance");
        out.values.push_back(iv);
    }
    return out;
}

}  // namespace mouldinv
