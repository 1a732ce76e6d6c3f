#include <doctest.h>

#include "mouldinv/oracles.hpp"

#include <numbers>

using namespace mouldinv;

namespace {

FormalDiffeo<Rational> family(const Rational& a, int cap = 12)
{
    FormalDiffeo<Rational> g(cap);
    g.set(3, a);
    return g;
}

}  // namespace

TEST_CASE("identity diffeo has no invariants")
{
    FormalDiffeo<Rational> id(8);
    CHECK(std::abs(fourier_oracle(id, Frequency{-1}).value) < 1e-15L);
    auto b = borel_asymptotics_oracle(family(0), BorelConfig{60, 6});
    CHECK(std::abs(b.A_plus) == 0);
}

TEST_CASE("Fourier and Borel oracles agree")
{
    auto g = family(Rational(1, 10));
    auto f = fourier_oracle(g, Frequency{-1});
    auto b = borel_asymptotics_oracle(g, BorelConfig{});
    CHECK(b.digits > 10);
    // the Fourier oracle returns A+ at -2 pi i, which is 2 pi i A_{-2 pi i}
    cld aplus = cld(0, 2 * std::numbers::pi_v<long double>) * b.A_minus;
    CHECK(std::abs(f.value - aplus) < 1e-10L * std::abs(f.value));
    CHECK(std::abs(b.A_plus - std::conj(b.A_minus)) < 1e-12L * std::abs(b.A_plus));
    CHECK(f.k_change < 1e-12L);
}

TEST_CASE("Fourier oracle: periodicity and conjugate symmetry")
{
    auto g = family(Rational(1, 10));
    FourierConfig c;
    auto base = fourier_oracle(g, Frequency{-1}, c).value;
    c.re_z0 = 0.37L;
    CHECK(std::abs(fourier_oracle(g, Frequency{-1}, c).value - base) < 1e-8L);
    c.re_z0 = 0;
    c.im_z0 = -1;
    auto south = fourier_oracle(g, Frequency{1}, c).value;
    CHECK(std::abs(south - std::conj(base)) < 1e-8L);
    c.im_z0 = 1;
    CHECK_THROWS(fourier_oracle(g, Frequency{1}, c));
}

TEST_CASE("conjugation by a translation rescales the invariant")
{
    // g~(z) = g(z - alpha) + alpha = z + a (z - alpha)^{-2}
    const long double a = 0.1L, alpha = 0.25L;
    const int cap = 40;
    std::vector<cld> base(cap, 0), conj(cap, 0);
    base[2] = a;
    for (int d = 2; d < cap; ++d) conj[d] = a * (d - 1) * std::pow(alpha, static_cast<long double>(d - 2));
    Frequency w{-1};
    cld A = fourier_oracle(base, w).value;
    cld At = fourier_oracle(conj, w).value;
    CHECK(std::abs(At - std::exp(w.value() * alpha) * A) < 1e-9L);
}

TEST_CASE("oracle argument checks")
{
    FormalDiffeo<Rational> rho(6);
    rho.set(2, 1);
    CHECK_THROWS(fourier_oracle(rho, Frequency{-1}));
    CHECK_THROWS(borel_asymptotics_oracle(rho));
    CHECK_THROWS(borel_asymptotics_oracle(family(Rational(1, 10)), BorelConfig{10, 4}));
    auto weak = borel_asymptotics_oracle(family(Rational(1, 10)), BorelConfig{30, 4});
    CHECK_FALSE(weak.warnings.empty());
}
