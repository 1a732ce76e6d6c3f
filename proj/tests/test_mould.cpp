#include <doctest.h>

#include "mouldinv/mould.hpp"

#include <random>

using namespace mouldinv;

namespace {

Rational q(long n, long d)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Mould<Rational> random_mould(int cap, std::mt19937& rng, bool unit, bool zero_empty = false)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Mould<Rational> m = Mould<Rational>::tabulate(cap, [&](const Seq&) { return q(num(rng), den(rng)); });
    if (unit) m.set({}, 1);
    if (zero_empty) m.set({}, 0);
    return m;
}

bool same(const Mould<Rational>& a, const Mould<Rational>& b) { return a.values() == b.values(); }

}  // namespace

TEST_CASE("mould product: associative with unit")
{
    std::mt19937 rng(11);
    const int cap = 8;
    for (int t = 0; t < 3; ++t) {
        auto a = random_mould(cap, rng, false), b = random_mould(cap, rng, false), c = random_mould(cap, rng, false);
        CHECK(same(mould_mul(mould_mul(a, b), c), mould_mul(a, mould_mul(b, c))));
        CHECK(same(mould_mul(a, unit_mould<Rational>(cap)), a));
        CHECK(same(mould_mul(unit_mould<Rational>(cap), a), a));
    }
}

TEST_CASE("mould composition: associative, unit, distributive")
{
    std::mt19937 rng(12);
    const int cap = 6;
    for (int t = 0; t < 3; ++t) {
        auto a = random_mould(cap, rng, false);
        auto b = random_mould(cap, rng, false, true), c = random_mould(cap, rng, false, true);
        auto d = random_mould(cap, rng, false);
        CHECK(same(mould_compose(mould_compose(a, b), c), mould_compose(a, mould_compose(b, c))));
        CHECK(same(mould_compose(a, ident_mould<Rational>(cap)), a));
        CHECK(same(mould_compose(ident_mould<Rational>(cap), b), b));
        CHECK(same(mould_compose(mould_mul(a, d), c), mould_mul(mould_compose(a, c), mould_compose(d, c))));
    }
}

TEST_CASE("logmu/expmu and inverse roundtrips")
{
    std::mt19937 rng(13);
    const int cap = 7;
    auto a = random_mould(cap, rng, true);
    CHECK(same(mould_expmu(mould_logmu(a)), a));
    auto z = random_mould(cap, rng, false, true);
    CHECK(same(mould_logmu(mould_expmu(z)), z));
    CHECK(same(mould_mul(a, mould_inverse(a)), unit_mould<Rational>(cap)));
    CHECK(same(mould_mul(mould_inverse(a), a), unit_mould<Rational>(cap)));
}

TEST_CASE("symmetry checker separates the types")
{
    const int cap = 6;
    // expmu of an alternal mould is symmetral
    auto ident = ident_mould<Rational>(cap);
    CHECK(check_symmetry(ident, Symmetry::Alternal, cap).ok);
    auto e = mould_expmu(ident);
    CHECK(check_symmetry(e, Symmetry::Symmetral, cap).ok);
    CHECK_FALSE(check_symmetry(e, Symmetry::Alternal, cap).ok);
    CHECK(check_symmetry(mould_logmu(e), Symmetry::Alternal, cap).ok);
}

TEST_CASE("tan(t/2) coefficients")
{
    auto k = tan_half_coefficients(7);
    CHECK(k[0] == 0);
    CHECK(k[1] == 1);
    CHECK(k[2] == 0);
    CHECK(k[3] == Rational(1, 12));
    CHECK(k[5] == Rational(1, 120));
    CHECK(k[7] == Rational(17, 20160));
}
