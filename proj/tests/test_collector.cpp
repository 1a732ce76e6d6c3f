#include <doctest.h>

#include "mouldinv/collector.hpp"

using namespace mouldinv;

namespace {

int zeta_weight(const ZetaExpr& e)
{
    int w = -1;
    for (auto& [k, c] : e.terms()) {
        int kw = weight(k.word) + k.tpow;
        if (w >= 0 && kw != w) return -2;
        w = kw;
    }
    return w;
}

}  // namespace

TEST_CASE("delta tables")
{
    CHECK(delta_coefficient(DeltaKind::Sym, {0}) == 1);
    CHECK(delta_table(DeltaKind::Sym, 3) == std::map<Seq, long>{{{2, 0, 0}, 1}, {{1, 1, 0}, 1}});
    CHECK(delta_table(DeltaKind::Sym1, 2) == std::map<Seq, long>{{{2, 0}, 1}, {{1, 1}, 1}});
    for (int r = 1; r <= 7; ++r) {
        long s = 0, s1 = 0;
        for (auto& [l, c] : delta_table(DeltaKind::Sym, r)) {
            CHECK(weight(l) == r - 1);
            s += c;
        }
        for (auto& [l, c] : delta_table(DeltaKind::Sym1, r)) {
            CHECK(weight(l) == r);
            s1 += c;
        }
        CHECK(Rational(s) == factorial(r - 1));
        CHECK(Rational(s1) == factorial(r));
    }
    // direct kind: x_1^{n_2} (x_1 + x_2)^{n_3}, sum = 2^{n_3}
    long d = 0;
    for (auto& [l, c] : delta_table(DeltaKind::Direct, 3, {1, 2, 3})) d += c;
    CHECK(d == 8);
    CHECK(delta_coefficient(DeltaKind::Direct, {3, 2, 0}, {1, 2, 3}) == 3);
}

TEST_CASE("empty and trivial collectors")
{
    CHECK(collector_symmetric({}, 8).terms.empty());
    CHECK(collector_direct({}, 1, 8).terms.empty());
    CHECK(reduce_collector(CollectorExpansion{}).terms.empty());
}

TEST_CASE("grading identity of the reduced symmetric collector")
{
    auto red = reduce_collector(collector_symmetric(full_support(9), 9));
    CHECK(red.terms.size() > 20);
    for (auto& [k, z] : red.terms) {
        REQUIRE(k.seq.size() == 1);
        CHECK(k.seq[0] + zeta_weight(z) == monomial_weight(k.mono) - 1);
    }
    auto dir = reduce_collector(collector_direct(full_support(8), 1, 8));
    for (auto& [k, z] : dir.terms) CHECK(k.seq[0] + zeta_weight(z) == monomial_weight(k.mono) - 1);
}

TEST_CASE("reflexive generators give only even monotangents")
{
    Support odd{3, 5, 7, 9, 11, 13};
    auto red = reduce_collector(collector_symmetric(odd, 13));
    CHECK(red.terms.size() > 10);
    for (auto& [k, z] : red.terms) CHECK(k.seq[0] % 2 == 0);
}

TEST_CASE("schemes agree at linear order")
{
    const int W = 9;
    auto sym = reduce_collector(collector_symmetric(full_support(W), W));
    for (int sign : {1, -1}) {
        auto dir = reduce_collector(collector_direct(full_support(W), sign, W));
        int linear = 0;
        for (auto& [k, z] : dir.terms) {
            if (k.mono.size() != 1) continue;
            ++linear;
            auto it = sym.terms.find(k);
            REQUIRE(it != sym.terms.end());
            CHECK(it->second * Rational(sign) == z);
        }
        CHECK(linear == W - 1);
    }
}

TEST_CASE("leading coefficient for z + eps z^-2")
{
    auto sym = reduce_collector(collector_symmetric({3}, 3));
    REQUIRE(sym.terms.size() == 1);
    CHECK(sym.terms.begin()->first.seq == Seq{2});
    CHECK(sym.terms.begin()->second == ZetaExpr(Rational(1)));
}
