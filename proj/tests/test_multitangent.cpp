#include <doctest.h>

#include "mouldinv/multitangent.hpp"

#include <algorithm>
#include <numbers>

using namespace mouldinv;

namespace {

const std::vector<cld> kPoints{cld(0.3L, 0.2L), cld(-0.45L, 0.6L), cld(0.1L, -0.35L)};

std::vector<Seq> convergent_up_to(int w)
{
    std::vector<Seq> out;
    for (auto& s : sequences_up_to(w))
        if (s.front() >= 2 && s.back() >= 2) out.push_back(s);
    return out;
}

int zeta_weight(const ZetaExpr& e, bool& uniform)
{
    int w = -1;
    for (auto& [k, c] : e.terms()) {
        int kw = weight(k.word) + k.tpow;
        if (w >= 0 && kw != w) uniform = false;
        w = kw;
    }
    return w;
}

void check_grading(const MonotangentCombo& c, int total)
{
    for (auto& [sigma, e] : c.terms) {
        bool uniform = true;
        int zw = zeta_weight(e, uniform);
        CHECK(uniform);
        CHECK(sigma + zw == total);
    }
    bool uniform = true;
    if (!c.constant.is_zero()) CHECK(zeta_weight(c.constant, uniform) == total);
    CHECK(uniform);
}

}  // namespace

TEST_CASE("monotangent closed form against direct sums")
{
    for (int sigma = 2; sigma <= 7; ++sigma)
        for (auto z : kPoints) {
            cld direct = eval_numeric_family(Family::Te, {sigma}, z, 1e-13L);
            CHECK(std::abs(monotangent_value(sigma, z) - direct) < 1e-10L);
        }
    const long double pi = std::numbers::pi_v<long double>;
    cld z = kPoints[0];
    CHECK(std::abs(monotangent_value(1, z) - pi / std::tan(pi * z)) < 1e-14L);
}

TEST_CASE("reductions evaluate to the multitangent")
{
    for (auto& s : std::vector<Seq>{{2, 3}, {3, 2}, {2, 2, 2}, {2, 1, 3}, {3, 1, 2, 2}, {2, 6, 4}})
        for (auto z : kPoints) {
            cld direct = eval_numeric_family(Family::Te, s, z, 1e-12L);
            CHECK(std::abs(eval_combo(reduce_Te(s), z) - direct) < 1e-8L);
        }
    for (auto& s : std::vector<Seq>{{2, 3}, {2, 2, 3}, {3, 2, 2, 2}})
        for (auto z : kPoints) {
            cld direct = eval_numeric_family(Family::Tan, s, z, 1e-12L);
            CHECK(std::abs(eval_combo(reduce_Tan(s), z) - direct) < 1e-8L);
        }
}

TEST_CASE("sigma = 1 components vanish for convergent reductions")
{
    auto sigma1 = [](const MonotangentCombo& c) {
        auto it = c.terms.find(1);
        return it == c.terms.end() ? 0.0L : std::fabs(eval_numeric(it->second));
    };
    CHECK(sigma1(reduce_Te({2, 6, 4})) < 1e-8L);
    CHECK(sigma1(reduce_Te({2, 7, 4})) < 1e-8L);
    CHECK(sigma1(reduce_Tan({2, 7, 4})) < 1e-8L);
    CHECK(sigma1(reduce_Tan({2, 3, 2, 5})) < 1e-8L);
    for (auto& s : convergent_up_to(9)) CHECK(sigma1(reduce_Te(s)) < 1e-8L);
}

TEST_CASE("weight grading of every reduction")
{
    ReduceOptions norm;
    norm.normalized = true;
    for (auto& s : sequences_up_to(8)) {
        if (s.size() > 7) continue;
        check_grading(reduce_Te(s, norm), weight(s));
        check_grading(reduce_Tan(s, norm), weight(s));
    }
}

TEST_CASE("Te symmetrelity at weight <= 8")
{
    auto seqs = convergent_up_to(6);
    long double worst = 0;
    for (auto z : kPoints)
        for (auto& u : seqs)
            for (auto& v : seqs) {
                if (weight(u) + weight(v) > 8) continue;
                cld lhs = eval_numeric_family(Family::Te, u, z) * eval_numeric_family(Family::Te, v, z);
                cld rhs = 0;
                for (auto& [w, m] : she_set(u, v)) rhs += static_cast<long double>(m) * eval_numeric_family(Family::Te, w, z);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    CHECK(worst < 1e-8L);
}

TEST_CASE("Tan alternality at weight <= 8")
{
    // unit indices make the individual Te factors of Tan divergent
    std::vector<Seq> seqs;
    for (auto& s : convergent_up_to(6))
        if (std::find(s.begin(), s.end(), 1) == s.end()) seqs.push_back(s);
    long double worst = 0;
    for (auto z : {kPoints[0], kPoints[1]})
        for (auto& u : seqs)
            for (auto& v : seqs) {
                if (weight(u) + weight(v) > 8) continue;
                cld sum = 0;
                for (auto& [w, m] : sha_set(u, v)) sum += static_cast<long double>(m) * eval_numeric_family(Family::Tan, w, z, 1e-12L);
                worst = std::max(worst, std::abs(sum));
            }
    CHECK(worst < 1e-8L);
}

TEST_CASE("parity of values")
{
    for (auto& s : std::vector<Seq>{{2, 3}, {3, 2, 4}, {2, 1, 2}, {4, 2, 2, 3}})
        for (auto z : kPoints) {
            cld a = eval_numeric_family(Family::Te, s, -z, 1e-12L);
            cld b = eval_numeric_family(Family::Te, reversed(s), z, 1e-12L);
            long double sign = weight(s) % 2 ? -1 : 1;
            CHECK(std::abs(a - sign * b) < 1e-8L);
        }
}

TEST_CASE("parity separation of Tan reductions")
{
    ReduceOptions norm;
    norm.normalized = true;
    for (auto& s : sequences_up_to(8)) {
        if (s.size() < 2 || s.size() > 7) continue;
        auto c = reduce_Tan(s, norm);
        int parity = (weight(s) - static_cast<int>(s.size()) + 1) % 2;
        for (auto& [sigma, e] : c.terms) CHECK(sigma % 2 == parity);
    }
    for (auto& s : std::vector<Seq>{{2, 6, 4}, {2, 7, 4}, {2, 3, 2, 5}, {3, 3, 3}}) {
        auto c = reduce_Tan(s);
        int parity = (weight(s) - static_cast<int>(s.size()) + 1) % 2;
        for (auto& [sigma, e] : c.terms) CHECK(sigma % 2 == parity);
    }
}

TEST_CASE("bilateral product identity")
{
    for (auto& s : std::vector<Seq>{{2, 3}, {3, 2, 2}, {2, 4, 3}})
        for (auto z : {kPoints[0], kPoints[1]}) {
            CHECK(check_bilateral_product(s, z));
            CHECK_FALSE(check_bilateral_product(s, z, 1e-8L, true));
        }
}

TEST_CASE("Fourier coefficients of monotangents")
{
    // trapezoid rule on a horizontal line in the half-plane where e^{-omega z} decays
    for (long n : {-2L, -1L, 1L, 2L})
        for (int sigma = 2; sigma <= 6; ++sigma) {
            Frequency w{n};
            const long double y = n < 0 ? 0.4L : -0.4L;
            const int nodes = 256;
            cld acc = 0;
            for (int j = 0; j < nodes; ++j) {
                cld z(static_cast<long double>(j) / nodes, y);
                acc += monotangent_value(sigma, z) * std::exp(w.value() * z);
            }
            acc /= static_cast<long double>(nodes);
            cld exact = monotangent_fourier(sigma, w).eval();
            CHECK(std::abs(acc - exact) < 1e-10L * std::max(1.0L, std::abs(exact)));
        }
    CHECK(std::abs(monotangent_constant(1, Frequency{-1}) - cld(0, -std::numbers::pi_v<long double>)) < 1e-15L);
}
