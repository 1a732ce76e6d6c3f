#include "mouldinv/multitangent.hpp"

#include <cmath>
#include <stdexcept>

namespace mouldinv {

namespace {

enum class Order { Decreasing, NonDecreasing };

// Sum over n in [lo, hi] chains ordered as requested of prod (n_j + z)^{-s_j}.
cld chain_sum(const Seq& s, cld z, long lo, long hi, Order order)
{
    const size_t r = s.size();
    if (r == 0) return 1;
    std::vector<cld> acc(r + 1, 0);
    std::vector<cld> pw(r);
    for (long n = lo; n <= hi; ++n) {
        cld base = cld(static_cast<long double>(n)) + z;
        if (std::abs(base) < 1e-9L) throw std::domain_error("evaluation point too close to a pole");
        cld inv = 1.0L / base;
        for (size_t j = 0; j < r; ++j) {
            cld p = 1;
            for (int k = 0; k < s[j]; ++k) p *= inv;
            pw[j] = p;
        }
        if (order == Order::Decreasing) {
            // acc[j]: chains n_{j+1} > ... > n_r below the current n
            for (size_t j = 0; j < r; ++j) acc[j] += pw[j] * (j + 1 < r ? acc[j + 1] : cld(1));
        } else {
            // acc[j]: chains n_1 <= ... <= n_{j+1} up to the current n
            for (size_t j = 0; j < r; ++j) acc[j] += pw[j] * (j ? acc[j - 1] : cld(1));
        }
    }
    return order == Order::Decreasing ? acc[0] : acc[r - 1];
}

cld raw_sum(Family f, const Seq& s, cld z, long N)
{
    switch (f) {
    case Family::Te:
        return chain_sum(s, z, -N, N, Order::Decreasing);
    case Family::InvTe:
        return (s.size() % 2 ? -1.0L : 1.0L) * chain_sum(s, z, -N, N, Order::NonDecreasing);
    case Family::SePlus:
        return chain_sum(s, z, 1, N, Order::Decreasing);
    case Family::InvSeMinus:
        return chain_sum(s, z, -N, 0, Order::Decreasing);
    case Family::SeMinus:
        return (s.size() % 2 ? -1.0L : 1.0L) * chain_sum(s, z, -N, 0, Order::NonDecreasing);
    default:
        throw std::logic_error("not a direct-sum family");
    }
}

void check_convergence(Family f, const Seq& s)
{
    if (s.empty()) return;
    bool ok = true;
    switch (f) {
    case Family::SePlus:
    case Family::SeMinus:
        ok = s.front() >= 2;
        break;
    case Family::InvSeMinus:
        ok = s.back() >= 2;
        break;
    default:
        ok = s.front() >= 2 && s.back() >= 2;
    }
    if (!ok) throw std::domain_error("divergent indices for numeric evaluation: " + join(s));
}

// Limit of v(N) fitted by L + sum_{k<=K, j<=J} c_kj log(N)^j / N^k on the given cutoffs.
cld log_fit(const std::vector<long>& Ns, const std::vector<cld>& v, size_t first, int K, int J)
{
    const size_t P = 1 + static_cast<size_t>(K * (J + 1));
    std::vector<std::vector<cld>> A(P, std::vector<cld>(P + 1));
    for (size_t i = 0; i < P; ++i) {
        long double N = static_cast<long double>(Ns[first + i]), L = std::log(N) / std::log(static_cast<long double>(Ns.back()));
        A[i][0] = 1;
        size_t c = 1;
        for (int k = 1; k <= K; ++k)
            for (int j = 0; j <= J; ++j) A[i][c++] = std::pow(L, static_cast<long double>(j)) * std::pow(static_cast<long double>(Ns[first]) / N, static_cast<long double>(k));
        A[i][P] = v[first + i];
    }
    for (size_t c = 0; c < P; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < P; ++r)
            if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        std::swap(A[c], A[piv]);
        for (size_t r = 0; r < P; ++r) {
            if (r == c) continue;
            cld m = A[r][c] / A[c][c];
            for (size_t k = c; k <= P; ++k) A[r][k] -= m * A[c][k];
        }
    }
    return A[0][P] / A[0][0];
}

// Interior unit indices bring log(N)/N^k terms into the truncation error.
cld extrapolated_log(Family f, const Seq& s, cld z, long double tol, const SumControl& sc, int J)
{
    const int K = 3;
    const size_t P = 1 + static_cast<size_t>(K * (J + 1));
    std::vector<long> Ns;
    std::vector<cld> v;
    cld best = 0;
    long double err = INFINITY;
    for (long N = sc.n0 * 4; Ns.size() < P + 8; N = N * 3 / 2) {
        Ns.push_back(N);
        v.push_back(raw_sum(f, s, z, N));
        if (Ns.size() < P + 1) continue;
        cld a = log_fit(Ns, v, Ns.size() - P, K, J), b = log_fit(Ns, v, Ns.size() - P - 1, K, J);
        err = std::abs(a - b);
        best = a;
        if (err < tol * 0.1L) return best;
    }
    if (err > tol) throw std::runtime_error("summation did not reach tolerance for " + join(s));
    return best;
}

cld extrapolated(Family f, const Seq& s, cld z, long double tol, const SumControl& sc)
{
    check_convergence(f, s);
    if (s.empty()) return 1;
    int units = 0;
    for (size_t i = 1; i + 1 < s.size(); ++i) units += s[i] == 1;
    if (units) return extrapolated_log(f, s, z, tol, sc, units);
    // Neville table in h = 1/N.
    std::vector<cld> row;
    std::vector<long double> hs;
    cld best = 0;
    long double err = INFINITY;
    const int max_levels = sc.levels + 3;
    for (int k = 0; k < max_levels; ++k) {
        long N = sc.n0 << k;
        hs.push_back(1.0L / static_cast<long double>(N));
        row.push_back(raw_sum(f, s, z, N));
        for (int j = static_cast<int>(row.size()) - 2; j >= 0; --j) {
            long double hj = hs[j], hk = hs.back();
            row[j] = row[j + 1] + (row[j + 1] - row[j]) * (hk / (hj - hk));
        }
        if (row.size() >= 3) {
            err = std::abs(row[0] - best);
            best = row[0];
            if (k + 1 >= sc.levels && err < tol * 0.1L) return best;
        } else {
            best = row[0];
        }
    }
    if (err > tol) throw std::runtime_error("summation did not reach tolerance for " + join(s));
    return best;
}

cld value(Family f, const Seq& s, cld z, long double tol, const SumControl& sc);

// Ta = Te o (E-1), Ten = logmu Te, Tan = logmu Ta, evaluated on values.
cld composed(Family f, const Seq& s, cld z, long double tol, const SumControl& sc)
{
    const size_t r = s.size();
    if (r == 0) return f == Family::Ta ? 1 : 0;
    cld total = 0;
    for (unsigned long mask = 0; mask < (1UL << (r - 1)); ++mask) {
        std::vector<Seq> pieces;
        Seq cur{s[0]};
        for (size_t i = 1; i < r; ++i) {
            if (mask & (1UL << (i - 1))) {
                pieces.push_back(cur);
                cur.clear();
            }
            cur.push_back(s[i]);
        }
        pieces.push_back(cur);
        const auto k = static_cast<long double>(pieces.size());
        cld term = 1;
        if (f == Family::Ta) {
            Seq outer;
            for (auto& p : pieces) {
                outer.push_back(weight(p));
                term /= std::tgamma(static_cast<long double>(p.size()) + 1);
            }
            total += term * value(Family::Te, outer, z, tol, sc);
            continue;
        }
        Family base = f == Family::Ten ? Family::Te : Family::Ta;
        for (auto& p : pieces) term *= value(base, p, z, tol, sc);
        total += term * ((pieces.size() % 2 ? 1.0L : -1.0L) / k);
    }
    return total;
}

cld value(Family f, const Seq& s, cld z, long double tol, const SumControl& sc)
{
    if (f == Family::Ta || f == Family::Ten || f == Family::Tan) return composed(f, s, z, tol, sc);
    return extrapolated(f, s, z, tol, sc);
}

}  // namespace

cld eval_numeric_family(Family f, const Seq& s, cld z, long double tol, const SumControl& sc)
{
    return value(f, s, z, tol, sc);
}

bool check_bilateral_product(const Seq& s, cld z, long double tol, bool use_se_minus)
{
    const long double inner = tol * 0.01L;
    cld lhs = eval_numeric_family(Family::Te, s, z, inner);
    cld rhs = 0;
    const Family right = use_se_minus ? Family::SeMinus : Family::InvSeMinus;
    for (size_t k = 0; k <= s.size(); ++k) {
        Seq a(s.begin(), s.begin() + k), b(s.begin() + k, s.end());
        if (use_se_minus && !b.empty() && b.front() < 2) continue;
        rhs += eval_numeric_family(Family::SePlus, a, z, inner) * eval_numeric_family(right, b, z, inner);
    }
    return std::abs(lhs - rhs) < tol;
}

}  // namespace mouldinv
