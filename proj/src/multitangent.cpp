#include "mouldinv/multitangent.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace mouldinv {

void MonotangentCombo::add(int sigma, const ZetaExpr& e)
{
    if (e.is_zero()) return;
    auto& slot = terms[sigma];
    slot += e;
    if (slot.is_zero()) terms.erase(sigma);
}

size_t MonotangentCombo::term_count() const
{
    size_t n = 0;
    for (auto& [s, e] : terms) n += e.size();
    return n;
}

bool operator==(const MonotangentCombo& a, const MonotangentCombo& b)
{
    return a.terms == b.terms && a.constant == b.constant;
}

namespace {

using TeVisitor = std::function<void(int sigma, const Word& left, const Word& rr, const Rational& c)>;

void ge_compositions(const std::vector<int>& lows, size_t at, int total, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& f)
{
    if (at == lows.size()) {
        if (total == 0) f(cur);
        return;
    }
    int rest = 0;
    for (size_t j = at + 1; j < lows.size(); ++j) rest += lows[j];
    for (int x = lows[at]; x <= total - rest; ++x) {
        cur.push_back(x);
        ge_compositions(lows, at + 1, total - x, cur, f);
        cur.pop_back();
    }
}

// Partial fractions: for each pole position i, Te^{sigma_i} times Ze^{left} viZe^{right}.
void te_expand(const Seq& s, const TeVisitor& visit)
{
    const size_t r = s.size();
    const int S = weight(s);
    for (size_t i = 0; i < r; ++i) {
        std::vector<int> lows;
        for (size_t j = 0; j < r; ++j)
            if (j != i) lows.push_back(s[j]);
        for (int si = 1; si <= s[i]; ++si) {
            std::vector<int> cur;
            ge_compositions(lows, 0, S - si, cur, [&](const std::vector<int>& rest) {
                Rational c = (s[i] - si) % 2 ? -1 : 1;
                Word left(rest.begin(), rest.begin() + i), rr;
                int right_weight = 0;
                for (size_t j = 0, k = 0; j < r; ++j) {
                    if (j == i) continue;
                    c *= binomial(rest[k] - 1, s[j] - 1);
                    ++k;
                }
                for (size_t k = rest.size(); k-- > i;) {
                    rr.push_back(rest[k]);
                    right_weight += rest[k];
                }
                if (right_weight % 2) c = -c;
                visit(si, left, rr, c);
            });
        }
    }
}

void check_input(const Seq& s, bool normalized)
{
    if (s.empty()) throw std::invalid_argument("reduction of the empty sequence");
    for (int x : s)
        if (x < 1) throw std::invalid_argument("indices must be positive");
    if (!normalized && (s.front() == 1 || s.back() == 1))
        throw std::domain_error("divergent multitangent Te^{" + join(s) + "}: use normalized mode");
}

struct MemoKey {
    Seq s;
    int c;
    bool operator<(const MemoKey& o) const { return c != o.c ? c < o.c : s < o.s; }
};

std::mutex te_mutex;
std::map<MemoKey, MonotangentCombo> te_memo;

}  // namespace

MonotangentCombo reduce_Te(const Seq& s, const ReduceOptions& opts)
{
    check_input(s, opts.normalized);
    MemoKey key{s, static_cast<int>(opts.norm.c)};
    {
        std::lock_guard<std::mutex> lock(te_mutex);
        auto it = te_memo.find(key);
        if (it != te_memo.end()) return it->second;
    }
    std::map<int, ZetaExpr> raw;
    te_expand(s, [&](int sigma, const Word& left, const Word& rr, const Rational& c) {
        raw[sigma] += stuffle_product(left, rr) * c;
    });
    MonotangentCombo out;
    for (auto& [sigma, e] : raw) out.add(sigma, normalize(e, opts.norm));
    std::lock_guard<std::mutex> lock(te_mutex);
    te_memo.emplace(key, out);
    return out;
}

MonotangentCombo reduce_Tan(const Seq& s, const ReduceOptions& opts)
{
    check_input(s, opts.normalized);
    ReduceOptions inner = opts;
    inner.normalized = true;
    MonotangentCombo out;
    for (auto& t : expand_Tan_in_Te(static_cast<int>(s.size()))) {
        if (opts.tan == TanConvention::Uncontracted && t.blocks.size() != s.size()) continue;
        Seq u = instantiate(t, s);
        if (!opts.normalized && (u.front() == 1 || u.back() == 1))
            throw std::domain_error("divergent term Te^{" + join(u) + "} in Tan expansion: use normalized mode");
        for (auto& [sigma, e] : reduce_Te(u, inner).terms) out.add(sigma, e * t.coeff);
    }
    return out;
}

namespace {

void red1_add(Red1Combo& out, int sigma, const Word& left, const Word& rr, const Rational& c)
{
    ZetaProduct key;
    if (!left.empty()) key.push_back(left);
    if (!rr.empty()) key.push_back(rr);
    std::sort(key.begin(), key.end());
    auto& row = out[sigma];
    auto& v = row[key];
    v += c;
    if (v == 0) row.erase(key);
    if (row.empty()) out.erase(sigma);
}

}  // namespace

Red1Combo reduce_Te_red1(const Seq& s)
{
    check_input(s, true);
    Red1Combo out;
    te_expand(s, [&](int sigma, const Word& left, const Word& rr, const Rational& c) {
        red1_add(out, sigma, left, rr, c);
    });
    return out;
}

Red1Combo reduce_Tan_red1(const Seq& s, TanConvention conv)
{
    check_input(s, true);
    Red1Combo out;
    for (auto& t : expand_Tan_in_Te(static_cast<int>(s.size()))) {
        if (conv == TanConvention::Uncontracted && t.blocks.size() != s.size()) continue;
        te_expand(instantiate(t, s), [&](int sigma, const Word& left, const Word& rr, const Rational& c) {
            red1_add(out, sigma, left, rr, c * t.coeff);
        });
    }
    return out;
}

size_t term_count(const Red1Combo& c)
{
    size_t n = 0;
    for (auto& [s, row] : c) n += row.size();
    return n;
}

void PiSeries::add(int power, const ZetaExpr& e)
{
    if (e.is_zero()) return;
    auto& slot = coeffs[power];
    slot += e;
    if (slot.is_zero()) coeffs.erase(power);
}

cld PiSeries::eval(long double t_value) const
{
    const cld tpi(0, 2 * std::numbers::pi_v<long double>);
    cld s = 0;
    for (auto& [p, e] : coeffs) s += eval_numeric(e, t_value) * std::pow(tpi, p);
    return s;
}

bool operator==(const PiSeries& a, const PiSeries& b) { return a.coeffs == b.coeffs; }

cld Frequency::value() const { return cld(0, 2 * std::numbers::pi_v<long double> * n); }

PiSeries monotangent_fourier(int sigma, const Frequency& w)
{
    if (w.n == 0) throw std::invalid_argument("frequency must be nonzero");
    if (sigma < 1) throw std::invalid_argument("monotangent index must be positive");
    mpz_class np;
    mpz_pow_ui(np.get_mpz_t(), mpz_class(w.n).get_mpz_t(), static_cast<unsigned long>(sigma - 1));
    Rational c = Rational(np) / factorial(sigma - 1);
    if (w.n < 0) c = -c;
    PiSeries out;
    out.add(sigma, ZetaExpr(c));
    return out;
}

cld monotangent_constant(int sigma, const Frequency& w)
{
    if (sigma != 1) return 0;
    const long double pi = std::numbers::pi_v<long double>;
    return w.n < 0 ? cld(0, -pi) : cld(0, pi);
}

PiSeries multitangent_fourier(const MonotangentCombo& c, const Frequency& w)
{
    PiSeries out;
    for (auto& [sigma, e] : c.terms) {
        PiSeries m = monotangent_fourier(sigma, w);
        for (auto& [p, k] : m.coeffs) out.add(p, e * k);
    }
    return out;
}

namespace {

std::mutex cot_mutex;
std::vector<std::vector<Rational>> cot_polys{{}, {0, 1}};

// Te^sigma = pi^sigma Q_sigma(cot pi z), Q_{s+1} = (1 + c^2) Q_s' / s.
const std::vector<Rational>& cot_poly(int sigma)
{
    std::lock_guard<std::mutex> lock(cot_mutex);
    while (static_cast<int>(cot_polys.size()) <= sigma) {
        const auto& q = cot_polys.back();
        int s = static_cast<int>(cot_polys.size()) - 1;
        std::vector<Rational> d(q.size() + 1, 0);
        for (size_t k = 1; k < q.size(); ++k) {
            Rational dk = q[k] * static_cast<long>(k);
            d[k - 1] += dk;
            d[k + 1] += dk;
        }
        for (auto& x : d) x /= s;
        cot_polys.push_back(d);
    }
    return cot_polys[sigma];
}

}  // namespace

cld monotangent_value(int sigma, cld z)
{
    const long double pi = std::numbers::pi_v<long double>;
    cld c = std::cos(pi * z) / std::sin(pi * z);
    const auto& q = cot_poly(sigma);
    cld v = 0;
    for (size_t k = q.size(); k-- > 0;) v = v * c + to_ld(q[k]);
    return v * std::pow(pi, static_cast<long double>(sigma));
}

cld eval_combo(const MonotangentCombo& c, cld z, long double t_value)
{
    cld v = eval_numeric(c.constant, t_value);
    for (auto& [sigma, e] : c.terms) v += eval_numeric(e, t_value) * monotangent_value(sigma, z);
    return v;
}

}  // namespace mouldinv
