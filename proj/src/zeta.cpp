#include "mouldinv/zeta.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace mouldinv {

bool convergent(const Word& w) { return w.empty() || w.front() >= 2; }

bool ZetaKeyLess::operator()(const ZetaKey& a, const ZetaKey& b) const
{
    int wa = weight(a.word) + a.tpow, wb = weight(b.word) + b.tpow;
    if (wa != wb) return wa < wb;
    if (a.tpow != b.tpow) return a.tpow < b.tpow;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
}

bool operator==(const ZetaKey& a, const ZetaKey& b) { return a.tpow == b.tpow && a.word == b.word; }

ZetaExpr::ZetaExpr(const Rational& c)
{
    if (c != 0) terms_.emplace(ZetaKey{}, c);
}

ZetaExpr ZetaExpr::word(const Word& w, const Rational& c)
{
    ZetaExpr e;
    e.add(ZetaKey{0, w}, c);
    return e;
}

ZetaExpr ZetaExpr::tee(int pow, const Rational& c)
{
    ZetaExpr e;
    e.add(ZetaKey{pow, {}}, c);
    return e;
}

void ZetaExpr::add(const ZetaKey& k, const Rational& c)
{
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool ZetaExpr::has_tee() const
{
    for (auto& [k, c] : terms_)
        if (k.tpow) return true;
    return false;
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& o)
{
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& o)
{
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

ZetaExpr& ZetaExpr::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

ZetaExpr ZetaExpr::operator-() const
{
    ZetaExpr r = *this;
    r *= -1;
    return r;
}

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b)
{
    ZetaExpr out;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            Rational c = ca * cb;
            for (auto& [w, m] : she_set(ka.word, kb.word))
                out.add(ZetaKey{ka.tpow + kb.tpow, w}, c * m);
        }
    return out;
}

ZetaExpr stuffle_product(const Word& u, const Word& v)
{
    ZetaExpr out;
    for (auto& [w, m] : she_set(u, v)) out.add(ZetaKey{0, w}, m);
    return out;
}

namespace {

std::mutex norm_mutex;
std::map<Word, ZetaExpr> norm_memo;

// Symbolic normalization, T kept.
ZetaExpr normalize_symbolic(const Word& w)
{
    if (convergent(w)) return ZetaExpr::word(w);
    {
        std::lock_guard<std::mutex> lock(norm_mutex);
        auto it = norm_memo.find(w);
        if (it != norm_memo.end()) return it->second;
    }
    size_t k = 0;
    while (k < w.size() && w[k] == 1) ++k;
    Word u(w.begin() + 1, w.end());
    ZetaExpr res;
    ZetaExpr nu = normalize_symbolic(u);
    for (auto& [k2, c] : nu.terms()) res.add(ZetaKey{k2.tpow + 1, k2.word}, c);
    for (auto& [x, m] : she_set(Word{1}, u)) {
        if (x == w) continue;
        res -= normalize_symbolic(x) * Rational(m);
    }
    res *= Rational(1, static_cast<long>(k));
    std::lock_guard<std::mutex> lock(norm_mutex);
    norm_memo.emplace(w, res);
    return res;
}

}  // namespace

ZetaExpr normalize_word(const Word& w, const NormalizationConfig& cfg)
{
    ZetaExpr e = normalize_symbolic(w);
    if (cfg.c != CChoice::Gamma) return e;
    ZetaExpr out;
    for (auto& [k, c] : e.terms())
        if (k.tpow == 0) out.add(k, c);
    return out;
}

ZetaExpr normalize(const ZetaExpr& e, const NormalizationConfig& cfg)
{
    ZetaExpr out;
    for (auto& [k, c] : e.terms()) {
        if (cfg.c == CChoice::Gamma && k.tpow > 0) continue;
        ZetaExpr nw = normalize_word(k.word, cfg);
        for (auto& [k2, c2] : nw.terms())
            out.add(ZetaKey{k.tpow + k2.tpow, k2.word}, c * c2);
    }
    return out;
}

namespace {

using Letters = std::vector<int>;

std::mutex li_mutex;
std::map<Letters, long double> li_memo;
std::mutex eval_mutex;
std::map<Word, long double> eval_memo;

constexpr int kHalfTerms = 96;

// Sum over n_1 > ... > n_k >= 1 of 2^{-n_1} / prod n_j^{m_j}, the word ending in letter 1.
long double li_half(const Letters& word)
{
    if (word.empty()) return 1.0L;
    {
        std::lock_guard<std::mutex> lock(li_mutex);
        auto it = li_memo.find(word);
        if (it != li_memo.end()) return it->second;
    }
    std::vector<int> ms;
    int run = 0;
    for (int a : word) {
        ++run;
        if (a == 1) {
            ms.push_back(run);
            run = 0;
        }
    }
    const int N = kHalfTerms;
    std::vector<long double> prev(N + 2, 1.0L), cur(N + 2);
    long double total = 0;
    for (int j = static_cast<int>(ms.size()) - 1; j >= 0; --j) {
        long double acc = 0;
        for (int n = 1; n <= N + 1; ++n) {
            cur[n] = acc;
            long double term = prev[n] / std::pow(static_cast<long double>(n), ms[j]);
            if (j == 0) term *= std::ldexp(1.0L, -n);
            acc += term;
        }
        std::swap(prev, cur);
        total = acc;
    }
    std::lock_guard<std::mutex> lock(li_mutex);
    li_memo.emplace(word, total);
    return total;
}

}  // namespace

long double eval_numeric(const Word& w, long double tol)
{
    if (!convergent(w)) throw std::domain_error("normalize first: Ze^{" + join(w) + "} is divergent");
    if (tol < 1e-19L) throw std::domain_error("requested tolerance below extended precision");
    if (w.empty()) return 1.0L;
    {
        std::lock_guard<std::mutex> lock(eval_mutex);
        auto it = eval_memo.find(w);
        if (it != eval_memo.end()) return it->second;
    }
    Letters letters;
    for (int s : w) {
        letters.insert(letters.end(), s - 1, 0);
        letters.push_back(1);
    }
    // Hoelder convolution at 1/2: split the iterated integral at the midpoint.
    long double total = 0;
    for (size_t j = 0; j <= letters.size(); ++j) {
        Letters dual;
        for (size_t i = j; i-- > 0;) dual.push_back(1 - letters[i]);
        Letters tail(letters.begin() + j, letters.end());
        total += li_half(dual) * li_half(tail);
    }
    std::lock_guard<std::mutex> lock(eval_mutex);
    eval_memo.emplace(w, total);
    return total;
}

long double eval_numeric(const ZetaExpr& e, long double t_value)
{
    long double s = 0;
    for (auto& [k, c] : e.terms())
        s += to_ld(c) * std::pow(t_value, k.tpow) * eval_numeric(k.word);
    return s;
}

}  // namespace mouldinv
