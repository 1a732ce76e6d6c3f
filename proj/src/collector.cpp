#include "mouldinv/collector.hpp"

#include <functional>
#include <stdexcept>

namespace mouldinv {

namespace {

using PolyTable = std::map<Seq, long>;

PolyTable poly_mul_linear(const PolyTable& p, int upto, int r)
{
    // multiply by (x_1 + ... + x_upto)
    PolyTable out;
    for (auto& [l, c] : p)
        for (int j = 0; j < upto && j < r; ++j) {
            Seq m = l;
            ++m[j];
            out[m] += c;
        }
    return out;
}

PolyTable build(DeltaKind kind, int r, const Seq& n)
{
    if (r < 1 || r > kDeltaMaxLength) throw std::out_of_range("delta tables support lengths 1..12");
    PolyTable p{{Seq(r, 0), 1}};
    if (kind == DeltaKind::Direct) {
        if (static_cast<int>(n.size()) != r) throw std::invalid_argument("direct delta needs n of length r");
        for (int j = 2; j <= r; ++j)
            for (int e = 0; e < n[j - 1]; ++e) p = poly_mul_linear(p, j - 1, r);
        return p;
    }
    int last = kind == DeltaKind::Sym ? r - 1 : r;
    for (int m = 1; m <= last; ++m) p = poly_mul_linear(p, m, r);
    return p;
}

}  // namespace

long delta_coefficient(DeltaKind kind, const Seq& l, const Seq& n)
{
    auto t = build(kind, static_cast<int>(l.size()), n);
    auto it = t.find(l);
    return it == t.end() ? 0 : it->second;
}

std::map<Seq, long> delta_table(DeltaKind kind, int r, const Seq& n)
{
    std::map<Seq, long> out;
    for (auto& [l, c] : build(kind, r, n))
        if (c) out.emplace(l, c);
    return out;
}

bool CollectorKeyLess::operator()(const CollectorKey& a, const CollectorKey& b) const
{
    int wa = monomial_weight(a.mono), wb = monomial_weight(b.mono);
    if (wa != wb) return wa < wb;
    if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
    if (a.seq != b.seq) return a.seq < b.seq;
    if (a.mono.size() != b.mono.size()) return a.mono.size() < b.mono.size();
    return a.mono < b.mono;
}

void CollectorExpansion::add(const CollectorKey& k, const ZetaExpr& e)
{
    if (e.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) {
        terms.emplace(k, e);
        return;
    }
    it->second += e;
    if (it->second.is_zero()) terms.erase(it);
}

Support full_support(int cap)
{
    Support s;
    for (int w = 2; w <= cap; ++w) s.insert(w);
    return s;
}

CollectorExpansion collector_symmetric(const Support& gens, int W, bool prime)
{
    CollectorExpansion out;
    out.scheme = prime ? Scheme::SymmetricPrime : Scheme::Symmetric;
    out.cap = W;
    if (gens.empty()) return out;
    const int minw = *gens.begin();
    for (int r = 1; r * minw <= W; ++r) {
        auto delta = delta_table(prime ? DeltaKind::Sym1 : DeltaKind::Sym, r);
        Seq ds;
        std::function<void(int)> rec = [&](int used) {
            if (static_cast<int>(ds.size()) == r) {
                Monomial mono;
                for (int d : ds) mono.push_back(d + 1);
                std::sort(mono.begin(), mono.end());
                for (auto& [l, dc] : delta) {
                    Seq s(r);
                    Rational c = dc;
                    if ((r - 1 + (prime ? 1 : 0)) % 2) c = -c;
                    for (int i = 0; i < r; ++i) {
                        s[i] = ds[i] + l[i];
                        c *= factorial(s[i] - 1) / factorial(ds[i] - 1);
                    }
                    out.add(CollectorKey{s, mono}, ZetaExpr(c));
                }
                return;
            }
            int left = r - static_cast<int>(ds.size()) - 1;
            for (int w : gens) {
                if (used + w + left * minw > W) break;
                ds.push_back(w - 1);
                rec(used + w);
                ds.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

CollectorExpansion collector_direct(const Support& gens, int sign, int W)
{
    CollectorExpansion out;
    out.basis = Basis::G;
    out.scheme = sign > 0 ? Scheme::DirectPlus : Scheme::DirectMinus;
    out.cap = W;
    if (gens.empty()) return out;
    const int minw = *gens.begin();
    FormalDiffeo<Poly> g(W);
    for (int s : gens)
        if (s <= W) g.set(s, Poly::var(s));
    // powers[n][s'] = g^{+/-}_{n,s'} as polynomials in the g_s
    std::vector<std::map<int, Poly>> powers(1);
    for (int n = 1; n * minw <= W; ++n) powers.push_back(power_coefficients(g, sign, n));
    for (int r = 1; r * minw <= W; ++r) {
        Seq n(r, 1);
        std::function<void(int, int)> rec_n = [&](int i, int budget) {
            if (i == r) {
                Rational nfact = 1;
                int ntot = 0;
                for (int j = 0; j < r; ++j) {
                    ntot += n[j];
                    if (j) nfact *= factorial(n[j]);
                }
                for (auto& [l, dc] : delta_table(DeltaKind::Direct, r, n)) {
                    Rational base = Rational(dc) / nfact;
                    if ((ntot - 1) % 2) base = -base;
                    // choose s'_i among available power coefficients
                    std::vector<int> sp(r);
                    std::function<void(int, int, Poly)> rec_s = [&](int k, int wsum, Poly coef) {
                        if (k == r) {
                            Seq s(r);
                            Rational c = base;
                            for (int j = 0; j < r; ++j) {
                                s[j] = sp[j] + l[j] - 1;
                                c *= factorial(s[j] - 1) / factorial(s[j] - l[j] - 1);
                            }
                            for (auto& [m, q] : coef.terms()) out.add(CollectorKey{s, m}, ZetaExpr(c * q));
                            return;
                        }
                        for (auto& [spk, pk] : powers[n[k]]) {
                            int w = spk + n[k] - 1;
                            if (wsum + w > W) break;
                            sp[k] = spk;
                            rec_s(k + 1, wsum + w, coef * pk);
                        }
                    };
                    rec_s(0, 0, Poly(Rational(1)));
                }
                return;
            }
            for (int v = 1; (budget + v) * minw <= W; ++v) {
                n[i] = v;
                rec_n(i + 1, budget + v);
            }
            n[i] = 1;
        };
        rec_n(1, 1);
    }
    return out;
}

CollectorExpansion reduce_collector(const CollectorExpansion& e)
{
    if (e.reduced) return e;
    CollectorExpansion out = e;
    out.terms.clear();
    out.reduced = true;
    ReduceOptions opts;
    opts.normalized = true;
    const bool tan = e.scheme == Scheme::Symmetric || e.scheme == Scheme::SymmetricPrime;
    std::map<Seq, MonotangentCombo> memo;
    for (auto& [k, c] : e.terms) {
        auto it = memo.find(k.seq);
        if (it == memo.end())
            it = memo.emplace(k.seq, tan ? reduce_Tan(k.seq, opts) : reduce_Te(k.seq, opts)).first;
        for (auto& [sigma, z] : it->second.terms) out.add(CollectorKey{{sigma}, k.mono}, z * c);
    }
    return out;
}

CollectorExpansion substitute(const CollectorExpansion& e, const std::map<int, Poly>& subs, Basis basis, int W)
{
    CollectorExpansion out = e;
    out.terms.clear();
    out.basis = basis;
    out.cap = W;
    std::map<Monomial, Poly> memo;
    for (auto& [k, z] : e.terms) {
        auto it = memo.find(k.mono);
        if (it == memo.end()) {
            Poly p(Rational(1));
            for (int s : k.mono) {
                auto f = subs.find(s);
                p = f == subs.end() ? Poly() : (p * f->second).truncated(W);
                if (p.is_zero()) break;
            }
            it = memo.emplace(k.mono, p).first;
        }
        for (auto& [m, q] : it->second.terms()) out.add(CollectorKey{k.seq, m}, z * q);
    }
    return out;
}

}  // namespace mouldinv
