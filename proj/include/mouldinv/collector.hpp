#pragma once

#include "mouldinv/diffeo.hpp"
#include "mouldinv/multitangent.hpp"
#include "mouldinv/poly.hpp"

#include <map>
#include <set>
#include <string>

namespace mouldinv {

enum class DeltaKind { Sym, Sym1, Direct };

// Coefficient of x^l in the generating polynomial of the requested kind;
// `n` is only read for DeltaKind::Direct.
long delta_coefficient(DeltaKind kind, const Seq& l, const Seq& n = {});
// Whole table: l -> coefficient (nonzero entries only).
std::map<Seq, long> delta_table(DeltaKind kind, int r, const Seq& n = {});

constexpr int kDeltaMaxLength = 12;

enum class Basis { GStar, G };
enum class Scheme { Symmetric, SymmetricPrime, DirectPlus, DirectMinus };

struct CollectorKey {
    Seq seq;  // multitangent indices, or {sigma} in reduced form
    Monomial mono;
};

// Total monomial weight, then sequence, then monomial.
struct CollectorKeyLess {
    bool operator()(const CollectorKey& a, const CollectorKey& b) const;
};

struct CollectorExpansion {
    Basis basis = Basis::GStar;
    Scheme scheme = Scheme::Symmetric;
    bool reduced = false;
    int cap = 0;
    std::map<CollectorKey, ZetaExpr, CollectorKeyLess> terms;

    void add(const CollectorKey& k, const ZetaExpr& e);
    size_t size() const { return terms.size(); }
};

// Generator weights s with g_{*s} (resp. g_s) allowed to be nonzero.
using Support = std::set<int>;
Support full_support(int cap);

CollectorExpansion collector_symmetric(const Support& gens, int W, bool prime = false);
CollectorExpansion collector_direct(const Support& gens, int sign, int W);
CollectorExpansion reduce_collector(const CollectorExpansion& e);

// Replaces each generator variable by a polynomial in new variables, dropping weight above W.
CollectorExpansion substitute(const CollectorExpansion& e, const std::map<int, Poly>& subs, Basis basis, int W);

// Substitute numeric values for the generator coefficients.
template <class V>
V monomial_value(const Monomial& m, const std::map<int, V>& values)
{
    V p = RingOps<V>::one();
    for (int s : m) {
        auto it = values.find(s);
        if (it == values.end()) return RingOps<V>::zero();
        p = p * it->second;
    }
    return p;
}

}  // namespace mouldinv
