#pragma once

#include "mouldinv/rational.hpp"
#include "mouldinv/seq.hpp"

#include <map>
#include <string>

namespace mouldinv {

using Word = Seq;

bool convergent(const Word& w);

// A basis element T^tpow Ze^word, where T stands for (gamma - c).
struct ZetaKey {
    int tpow = 0;
    Word word;
};

// Canonical order: total weight, then T-power, depth, indices.
struct ZetaKeyLess {
    bool operator()(const ZetaKey& a, const ZetaKey& b) const;
};

class ZetaExpr {
public:
    using Map = std::map<ZetaKey, Rational, ZetaKeyLess>;

    ZetaExpr() = default;
    explicit ZetaExpr(const Rational& c);
    static ZetaExpr word(const Word& w, const Rational& c = 1);
    static ZetaExpr tee(int pow = 1, const Rational& c = 1);

    void add(const ZetaKey& k, const Rational& c);
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool has_tee() const;

    ZetaExpr& operator+=(const ZetaExpr& o);
    ZetaExpr& operator-=(const ZetaExpr& o);
    ZetaExpr& operator*=(const Rational& c);
    ZetaExpr operator-() const;
    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
    friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
    friend ZetaExpr operator*(ZetaExpr a, const Rational& c) { return a *= c; }
    friend ZetaExpr operator*(const Rational& c, ZetaExpr a) { return a *= c; }
    // Stuffle product, bilinear.
    friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
    friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

bool operator==(const ZetaKey& a, const ZetaKey& b);

ZetaExpr stuffle_product(const Word& u, const Word& v);

enum class CChoice { Gamma, Zero, Symbolic };

struct NormalizationConfig {
    CChoice c = CChoice::Gamma;
};

// Rewrites words with leading index 1 via the symmetrel extension with Ze^1 = T.
// Under CChoice::Gamma the T terms vanish.
ZetaExpr normalize(const ZetaExpr& e, const NormalizationConfig& cfg = {});
ZetaExpr normalize_word(const Word& w, const NormalizationConfig& cfg = {});

long double eval_numeric(const Word& w, long double tol = 1e-15L);
// t_value is the numeric value of T = gamma - c.
long double eval_numeric(const ZetaExpr& e, long double t_value = 0.0L);

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

}  // namespace mouldinv
