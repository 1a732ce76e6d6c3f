#pragma once

#include "mouldinv/formal.hpp"
#include "mouldinv/ring.hpp"
#include "mouldinv/zeta.hpp"

#include <map>
#include <vector>

namespace mouldinv {

struct MonotangentCombo {
    std::map<int, ZetaExpr> terms;  // sigma -> Teze/Tanze coefficient
    ZetaExpr constant;

    void add(int sigma, const ZetaExpr& e);
    bool is_zero() const { return terms.empty() && constant.is_zero(); }
    size_t term_count() const;
};

bool operator==(const MonotangentCombo& a, const MonotangentCombo& b);

enum class TanConvention {
    Full,          // all Te terms of logmu(Te) o (E-1)
    Uncontracted,  // only Te terms of full length r
};

struct ReduceOptions {
    // Divergent end indices allowed; zeta words pass through normalize().
    bool normalized = false;
    NormalizationConfig norm;
    TanConvention tan = TanConvention::Full;
};

MonotangentCombo reduce_Te(const Seq& s, const ReduceOptions& opts = {});
MonotangentCombo reduce_Tan(const Seq& s, const ReduceOptions& opts = {});

// Reduction before stuffle-linearization: products of at most two zeta words,
// kept as unordered pairs with empty factors dropped.
using ZetaProduct = std::vector<Word>;
using Red1Combo = std::map<int, std::map<ZetaProduct, Rational>>;

Red1Combo reduce_Te_red1(const Seq& s);
Red1Combo reduce_Tan_red1(const Seq& s, TanConvention conv = TanConvention::Full);
size_t term_count(const Red1Combo& c);

// Exact value of the form sum_k c_k (2 pi i)^k.
struct PiSeries {
    std::map<int, ZetaExpr> coeffs;

    void add(int power, const ZetaExpr& e);
    bool is_zero() const { return coeffs.empty(); }
    cld eval(long double t_value = 0) const;
};

bool operator==(const PiSeries& a, const PiSeries& b);

struct Frequency {
    long n;  // omega = 2 pi i n, n != 0
    cld value() const;
};

// Te^sigma_omega; for sigma = 1 the half-plane constant is separate.
PiSeries monotangent_fourier(int sigma, const Frequency& w);
// -pi i on the northern side (omega in Omega^-), +pi i on the southern side.
cld monotangent_constant(int sigma, const Frequency& w);
PiSeries multitangent_fourier(const MonotangentCombo& c, const Frequency& w);

// Closed form of the monotangent Te^sigma(z).
cld monotangent_value(int sigma, cld z);
cld eval_combo(const MonotangentCombo& c, cld z, long double t_value = 0);

enum class Family { Te, Ta, Ten, Tan, InvTe, SePlus, SeMinus, InvSeMinus };

struct SumControl {
    long n0 = 256;    // smallest cutoff
    int levels = 6;  // cutoffs n0, 2 n0, ... for extrapolation
};

// Truncated nested sums with polynomial extrapolation in 1/N.
cld eval_numeric_family(Family f, const Seq& s, cld z, long double tol = 1e-10L, const SumControl& sc = {});
// Te = Se_+ x invSe_-; use_se_minus swaps in Se_- as a negative control.
bool check_bilateral_product(const Seq& s, cld z, long double tol = 1e-8L, bool use_se_minus = false);

}  // namespace mouldinv
