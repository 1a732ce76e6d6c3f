#pragma once

#include "mouldinv/rational.hpp"
#include "mouldinv/zeta.hpp"

#include <cmath>
#include <complex>

namespace mouldinv {

using cld = std::complex<long double>;

// Coefficient-ring plumbing for the generic mould and series code.
template <class T>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational from(const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static long double dist(const Rational& a, const Rational& b) { return a == b ? 0.0L : 1.0L; }
};

template <>
struct RingOps<ZetaExpr> {
    static ZetaExpr zero() { return {}; }
    static ZetaExpr one() { return ZetaExpr(Rational(1)); }
    static ZetaExpr from(const Rational& q) { return ZetaExpr(q); }
    static bool is_zero(const ZetaExpr& a) { return a.is_zero(); }
    static long double dist(const ZetaExpr& a, const ZetaExpr& b) { return a == b ? 0.0L : 1.0L; }
};

template <>
struct RingOps<long double> {
    static long double zero() { return 0; }
    static long double one() { return 1; }
    static long double from(const Rational& q) { return to_ld(q); }
    static bool is_zero(long double a) { return a == 0; }
    static long double dist(long double a, long double b) { return std::fabs(a - b); }
};

template <>
struct RingOps<cld> {
    static cld zero() { return 0; }
    static cld one() { return 1; }
    static cld from(const Rational& q) { return to_ld(q); }
    static bool is_zero(const cld& a) { return a == cld(0); }
    static long double dist(const cld& a, const cld& b) { return std::abs(a - b); }
};

}  // namespace mouldinv
