#pragma once

#include "mouldinv/ring.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace mouldinv {

using Mp = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<160>,
                                         boost::multiprecision::et_off>;

inline Mp mp_from(const Rational& q)
{
    return Mp(q.get_num().get_str()) / Mp(q.get_den().get_str());
}

template <>
struct RingOps<Mp> {
    static Mp zero() { return Mp(0); }
    static Mp one() { return Mp(1); }
    static Mp from(const Rational& q) { return mp_from(q); }
    static bool is_zero(const Mp& a) { return a == 0; }
    static long double dist(const Mp& a, const Mp& b) { return static_cast<long double>(abs(a - b)); }
};

}  // namespace mouldinv
