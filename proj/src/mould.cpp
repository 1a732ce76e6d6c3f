#include "mouldinv/mould.hpp"

namespace mouldinv {

std::vector<Rational> tan_half_coefficients(int rmax)
{
    // 2 tan(t/2) = 2 sin(t/2) / cos(t/2), by exact series division.
    std::vector<Rational> s(rmax + 1), c(rmax + 1), q(rmax + 1);
    for (int k = 0; k <= rmax; ++k) {
        Rational term = 1 / (factorial(k) * Rational(mpz_class(1) << k));
        if (k % 2 == 0)
            c[k] = (k / 2 % 2 ? -term : term);
        else
            s[k] = ((k - 1) / 2 % 2 ? -term : term) * 2;
    }
    for (int n = 0; n <= rmax; ++n) {
        Rational acc = s[n];
        for (int j = 1; j <= n; ++j) acc -= c[j] * q[n - j];
        q[n] = acc / c[0];
    }
    return q;
}

}  // namespace mouldinv
