#include "mouldinv/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mouldinv {

Rational parse_rational(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '+') t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw std::invalid_argument("malformed rational '" + s + "'");
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long double to_ld(const Rational& q)
{
    // mpq -> double loses range only for huge values; split to keep extended precision
    mpf_class num(q.get_num(), 128), den(q.get_den(), 128);
    mpf_class r(num / den, 128);
    long exp = 0;
    double hi = mpf_get_d_2exp(&exp, r.get_mpf_t());
    mpf_class rem(r, 128);
    mpf_class hif(hi, 128);
    if (exp >= 0)
        mpf_mul_2exp(hif.get_mpf_t(), hif.get_mpf_t(), exp);
    else
        mpf_div_2exp(hif.get_mpf_t(), hif.get_mpf_t(), -exp);
    rem -= hif;
    long double out = std::ldexp(static_cast<long double>(hi), static_cast<int>(exp));
    out += static_cast<long double>(rem.get_d());
    return out;
}

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return Rational(f);
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace mouldinv
