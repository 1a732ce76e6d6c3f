#pragma once

#include "mouldinv/collector.hpp"

#include <map>
#include <string>
#include <vector>

namespace mouldinv {

// A diffeo as read from an input file: g_s or g_{*s} coefficients.
struct DiffeoInput {
    Basis kind = Basis::G;
    std::map<int, Rational> coeffs;
    int cap = 12;
};

FormalDiffeo<Rational> diffeo_of(const DiffeoInput& in);
Generator<Rational> generator_of(const DiffeoInput& in);

// Exact object sum over monomials of PiSeries.
struct ExactConnector {
    std::map<Monomial, PiSeries> terms;

    void add(const Monomial& m, int power, const ZetaExpr& e);
    bool is_zero() const { return terms.empty(); }
    ExactConnector scaled(const Rational& c, int power_shift) const;
    cld eval(const std::map<int, cld>& values) const;
};

bool operator==(const ExactConnector& a, const ExactConnector& b);

// Substitutes Te^sigma_omega into a reduced collector (pi_* or pi^+/-).
ExactConnector connector_fourier(const CollectorExpansion& e, const Frequency& w);
// Borel transform of the power-series collector evaluated at omega.
ExactConnector borel_values(const CollectorExpansion& e, const Frequency& w);

enum class Invariant { A, APlus, AMinus };
enum class Route { Fourier, Borel };

// Exact invariant through either sign table.
ExactConnector invariant_exact(const CollectorExpansion& reduced, Invariant which, const Frequency& w, Route route);

struct InvariantValue {
    long n = 0;
    cld A, Aplus, Aminus;
    long double est_err = 0;
};

struct InvariantSet {
    int W = 0;
    std::string method;
    std::vector<InvariantValue> values;
    std::vector<std::string> warnings;
};

InvariantSet invariants_numeric(const DiffeoInput& in, const std::vector<long>& ns, int W, long double tol = 1e-6L);

// Reduced collectors are cached by scheme, support and cap.
const CollectorExpansion& cached_reduced_collector(Scheme scheme, const Support& gens, int W);

}  // namespace mouldinv
