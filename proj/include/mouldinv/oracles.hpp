#pragma once

#include "mouldinv/invariants.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mouldinv {

struct FourierConfig {
    int k = 200;
    long double im_z0 = 1.0L;
    long double re_z0 = 0.0L;
    int nodes = 128;
    // Replace the bare shifts l^{-k} by the asymptotic Fatou coordinate at both ends.
    bool end_correction = true;
    int fatou_terms = 80;
};

struct BorelConfig {
    int N = 300;
    int window = 12;  // number of trailing coefficients in the fit
};

struct OracleConfig {
    FourierConfig fourier;
    BorelConfig borel;
};

struct FourierResult {
    cld value;       // pi^{+}_omega estimate, = A^{-+eps(omega)}_omega
    cld value_2k;    // same with 2k iterations
    long double k_change = 0;
    int k = 0;
};

// The map g as an analytic function: truncated series z + sum_s g_s z^{1-s}.
FourierResult fourier_oracle(const FormalDiffeo<Rational>& g, const Frequency& w, const FourierConfig& cfg = {});
// Complex coefficients: disp[d] multiplies z^{-d} in g(z) - z. Works in long double throughout.
FourierResult fourier_oracle(const std::vector<cld>& disp, const Frequency& w, const FourierConfig& cfg = {});

struct BorelResult {
    cld A_minus;  // A_{-2 pi i}
    cld A_plus;   // A_{+2 pi i}
    long double residual = 0;  // relative fit residual
    long double digits = 0;
    std::vector<std::string> warnings;
};

BorelResult borel_asymptotics_oracle(const FormalDiffeo<Rational>& g, const BorelConfig& cfg = {});

// Residue of the Borel pole at omega divided by A_omega; fixed by calibration.
cld borel_residue_factor();

}  // namespace mouldinv
