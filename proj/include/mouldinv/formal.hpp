#pragma once

#include "mouldinv/rational.hpp"
#include "mouldinv/seq.hpp"

#include <string>
#include <vector>

namespace mouldinv {

// One Te symbol of an index-generic expansion: block i is the bit set of slots
// (bit j = slot n_{j+1}) whose indices are added into the i-th entry.
struct FormalTerm {
    std::vector<unsigned> blocks;
    Rational coeff;
};

constexpr int kFormalMaxLength = 7;

// Tan^{n_1..n_r} = logmu(Te) o (E-1), every Te product she-linearized.
const std::vector<FormalTerm>& expand_Tan_in_Te(int r);

// Concrete index sequence of a formal term applied to s.
Seq instantiate(const FormalTerm& t, const Seq& s);

std::string render_symbol(const FormalTerm& t);
std::string render_formal(const std::vector<FormalTerm>& terms);

}  // namespace mouldinv
