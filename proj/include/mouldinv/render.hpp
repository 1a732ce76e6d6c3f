#pragma once

#include "mouldinv/collector.hpp"
#include "mouldinv/formal.hpp"
#include "mouldinv/invariants.hpp"
#include "mouldinv/multitangent.hpp"

#include <json.hpp>

#include <string>

namespace mouldinv {

using nlohmann::json;

std::string render_word(const Word& w, const std::string& head = "Ze");
// "5 Ze^{10} - 7/3 Ze^{8,2}"; "0" when empty.
std::string render_zeta(const ZetaExpr& e);
std::string render_monomial(const Monomial& m, Basis basis);

// One row per monotangent: "Tanze^{2,6,4}_2 = ...".
std::string render_reduction(const std::string& head, const Seq& s, const MonotangentCombo& c);
std::string render_collector(const CollectorExpansion& e);
std::string render_number(long double x);
std::string render_complex(cld z);

json zeta_to_json(const ZetaExpr& e);
json reduction_to_json(const std::string& head, const Seq& s, const MonotangentCombo& c);
json formal_to_json(int r, const std::vector<FormalTerm>& terms);
json collector_to_json(const CollectorExpansion& e);
json invariants_to_json(const InvariantSet& s);

// Numeric value of an expression written with Ze^{...}, z(...) (same word convention), powers and rationals,
// e.g. "6 z(3)^2 - 5/2 z(5) + 3 z(6,2)". Throws std::invalid_argument with the offending column.
long double eval_zeta_text(const std::string& text);

}  // namespace mouldinv
