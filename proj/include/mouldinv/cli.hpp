#pragma once

#include "mouldinv/invariants.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mouldinv {

struct InputFile {
    DiffeoInput in;
    bool symbolic = false;
    Support support;  // generator indices, in the basis of in.kind
};

// Parses a diffeo input document; `path` only labels error messages.
InputFile parse_input(const std::string& text, const std::string& path);

// Collector with monomials in the input's own basis.
CollectorExpansion build_collector(const InputFile& f, Scheme scheme, int W, bool reduce);

// args excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mouldinv
