#pragma once

#include <string>
#include <vector>

namespace mouldinv {

// $MOULDINV_FIXTURES if set, else the source tree's fixtures/.
std::string fixture_dir();

struct FixtureResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Runs every manifest entry whose suite matches ("all" matches everything).
std::vector<FixtureResult> run_fixtures(const std::string& suite, const std::string& dir);

// Whitespace-insensitive, order-sensitive line comparison.
bool compare_text(const std::string& got, const std::string& golden, std::string& detail);
// Lines "Te^s [expr] monomial": same keys, values within rel (abs floor) after dropping zeros.
bool compare_collector(const std::string& got, const std::string& golden, long double rel, long double abs_floor,
                       std::string& detail);

}  // namespace mouldinv
