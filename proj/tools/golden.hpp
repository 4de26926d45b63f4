#pragma once

#include <string>
#include <vector>

namespace quotring_cli {

struct GoldenClaim {
    std::string name;
    bool pass;
    std::string detail;
};

/// Reference computations over Z_6, Z_36 and Z_72 with frozen expected
/// values; any library regression flips at least one claim.
std::vector<GoldenClaim> golden_claims();

}  // namespace quotring_cli
