#pragma once

#include <stdexcept>

namespace topo {

// Combinatorial data of a Legendrian front projection: writhe, cusp counts
// (up/down left cusps, up/down right cusps), number of passes over 1-handles,
// and the signed top-to-bottom edge crossings of a square diagram.
struct FrontData {
    long long writhe = 0;
    long long left_up = 0;     // lambda+
    long long left_down = 0;   // lambda-
    long long right_up = 0;    // rho+
    long long right_down = 0;  // rho-
    long long handle_crossings = 0;
    long long top_bottom = 0;  // 0 for box diagrams without wraparound

    void validate() const;  // cusp counts >= 0, left total == right total
};

struct InconsistentFront : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long tb(const FrontData &front);   // writhe - total left cusps

// lambda- - rho+ (+ edge correction); requires lambda- - rho+ == rho- - lambda+.
long long rot(const FrontData &front);

long long stein_framing(const FrontData &front);  // tb - 1

// tb + rot + 1 == handle_crossings mod 2.
bool parity_ok(const FrontData &front);

}  // namespace topo
