#include "topo/legendrian.hpp"

#include <doctest.h>

using namespace topo;

namespace {

// Front data of the attaching circle running n times over the 1-handle.
FrontData attaching_circle(long long n) { return FrontData{-(n - 1), 0, 1, 0, 1, n, 0}; }

// Front data of the chain head with rotation number -n.
FrontData chain_head(long long n) { return FrontData{0, n + 1, 0, n, 1, 0, 0}; }

// Interior chain component (and the standard unknot).
const FrontData interior{0, 1, 0, 0, 1, 0, 0};

}  // namespace

TEST_CASE("classical invariants of the pinned fronts")
{
    FrontData k = attaching_circle(3);
    CHECK(tb(k) == -3);
    CHECK(rot(k) == 1);
    CHECK(stein_framing(k) == -4);
    CHECK(parity_ok(k));

    CHECK(tb(interior) == -1);
    CHECK(rot(interior) == 0);
    CHECK(stein_framing(interior) == -2);
    CHECK(parity_ok(interior));

    FrontData w1 = chain_head(3);
    CHECK(tb(w1) == -4);
    CHECK(rot(w1) == -3);
    CHECK(stein_framing(w1) == -5);
    CHECK(parity_ok(w1));
}

TEST_CASE("framings reproduce the fixture links for the whole range")
{
    for (long long n = 2; n <= 50; ++n) {
        CHECK(tb(attaching_circle(n)) == -n);
        CHECK(rot(attaching_circle(n)) == 1);
        CHECK(stein_framing(attaching_circle(n)) == -n - 1);
        CHECK(parity_ok(attaching_circle(n)));

        CHECK(tb(chain_head(n)) == -n - 1);
        CHECK(rot(chain_head(n)) == -n);
        CHECK(stein_framing(chain_head(n)) == -n - 2);
        CHECK(parity_ok(chain_head(n)));
    }
}

TEST_CASE("inconsistent cusp data is rejected")
{
    FrontData unbalanced{0, 1, 0, 0, 0, 0, 0};  // one left cusp, no right cusp
    CHECK_THROWS_AS(tb(unbalanced), InconsistentFront);
    CHECK_THROWS_AS(rot(unbalanced), InconsistentFront);
    FrontData negative{0, -1, 0, -1, 0, 0, 0};
    CHECK_THROWS_AS(tb(negative), InconsistentFront);
}

TEST_CASE("edge-crossing correction shifts rot")
{
    FrontData square{0, 1, 0, 0, 1, 0, 2};
    CHECK(rot(square) == 2);
}
