#include "topo/fixtures.hpp"
#include "topo/parser.hpp"
#include "topo/spin.hpp"

#include <doctest.h>

using namespace topo;

TEST_CASE("characteristic sublinks of the pinned diagrams")
{
    FixtureProvider fx;

    FramedLink c3 = fx.cn(3).link;  // chain -5 -2
    auto spins_c3 = characteristic_sublinks(c3);
    REQUIRE(spins_c3.size() == 1);
    CHECK(spins_c3[0] == spin_from_labels(c3, {"W2"}));

    FramedLink b3 = fx.bn(3).link;
    auto spins_b3 = characteristic_sublinks(b3);
    REQUIRE(spins_b3.size() == 1);
    CHECK(spins_b3[0] == spin_from_labels(b3, {}));

    FramedLink b2 = fx.bn(2).link;  // [[0,-2],[-2,-3]]
    auto spins_b2 = characteristic_sublinks(b2);
    REQUIRE(spins_b2.size() == 2);
    CHECK(spins_b2[0] == spin_from_labels(b2, {"K2"}));
    CHECK(spins_b2[1] == spin_from_labels(b2, {"K1", "K2"}));
    CHECK(spins_b2[0].to_string(b2) == "{K2}");
    CHECK(spins_b2[1].to_string(b2) == "{K1, K2}");
}

TEST_CASE("spin counts and defining congruence across the range")
{
    FixtureProvider fx;
    for (Int n = 2; n <= 50; ++n) {
        const std::size_t expected = (n % 2 == 0) ? 2 : 1;
        for (const FramedLink &link : {fx.bn(n).link, fx.cn(n).link, fx.lens(n).link}) {
            auto spins = characteristic_sublinks(link);
            CHECK(spins.size() == expected);
            for (const auto &s : spins) CHECK(is_characteristic(link, s));
            // solution set is affine over the mod-2 kernel
            if (spins.size() == 2) {
                SpinStructure x;
                x.members.resize(link.size());
                for (std::size_t i = 0; i < link.size(); ++i)
                    x.members[i] = spins[0].members[i] ^ spins[1].members[i];
                // xor of two solutions solves the homogeneous system: adding
                // it to a solution gives a solution again
                SpinStructure shifted;
                shifted.members.resize(link.size());
                for (std::size_t i = 0; i < link.size(); ++i)
                    shifted.members[i] = spins[1].members[i] ^ x.members[i];
                CHECK(is_characteristic(link, shifted));
            }
        }
    }
}

TEST_CASE("an empty sublink is characteristic only for even framings")
{
    FramedLink even = parse_link("comp A -4; comp B 2; lk A B 3");
    SpinStructure empty;
    empty.members.assign(2, 0);
    CHECK(is_characteristic(even, empty));
    FramedLink odd = parse_link("comp A -3");
    empty.members.assign(1, 0);
    CHECK(!is_characteristic(odd, empty));
}
