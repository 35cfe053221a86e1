#include "topo/fixtures.hpp"
#include "topo/kirby.hpp"
#include "topo/parser.hpp"

#include <doctest.h>

using namespace topo;

TEST_CASE("blow-down formula")
{
    // chain 1 -1 -2 -2 -3: blowing down the +1 head gives [-2,-2,-2,-3]
    TrackedLink t = tracked(parse_link("chain 1 -1 -2 -2 -3"));
    apply_move(t, BlowDown{"S1"});
    REQUIRE(t.link.size() == 4);
    CHECK(t.link.framing(0) == -2);
    CHECK(t.link.framing(1) == -2);
    CHECK(t.link.framing(2) == -2);
    CHECK(t.link.framing(3) == -3);
    CHECK(is_chain_link(t.link, 1));

    // isolated +1 unknot: removal changes nothing else
    TrackedLink iso = tracked(parse_link("comp A -7; comp E 1"));
    apply_move(iso, BlowDown{"E"});
    CHECK(iso.link.size() == 1);
    CHECK(iso.link.framing(0) == -7);

    // A(3)-B(-1)-C(2) chain: blowing down B links A and C
    TrackedLink abc = tracked(parse_link("chain 3 -1 2"));
    apply_move(abc, BlowDown{"S2"});
    CHECK(abc.link.framing(0) == 4);
    CHECK(abc.link.framing(1) == 3);
    CHECK(abc.link.lk(0, 1) == 1);

    CHECK_THROWS_AS(apply_move(abc, BlowDown{"S1"}), MoveError);  // framing 4
}

TEST_CASE("handle slide formula")
{
    // slide K1 over K2 with a negative band: framing 0 + (-4) - 2(-3) = 2
    TrackedLink b3 = tracked(parse_link("comp K1 0; comp K2 -4; lk K1 K2 -3"));
    apply_move(b3, Slide{"K1", "K2", -1});
    CHECK(b3.link.framing(0) == 2);
    CHECK(b3.link.lk(0, 1) == 1);

    // sliding over a 0-framed unlinked component changes nothing
    TrackedLink idle = tracked(parse_link("comp A 5; comp B 0"));
    apply_move(idle, Slide{"A", "B", 1});
    CHECK(idle.link.framing(0) == 5);
    CHECK(idle.link.lk(0, 1) == 0);

    // two unlinked +1 unknots, positive band
    TrackedLink pair = tracked(parse_link("comp A 1; comp B 1"));
    apply_move(pair, Slide{"A", "B", 1});
    CHECK(pair.link.framing(0) == 2);
    CHECK(pair.link.lk(0, 1) == 1);
}

TEST_CASE("1-handle surgery")
{
    TrackedLink t = tracked(parse_link("comp K1 9; comp K2 -4; lk K1 K2 -3"));
    apply_move(t, Surger1Handle{"K1"});
    CHECK(t.link.framing(0) == 0);
    CHECK(t.l0[0]);
    CHECK(t.link.lk(0, 1) == -3);
}

TEST_CASE("blow-up then blow-down is the identity")
{
    FramedLink original = parse_link("comp A -5; comp B 2; lk A B 3");
    for (int sign : {1, -1})
        for (int ma : {0, 1, -2})
            for (int mb : {0, 2}) {
                TrackedLink t = tracked(original);
                apply_move(t, BlowUp{sign, "E", {{"A", ma}, {"B", mb}}});
                CHECK(t.link.framing(2) == sign);
                CHECK(t.link.lk(2, 0) == sign * ma);
                apply_move(t, BlowDown{"E"});
                CHECK(t.link.labels == original.labels);
                CHECK(t.link.linking == original.linking);
            }
}

TEST_CASE("moves preserve the boundary group order")
{
    TrackedLink t = tracked(parse_link("chain 1 -1 -2 -2"));
    Int order = boundary_h1(t.link).order();
    apply_move(t, Slide{"S3", "S4", -1});
    CHECK(boundary_h1(t.link).order() == order);
    apply_move(t, BlowUp{-1, "E", {{"S2", 1}}});
    CHECK(boundary_h1(t.link).order() == order);
    apply_move(t, BlowDown{"E"});
    CHECK(boundary_h1(t.link).order() == order);
    apply_move(t, BlowDown{"S1"});
    CHECK(boundary_h1(t.link).order() == order);
}

TEST_CASE("script replay: ball boundary to plumbing chain")
{
    FixtureProvider fx;
    TrackedLink end = run_script(tracked(fx.bn(3).link), fx.ball_to_chain_script(3));
    REQUIRE(end.link.size() == 2);
    CHECK(end.link.framing(0) == -5);
    CHECK(end.link.framing(1) == -2);
    CHECK(end.link.lk(0, 1) == 1);
    // lambda1 = mu1 + mu2, lambda2 = 2 mu1 + mu2
    H1Presentation h1 = end.h1();
    auto &mu1 = end.class_of("K1");
    auto &mu2 = end.class_of("K2");
    CHECK(h1.reduce({mu1[0] + mu2[0], mu1[1] + mu2[1]}) == h1.generator(0));
    CHECK(h1.reduce({2 * mu1[0] + mu2[0], 2 * mu1[1] + mu2[1]}) == h1.generator(1));
}

TEST_CASE("script replay: ball boundary to the reversed lens chain")
{
    FixtureProvider fx;
    TrackedLink end = run_script(tracked(fx.bn(2).link), fx.ball_to_lens_script(2));
    REQUIRE(end.link.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(end.link.framing(i) == 2);
    CHECK(is_chain_link(end.link, -1));
    // the final meridian class is mu1 + mu2
    H1Presentation h1 = end.h1();
    auto &mu1 = end.class_of("K1");
    auto &mu2 = end.class_of("K2");
    std::vector<Int> sum(3);
    for (std::size_t i = 0; i < 3; ++i) sum[i] = mu1[i] + mu2[i];
    CHECK(h1.reduce(sum) == h1.generator(2));  // meridian of the last component
}

TEST_CASE("empty script returns the input")
{
    FixtureProvider fx;
    TrackedLink start = tracked(fx.bn(4).link);
    TrackedLink end = run_script(start, MoveScript{});
    CHECK(end.link.linking == start.link.linking);
    CHECK(end.classes == start.classes);
}

TEST_CASE("script text round-trip")
{
    FixtureProvider fx;
    for (Int n = 2; n <= 6; ++n) {
        MoveScript a = fx.ball_to_chain_script(n);
        MoveScript b = parse_script(serialize_script(a));
        CHECK(serialize_script(b) == serialize_script(a));
        CHECK(a.moves.size() == b.moves.size());
    }
    CHECK_THROWS_AS(parse_script("slide A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_script("warp A B"), std::invalid_argument);
}

TEST_CASE("script failures carry the step index")
{
    FixtureProvider fx;
    MoveScript bad;
    bad.moves.push_back(Slide{"K1", "K2", -1});
    bad.moves.push_back(BlowDown{"K2"});  // framing -4 at this point
    try {
        run_script(tracked(fx.bn(3).link), bad);
        FAIL("expected a move error");
    } catch (const MoveError &e) {
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}
