#include "topo/continued_fraction.hpp"
#include "topo/framed_link.hpp"
#include "topo/parser.hpp"

#include <doctest.h>

using namespace topo;

TEST_CASE("chain expansion")
{
    FramedLink a = chain_to_link(PlumbingChain{{-4}});
    CHECK(a.size() == 1);
    CHECK(a.framing(0) == -4);

    FramedLink b = chain_to_link(PlumbingChain{{-5, -2}});
    CHECK(b.framing(0) == -5);
    CHECK(b.framing(1) == -2);
    CHECK(b.lk(0, 1) == 1);

    FramedLink c = chain_to_link(PlumbingChain{{1, -1, -2, -2}});
    CHECK(c.size() == 4);
    CHECK(c.framing(0) == 1);
    CHECK(c.framing(3) == -2);
    CHECK(c.lk(1, 2) == 1);
    CHECK(c.lk(0, 3) == 0);
    CHECK(is_chain_link(c, 1));
}

TEST_CASE("continued fraction values")
{
    CHECK(cf_value(ContinuedFraction{{-4}}) == Rat(-4));
    CHECK(cf_value(ContinuedFraction{{-5, -2}}) == Rat(-9, 2));
    CHECK(cf_value(ContinuedFraction{{-2, -2, -2}}) == Rat(-4, 3));
    CHECK_THROWS_AS(cf_value(ContinuedFraction{{}}), MalformedContinuedFraction);
    CHECK_THROWS_AS(cf_value(ContinuedFraction{{3, 1, 1}}), MalformedContinuedFraction);
}

TEST_CASE("negative continued fraction expansion")
{
    CHECK(neg_cf_expand(4, 3).coefficients == std::vector<Int>{-2, -2, -2});
    CHECK(neg_cf_expand(9, 2).coefficients == std::vector<Int>{-5, -2});
    CHECK(neg_cf_expand(4, 1).coefficients == std::vector<Int>{-4});
    CHECK_THROWS_AS(neg_cf_expand(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(neg_cf_expand(3, 5), std::invalid_argument);
}

TEST_CASE("expansion shapes for the two plumbing families")
{
    for (Int n = 2; n <= 50; ++n) {
        ContinuedFraction a = neg_cf_expand(n * n, n - 1);
        REQUIRE(a.coefficients.size() == std::size_t((n - 1).convert_to<long>()));
        CHECK(a.coefficients[0] == -(n + 2));
        for (std::size_t i = 1; i < a.coefficients.size(); ++i) CHECK(a.coefficients[i] == -2);
        CHECK(cf_value(a) == Rat(-(n * n), n - 1));

        ContinuedFraction b = neg_cf_expand(n * n, n * n - n + 1);
        REQUIRE(b.coefficients.size() == std::size_t((n + 1).convert_to<long>()));
        for (std::size_t i = 0; i + 1 < b.coefficients.size(); ++i) CHECK(b.coefficients[i] == -2);
        CHECK(b.coefficients.back() == -n);
        CHECK(cf_value(b) == Rat(-(n * n), n * n - n + 1));
    }
}

TEST_CASE("parser accepts the statement grammar")
{
    FramedLink a = parse_link("chain -5 -2");
    CHECK(a.linking == chain_to_link(PlumbingChain{{-5, -2}}).linking);

    FramedLink b = parse_link("comp K1 0; comp K2 -4; lk K1 K2 -2");
    CHECK(b.framing(0) == 0);
    CHECK(b.framing(1) == -4);
    CHECK(b.lk(0, 1) == -2);

    CHECK_THROWS_AS(parse_link("comp A 1; lk A B 1"), ParseError);
    CHECK_THROWS_AS(parse_link("comp A 1; comp A 2"), ParseError);
    CHECK_THROWS_AS(parse_link("comp A 1; comp B 2; lk A B 1; lk B A 2"), ParseError);
    CHECK_THROWS_AS(parse_link("comp A x"), ParseError);
    CHECK_THROWS_AS(parse_link("frob A 1"), ParseError);

    // comments and separators
    FramedLink c = parse_link("# header\ncomp A 3 # trailing\ncomp B -1\nlk A B 2");
    CHECK(c.lk(0, 1) == 2);
}

TEST_CASE("parse error carries position")
{
    try {
        parse_link("comp A 1\nlk A B 1");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line == 2);
        CHECK(e.column == 6);
    }
}

TEST_CASE("serialize then parse is the identity")
{
    FramedLink links[] = {
        chain_to_link(PlumbingChain{{-5, -2}}),
        parse_link("comp K1 0; comp K2 -4; lk K1 K2 -2"),
        chain_to_link(PlumbingChain{{1, -1, -2, -2, -3}}),
    };
    for (const FramedLink &link : links) {
        FramedLink round = parse_link(serialize_link(link));
        CHECK(round.labels == link.labels);
        CHECK(round.linking == link.linking);
    }
}

TEST_CASE("diagram statements survive serialization")
{
    ParsedDiagram d = parse_diagram("comp K1 0\ncomp K2 -3\nlk K1 K2 -2\nrot K2 1\nl0 K1\n");
    CHECK(d.rot.at("K2") == 1);
    CHECK(d.l0.count("K1") == 1);
    ParsedDiagram round = parse_diagram(serialize_diagram(d));
    CHECK(round.link.linking == d.link.linking);
    CHECK(round.rot == d.rot);
    CHECK(round.l0 == d.l0);
}
