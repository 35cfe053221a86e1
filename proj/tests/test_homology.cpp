#include "topo/fixtures.hpp"
#include "topo/homology.hpp"
#include "topo/parser.hpp"

#include <doctest.h>

#include <random>

using namespace topo;

namespace {

Matrix from_rows(std::vector<std::vector<int>> rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

bool is_diagonal_chain(const Matrix &d)
{
    Int prev = 0;
    bool started = false;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (j != i && d(i, j) != 0) return false;
        if (d(i, i) < 0) return false;
        if (started && prev != 0 && d(i, i) % prev != 0) return false;
        prev = d(i, i);
        started = true;
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices")
{
    SNF id = smith_normal_form(Matrix::identity(2));
    CHECK(id.D == Matrix::identity(2));

    SNF a = smith_normal_form(from_rows({{-5, 1}, {1, -2}}));
    CHECK(a.D(0, 0) == 1);
    CHECK(a.D(1, 1) == 9);

    SNF b = smith_normal_form(from_rows({{0, -2}, {-2, -3}}));
    CHECK(b.D(0, 0) == 1);
    CHECK(b.D(1, 1) == 4);
}

TEST_CASE("smith normal form properties on random matrices")
{
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-9, 9), size(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = size(rng), c = size(rng);
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
        SNF s = smith_normal_form(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(boost::multiprecision::abs(determinant(s.U)) == 1);
        CHECK(boost::multiprecision::abs(determinant(s.V)) == 1);
        CHECK(is_diagonal_chain(s.D));
    }
}

TEST_CASE("boundary groups of the pinned diagrams")
{
    H1Presentation c3 = boundary_h1(parse_link("chain -5 -2"));
    CHECK(c3.is_finite());
    CHECK(c3.order() == 9);
    CHECK(c3.is_cyclic());
    CHECK(c3.group_string() == "Z/9");

    H1Presentation b3 = boundary_h1(parse_link("comp K1 0; comp K2 -4; lk K1 K2 -3"));
    CHECK(b3.order() == 9);
    CHECK(b3.is_cyclic());

    // chain 1 -1 -2 -2: the last meridian is 3x the second one
    H1Presentation lens2 = boundary_h1(parse_link("chain 1 -1 -2 -2"));
    CHECK(lens2.order() == 4);
    GroupElement nu3 = lens2.generator(3);
    GroupElement triple = lens2.scale(3, lens2.generator(1));
    CHECK(nu3 == triple);
    CHECK(lens2.coeff_wrt(nu3, 1) == Int(3));
}

TEST_CASE("element normalization")
{
    H1Presentation b3 = boundary_h1(parse_link("comp K1 0; comp K2 -4; lk K1 K2 -3"));
    GroupElement mu2 = b3.generator(1);
    CHECK(mu2 == b3.scale(6, b3.generator(0)));  // mu2 = -3 mu1 = 6 mu1 mod 9
    CHECK(b3.coeff_wrt(mu2, 0) == Int(6));
    CHECK(b3.zero().is_zero());
    CHECK(b3.add(mu2, b3.scale(-6, b3.generator(0))).is_zero());

    H1Presentation lens3 = boundary_h1(parse_link("chain 1 -1 -2 -2 -3"));
    CHECK(lens3.generator(4) == lens3.scale(4, lens3.generator(1)));  // nu4 = 4 nu1
}

TEST_CASE("determinant magnitude equals group order")
{
    for (Int n = 2; n <= 20; ++n) {
        FramedLink cn = FixtureProvider{}.cn(n).link;
        H1Presentation h1 = boundary_h1(cn);
        CHECK(boost::multiprecision::abs(determinant(cn.linking)) == h1.order());
        CHECK(h1.order() == n * n);
    }
}

TEST_CASE("isomorphism verdicts")
{
    GeneratorMap munu = mu_nu_map(3);
    CHECK(verify_iso(munu).ok());

    // identity on the plumbing boundary
    H1Presentation c3 = boundary_h1(FixtureProvider{}.cn(3).link);
    std::vector<std::vector<Int>> id_images;
    for (std::size_t i = 0; i < c3.gens().size(); ++i) {
        std::vector<Int> v(c3.gens().size());
        v[i] = 1;
        id_images.push_back(v);
    }
    CHECK(verify_iso(GeneratorMap{c3, c3, id_images}).ok());

    // doubling on Z/4 is not a bijection
    H1Presentation z4a = boundary_h1(parse_link("comp A -4"));
    H1Presentation z4b = boundary_h1(parse_link("comp B -4"));
    IsoVerdict doubling = verify_iso(GeneratorMap{z4a, z4b, {{2}}});
    CHECK(doubling.kind == IsoVerdict::Kind::NotBijective);

    // a map ignoring a relation is not well defined
    H1Presentation z2 = boundary_h1(parse_link("comp A -2"));
    H1Presentation z3 = boundary_h1(parse_link("comp B -3"));
    IsoVerdict bad = verify_iso(GeneratorMap{z2, z3, {{1}}});
    CHECK(bad.kind == IsoVerdict::Kind::NotWellDefined);
}

TEST_CASE("generator identifications hold across the range")
{
    for (Int n = 2; n <= 50; ++n) {
        CHECK(verify_iso(mu_nu_map(n)).ok());
        CHECK(verify_iso(mu_lambda_map(n)).ok());
    }
}

TEST_CASE("chain meridian list defines the inverse identification")
{
    // lambda_k = k mu1 + mu2 must give an isomorphism chain -> ball.
    for (Int n = 2; n <= 12; ++n) {
        FixtureProvider fx;
        H1Presentation src = boundary_h1(fx.cn(n).link);
        H1Presentation dst = boundary_h1(fx.bn(n).link);
        std::vector<std::vector<Int>> images;
        for (Int k = 1; k <= n - 1; ++k) images.push_back({k, 1});
        CHECK(verify_iso(GeneratorMap{src, dst, images}).ok());
    }
}
