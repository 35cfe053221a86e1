#include "topo/verify.hpp"

#include "topo/continued_fraction.hpp"
#include "topo/lagrangian.hpp"
#include "topo/legendrian.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace topo {
namespace {

using Err = std::optional<std::string>;

std::string at_n(const Int &n, const std::string &msg)
{
    return "n=" + n.str() + ": " + msg;
}

bool spin_is(const SpinStructure &s, const FramedLink &link, const std::vector<std::string> &labels)
{
    return s == spin_from_labels(link, labels);
}

std::vector<std::string> expected_bn_spin(const Int &n, bool second)
{
    if (n % 2 != 0) return {};
    return second ? std::vector<std::string>{"K1", "K2"} : std::vector<std::string>{"K2"};
}

std::vector<std::string> even_chain_spin(const Int &n)
{
    std::vector<std::string> out;  // W1, W3, ..., W_{n-1}
    for (Int i = 1; i <= n - 1; i += 2) out.push_back("W" + i.str());
    return out;
}

std::vector<std::string> odd_chain_spin(const Int &n)
{
    std::vector<std::string> out;  // W2, W4, ..., W_{n-1}
    for (Int i = 2; i <= n - 1; i += 2) out.push_back("W" + i.str());
    return out;
}

std::vector<std::string> lens_odd_spin(const Int &n)
{
    std::vector<std::string> out;  // U1, U3, ..., U_n
    for (Int i = 1; i <= n; i += 2) out.push_back("U" + i.str());
    return out;
}

std::vector<std::string> lens_even_second_spin(const Int &n)
{
    std::vector<std::string> out;  // U1, U3, ..., U_{n+1}
    for (Int i = 1; i <= n + 1; i += 2) out.push_back("U" + i.str());
    return out;
}

Err check_cf(const Int &n)
{
    // -n^2/(n-1) expands to [-(n+2), -2 x (n-2)].
    ContinuedFraction a = neg_cf_expand(n * n, n - 1);
    if (a.coefficients.size() != std::size_t((n - 1).convert_to<long>()))
        return at_n(n, "first expansion has the wrong length");
    if (a.coefficients[0] != -(n + 2)) return at_n(n, "first expansion has the wrong head");
    for (std::size_t i = 1; i < a.coefficients.size(); ++i)
        if (a.coefficients[i] != -2) return at_n(n, "first expansion tail is not all -2");
    if (cf_value(a) != Rat(-(n * n), n - 1)) return at_n(n, "first expansion value mismatch");

    // -n^2/(n^2-n+1) expands to [-2 x n, -n].
    ContinuedFraction b = neg_cf_expand(n * n, n * n - n + 1);
    if (b.coefficients.size() != std::size_t((n + 1).convert_to<long>()))
        return at_n(n, "second expansion has the wrong length");
    for (std::size_t i = 0; i + 1 < b.coefficients.size(); ++i)
        if (b.coefficients[i] != -2) return at_n(n, "second expansion head is not all -2");
    if (b.coefficients.back() != -n) return at_n(n, "second expansion has the wrong tail");
    if (cf_value(b) != Rat(-(n * n), n * n - n + 1)) return at_n(n, "second expansion value mismatch");
    return std::nullopt;
}

Err check_h1(const FixtureProvider &fx, const Int &n)
{
    for (const char *space : {"bn", "cn", "lens"}) {
        FramedLink link = (space == std::string("bn"))   ? fx.bn(n).link
                          : (space == std::string("cn")) ? fx.cn(n).link
                                                         : fx.lens(n).link;
        H1Presentation h1 = boundary_h1(link);
        if (!h1.is_finite() || h1.order() != n * n)
            return at_n(n, std::string(space) + ": group order is not n^2");
        if (!h1.is_cyclic()) return at_n(n, std::string(space) + ": group is not cyclic");
    }
    return std::nullopt;
}

Err check_spin(const FixtureProvider &fx, const Int &n)
{
    const bool even = (n % 2 == 0);
    const std::size_t expected = even ? 2 : 1;

    auto spins_of = [](const FramedLink &link) { return characteristic_sublinks(link); };

    FramedLink bn = fx.bn(n).link, cn = fx.cn(n).link, lens = fx.lens(n).link;
    auto sb = spins_of(bn), sc = spins_of(cn), sl = spins_of(lens);
    if (sb.size() != expected || sc.size() != expected || sl.size() != expected)
        return at_n(n, "unexpected spin-structure count");

    if (n > 12) return std::nullopt;  // exact sublinks pinned for n in 2..12

    auto contains = [&](const std::vector<SpinStructure> &set, const FramedLink &link,
                        const std::vector<std::string> &labels) {
        for (const auto &s : set)
            if (spin_is(s, link, labels)) return true;
        return false;
    };
    if (even) {
        if (!contains(sb, bn, {"K2"}) || !contains(sb, bn, {"K1", "K2"}))
            return at_n(n, "ball spin structures are not {K2}, {K1,K2}");
        if (!contains(sc, cn, even_chain_spin(n)) || !contains(sc, cn, {}))
            return at_n(n, "chain spin structures are not the odd-index sublink and {}");
        if (!contains(sl, lens, {"U0"}) || !contains(sl, lens, lens_even_second_spin(n)))
            return at_n(n, "lens spin structures are not {U0} and the odd-index sublink");
    } else {
        if (!spin_is(sb[0], bn, {})) return at_n(n, "ball spin structure is not {}");
        if (!spin_is(sc[0], cn, odd_chain_spin(n)))
            return at_n(n, "chain spin structure is not the even-index sublink");
        if (!spin_is(sl[0], lens, lens_odd_spin(n)))
            return at_n(n, "lens spin structure is not the odd-index sublink");
    }
    return std::nullopt;
}

Err check_gamma(const FixtureProvider &fx, const Int &n)
{
    const Int low = (n * n - n) / 2, high = (2 * n * n - n) / 2;

    SteinSurgeryDiagram bn = fx.bn(n);
    GammaResult gb = gamma_all(bn);
    for (const auto &[spin, value] : gb.values) {
        Int want = (n % 2 != 0) ? low : (spin_is(spin, bn.link, {"K2"}) ? high : low);
        if (value != gb.h1.scale(want, gb.h1.generator(0)))
            return at_n(n, "ball value differs from the closed form");
    }

    GammaResult gc = gamma_all(fx.cn(n));
    FramedLink cn = fx.cn(n).link;
    for (const auto &[spin, value] : gc.values) {
        Int want = (n % 2 != 0) ? low : (spin_is(spin, cn, even_chain_spin(n)) ? low : high);
        if (value != gc.h1.scale(want, gc.h1.generator(0)))
            return at_n(n, "chain value differs from the closed form");
    }
    return std::nullopt;
}

Err check_identifications(const FixtureProvider &fx, const Int &n)
{
    GeneratorMap ml = mu_lambda_map(n), mn = mu_nu_map(n);
    if (!verify_iso(ml).ok()) return at_n(n, "mu/lambda map is not an isomorphism");
    if (!verify_iso(mn).ok()) return at_n(n, "mu/nu map is not an isomorphism");

    GammaResult gb = gamma_all(fx.bn(n));
    GammaResult gc = gamma_all(fx.cn(n));
    GammaResult gl = lens_gamma_fixture(n);

    CompareReport bc = compare_gamma(gb, gc, ml);
    if (!bc.full_match()) return at_n(n, "ball/chain values do not match: " + bc.match.detail);
    CompareReport bl = compare_gamma(gb, gl, mn);
    if (!bl.full_match()) return at_n(n, "ball/lens values do not match: " + bl.match.detail);

    if (n % 2 == 0) {
        FramedLink bn = fx.bn(n).link, cn = fx.cn(n).link, lens = fx.lens(n).link;
        auto index_of_spin = [&](const GammaResult &g, const FramedLink &link,
                                 const std::vector<std::string> &labels) -> std::size_t {
            for (std::size_t i = 0; i < g.values.size(); ++i)
                if (spin_is(g.values[i].first, link, labels)) return i;
            throw std::logic_error("expected spin structure missing");
        };
        std::size_t s1 = index_of_spin(gb, bn, {"K2"});
        std::size_t r1 = index_of_spin(gc, cn, even_chain_spin(n));
        std::size_t t1 = index_of_spin(gl, lens, {"U0"});
        auto paired_with = [](const SpinMatch &m, std::size_t src) -> std::size_t {
            for (const auto &[a, b] : m.pairing)
                if (a == src) return b;
            throw std::logic_error("unpaired spin structure");
        };
        if (paired_with(bc.match, s1) != r1)
            return at_n(n, "even-case pairing does not send the {K2} spin to the odd-index chain spin");
        if (paired_with(bl.match, s1) != t1)
            return at_n(n, "even-case pairing does not send the {K2} spin to the {U0} lens spin");
    }
    return std::nullopt;
}

Err check_kirby(const FixtureProvider &fx, const Int &n)
{
    // Ball boundary to plumbing chain.
    {
        TrackedLink start = tracked(fx.bn(n).link);
        TrackedLink end = run_script(start, fx.ball_to_chain_script(n));
        if (end.link.size() != std::size_t((n - 1).convert_to<long>()))
            return at_n(n, "chain script: wrong component count");
        if (end.link.framing(0) != -(n + 2)) return at_n(n, "chain script: wrong head framing");
        for (std::size_t i = 1; i < end.link.size(); ++i)
            if (end.link.framing(i) != -2) return at_n(n, "chain script: interior framing not -2");
        if (!is_chain_link(end.link, 1)) return at_n(n, "chain script: endpoint is not a chain");

        H1Presentation h1 = end.h1();
        const auto &mu1 = end.class_of("K1");
        const auto &mu2 = end.class_of("K2");
        for (Int k = 1; k <= n - 1; ++k) {
            std::vector<Int> coeffs(end.link.size());
            for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = k * mu1[j] + mu2[j];
            if (h1.reduce(coeffs) != h1.generator(std::size_t((k - 1).convert_to<long>())))
                return at_n(n, "chain script: k*mu1 + mu2 is not the k-th meridian");
        }
    }
    // Ball boundary to the reversed lens chain.
    {
        TrackedLink start = tracked(fx.bn(n).link);
        TrackedLink end = run_script(start, fx.ball_to_lens_script(n));
        if (end.link.size() != std::size_t((n + 1).convert_to<long>()))
            return at_n(n, "lens script: wrong component count");
        if (end.link.framing(0) != n) return at_n(n, "lens script: wrong head framing");
        for (std::size_t i = 1; i < end.link.size(); ++i)
            if (end.link.framing(i) != 2) return at_n(n, "lens script: interior framing not 2");
        if (!is_chain_link(end.link, -1)) return at_n(n, "lens script: endpoint is not a chain");

        H1Presentation h1 = end.h1();
        const auto &mu1 = end.class_of("K1");
        const auto &mu2 = end.class_of("K2");
        auto combo = [&](const Int &c) {
            std::vector<Int> coeffs(end.link.size());
            for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] = c * (mu1[j] + mu2[j]);
            return h1.reduce(coeffs);
        };
        // The j-th new component's meridian is (n+1-j)(mu1 + mu2).
        for (Int j = 1; j <= n; ++j)
            if (combo(n + 1 - j) != h1.generator(std::size_t(j.convert_to<long>())))
                return at_n(n, "lens script: meridian class list mismatch");
        if (combo(n + 1) != h1.reduce(mu1))
            return at_n(n, "lens script: mu1 is not (n+1)(mu1 + mu2)");
    }
    return std::nullopt;
}

Err check_handle_surgery(const Int &n)
{
    // Two presentations of the ball boundary obtained by surgering out the
    // 1-handle; both must be cyclic of order n^2.
    auto build = [&](const Int &pass, const Int &framing) {
        Matrix m(2, 2);
        m(0, 0) = 7;  // placeholder framing, erased by the surgery
        m(0, 1) = m(1, 0) = pass;
        m(1, 1) = framing;
        TrackedLink t = tracked(make_link({"H", "K"}, std::move(m)));
        apply_move(t, Surger1Handle{"H"});
        return t;
    };
    TrackedLink a = build(n, n - 1);
    TrackedLink b = build(-n, -(n + 1));
    if (a.link.framing(0) != 0 || !a.l0[0]) return at_n(n, "surgery did not produce a 0-framed handle");
    H1Presentation ha = a.h1(), hb = b.h1();
    if (!ha.is_finite() || ha.order() != n * n || !ha.is_cyclic())
        return at_n(n, "first handle presentation is not Z/n^2");
    if (!hb.is_finite() || hb.order() != n * n || !hb.is_cyclic())
        return at_n(n, "second handle presentation is not Z/n^2");
    return std::nullopt;
}

Err check_legendrian(const Int &n)
{
    const long long nl = n.convert_to<long long>();
    FrontData k2{-(nl - 1), 0, 1, 0, 1, nl, 0};
    if (tb(k2) != -nl || rot(k2) != 1 || stein_framing(k2) != -nl - 1 || !parity_ok(k2))
        return at_n(n, "attaching-circle front invariants mismatch");
    FrontData w1{0, nl + 1, 0, nl, 1, 0, 0};
    if (tb(w1) != -nl - 1 || rot(w1) != -nl || stein_framing(w1) != -nl - 2 || !parity_ok(w1))
        return at_n(n, "chain-head front invariants mismatch");
    FrontData wi{0, 1, 0, 0, 1, 0, 0};
    if (tb(wi) != -1 || rot(wi) != 0 || stein_framing(wi) != -2 || !parity_ok(wi))
        return at_n(n, "interior front invariants mismatch");
    return std::nullopt;
}

// A 3x-or-floor convergence rule: halving the step must cut the defect by at
// least 3x unless both values already sit at roundoff level.
bool converges(double coarse, double fine, double floor = 1e-11)
{
    if (coarse <= floor && fine <= floor) return true;
    return fine * 3.0 <= coarse;
}

Err check_numerics()
{
    using namespace num;

    // Lagrangian condition on the straight collar model, exact cancellation.
    for (int n = 2; n <= 6; ++n)
        for (int q = 1; q <= n - 1; ++q) {
            ImmersionModel m{n, q, psi_by_name("linear")};
            double d = lagrangian_defect(
                [n, q](double t, double I) { return sigma_sharp(n, q, t, I); }, m);
            if (!(d < 1e-9)) return "straight collar defect " + std::to_string(d);
        }

    // General collar models stay Lagrangian within finite-difference error.
    for (const char *psi : {"linear", "sin", "sin03"}) {
        ImmersionModel m{2, 1, psi_by_name(psi)};
        auto surf = [&m](double t, double I) { return sigma_general(m, t, I); };
        double d = lagrangian_defect(surf, m, 1e-5);
        if (!(d < 1e-6)) return std::string(psi) + ": collar defect " + std::to_string(d);
        if (!converges(lagrangian_defect(surf, m, 1e-3), lagrangian_defect(surf, m, 5e-4)))
            return std::string(psi) + ": collar defect does not converge";
    }

    // Non-Lagrangian control surface.
    {
        ImmersionModel m{2, 1, psi_by_name("linear")};
        double d = lagrangian_defect([](double t, double I) { return Point4{t, I, t, I}; }, m);
        if (std::abs(d - 2.0) > 1e-9) return "control surface defect is not 2";
    }

    // Flows are symplectic and satisfy the flow equation.
    Box4 box;
    for (const char *name : {"const", "rho_sin", "rho2_cos"}) {
        const FCatalogEntry &f = f_by_name(name);
        Map4 phi = [&f](const Point4 &p) { return flow_phi(FlowModel{f, 1.0}, p); };
        double sd = symplecto_defect(phi, box, 1e-5);
        double fd = flow_eq_defect(f, 0.5, box, 1e-5);
        if (!(sd < 1e-6)) return std::string(name) + ": symplectic defect " + std::to_string(sd);
        if (!(fd < 1e-6)) return std::string(name) + ": flow-equation defect " + std::to_string(fd);
        if (!converges(symplecto_defect(phi, box, 1e-3), symplecto_defect(phi, box, 5e-4)))
            return std::string(name) + ": symplectic defect does not converge";
        if (!converges(flow_eq_defect(f, 0.5, box, 1e-3), flow_eq_defect(f, 0.5, box, 5e-4)))
            return std::string(name) + ": flow-equation defect does not converge";
    }

    // Non-symplectic control map.
    {
        double d = symplecto_defect(
            [](const Point4 &p) { return Point4{p.theta, 2.0 * p.x, p.tau, p.rho}; }, box, 1e-5);
        if (std::abs(d - 1.0) > 1e-6) return "control map defect is not 1";
    }

    // Covering identity and winding preservation.
    for (int n : {2, 3, 5})
        for (const char *psi : {"linear", "sin", "sin03"}) {
            ImmersionModel m{n, 1, psi_by_name(psi)};
            double d = cover_identity_defect(m);
            if (!(d < 1e-6))
                return std::string(psi) + ": cover defect " + std::to_string(d) + " at n=" +
                       std::to_string(n);
            for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                double w = cover_winding(m, alpha, 0.1);
                if (std::abs(w - m.q) > 1e-8)
                    return std::string(psi) + ": winding " + std::to_string(w) + " is not q";
            }
        }

    // Legendrian circle and the stereographic contact-form identity.
    for (int n = 2; n <= 6; ++n)
        for (double a : {0.01, 1.0}) {
            double d = legendrian_defect(n, a);
            if (!(d < 1e-12)) return "legendrian defect " + std::to_string(d);
        }
    if (!(stereo_identity_defect(1.0) < 1e-10)) return "stereographic identity defect too large";
    if (!(sphere_constraint_defect(1.0) < 1e-12)) return "sphere constraint violated";

    return std::nullopt;
}

CheckResult make_result(const std::string &name, const Err &err)
{
    return CheckResult{name, !err.has_value(), err.value_or("ok")};
}

template <typename Fn>
CheckResult range_check(const std::string &name, const Int &lo, const Int &hi, Fn &&fn)
{
    for (Int n = lo; n <= hi; ++n)
        if (Err e = fn(n)) return CheckResult{name, false, *e};
    return CheckResult{name, true, "ok"};
}

}  // namespace

std::vector<CheckResult> run_checks_for_n(const FixtureProvider &fx, const Int &n)
{
    std::vector<CheckResult> out;
    out.push_back(make_result("continued fractions", check_cf(n)));
    out.push_back(make_result("boundary homology", check_h1(fx, n)));
    out.push_back(make_result("spin structures", check_spin(fx, n)));
    out.push_back(make_result("gamma closed forms", check_gamma(fx, n)));
    out.push_back(make_result("identifications", check_identifications(fx, n)));
    if (n <= 12) out.push_back(make_result("move scripts", check_kirby(fx, n)));
    out.push_back(make_result("handle surgery", check_handle_surgery(n)));
    out.push_back(make_result("front invariants", check_legendrian(n)));
    return out;
}

std::vector<CheckResult> run_numeric_checks()
{
    return {make_result("numeric identities", check_numerics())};
}

std::vector<CheckResult> run_all_checks(const FixtureProvider &fx)
{
    std::vector<CheckResult> out;
    out.push_back(range_check("1. continued-fraction shapes and values (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_cf(n); }));
    out.push_back(range_check("2. boundary homology Z/n^2 (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_h1(fx, n); }));
    out.push_back(range_check("3. spin-structure counts and sublinks (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_spin(fx, n); }));
    out.push_back(range_check("4. gamma closed forms (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_gamma(fx, n); }));
    out.push_back(range_check("5. generator identifications and spin matching (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_identifications(fx, n); }));
    out.push_back(range_check("6. move-script replay with tracked classes (n=2..12)", 2, 12,
                              [&](const Int &n) { return check_kirby(fx, n); }));
    out.push_back(range_check("7. handle-surgery presentations agree (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_handle_surgery(n); }));
    out.push_back(range_check("8. front-projection invariants (n=2..50)", 2, 50,
                              [&](const Int &n) { return check_legendrian(n); }));
    out.push_back(make_result("9. numeric coordinate identities", check_numerics()));
    return out;
}

}  // namespace topo
