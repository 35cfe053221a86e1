#include "topo/lagrangian.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace topo {
namespace num {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double simpson(const std::function<double(double)> &f, double a, double fa, double m, double fm,
               double b, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)> &f, double a, double fa, double b, double fb,
                double m, double fm, double whole, double tol, int depth)
{
    if (depth > 60) throw QuadratureError("adaptive quadrature failed to converge");
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, lm, flm, m, fm);
    double right = simpson(f, m, fm, rm, frm, b, fb);
    if (std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)> &f, double a, double b, double tol)
{
    if (a == b) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    return adaptive(f, a, fa, b, fb, m, fm, simpson(f, a, fa, m, fm, b, fb), tol, 0);
}

Point4 reduce_angles(const Point4 &p)
{
    auto wrap = [](double a) {
        double r = std::fmod(a, kTwoPi);
        return r < 0 ? r + kTwoPi : r;
    };
    return Point4{wrap(p.theta), p.x, wrap(p.tau), p.rho};
}

double angle_dist(double a, double b)
{
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

double point_dist_mod2pi(const Point4 &a, const Point4 &b)
{
    return std::max(std::max(angle_dist(a.theta, b.theta), std::abs(a.x - b.x)),
                    std::max(angle_dist(a.tau, b.tau), std::abs(a.rho - b.rho)));
}

const std::vector<PsiCatalogEntry> &psi_catalog()
{
    static const std::vector<PsiCatalogEntry> entries = {
        {"linear",
         [](int q, double t, double) { return q * t; },
         [](int q, double, double) { return double(q); },
         [](int, double, double) { return 0.0; }},
        {"sin",
         [](int q, double t, double I) { return q * t + I * std::sin(t); },
         [](int q, double t, double I) { return q + I * std::cos(t); },
         [](int, double t, double) { return std::cos(t); }},
        {"sin03",
         [](int q, double t, double) { return q * t + 0.3 * std::sin(t); },
         [](int q, double t, double) { return q + 0.3 * std::cos(t); },
         [](int, double, double) { return 0.0; }},
    };
    return entries;
}

const PsiCatalogEntry &psi_by_name(const std::string &name)
{
    for (const auto &e : psi_catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown angle profile '" + name + "'");
}

const std::vector<FCatalogEntry> &f_catalog()
{
    static const std::vector<FCatalogEntry> entries = {
        {"const",
         [](double, double) { return 0.7; },
         [](double, double) { return 0.0; },
         [](double, double) { return 0.0; }},
        {"rho_sin",
         [](double theta, double rho) { return rho * std::sin(theta); },
         [](double theta, double rho) { return rho * std::cos(theta); },
         [](double theta, double) { return std::cos(theta); }},
        {"rho2_cos",
         [](double theta, double rho) { return rho * rho * std::cos(theta); },
         [](double theta, double rho) { return -rho * rho * std::sin(theta); },
         [](double theta, double rho) { return -2.0 * rho * std::sin(theta); }},
    };
    return entries;
}

const FCatalogEntry &f_by_name(const std::string &name)
{
    for (const auto &e : f_catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown Hamiltonian density '" + name + "'");
}

Point4 sigma_sharp(int n, int q, double t, double I)
{
    return Point4{n * t, -(double(q) / n) * I, q * t, I};
}

Point4 sigma_general(const ImmersionModel &m, double t, double I)
{
    const double qn = double(m.q) / m.n;
    double x = -qn * I * m.psi.psi_t(m.q, t, I) +
               integrate([&](double Ip) { return qn * Ip * m.psi.psi_tI(m.q, t, Ip); }, 0.0, I);
    return Point4{m.n * t, x, m.psi.psi(m.q, t, I), I};
}

double lagrangian_defect(const Surface &s, const ImmersionModel &m, double h)
{
    double worst = 0.0;
    for (int i = 0; i < m.grid_t; ++i) {
        double t = kTwoPi * i / m.grid_t;
        for (int j = 1; j <= m.grid_i; ++j) {
            double I = m.eps * j / m.grid_i;
            Point4 tp = s(t + h, I), tm = s(t - h, I);
            Point4 ip = s(t, I + h), im = s(t, I - h);
            auto d = [h](double a, double b) { return (a - b) / (2.0 * h); };
            double omega = d(tp.theta, tm.theta) * d(ip.x, im.x) -
                           d(ip.theta, im.theta) * d(tp.x, tm.x) +
                           d(tp.tau, tm.tau) * d(ip.rho, im.rho) -
                           d(ip.tau, im.tau) * d(tp.rho, tm.rho);
            worst = std::max(worst, std::abs(omega));
        }
    }
    return worst;
}

namespace {

// Integral of f_theta over [0, rho], via integration by parts so only the
// mixed derivative enters the quadrature.
double h_theta(const FCatalogEntry &f, double theta, double rho)
{
    return f.f_theta(theta, rho) * rho -
           integrate([&](double r) { return f.f_theta_rho(theta, r) * r; }, 0.0, rho);
}

}  // namespace

Point4 flow_phi(const FlowModel &m, const Point4 &p)
{
    return Point4{p.theta,
                  p.x - m.alpha * h_theta(m.f, p.theta, p.rho),
                  p.tau + m.alpha * m.f.f(p.theta, p.rho),
                  p.rho};
}

double ham_H(const FlowModel &m, const Point4 &p)
{
    return integrate([&](double r) { return m.f.f(p.theta, r); }, 0.0, p.rho);
}

namespace {

template <typename Fn>
void for_each_box_point(const Box4 &box, Fn &&fn)
{
    const int n = box.per_axis;
    auto coord = [n](double lo, double hi, int i) { return lo + (hi - lo) * (i + 0.5) / n; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    fn(Point4{coord(box.theta_lo, box.theta_hi, a), coord(box.x_lo, box.x_hi, b),
                              coord(box.tau_lo, box.tau_hi, c), coord(box.rho_lo, box.rho_hi, d)});
}

std::array<double, 4> as_array(const Point4 &p) { return {p.theta, p.x, p.tau, p.rho}; }

Point4 from_array(const std::array<double, 4> &a) { return Point4{a[0], a[1], a[2], a[3]}; }

// omega in coordinates (theta, x, tau, rho).
constexpr double kOmega[4][4] = {
    {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};

}  // namespace

double symplecto_defect(const Map4 &map, const Box4 &box, double h)
{
    double worst = 0.0;
    for_each_box_point(box, [&](const Point4 &p) {
        double J[4][4];
        std::array<double, 4> base = as_array(p);
        for (int c = 0; c < 4; ++c) {
            std::array<double, 4> up = base, dn = base;
            up[c] += h;
            dn[c] -= h;
            std::array<double, 4> fu = as_array(map(from_array(up)));
            std::array<double, 4> fd = as_array(map(from_array(dn)));
            for (int r = 0; r < 4; ++r) J[r][c] = (fu[r] - fd[r]) / (2.0 * h);
        }
        // pullback omega = J^T Omega J
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double v = 0.0;
                for (int r = 0; r < 4; ++r)
                    for (int s = 0; s < 4; ++s) v += J[r][i] * kOmega[r][s] * J[s][j];
                worst = std::max(worst, std::abs(v - kOmega[i][j]));
            }
    });
    return worst;
}

double flow_eq_defect(const FCatalogEntry &f, double alpha, const Box4 &box, double h)
{
    double worst = 0.0;
    for_each_box_point(box, [&](const Point4 &p) {
        Point4 up = flow_phi(FlowModel{f, alpha + h}, p);
        Point4 dn = flow_phi(FlowModel{f, alpha - h}, p);
        std::array<double, 4> velocity = {(up.theta - dn.theta) / (2 * h), (up.x - dn.x) / (2 * h),
                                          (up.tau - dn.tau) / (2 * h), (up.rho - dn.rho) / (2 * h)};
        // Hamiltonian vector field (H_x, -H_theta, H_rho, -H_tau); theta and
        // rho are flow-invariant, so evaluation at p suffices.
        std::array<double, 4> field = {0.0, -h_theta(f, p.theta, p.rho), f.f(p.theta, p.rho), 0.0};
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(velocity[i] - field[i]));
    });
    return worst;
}

namespace {

// Hamiltonian density of the covering construction: the flow of
// f(theta, rho) = psi(theta/n, rho) - q theta / n twists the straight collar
// into the general one.
FCatalogEntry cover_f(const ImmersionModel &m)
{
    const PsiCatalogEntry psi = m.psi;
    const int n = m.n, q = m.q;
    return FCatalogEntry{
        "cover",
        [psi, n, q](double theta, double rho) { return psi.psi(q, theta / n, rho) - q * theta / n; },
        [psi, n, q](double theta, double rho) { return (psi.psi_t(q, theta / n, rho) - q) / n; },
        [psi, n, q](double theta, double rho) { return psi.psi_tI(q, theta / n, rho) / n; }};
}

}  // namespace

double cover_identity_defect(const ImmersionModel &m, double)
{
    FCatalogEntry f = cover_f(m);
    double worst = 0.0;
    for (int i = 0; i <= m.grid_t; ++i) {
        double t = kTwoPi * i / m.grid_t;
        for (int j = 0; j <= m.grid_i; ++j) {
            double I = m.eps * j / m.grid_i;
            Point4 lifted = flow_phi(FlowModel{f, 1.0}, sigma_sharp(m.n, m.q, t, I));
            worst = std::max(worst, point_dist_mod2pi(reduce_angles(lifted),
                                                      reduce_angles(sigma_general(m, t, I))));
        }
    }
    return worst;
}

double cover_winding(const ImmersionModel &m, double alpha, double I)
{
    FCatalogEntry f = cover_f(m);
    const int steps = 4 * m.grid_t;
    double total = 0.0;
    double prev = flow_phi(FlowModel{f, alpha}, sigma_sharp(m.n, m.q, 0.0, I)).tau;
    for (int i = 1; i <= steps; ++i) {
        double t = kTwoPi * i / steps;
        double tau = flow_phi(FlowModel{f, alpha}, sigma_sharp(m.n, m.q, t, I)).tau;
        double d = std::remainder(tau - prev, kTwoPi);
        total += d;
        prev = tau;
    }
    return total / kTwoPi;
}

double legendrian_defect(int n, double a, double h)
{
    // Curve (n t, -a/n, t, a) against the contact form -x dtheta - rho dtau.
    double worst = 0.0;
    const int steps = 64;
    for (int i = 0; i < steps; ++i) {
        double t = kTwoPi * i / steps;
        auto curve = [&](double s) { return Point4{n * s, -a / n, s, a}; };
        Point4 up = curve(t + h), dn = curve(t - h), at = curve(t);
        double theta_dot = (up.theta - dn.theta) / (2 * h);
        double tau_dot = (up.tau - dn.tau) / (2 * h);
        worst = std::max(worst, std::abs(-at.x * theta_dot - at.rho * tau_dot));
    }
    return worst;
}

namespace {

double stereo_x(double a, double r) { return a * (r * r - 1.0) / (r * r + 1.0); }
double stereo_rho(double a, double r)
{
    double d = r * r + 1.0;
    return 2.0 * a * a * r * r / (d * d);
}

}  // namespace

double stereo_identity_defect(double a, int grid, double)
{
    // Pullback of -x dtheta - rho dtau under tau = -w, rescaled by 1/rho, is
    // dw - (x(r)/rho(r)) dtheta; the target dtheta-coefficient is
    // (1 - r^4)/(2 a r^2).
    double worst = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double r = 0.1 * std::pow(100.0, double(i) / grid);  // log grid on [0.1, 10]
        double lhs = -stereo_x(a, r) / stereo_rho(a, r);
        double rhs = (1.0 - r * r * r * r) / (2.0 * a * r * r);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double sphere_constraint_defect(double a, int grid)
{
    double worst = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double r = 0.1 * std::pow(100.0, double(i) / grid);
        double x = stereo_x(a, r);
        worst = std::max(worst, std::abs(x * x + 2.0 * stereo_rho(a, r) - a * a));
    }
    return worst;
}

}  // namespace num
}  // namespace topo
