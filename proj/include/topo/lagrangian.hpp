#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace topo {
namespace num {

// Action-angle coordinates with omega = dtheta^dx + dtau^drho. Angles are
// stored unreduced; reduce_angles() maps them into [0, 2pi).
struct Point4 {
    double theta = 0, x = 0, tau = 0, rho = 0;
};

Point4 reduce_angles(const Point4 &p);
double angle_dist(double a, double b);        // distance on R/2pi
double point_dist_mod2pi(const Point4 &a, const Point4 &b);

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Simpson on [a, b]; tighter than the finite-difference tolerances
// so quadrature noise does not dominate difference quotients.
double integrate(const std::function<double(double)> &f, double a, double b,
                 double tol = 1e-12);

// Named angle profiles psi(t, I) with psi(2pi, I) - psi(0, I) = 2 pi q and
// analytic t- and tI-derivatives (used by the collar model and the cover).
struct PsiCatalogEntry {
    std::string name;
    std::function<double(int q, double t, double I)> psi, psi_t, psi_tI;
};
const std::vector<PsiCatalogEntry> &psi_catalog();  // linear, sin, sin03
const PsiCatalogEntry &psi_by_name(const std::string &name);

struct ImmersionModel {
    int n = 2;
    int q = 1;
    PsiCatalogEntry psi;
    double eps = 0.2;   // I ranges over [0, eps]
    int grid_t = 64, grid_i = 32;
};

// Collar model of the immersed disk with the standard angle profile:
// (n t, -(q/n) I, q t, I).
Point4 sigma_sharp(int n, int q, double t, double I);

// General collar model: x = -(q/n) I psi_t + integral of (q/n) I' psi_tI.
Point4 sigma_general(const ImmersionModel &m, double t, double I);

using Surface = std::function<Point4(double, double)>;

// Max |omega(d_t, d_I)| over the grid, by central differences with step h.
double lagrangian_defect(const Surface &s, const ImmersionModel &m, double h = 1e-5);

// Named Hamiltonian densities f(theta, rho) with analytic theta- and
// theta-rho-derivatives.
struct FCatalogEntry {
    std::string name;
    std::function<double(double theta, double rho)> f, f_theta, f_theta_rho;
};
const std::vector<FCatalogEntry> &f_catalog();  // const, rho_sin, rho2_cos
const FCatalogEntry &f_by_name(const std::string &name);

struct FlowModel {
    FCatalogEntry f;
    double alpha = 1.0;
};

// Time-alpha flow of H = integral of f drho:
// (theta, x - (f_theta rho - integral f_theta drho') alpha, tau + f alpha, rho).
Point4 flow_phi(const FlowModel &m, const Point4 &p);
double ham_H(const FlowModel &m, const Point4 &p);

using Map4 = std::function<Point4(const Point4 &)>;

struct Box4 {
    double theta_lo = 0, theta_hi = 6.2, x_lo = -0.5, x_hi = 0.5;
    double tau_lo = 0, tau_hi = 6.2, rho_lo = 0.05, rho_hi = 1.0;
    int per_axis = 4;
};

// Max deviation of the pullback of omega from omega over sampled points.
double symplecto_defect(const Map4 &map, const Box4 &box, double h = 1e-5);

// Max deviation of d(phi_alpha)/dalpha from the Hamiltonian vector field
// (H_x, -H_theta, H_rho, -H_tau) of H.
double flow_eq_defect(const FCatalogEntry &f, double alpha, const Box4 &box, double h = 1e-5);

// Max distance between p_n(phi_1(sigma_sharp with untwisted angle)) and
// sigma_general, with f(n t, I) = psi(t, I) - q t driving the flow.
double cover_identity_defect(const ImmersionModel &m, double h = 1e-5);

// Total tau-winding of t -> p_n(phi_alpha(sigma_sharp(...))) at fixed I, in
// units of 2 pi (must be the integer q: the image closes up).
double cover_winding(const ImmersionModel &m, double alpha, double I);

// Max |alpha_std(K')| along the curve t -> (n t, -a/n, t, a) with the contact
// form -x dtheta - rho dtau; zero exactly since a - rho vanishes.
double legendrian_defect(int n, double a, double h = 1e-2);

// Max deviation of the rescaled pullback of -x dtheta - rho dtau under
// x = a(r^2-1)/(r^2+1), rho = 2 a^2 r^2 / (r^2+1)^2, tau = -w from
// dw + (1-r^4)/(2 a r^2) dtheta, over r in [0.1, 10].
double stereo_identity_defect(double a, int grid = 64, double h = 1e-5);

// Max |x(r)^2 + 2 rho(r) - a^2| over the same radial grid.
double sphere_constraint_defect(double a, int grid = 64);

}  // namespace num
}  // namespace topo
