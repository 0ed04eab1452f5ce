#include "stokeslab/dispersion.hpp"

#include <cmath>

#include "stokeslab/errors.hpp"

namespace stokes {

namespace {
constexpr double kCriticalMargin = 1e-10;
constexpr double kSigmaTol = 1e-10;
}  // namespace

DispersionCurve::DispersionCurve(UniformStream stream, int base_nodes)
    : stream_(std::move(stream)), n_(base_nodes) {
    if (n_ < 200) n_ = 200;
    kappa_ = stream_.kappa();
    const double w1 = stream_.vorticity().omega(1.0);
    rho0_ = 1.0 / (kappa_ * kappa_) - w1 / kappa_;
    sigma0_ = sigma(0.0);
}

// Tridiagonal solve of the two-point BVP on n nodes; returns gamma and, via
// deriv, the one-sided second-order gamma'(d).
std::vector<double> DispersionCurve::solve_gamma_grid(double tau, int n, double* deriv) const {
    const double d = stream_.depth();
    const double h = d / (n - 1);
    const auto& vm = stream_.vorticity();
    std::vector<double> diag(n), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0), y(n);
    for (int i = 0; i < n; ++i) y[i] = i * h;
    // interior rows: (g[i-1] - 2 g[i] + g[i+1])/h^2 + (omega'(U) - tau^2) g[i] = 0
    for (int i = 1; i + 1 < n; ++i) {
        sub[i] = 1.0;
        sup[i] = 1.0;
        diag[i] = -2.0 + h * h * (vm.omega_prime(stream_.U(y[i])) - tau * tau);
    }
    diag[0] = 1.0;
    diag[n - 1] = 1.0;
    rhs[n - 1] = 1.0;
    // Thomas elimination with a singularity guard.
    std::vector<double> c(n, 0.0);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(diag[i]));
    c[0] = sup[0] / diag[0];
    rhs[0] /= diag[0];
    for (int i = 1; i < n; ++i) {
        const double piv = diag[i] - sub[i] * c[i - 1];
        if (std::abs(piv) < 1e-12 * scale)
            throw SingularBVP("transversal BVP nearly singular at tau = " +
                              num::format_double(tau));
        c[i] = sup[i] / piv;
        rhs[i] = (rhs[i] - sub[i] * rhs[i - 1]) / piv;
    }
    for (int i = n - 2; i >= 0; --i) rhs[i] -= c[i] * rhs[i + 1];
    if (deriv)
        *deriv = (3.0 * rhs[n - 1] - 4.0 * rhs[n - 2] + rhs[n - 3]) / (2.0 * h);
    return rhs;
}

GammaSolution DispersionCurve::solve_gamma(double tau) const {
    GammaSolution gs;
    double d_coarse = 0, d_fine = 0;
    solve_gamma_grid(tau, n_, &d_coarse);
    gs.gamma = solve_gamma_grid(tau, 2 * n_ - 1, &d_fine);
    gs.gamma_prime_d = (4.0 * d_fine - d_coarse) / 3.0;
    const int nf = 2 * n_ - 1;
    const double h = stream_.depth() / (nf - 1);
    gs.y.resize(nf);
    for (int i = 0; i < nf; ++i) gs.y[i] = i * h;
    return gs;
}

double DispersionCurve::sigma(double tau) const {
    const GammaSolution gs = solve_gamma(tau);
    const double w1 = stream_.vorticity().omega(1.0);
    const double s1 = kappa_ * gs.gamma_prime_d - 1.0 / kappa_ + w1;
    const double s2 = kappa_ * gs.gamma_prime_d - kappa_ * rho0_;
    if (std::abs(s1 - s2) > 1e-10 * std::max(1.0, std::abs(s1)))
        throw NumericError("sigma: the two dispersion forms disagree");
    return s1;
}

double DispersionCurve::find_tau_star() const {
    if (tau_star_ > 0) return tau_star_;
    if (sigma0_ >= -kCriticalMargin)
        throw SupercriticalStream("sigma(0) = " + num::format_double(sigma0_) +
                                  " >= 0: no dispersion root");
    double lo = 0.0, hi = 1.0;
    while (sigma(hi) < 0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw NumericError("find_tau_star: no sign change located");
    }
    const double root =
        num::brent_root([this](double t) { return sigma(t); }, lo, hi, 1e-14, kSigmaTol * 0.1);
    if (std::abs(sigma(root)) > kSigmaTol)
        throw NumericError("find_tau_star: |sigma| above tolerance at the root");
    tau_star_ = root;
    return tau_star_;
}

double DispersionCurve::Lambda0() const { return 2.0 * M_PI / find_tau_star(); }

FroudeCheck DispersionCurve::froude_check() const {
    // int_0^d dy / U'^2 = int_0^1 (s^2 - 2 Omega(u))^{-3/2} du
    const auto& vm = stream_.vorticity();
    const double s = stream_.s();
    FroudeCheck fc;
    fc.froude_sq_inv = num::adaptive_simpson(
        [&](double u) { return std::pow(s * s - 2.0 * vm.Omega(u), -1.5); }, 0.0, 1.0, 1e-12);
    fc.subcritical = fc.froude_sq_inv > 1.0;
    const bool sigma_says = sigma0_ < 0.0;
    if (fc.subcritical != sigma_says && std::abs(fc.froude_sq_inv - 1.0) > 1e-8)
        throw NumericError("froude_check: Froude criterion disagrees with sign of sigma(0)");
    return fc;
}

}  // namespace stokes
