#include "stokeslab/vorticity.hpp"

#include <cmath>

#include "stokeslab/errors.hpp"
#include "stokeslab/numerics.hpp"

namespace stokes {

VorticityModel VorticityModel::zero() { return constant(0.0); }

VorticityModel VorticityModel::constant(double w0) {
    VorticityModel vm;
    vm.omega_ = [w0](double) { return w0; };
    vm.omega_prime_ = [](double) { return 0.0; };
    vm.Omega_closed_ = [w0](double p) { return w0 * p; };
    vm.label_ = "constant(" + num::format_double(w0) + ")";
    vm.validate_and_finish();
    return vm;
}

VorticityModel VorticityModel::affine(double w0, double w1) {
    VorticityModel vm;
    vm.omega_ = [w0, w1](double p) { return w0 + w1 * p; };
    vm.omega_prime_ = [w1](double) { return w1; };
    vm.Omega_closed_ = [w0, w1](double p) { return w0 * p + 0.5 * w1 * p * p; };
    vm.label_ = "affine(" + num::format_double(w0) + "," + num::format_double(w1) + ")";
    vm.validate_and_finish();
    return vm;
}

VorticityModel VorticityModel::sine(double amplitude) {
    VorticityModel vm;
    const double pi = 4.0 * std::atan(1.0);
    vm.omega_ = [amplitude, pi](double p) { return amplitude * std::sin(pi * p); };
    vm.omega_prime_ = [amplitude, pi](double p) { return amplitude * pi * std::cos(pi * p); };
    vm.Omega_closed_ = [amplitude, pi](double p) { return amplitude * (1.0 - std::cos(pi * p)) / pi; };
    vm.label_ = "sine(" + num::format_double(amplitude) + ")";
    vm.validate_and_finish();
    return vm;
}

VorticityModel VorticityModel::from_table(std::vector<double> p, std::vector<double> omega) {
    if (p.size() < 3) throw NonSmoothVorticity("spline table needs at least 3 nodes");
    if (p.front() > 0.0 || p.back() < 1.0)
        throw NonSmoothVorticity("spline table must cover [0,1]");
    auto sp = std::make_shared<num::CubicSpline>(std::move(p), std::move(omega));
    VorticityModel vm;
    vm.omega_ = [sp](double x) { return (*sp)(x); };
    vm.omega_prime_ = [sp](double x) { return sp->derivative(x); };
    vm.label_ = "spline";
    vm.validate_and_finish();
    return vm;
}

VorticityModel VorticityModel::from_functions(std::function<double(double)> omega,
                                              std::function<double(double)> omega_prime,
                                              std::string label) {
    VorticityModel vm;
    vm.omega_ = std::move(omega);
    vm.omega_prime_ = std::move(omega_prime);
    vm.label_ = std::move(label);
    vm.validate_and_finish();
    return vm;
}

namespace {
// 5-point Gauss-Legendre panel; machine precision on smooth panels.
double gauss5(const std::function<double(double)>& f, double a, double b) {
    static const double gx[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double gw[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (int k = 0; k < 5; ++k) s += gw[k] * f(c + h * gx[k]);
    return h * s;
}
}  // namespace

void VorticityModel::validate_and_finish() {
    for (int i = 0; i <= 64; ++i) {
        const double p = i / 64.0;
        const double w = omega_(p), wp = omega_prime_(p);
        if (!std::isfinite(w) || !std::isfinite(wp))
            throw NonSmoothVorticity("omega or omega' not finite at p=" + num::format_double(p));
    }
    if (!Omega_closed_) {
        const int n = 1024;
        cum_x_.resize(n + 1);
        cum_C_.resize(n + 1);
        cum_x_[0] = 0.0;
        cum_C_[0] = 0.0;
        for (int i = 1; i <= n; ++i) {
            cum_x_[i] = double(i) / n;
            cum_C_[i] = cum_C_[i - 1] + gauss5(omega_, cum_x_[i - 1], cum_x_[i]);
        }
    }
    // max Omega over [0,1]: coarse scan plus golden polish around the best sample.
    double best = 0.0, pbest = 0.0;  // Omega(0) = 0 is always a candidate
    for (int i = 1; i <= 128; ++i) {
        const double p = i / 128.0;
        const double v = Omega(p);
        if (v > best) { best = v; pbest = p; }
    }
    const double lo = std::max(0.0, pbest - 1.0 / 128.0), hi = std::min(1.0, pbest + 1.0 / 128.0);
    const double pm = num::golden_min([this](double p) { return -Omega(p); }, lo, hi, 1e-12);
    max_Omega_ = std::max(best, Omega(pm));
}

double VorticityModel::Omega(double p) const {
    if (Omega_closed_) return Omega_closed_(p);
    if (p == 0.0) return 0.0;
    // cumulative table at fixed nodes plus one Gauss panel for the remainder
    const int n = int(cum_x_.size()) - 1;
    int k = int(std::floor(p * n));
    k = std::max(0, std::min(k, n));
    return cum_C_[k] + gauss5(omega_, cum_x_[k], p);
}

double VorticityModel::s_floor() const { return std::sqrt(2.0 * std::max(0.0, max_Omega_)); }

}  // namespace stokes
