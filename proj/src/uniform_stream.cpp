#include "stokeslab/uniform_stream.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "stokeslab/errors.hpp"

namespace stokes {

namespace {

constexpr double kSlopeMargin = 1e-8;

// 5-point Gauss-Legendre on [-1,1].
constexpr std::array<double, 5> kGx = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
constexpr std::array<double, 5> kGw = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                       0.4786286704993665, 0.2369268850561891};

double gauss_panel(const num::Fn& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0;
    for (int k = 0; k < 5; ++k) s += kGw[k] * f(c + h * kGx[k]);
    return h * s;
}

void require_admissible(const VorticityModel& vm, double s) {
    if (!(s > vm.s_floor() + kSlopeMargin))
        throw SubcriticalSlope("s = " + num::format_double(s) + " <= s0 + margin, s0 = " +
                               num::format_double(vm.s_floor()));
}

}  // namespace

double stream_depth(const VorticityModel& vm, double s) {
    require_admissible(vm, s);
    return num::adaptive_simpson(
        [&](double tau) { return 1.0 / std::sqrt(s * s - 2.0 * vm.Omega(tau)); }, 0.0, 1.0, 1e-13);
}

double bernoulli_of_slope(const VorticityModel& vm, double s) {
    return 0.5 * s * s + stream_depth(vm, s) - vm.Omega(1.0);
}

UniformStream::UniformStream(VorticityModel vm, double s) : vm_(std::move(vm)), s_(s) {
    require_admissible(vm_, s_);
    const int n = 1024;
    std::vector<double> u(n + 1), y(n + 1);
    const num::Fn f = [this](double tau) {
        return 1.0 / std::sqrt(s_ * s_ - 2.0 * vm_.Omega(tau));
    };
    u[0] = 0.0;
    y[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
        u[i] = double(i) / n;
        y[i] = y[i - 1] + gauss_panel(f, u[i - 1], u[i]);
    }
    d_ = y[n];
    R_ = 0.5 * s_ * s_ + d_ - vm_.Omega(1.0);
    y_of_u_ = num::Pchip(u, y);
    u_of_y_ = num::Pchip(y, u);
}

double UniformStream::Uprime_of_p(double p) const {
    return std::sqrt(s_ * s_ - 2.0 * vm_.Omega(p));
}

double UniformStream::Uprime(double y) const { return Uprime_of_p(U(y)); }

double UniformStream::Hp(double p) const { return 1.0 / Uprime_of_p(p); }

UniformStream solve_uniform_stream(const VorticityModel& vm, double s) {
    return UniformStream(vm, s);
}

CriticalData critical_data(const VorticityModel& vm, double R) {
    CriticalData cd;
    const double s_lo = vm.s_floor() + kSlopeMargin;
    auto Rs = [&](double s) { return bernoulli_of_slope(vm, s); };
    // Cubed/quintic moments of the depth integrand give R'(s) and R''(s) in closed
    // quadrature form: R'(s) = s (1 - I3), R''(s) = 1 - I3 + 3 s^2 I5.
    auto I3 = [&](double s) {
        return num::adaptive_simpson(
            [&](double t) { return std::pow(s * s - 2.0 * vm.Omega(t), -1.5); }, 0.0, 1.0, 1e-13);
    };
    auto I5 = [&](double s) {
        return num::adaptive_simpson(
            [&](double t) { return std::pow(s * s - 2.0 * vm.Omega(t), -2.5); }, 0.0, 1.0, 1e-13);
    };

    // Bracket the minimizer: expand until R(s) starts increasing.
    double a = s_lo + kSlopeMargin, b = std::max(2.0 * a, a + 1.0);
    while (Rs(b) < Rs(0.5 * (a + b))) b *= 2.0;
    double sc = num::golden_min(Rs, a, b, 1e-8);
    for (int it = 0; it < 40; ++it) {  // Newton polish on R'(s) = 0
        const double g = sc * (1.0 - I3(sc));
        const double H = 1.0 - I3(sc) + 3.0 * sc * sc * I5(sc);
        const double step = g / H;
        sc -= step;
        if (sc <= s_lo) sc = 0.5 * (sc + step + s_lo);
        if (std::abs(step) < 1e-12 * std::max(1.0, sc)) break;
    }
    cd.s_c = sc;
    cd.R_c = Rs(sc);
    if (R > cd.R_c) {
        if (Rs(s_lo + kSlopeMargin) > R) {
            cd.s_plus = num::brent_root([&](double s) { return Rs(s) - R; }, s_lo + kSlopeMargin,
                                        sc, 1e-13);
        }
        double hi = std::max(2.0 * sc, sc + 1.0);
        while (Rs(hi) < R) hi *= 2.0;
        cd.s_minus = num::brent_root([&](double s) { return Rs(s) - R; }, sc, hi, 1e-13);
    }
    return cd;
}

const CriticalData& require_waves(const CriticalData& cd, double R) {
    if (!cd.s_plus || !cd.s_minus)
        throw NoWavesForR("R = " + num::format_double(R) +
                          " admits no stream pair; R_c = " + num::format_double(cd.R_c));
    return cd;
}

}  // namespace stokes
