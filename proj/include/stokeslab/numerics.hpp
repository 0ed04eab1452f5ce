#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stokes::num {

using Fn = std::function<double(double)>;

// Adaptive Simpson quadrature of f on [a,b] to absolute tolerance tol.
double adaptive_simpson(const Fn& f, double a, double b, double tol = 1e-12);

// Bracketed root of f on [a,b] (f(a), f(b) of opposite sign), Brent's method.
double brent_root(const Fn& f, double a, double b, double xtol = 1e-13, double ftol = 0.0,
                  int max_iter = 200);

// Golden-section minimum of f on [a,b] to interval tolerance xtol.
double golden_min(const Fn& f, double a, double b, double xtol = 1e-10);

// Monotone cubic interpolant (Fritsch-Carlson). Nodes must be strictly increasing.
class Pchip {
  public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double derivative(double x) const;
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& y() const { return y_; }

  private:
    std::vector<double> x_, y_, d_;  // d_: node derivatives
};

// Natural cubic spline, C^2; used for tabulated vorticity.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    double derivative(double x) const;

  private:
    std::vector<double> x_, y_, m_;  // m_: second derivatives at nodes
};

// Least-squares line fit y = a + b x; returns {a, b, rms_residual}.
struct LineFit {
    double intercept = 0, slope = 0, rms = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// FNV-1a 64-bit hash of a byte string; used for config provenance.
std::uint64_t fnv1a(const std::string& bytes);

// Shortest round-trip decimal formatting of a double.
std::string format_double(double v);

}  // namespace stokes::num
