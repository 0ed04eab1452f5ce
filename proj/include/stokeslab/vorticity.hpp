#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace stokes {

/// Vorticity function omega(p) on [0,1] together with its derivative and
/// primitive Omega(p) = int_0^p omega, Omega(0) = 0.
class VorticityModel {
  public:
    static VorticityModel zero();
    static VorticityModel constant(double w0);
    static VorticityModel affine(double w0, double w1);  // omega = w0 + w1 p
    static VorticityModel sine(double amplitude);        // amplitude * sin(pi p)
    /// Cubic-spline table; nodes must cover [0,1].
    static VorticityModel from_table(std::vector<double> p, std::vector<double> omega);
    /// Arbitrary callables (primitive by adaptive quadrature). Derivative must be
    /// finite on [0,1], else NonSmoothVorticity.
    static VorticityModel from_functions(std::function<double(double)> omega,
                                         std::function<double(double)> omega_prime,
                                         std::string label = "custom");

    double omega(double p) const { return omega_(p); }
    double omega_prime(double p) const { return omega_prime_(p); }
    double Omega(double p) const;

    /// max over [0,1] of Omega (for the validity bound on the bottom slope).
    double max_Omega() const { return max_Omega_; }
    /// Smallest admissible bottom slope: s^2 - 2 Omega(p) must stay positive.
    double s_floor() const;

    const std::string& label() const { return label_; }

  private:
    VorticityModel() = default;
    void validate_and_finish();

    std::function<double(double)> omega_, omega_prime_;
    std::function<double(double)> Omega_closed_;  // set for built-in families
    std::vector<double> cum_x_, cum_C_;           // cumulative table otherwise
    std::string label_;
    double max_Omega_ = 0.0;
};

}  // namespace stokes
