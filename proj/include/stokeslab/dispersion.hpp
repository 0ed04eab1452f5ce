#pragma once

#include <vector>

#include "stokeslab/uniform_stream.hpp"

namespace stokes {

struct GammaSolution {
    std::vector<double> y;      // nodes on [0, d]
    std::vector<double> gamma;  // gamma(y, tau)
    double gamma_prime_d = 0;   // Richardson-extrapolated gamma'(d, tau)
};

struct FroudeCheck {
    double froude_sq_inv = 0;  // int_0^d dy / U'(y)^2
    bool subcritical = false;
};

/// Transversal ODE gamma'' + omega'(U) gamma - tau^2 gamma = 0, gamma(0)=0,
/// gamma(d)=1, and the dispersion function sigma(tau).
class DispersionCurve {
  public:
    explicit DispersionCurve(UniformStream stream, int base_nodes = 401);

    const UniformStream& stream() const { return stream_; }
    double kappa() const { return kappa_; }
    double rho0() const { return rho0_; }

    GammaSolution solve_gamma(double tau) const;
    double sigma(double tau) const;
    double sigma0() const { return sigma0_; }

    /// Unique positive root of sigma; throws SupercriticalStream when sigma(0) >= 0.
    double find_tau_star() const;
    double Lambda0() const;  // 2 pi / tau_star

    FroudeCheck froude_check() const;

  private:
    std::vector<double> solve_gamma_grid(double tau, int n, double* deriv) const;

    UniformStream stream_;
    int n_;
    double kappa_ = 0, rho0_ = 0, sigma0_ = 0;
    mutable double tau_star_ = -1.0;  // cached root
};

}  // namespace stokes
