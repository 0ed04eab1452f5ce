#pragma once

#include <optional>

#include "stokeslab/numerics.hpp"
#include "stokeslab/vorticity.hpp"

namespace stokes {

/// Uniform (parallel) stream: U'' + omega(U) = 0, U(0)=0, U(d)=1, with depth d,
/// Bernoulli constant R, bottom slope s = U'(0). Also carries the hodograph
/// height H(p) of the flat state, H(U(y)) = y.
class UniformStream {
  public:
    UniformStream(VorticityModel vm, double s);

    double s() const { return s_; }
    double depth() const { return d_; }
    double bernoulli() const { return R_; }
    const VorticityModel& vorticity() const { return vm_; }

    double U(double y) const { return u_of_y_(y); }
    double Uprime(double y) const;
    double Uprime_of_p(double p) const;  // U'(y(p)) = sqrt(s^2 - 2 Omega(p))
    double H(double p) const { return y_of_u_(p); }
    double Hp(double p) const;
    double kappa() const { return Uprime_of_p(1.0); }  // U'(d)

  private:
    VorticityModel vm_;
    double s_ = 0, d_ = 0, R_ = 0;
    num::Pchip y_of_u_, u_of_y_;
};

/// Minimizer and roots of the Bernoulli-vs-slope curve R(s) = s^2/2 + d(s) - Omega(1).
struct CriticalData {
    double s_c = 0;  // minimizer
    double R_c = 0;  // minimum value
    std::optional<double> s_plus, s_minus;  // roots of R(s) = R when R > R_c
};

/// Depth of the stream with bottom slope s.
double stream_depth(const VorticityModel& vm, double s);

/// R(s) = s^2/2 + d(s) - Omega(1).
double bernoulli_of_slope(const VorticityModel& vm, double s);

UniformStream solve_uniform_stream(const VorticityModel& vm, double s);

/// Roots absent when R <= R_c; require_waves() throws NoWavesForR in that case.
CriticalData critical_data(const VorticityModel& vm, double R);
const CriticalData& require_waves(const CriticalData& cd, double R);

}  // namespace stokes
