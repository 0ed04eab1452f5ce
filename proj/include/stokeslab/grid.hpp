#pragma once

#include <Eigen/Core>

namespace stokes {

/// Uniform tensor grid for the hodograph strip. The q direction spans
/// [0, periods*L/2] (half of `periods` wave periods, even symmetry at both
/// ends); p spans [0,1]. Node counts are inclusive of both ends.
struct Grid {
    int nq = 0;       // q-nodes
    int np = 0;       // p-nodes
    double L = 0;     // one-period length in q
    int periods = 1;  // number of half-period copies is periods (M of the subharmonic grid)

    double span() const { return 0.5 * L * periods; }
    double dq() const { return span() / (nq - 1); }
    double dp() const { return 1.0 / (np - 1); }
    double q(int i) const { return i * dq(); }
    double p(int j) const { return j * dp(); }

    /// Unknown ids exclude the p=0 row: id = i*(np-1) + (j-1), j >= 1.
    int n_unknowns() const { return nq * (np - 1); }
    int id(int i, int j) const { return i * (np - 1) + (j - 1); }
    bool is_surface(int id_) const { return id_ % (np - 1) == np - 2; }
    int surface_id(int i) const { return id(i, np - 1); }

    /// q-direction trapezoid weight (dq, halved at the two ends).
    double wq(int i) const { return (i == 0 || i == nq - 1) ? 0.5 * dq() : dq(); }

    bool operator==(const Grid&) const = default;
};

/// A point of the Stokes branch: nodal heights h(q_i, p_j) (column j), the
/// period scaling lambda = Lambda(0)/Lambda(t), and the Bernoulli constant.
struct HeightField {
    Grid grid;
    Eigen::MatrixXd h;  // nq x np, h(:,0) == 0
    double lambda = 1.0;
    double R = 0.0;
    double t_label = 0.0;

    double min_hp() const;
    /// Crest-minus-trough half-height of the surface trace.
    double amplitude() const;
    /// Nodal h_p by one-sided/centered second-order differences, column j.
    Eigen::MatrixXd nodal_hp() const;
    /// Nodal h_q with even reflection at both q-ends.
    Eigen::MatrixXd nodal_hq() const;
};

}  // namespace stokes
