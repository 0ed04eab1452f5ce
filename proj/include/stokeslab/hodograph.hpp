#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <memory>

#include "stokeslab/grid.hpp"
#include "stokeslab/uniform_stream.hpp"

namespace stokes {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

/// What to accumulate during an assembly pass.
struct AssembleRequest {
    bool value = false;
    bool gradient = false;
    bool hessian = false;
    bool dlambda = false;  // d(gradient)/d(lambda)
};

struct Assembly {
    double value = 0;
    Vec gradient;       // size grid.n_unknowns()
    SpMat hessian;      // symmetric, the discrete Frechet pair (A and N together)
    Vec dgrad_dlambda;  // size grid.n_unknowns()
    double min_hp = 0;  // over quadrature points
};

/// Bilinear-FEM evaluation of the hodograph potential
///   f(h;lambda) = int [ (1+lambda^2 h_q^2)/(2 h_p) - (h - R + Omega(p) - Omega(1)) h_p ]
/// on the half-period strip; its gradient is the discrete wave system and its
/// Hessian is the Frechet pair.
Assembly assemble_potential(const HeightField& hf, const VorticityModel& vm,
                            const AssembleRequest& req, double hp_floor = 1e-6);

/// Strong-form scaled residual: F at interior nodes, G on the p=1 trace.
struct Residual {
    Eigen::MatrixXd F;  // nq x np; rows 1..np-2 hold interior residuals
    Vec G;              // nq surface residuals
    double norm_F_inf = 0, norm_G_inf = 0;
};
Residual residual(const HeightField& hf, const VorticityModel& vm);

/// Uniform-stream height field: the q-independent exact critical point of the
/// discrete potential (1-D Newton seeded with the analytic H).
HeightField flat_height_field(const UniformStream& stream, const Grid& grid);

/// Assembled Frechet derivative at a height field.
struct FrechetPair {
    Grid grid;
    double lambda = 0;
    SpMat A;  // full Hessian; surface rows encode the weighted trace operator (N w - w)
};
FrechetPair assemble_frechet(const HeightField& hf, const VorticityModel& vm);

/// Dirichlet and Dirichlet-to-Neumann solves against a factored Frechet pair.
class DirichletSolver {
  public:
    DirichletSolver(const HeightField& hf, const VorticityModel& vm);

    const FrechetPair& frechet() const { return fp_; }

    /// Solve A w = f (nodal interior data), w = g at p=1, w = 0 at p=0.
    /// Returns the full unknown vector (interior + surface trace = g).
    Vec solve(const Vec& f_interior_nodal, const Vec& g_trace) const;

    /// Dirichlet-Neumann operator: S g = (N w - w)|_{p=1}, nodal values.
    Vec dn_apply(const Vec& g_trace) const;

    /// Dense DN matrix in the weighted trace pairing (symmetric).
    Eigen::MatrixXd dn_matrix_weighted() const;

    double last_estimate_ratio() const { return estimate_ratio_; }

  private:
    FrechetPair fp_;
    std::vector<int> interior_ids_, surface_ids_;
    Eigen::SparseLU<SpMat> lu_;
    SpMat A_ig_, A_gi_, A_gg_, A_ii_;
    mutable double estimate_ratio_ = 0;
};

/// Newton solve of the nonlinear Dirichlet problem (interior forcing f, trace
/// g, homogeneous bottom), started from w = 0. delta_star documents the
/// validated smallness threshold for ||f|| + ||g||.
struct NonlinearDirichletResult {
    Vec w;  // correction, full unknown layout
    int iterations = 0;
    std::vector<double> residual_history;
};
NonlinearDirichletResult nonlinear_dirichlet_solve(const HeightField& hf,
                                                   const VorticityModel& vm,
                                                   const Vec& f_interior_nodal,
                                                   const Vec& g_trace, double delta,
                                                   double delta_star = 1e-2);

/// Surface profile and stream-function samples in physical variables.
struct PhysicalFields {
    std::vector<double> X;      // physical abscissae q_i / lambda
    std::vector<double> Xi;     // surface elevation
    Eigen::MatrixXd Psi;        // psi on the (q_i, y_k) sample grid
    std::vector<double> y;      // y samples, 0..max surface height
    double bernoulli_residual_max = 0;
};
PhysicalFields to_physical(const HeightField& hf);

/// Fold a one-period half-grid field onto the M-period half grid.
HeightField fold_to_subharmonic(const HeightField& hf, int M);

/// Pack/unpack between the h matrix (p>0 rows) and the unknown vector.
Vec pack_unknowns(const HeightField& hf);
void unpack_unknowns(HeightField& hf, const Vec& u);

}  // namespace stokes
