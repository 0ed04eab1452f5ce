#include "stokeslab/hodograph.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "stokeslab/errors.hpp"
#include "stokeslab/numerics.hpp"

namespace stokes {

double HeightField::min_hp() const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.nq; ++i)
        for (int j = 0; j + 1 < grid.np; ++j)
            m = std::min(m, (h(i, j + 1) - h(i, j)) / grid.dp());
    return m;
}

double HeightField::amplitude() const {
    // One-period crest/trough difference; on a subharmonic grid the first
    // period still carries the reference amplitude.
    const int m = (grid.nq - 1) / grid.periods;
    return 0.5 * (h(0, grid.np - 1) - h(m, grid.np - 1));
}

Eigen::MatrixXd HeightField::nodal_hp() const {
    const int nq = grid.nq, np = grid.np;
    const double dp = grid.dp();
    Eigen::MatrixXd out(nq, np);
    for (int i = 0; i < nq; ++i) {
        for (int j = 0; j < np; ++j) {
            if (j == 0)
                out(i, j) = (-3.0 * h(i, 0) + 4.0 * h(i, 1) - h(i, 2)) / (2.0 * dp);
            else if (j == np - 1)
                out(i, j) = (3.0 * h(i, j) - 4.0 * h(i, j - 1) + h(i, j - 2)) / (2.0 * dp);
            else
                out(i, j) = (h(i, j + 1) - h(i, j - 1)) / (2.0 * dp);
        }
    }
    return out;
}

Eigen::MatrixXd HeightField::nodal_hq() const {
    const int nq = grid.nq, np = grid.np;
    const double dq = grid.dq();
    Eigen::MatrixXd out(nq, np);
    auto at = [&](int i, int j) {  // even reflection at both ends
        if (i < 0) i = -i;
        if (i > nq - 1) i = 2 * (nq - 1) - i;
        return h(i, j);
    };
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < np; ++j) out(i, j) = (at(i + 1, j) - at(i - 1, j)) / (2.0 * dq);
    return out;
}

namespace {

constexpr double kGaussA = 0.21132486540518713;  // (1 - 1/sqrt(3))/2
constexpr double kGaussB = 0.78867513459481287;

struct ShapeTable {
    // 4 Gauss points x 4 nodes: value, d/dxi, d/deta on the reference square
    double N[4][4], Nx[4][4], Ne[4][4];
    ShapeTable() {
        const double gp[4][2] = {{kGaussA, kGaussA}, {kGaussB, kGaussA},
                                 {kGaussA, kGaussB}, {kGaussB, kGaussB}};
        for (int g = 0; g < 4; ++g) {
            const double x = gp[g][0], e = gp[g][1];
            const double nv[4] = {(1 - x) * (1 - e), x * (1 - e), (1 - x) * e, x * e};
            const double nx[4] = {-(1 - e), (1 - e), -e, e};
            const double ne[4] = {-(1 - x), -x, (1 - x), x};
            for (int a = 0; a < 4; ++a) {
                N[g][a] = nv[a];
                Nx[g][a] = nx[a];
                Ne[g][a] = ne[a];
            }
        }
    }
};
const ShapeTable kShapes;

}  // namespace

Assembly assemble_potential(const HeightField& hf, const VorticityModel& vm,
                            const AssembleRequest& req, double hp_floor) {
    const Grid& g = hf.grid;
    const int nq = g.nq, np = g.np, n = g.n_unknowns();
    const double dq = g.dq(), dp = g.dp(), lam = hf.lambda, R = hf.R;
    const double Om1 = vm.Omega(1.0);

    Assembly out;
    if (req.gradient) out.gradient = Vec::Zero(n);
    if (req.dlambda) out.dgrad_dlambda = Vec::Zero(n);
    std::vector<Eigen::Triplet<double>> trips;
    if (req.hessian) trips.reserve(std::size_t(nq) * np * 16);
    out.min_hp = std::numeric_limits<double>::infinity();

    // Omega at the two Gauss levels of each p-cell row, precomputed.
    std::vector<double> om_lo(np - 1), om_hi(np - 1);
    for (int j = 0; j + 1 < np; ++j) {
        om_lo[j] = vm.Omega(g.p(j) + kGaussA * dp);
        om_hi[j] = vm.Omega(g.p(j) + kGaussB * dp);
    }

    const double wgt = 0.25 * dq * dp;  // reference weight x cell area
    for (int i = 0; i + 1 < nq; ++i) {
        for (int j = 0; j + 1 < np; ++j) {
            const double hc[4] = {hf.h(i, j), hf.h(i + 1, j), hf.h(i, j + 1), hf.h(i + 1, j + 1)};
            const int ids[4] = {j >= 1 ? g.id(i, j) : -1, j >= 1 ? g.id(i + 1, j) : -1,
                                g.id(i, j + 1), g.id(i + 1, j + 1)};
            for (int gp = 0; gp < 4; ++gp) {
                double h = 0, hq = 0, hp = 0;
                for (int a = 0; a < 4; ++a) {
                    h += kShapes.N[gp][a] * hc[a];
                    hq += kShapes.Nx[gp][a] * hc[a];
                    hp += kShapes.Ne[gp][a] * hc[a];
                }
                hq /= dq;
                hp /= dp;
                out.min_hp = std::min(out.min_hp, hp);
                if (hp <= hp_floor)
                    throw DegenerateHp("h_p = " + num::format_double(hp) + " at cell (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
                const double om = (gp == 0 || gp == 1) ? om_lo[j] : om_hi[j];
                const double W = 1.0 + lam * lam * hq * hq;
                const double pot = h - R + om - Om1;

                if (req.value) out.value += wgt * (W / (2.0 * hp) - pot * hp);
                if (req.gradient || req.hessian || req.dlambda) {
                    const double e_h = -hp;
                    const double e_q = lam * lam * hq / hp;
                    const double e_p = -W / (2.0 * hp * hp) - pot;
                    if (req.gradient) {
                        for (int a = 0; a < 4; ++a) {
                            if (ids[a] < 0) continue;
                            out.gradient[ids[a]] +=
                                wgt * (e_h * kShapes.N[gp][a] + e_q * kShapes.Nx[gp][a] / dq +
                                       e_p * kShapes.Ne[gp][a] / dp);
                        }
                    }
                    if (req.dlambda) {
                        const double dq_l = 2.0 * lam * hq / hp;
                        const double dp_l = -lam * hq * hq / (hp * hp);
                        for (int a = 0; a < 4; ++a) {
                            if (ids[a] < 0) continue;
                            out.dgrad_dlambda[ids[a]] += wgt * (dq_l * kShapes.Nx[gp][a] / dq +
                                                                dp_l * kShapes.Ne[gp][a] / dp);
                        }
                    }
                    if (req.hessian) {
                        const double e_hp2 = -1.0;  // d2e/dh dhp
                        const double e_qq = lam * lam / hp;
                        const double e_qp = -lam * lam * hq / (hp * hp);
                        const double e_pp = W / (hp * hp * hp);
                        double Bq[4], Bp[4], Bv[4];
                        for (int a = 0; a < 4; ++a) {
                            Bv[a] = kShapes.N[gp][a];
                            Bq[a] = kShapes.Nx[gp][a] / dq;
                            Bp[a] = kShapes.Ne[gp][a] / dp;
                        }
                        for (int a = 0; a < 4; ++a) {
                            if (ids[a] < 0) continue;
                            for (int b = 0; b < 4; ++b) {
                                if (ids[b] < 0) continue;
                                const double v =
                                    e_hp2 * (Bv[a] * Bp[b] + Bp[a] * Bv[b]) +
                                    e_qq * Bq[a] * Bq[b] + e_qp * (Bq[a] * Bp[b] + Bp[a] * Bq[b]) +
                                    e_pp * Bp[a] * Bp[b];
                                trips.emplace_back(ids[a], ids[b], wgt * v);
                            }
                        }
                    }
                }
            }
        }
    }
    if (req.hessian) {
        out.hessian.resize(n, n);
        out.hessian.setFromTriplets(trips.begin(), trips.end());
    }
    return out;
}

Residual residual(const HeightField& hf, const VorticityModel& vm) {
    const Grid& g = hf.grid;
    AssembleRequest req;
    req.gradient = true;
    const Assembly a = assemble_potential(hf, vm, req);
    Residual r;
    r.F = Eigen::MatrixXd::Zero(g.nq, g.np);
    r.G = Vec::Zero(g.nq);
    for (int i = 0; i < g.nq; ++i) {
        for (int j = 1; j + 1 < g.np; ++j) {
            r.F(i, j) = a.gradient[g.id(i, j)] / (g.wq(i) * g.dp());
            r.norm_F_inf = std::max(r.norm_F_inf, std::abs(r.F(i, j)));
        }
        r.G(i) = a.gradient[g.surface_id(i)] / g.wq(i);
        r.norm_G_inf = std::max(r.norm_G_inf, std::abs(r.G(i)));
    }
    return r;
}

HeightField flat_height_field(const UniformStream& stream, const Grid& grid) {
    HeightField hf;
    hf.grid = grid;
    hf.R = stream.bernoulli();
    hf.lambda = 1.0;
    hf.h.resize(grid.nq, grid.np);
    for (int j = 0; j < grid.np; ++j) hf.h.col(j).setConstant(stream.H(grid.p(j)));

    // 1-D Newton: columns stay equal, unknowns are the np-1 level values.
    const int n = grid.n_unknowns(), nl = grid.np - 1;
    SpMat P(n, nl);
    {
        std::vector<Eigen::Triplet<double>> t;
        t.reserve(n);
        for (int i = 0; i < grid.nq; ++i)
            for (int j = 1; j < grid.np; ++j) t.emplace_back(grid.id(i, j), j - 1, 1.0);
        P.setFromTriplets(t.begin(), t.end());
    }
    AssembleRequest req;
    req.gradient = true;
    req.hessian = true;
    const double tol = 1e-13 * std::max(1.0, std::abs(hf.R)) * grid.dq() * grid.dp();
    for (int it = 0; it < 30; ++it) {
        const Assembly a = assemble_potential(hf, stream.vorticity(), req);
        const Vec gr = P.transpose() * a.gradient;
        if (gr.lpNorm<Eigen::Infinity>() < tol) return hf;
        const Eigen::MatrixXd Hr = Eigen::MatrixXd(P.transpose() * a.hessian * P);
        const Vec dv = Hr.partialPivLu().solve(gr);
        for (int j = 1; j < grid.np; ++j) hf.h.col(j).array() -= dv[j - 1];
    }
    throw NewtonDiverged("flat_height_field: 1-D Newton did not meet tolerance");
}

FrechetPair assemble_frechet(const HeightField& hf, const VorticityModel& vm) {
    AssembleRequest req;
    req.hessian = true;
    Assembly a = assemble_potential(hf, vm, req);
    FrechetPair fp;
    fp.grid = hf.grid;
    fp.lambda = hf.lambda;
    fp.A = std::move(a.hessian);
    return fp;
}

DirichletSolver::DirichletSolver(const HeightField& hf, const VorticityModel& vm)
    : fp_(assemble_frechet(hf, vm)) {
    const Grid& g = fp_.grid;
    for (int i = 0; i < g.nq; ++i) {
        surface_ids_.push_back(g.surface_id(i));
        for (int j = 1; j + 1 < g.np; ++j) interior_ids_.push_back(g.id(i, j));
    }
    const int ni = int(interior_ids_.size()), ns = int(surface_ids_.size());
    std::vector<int> role(g.n_unknowns(), -1);  // local index; surface offset by ni
    for (int k = 0; k < ni; ++k) role[interior_ids_[k]] = k;
    for (int k = 0; k < ns; ++k) role[surface_ids_[k]] = ni + k;
    std::vector<Eigen::Triplet<double>> tii, tig, tgi, tgg;
    for (int outer = 0; outer < fp_.A.outerSize(); ++outer) {
        for (SpMat::InnerIterator it(fp_.A, outer); it; ++it) {
            const int r = role[it.row()], c = role[it.col()];
            if (r < ni && c < ni)
                tii.emplace_back(r, c, it.value());
            else if (r < ni)
                tig.emplace_back(r, c - ni, it.value());
            else if (c < ni)
                tgi.emplace_back(r - ni, c, it.value());
            else
                tgg.emplace_back(r - ni, c - ni, it.value());
        }
    }
    A_ii_.resize(ni, ni);
    A_ii_.setFromTriplets(tii.begin(), tii.end());
    A_ig_.resize(ni, ns);
    A_ig_.setFromTriplets(tig.begin(), tig.end());
    A_gi_.resize(ns, ni);
    A_gi_.setFromTriplets(tgi.begin(), tgi.end());
    A_gg_.resize(ns, ns);
    A_gg_.setFromTriplets(tgg.begin(), tgg.end());
    lu_.compute(A_ii_);
    if (lu_.info() != Eigen::Success)
        throw SolverSingular("DirichletSolver: interior block factorization failed");
}

Vec DirichletSolver::solve(const Vec& f_interior_nodal, const Vec& g_trace) const {
    const Grid& g = fp_.grid;
    const int ni = int(interior_ids_.size());
    Vec rhs = Vec::Zero(ni);
    if (f_interior_nodal.size() > 0) {
        int k = 0;
        for (int i = 0; i < g.nq; ++i)
            for (int j = 1; j + 1 < g.np; ++j, ++k)
                rhs[k] = g.wq(i) * g.dp() * f_interior_nodal[k];
    }
    rhs -= A_ig_ * g_trace;
    const Vec wi = lu_.solve(rhs);
    const double res = (A_ii_ * wi - rhs).norm();
    if (res > 1e-10 * std::max(1.0, rhs.norm()))
        throw SolverSingular("DirichletSolver: linear residual above tolerance");
    estimate_ratio_ = wi.norm() / std::max(1e-300, f_interior_nodal.size() ? f_interior_nodal.norm() + g_trace.norm()
                                                                            : g_trace.norm());
    Vec full = Vec::Zero(g.n_unknowns());
    for (int k = 0; k < ni; ++k) full[interior_ids_[k]] = wi[k];
    for (std::size_t k = 0; k < surface_ids_.size(); ++k) full[surface_ids_[k]] = g_trace[int(k)];
    return full;
}

Vec DirichletSolver::dn_apply(const Vec& g_trace) const {
    const Grid& g = fp_.grid;
    const Vec full = solve(Vec(), g_trace);
    const int ni = int(interior_ids_.size());
    Vec wi(ni);
    for (int k = 0; k < ni; ++k) wi[k] = full[interior_ids_[k]];
    Vec flux = A_gi_ * wi + A_gg_ * g_trace;
    for (int i = 0; i < g.nq; ++i) flux[i] /= g.wq(i);
    return flux;
}

Eigen::MatrixXd DirichletSolver::dn_matrix_weighted() const {
    const int ns = int(surface_ids_.size());
    Eigen::MatrixXd S(ns, ns);
    for (int c = 0; c < ns; ++c) {
        Vec e = Vec::Zero(ns);
        e[c] = 1.0;
        const Vec rhs = -1.0 * (A_ig_ * e);
        const Vec wi = lu_.solve(rhs);
        S.col(c) = A_gi_ * wi + A_gg_ * e;
    }
    return S;
}

NonlinearDirichletResult nonlinear_dirichlet_solve(const HeightField& hf,
                                                   const VorticityModel& vm,
                                                   const Vec& f_interior_nodal, const Vec& g_trace,
                                                   double delta, double delta_star) {
    (void)delta_star;  // documented threshold; the solver reports divergence honestly
    (void)delta;
    const Grid& g = hf.grid;
    AssembleRequest greq;
    greq.gradient = true;
    const Vec grad0 = assemble_potential(hf, vm, greq).gradient;

    HeightField cur = hf;
    for (int i = 0; i < g.nq; ++i) cur.h(i, g.np - 1) += g_trace[i];

    std::vector<int> interior_ids;
    for (int i = 0; i < g.nq; ++i)
        for (int j = 1; j + 1 < g.np; ++j) interior_ids.push_back(g.id(i, j));
    const int ni = int(interior_ids.size());
    Vec fw = Vec::Zero(ni);
    if (f_interior_nodal.size() > 0) {
        int k = 0;
        for (int i = 0; i < g.nq; ++i)
            for (int j = 1; j + 1 < g.np; ++j, ++k)
                fw[k] = g.wq(i) * g.dp() * f_interior_nodal[k];
    }

    NonlinearDirichletResult out;
    AssembleRequest full;
    full.gradient = true;
    full.hessian = true;
    const double scale = std::max(1.0, std::abs(hf.R)) * g.dq() * g.dp();
    for (int it = 0; it < 30; ++it) {
        Assembly a;
        try {
            a = assemble_potential(cur, vm, full);
        } catch (const DegenerateHp&) {
            throw NewtonDiverged("nonlinear Dirichlet: h_p degenerated during iteration");
        }
        Vec res(ni);
        for (int k = 0; k < ni; ++k)
            res[k] = a.gradient[interior_ids[k]] - grad0[interior_ids[k]] - fw[k];
        const double rn = res.lpNorm<Eigen::Infinity>();
        out.residual_history.push_back(rn / scale);
        if (rn < 1e-10 * scale) {
            out.iterations = it;
            out.w = pack_unknowns(cur) - pack_unknowns(hf);
            return out;
        }
        // interior Hessian block
        std::vector<int> role(g.n_unknowns(), -1);
        for (int k = 0; k < ni; ++k) role[interior_ids[k]] = k;
        std::vector<Eigen::Triplet<double>> tii;
        for (int outer = 0; outer < a.hessian.outerSize(); ++outer)
            for (SpMat::InnerIterator itn(a.hessian, outer); itn; ++itn) {
                const int r = role[itn.row()], c = role[itn.col()];
                if (r >= 0 && c >= 0) tii.emplace_back(r, c, itn.value());
            }
        SpMat Aii(ni, ni);
        Aii.setFromTriplets(tii.begin(), tii.end());
        Eigen::SparseLU<SpMat> lu(Aii);
        if (lu.info() != Eigen::Success)
            throw NewtonDiverged("nonlinear Dirichlet: singular Jacobian");
        const Vec dw = lu.solve(res);
        // backtracking on the residual norm
        double step = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 8; ++ls) {
            HeightField trial = cur;
            for (int k = 0; k < ni; ++k) {
                const int id = interior_ids[k];
                const int i = id / (g.np - 1), j = id % (g.np - 1) + 1;
                trial.h(i, j) -= step * dw[k];
            }
            try {
                const Vec gt = assemble_potential(trial, vm, greq).gradient;
                Vec rt(ni);
                for (int k = 0; k < ni; ++k)
                    rt[k] = gt[interior_ids[k]] - grad0[interior_ids[k]] - fw[k];
                if (rt.lpNorm<Eigen::Infinity>() < rn) {
                    cur = trial;
                    accepted = true;
                    break;
                }
            } catch (const DegenerateHp&) {
                // shrink and retry
            }
            step *= 0.5;
        }
        if (!accepted) throw NewtonDiverged("nonlinear Dirichlet: line search failed");
    }
    throw NewtonDiverged("nonlinear Dirichlet: iteration limit reached");
}

PhysicalFields to_physical(const HeightField& hf) {
    const Grid& g = hf.grid;
    if (hf.min_hp() <= 0)
        throw DegenerateHp("to_physical: non-monotone height column");
    PhysicalFields out;
    out.X.resize(g.nq);
    out.Xi.resize(g.nq);
    for (int i = 0; i < g.nq; ++i) {
        out.X[i] = g.q(i) / hf.lambda;
        out.Xi[i] = hf.h(i, g.np - 1);
    }
    const double ymax = *std::max_element(out.Xi.begin(), out.Xi.end());
    const int ny = 2 * g.np;
    out.y.resize(ny);
    out.Psi.resize(g.nq, ny);
    for (int k = 0; k < ny; ++k) out.y[k] = ymax * k / (ny - 1);
    for (int i = 0; i < g.nq; ++i) {
        std::vector<double> yk(g.np), pk(g.np);
        for (int j = 0; j < g.np; ++j) {
            yk[j] = hf.h(i, j);
            pk[j] = g.p(j);
        }
        num::Pchip p_of_y(yk, pk);
        for (int k = 0; k < ny; ++k)
            out.Psi(i, k) = (out.y[k] <= yk.back()) ? p_of_y(out.y[k]) : 1.0;
    }
    // Variationally consistent surface Bernoulli residual.
    const Eigen::MatrixXd hq = hf.nodal_hq(), hp = hf.nodal_hp();
    for (int i = 0; i < g.nq; ++i) {
        const double hqv = hq(i, g.np - 1), hpv = hp(i, g.np - 1);
        const double res = (1.0 + hf.lambda * hf.lambda * hqv * hqv) / (2.0 * hpv * hpv) +
                           hf.h(i, g.np - 1) - hf.R;
        out.bernoulli_residual_max = std::max(out.bernoulli_residual_max, std::abs(res));
    }
    return out;
}

HeightField fold_to_subharmonic(const HeightField& hf, int M) {
    const Grid& g = hf.grid;
    if (g.periods != 1) throw OutOfRange("fold_to_subharmonic: expected a one-period field");
    const int m = g.nq - 1;
    HeightField out;
    out.grid = Grid{M * m + 1, g.np, g.L, M};
    out.lambda = hf.lambda;
    out.R = hf.R;
    out.t_label = hf.t_label;
    out.h.resize(out.grid.nq, g.np);
    for (int i = 0; i < out.grid.nq; ++i) {
        int j = i % (2 * m);
        if (j > m) j = 2 * m - j;
        out.h.row(i) = hf.h.row(j);
    }
    return out;
}

Vec pack_unknowns(const HeightField& hf) {
    const Grid& g = hf.grid;
    Vec u(g.n_unknowns());
    for (int i = 0; i < g.nq; ++i)
        for (int j = 1; j < g.np; ++j) u[g.id(i, j)] = hf.h(i, j);
    return u;
}

void unpack_unknowns(HeightField& hf, const Vec& u) {
    const Grid& g = hf.grid;
    for (int i = 0; i < g.nq; ++i)
        for (int j = 1; j < g.np; ++j) hf.h(i, j) = u[g.id(i, j)];
    hf.h.col(0).setZero();
}

}  // namespace stokes
