#include "jumpcube/exact_solver.hpp"

#include "jumpcube/linear_approx.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace jumpcube {

namespace {

// Post-jump value at a node, by the optimal cube action there.
enum class NodeUse {
    Current,  // stay at the current cube level
    DoubledO, // 2 * owned equity (the other side doubled, we took)
    DoubledU, // 2 * unavailable equity (we doubled, they took)
    CashPlus, // double/pass for +1
    CashMinus // double/pass against us, -1
};

NodeUse classify_owned(double p, const DecisionPoints& pts) {
    if (p < pts.rd_o) return NodeUse::Current;
    if (p < pts.cp) return NodeUse::DoubledU;
    if (p < pts.tg_o) return NodeUse::CashPlus;
    return NodeUse::Current;
}

NodeUse classify_unavailable(double p, const DecisionPoints& pts) {
    if (p < pts.tg_u) return NodeUse::Current;
    if (p < pts.tp) return NodeUse::CashMinus;
    if (p < pts.rd_u) return NodeUse::DoubledO;
    return NodeUse::Current;
}

NodeUse classify_centered(double p, const DecisionPoints& pts) {
    if (p < pts.tgc_u) return NodeUse::Current;
    if (p < pts.tp) return NodeUse::CashMinus;
    if (p < pts.id_u) return NodeUse::DoubledO;
    if (p < pts.id_o) return NodeUse::Current;
    if (p < pts.cp) return NodeUse::DoubledU;
    if (p < pts.tgc_o) return NodeUse::CashPlus;
    return NodeUse::Current;
}

// Iteration-invariant pieces of the discretized integral operator: per
// interior row i, the kernel weight of every node plus the four
// linear-extrapolation boundary coefficients.
struct KernelCache {
    int n = 0;
    int m = 0;                 // interior unknowns per equity
    std::vector<double> nodew; // m rows of (n+1) node weights
    std::vector<double> theta; // weight of E_1 in the below-zero tail
    std::vector<double> phi;   // -L multiplier in the below-zero tail
    std::vector<double> psi;   // weight of E_{N-1} in the above-one tail
    std::vector<double> chi;   // +W multiplier in the above-one tail

    const double* row(int i) const { return nodew.data() + static_cast<std::size_t>(i - 1) * (n + 1); }
};

KernelCache build_cache(const std::vector<JumpDistribution>& dists, const Grid& grid) {
    grid.validate();
    const int n = grid.n();
    if (static_cast<int>(dists.size()) != n + 1) {
        throw invalid_parameter_error("need one jump distribution per grid node");
    }
    KernelCache cache;
    cache.n = n;
    cache.m = n - 1;
    cache.nodew.assign(static_cast<std::size_t>(cache.m) * (n + 1), 0.0);
    cache.theta.resize(cache.m);
    cache.phi.resize(cache.m);
    cache.psi.resize(cache.m);
    cache.chi.resize(cache.m);

    const std::vector<double>& p = grid.p;
    std::vector<double> F(n + 1), G(n + 1);
    for (int i = 1; i <= cache.m; ++i) {
        const JumpDistribution& d = dists[i];
        for (int k = 0; k <= n; ++k) {
            F[k] = d.cdf(p[k] - p[i]);
            G[k] = d.partial_moment(p[k] - p[i]);
        }
        double* w = cache.nodew.data() + static_cast<std::size_t>(i - 1) * (n + 1);
        for (int j = 1; j <= n; ++j) {
            const double dp = p[j] - p[j - 1];
            const double df = F[j] - F[j - 1];
            const double dg = G[j] - G[j - 1];
            w[j] += (p[i] - p[j - 1]) / dp * df + dg / dp;
            w[j - 1] += (p[j] - p[i]) / dp * df - dg / dp;
        }
        const double h0 = p[1] - p[0];
        const double h1 = p[n] - p[n - 1];
        cache.theta[i - 1] = (G[0] + p[i] * F[0]) / h0;
        cache.phi[i - 1] = (-G[0] + (p[1] - p[i]) * F[0]) / h0;
        cache.psi[i - 1] = (G[n] + (p[n] - p[i]) * (1.0 - F[n])) / h1;
        cache.chi[i - 1] = (-G[n] + (p[i] - p[n - 1]) * (1.0 - F[n])) / h1;
    }
    return cache;
}

struct OuSolve {
    std::vector<double> e_o;
    std::vector<double> e_u;
    double residual = 0.0;
};

OuSolve solve_ou(const KernelCache& cache, const Grid& grid, const WinLossParams& wl,
                 const DecisionPoints& pts) {
    const int n = cache.n;
    const int m = cache.m;
    const double w = wl.w();
    const double l = wl.l();

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * m);

    auto col_o = [&](int k) { return k - 1; };
    auto col_u = [&](int k) { return m + k - 1; };

    for (int i = 1; i <= m; ++i) {
        const double* cw = cache.row(i);
        const int ro = col_o(i);
        const int ru = col_u(i);
        A(ro, ro) += 1.0;
        A(ru, ru) += 1.0;

        for (int k = 0; k <= n; ++k) {
            const double c = cw[k];
            if (k == 0) {
                b(ro) += c * -l;
                b(ru) += c * -l;
                continue;
            }
            if (k == n) {
                b(ro) += c * w;
                b(ru) += c * w;
                continue;
            }
            switch (classify_owned(grid.p[k], pts)) {
            case NodeUse::Current: A(ro, col_o(k)) -= c; break;
            case NodeUse::DoubledU: A(ro, col_u(k)) -= 2.0 * c; break;
            case NodeUse::CashPlus: b(ro) += c; break;
            default: break;
            }
            switch (classify_unavailable(grid.p[k], pts)) {
            case NodeUse::Current: A(ru, col_u(k)) -= c; break;
            case NodeUse::DoubledO: A(ru, col_o(k)) -= 2.0 * c; break;
            case NodeUse::CashMinus: b(ru) -= c; break;
            default: break;
            }
        }

        A(ro, col_o(1)) -= cache.theta[i - 1];
        A(ro, col_o(n - 1)) -= cache.psi[i - 1];
        b(ro) += -l * cache.phi[i - 1] + w * cache.chi[i - 1];

        A(ru, col_u(1)) -= cache.theta[i - 1];
        A(ru, col_u(n - 1)) -= cache.psi[i - 1];
        b(ru) += -l * cache.phi[i - 1] + w * cache.chi[i - 1];
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    Eigen::VectorXd x = lu.solve(b);
    if (!x.allFinite()) {
        throw singular_system_error("owned/unavailable system is singular",
                                    std::numeric_limits<double>::infinity());
    }

    OuSolve out;
    out.residual = (A * x - b).cwiseAbs().maxCoeff();
    out.e_o.assign(n + 1, 0.0);
    out.e_u.assign(n + 1, 0.0);
    out.e_o[0] = out.e_u[0] = -l;
    out.e_o[n] = out.e_u[n] = w;
    for (int k = 1; k <= m; ++k) {
        out.e_o[k] = x(col_o(k));
        out.e_u[k] = x(col_u(k));
    }
    return out;
}

struct CSolve {
    std::vector<double> e_c;
    double residual = 0.0;
};

CSolve solve_c(const KernelCache& cache, const Grid& grid, const WinLossParams& wl,
               const DecisionPoints& pts, const std::vector<double>& e_o,
               const std::vector<double>& e_u) {
    const int n = cache.n;
    const int m = cache.m;
    const double w = wl.w();
    const double l = wl.l();

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);

    for (int i = 1; i <= m; ++i) {
        const double* cw = cache.row(i);
        const int r = i - 1;
        A(r, r) += 1.0;

        for (int k = 0; k <= n; ++k) {
            const double c = cw[k];
            if (k == 0) {
                b(r) += c * -l;
                continue;
            }
            if (k == n) {
                b(r) += c * w;
                continue;
            }
            switch (classify_centered(grid.p[k], pts)) {
            case NodeUse::Current: A(r, k - 1) -= c; break;
            case NodeUse::DoubledO: b(r) += 2.0 * c * e_o[k]; break;
            case NodeUse::DoubledU: b(r) += 2.0 * c * e_u[k]; break;
            case NodeUse::CashPlus: b(r) += c; break;
            case NodeUse::CashMinus: b(r) -= c; break;
            }
        }

        A(r, 0) -= cache.theta[i - 1];
        A(r, m - 1) -= cache.psi[i - 1];
        b(r) += -l * cache.phi[i - 1] + w * cache.chi[i - 1];
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    Eigen::VectorXd x = lu.solve(b);
    if (!x.allFinite()) {
        throw singular_system_error("centered system is singular",
                                    std::numeric_limits<double>::infinity());
    }

    CSolve out;
    out.residual = (A * x - b).cwiseAbs().maxCoeff();
    out.e_c.assign(n + 1, 0.0);
    out.e_c[0] = -l;
    out.e_c[n] = w;
    for (int k = 1; k <= m; ++k) out.e_c[k] = x(k - 1);
    return out;
}

// Leftmost zero of the piecewise-linear interpolant of h on the grid.
// Values exactly on a node take the node's P.
std::optional<double> first_crossing(const Grid& grid, const std::vector<double>& h) {
    const int n = grid.n();
    for (int k = 0; k < n; ++k) {
        if (h[k] == 0.0) return grid.p[k];
        if (h[k] * h[k + 1] < 0.0) {
            return grid.p[k] + h[k] / (h[k] - h[k + 1]) * (grid.p[k + 1] - grid.p[k]);
        }
    }
    if (h[n] == 0.0) return grid.p[n];
    return std::nullopt;
}

std::optional<double> last_crossing(const Grid& grid, const std::vector<double>& h) {
    const int n = grid.n();
    for (int k = n; k > 0; --k) {
        if (h[k] == 0.0) return grid.p[k];
        if (h[k] * h[k - 1] < 0.0) {
            return grid.p[k - 1] + h[k - 1] / (h[k - 1] - h[k]) * (grid.p[k] - grid.p[k - 1]);
        }
    }
    if (h[0] == 0.0) return grid.p[0];
    return std::nullopt;
}

double max_point_delta(const DecisionPoints& a, const DecisionPoints& b, bool centered) {
    double d = 0.0;
    if (centered) {
        for (auto [x, y] : {std::pair{a.tgc_u, b.tgc_u}, {a.id_u, b.id_u}, {a.id_o, b.id_o},
                            {a.tgc_o, b.tgc_o}}) {
            d = std::max(d, std::fabs(x - y));
        }
    } else {
        for (auto [x, y] : {std::pair{a.tg_u, b.tg_u}, {a.tp, b.tp}, {a.rd_u, b.rd_u},
                            {a.rd_o, b.rd_o}, {a.cp, b.cp}, {a.tg_o, b.tg_o}}) {
            d = std::max(d, std::fabs(x - y));
        }
    }
    return d;
}

constexpr double kPointTol = 1e-6;
constexpr int kMaxIterations = 25;

} // namespace

Grid Grid::uniform(int n) {
    if (n < 50) {
        throw invalid_parameter_error("grid needs at least 50 buckets");
    }
    Grid g;
    g.p.resize(n + 1);
    for (int k = 0; k <= n; ++k) g.p[k] = static_cast<double>(k) / n;
    g.p[0] = 0.0;
    g.p[n] = 1.0;
    return g;
}

void Grid::validate() const {
    if (p.size() < 51 || p.front() != 0.0 || p.back() != 1.0) {
        throw invalid_parameter_error("grid must span [0,1] with at least 50 buckets");
    }
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (!(p[k] > p[k - 1])) {
            throw invalid_parameter_error("grid points must be strictly increasing");
        }
    }
}

double EquitySolution::interpolate(const std::vector<double>& values, double p_at) const {
    const auto& p = grid.p;
    if (p_at <= p.front()) return values.front();
    if (p_at >= p.back()) return values.back();
    auto it = std::upper_bound(p.begin(), p.end(), p_at);
    const auto k = static_cast<std::size_t>(std::distance(p.begin(), it));
    const double t = (p_at - p[k - 1]) / (p[k] - p[k - 1]);
    return values[k - 1] + t * (values[k] - values[k - 1]);
}

std::pair<std::vector<double>, std::vector<double>> assemble_and_solve_ou(
    const WinLossParams& wl, const std::vector<JumpDistribution>& dists, const Grid& grid,
    const DecisionPoints& points) {
    if (!points.ordered(1e-6)) {
        throw invalid_parameter_error("decision points violate their ordering");
    }
    const KernelCache cache = build_cache(dists, grid);
    OuSolve s = solve_ou(cache, grid, wl, points);
    return {std::move(s.e_o), std::move(s.e_u)};
}

std::vector<double> assemble_and_solve_c(const WinLossParams& wl,
                                         const std::vector<JumpDistribution>& dists,
                                         const Grid& grid, const DecisionPoints& points,
                                         const std::vector<double>& e_o,
                                         const std::vector<double>& e_u) {
    const KernelCache cache = build_cache(dists, grid);
    return solve_c(cache, grid, wl, points, e_o, e_u).e_c;
}

DecisionPoints refine_points(const Grid& grid, const std::vector<double>& e_o,
                             const std::vector<double>& e_u, const std::vector<double>* e_c,
                             const DecisionPoints& base) {
    const int n = grid.n();
    DecisionPoints pts = base;
    std::vector<double> h(n + 1);

    auto fill = [&](auto&& f) {
        for (int k = 0; k <= n; ++k) h[k] = f(k);
    };

    fill([&](int k) { return e_u[k] + 1.0; });
    if (auto r = first_crossing(grid, h)) { pts.tg_u = *r; } else { pts.tg_u = 0.0; pts.clamped = true; }

    fill([&](int k) { return e_o[k] + 0.5; });
    if (auto r = first_crossing(grid, h)) { pts.tp = *r; } else { pts.tp = 0.0; pts.clamped = true; }

    fill([&](int k) { return e_u[k] - 2.0 * e_o[k]; });
    if (auto r = first_crossing(grid, h)) { pts.rd_u = *r; } else { pts.rd_u = pts.tp; pts.clamped = true; }

    fill([&](int k) { return e_o[k] - 2.0 * e_u[k]; });
    if (auto r = first_crossing(grid, h)) { pts.rd_o = *r; } else { pts.rd_o = pts.cp; pts.clamped = true; }

    fill([&](int k) { return e_u[k] - 0.5; });
    if (auto r = first_crossing(grid, h)) { pts.cp = *r; } else { pts.cp = 1.0; pts.clamped = true; }

    fill([&](int k) { return e_o[k] - 1.0; });
    if (auto r = last_crossing(grid, h)) { pts.tg_o = *r; } else { pts.tg_o = 1.0; }

    if (e_c != nullptr) {
        const std::vector<double>& c = *e_c;

        fill([&](int k) { return c[k] + 1.0; });
        if (auto r = first_crossing(grid, h)) { pts.tgc_u = *r; } else { pts.tgc_u = 0.0; pts.clamped = true; }

        fill([&](int k) { return c[k] - 2.0 * e_o[k]; });
        if (auto r = first_crossing(grid, h)) { pts.id_u = *r; } else { pts.id_u = pts.tp; pts.clamped = true; }

        fill([&](int k) { return c[k] - 2.0 * e_u[k]; });
        if (auto r = first_crossing(grid, h)) { pts.id_o = *r; } else { pts.id_o = pts.cp; pts.clamped = true; }

        fill([&](int k) { return c[k] - 1.0; });
        if (auto r = last_crossing(grid, h)) { pts.tgc_o = *r; } else { pts.tgc_o = 1.0; }
    }
    return pts;
}

EquitySolution solve_exact(const WinLossParams& wl, const std::vector<JumpDistribution>& dists,
                           const Grid& grid, std::optional<DecisionPoints> initial) {
    const KernelCache cache = build_cache(dists, grid);
    const int n = cache.n;

    DecisionPoints pts;
    if (initial) {
        pts = *initial;
    } else {
        const double alpha_mid = std::min(dists[n / 2].jump_volatility(), 0.45);
        pts = decision_points_linear(wl, VolatilityPair::uniform(alpha_mid));
    }

    EquitySolution sol;
    sol.grid = grid;
    double residual_ou = 0.0;

    bool converged = false;
    for (int it = 1; it <= kMaxIterations; ++it) {
        OuSolve s = solve_ou(cache, grid, wl, pts);
        sol.e_o = std::move(s.e_o);
        sol.e_u = std::move(s.e_u);
        residual_ou = s.residual;
        const DecisionPoints next = refine_points(grid, sol.e_o, sol.e_u, nullptr, pts);
        const double delta = max_point_delta(pts, next, false);
        pts = next;
        sol.iterations_ou = it;
        if (delta < kPointTol) {
            converged = true;
            break;
        }
    }
    sol.points = pts;
    if (!converged) {
        throw convergence_error("owned/unavailable decision points did not converge", sol);
    }

    double residual_c = 0.0;
    converged = false;
    for (int it = 1; it <= kMaxIterations; ++it) {
        CSolve s = solve_c(cache, grid, wl, pts, sol.e_o, sol.e_u);
        sol.e_c = std::move(s.e_c);
        residual_c = s.residual;
        const DecisionPoints next = refine_points(grid, sol.e_o, sol.e_u, &sol.e_c, pts);
        const double delta = max_point_delta(pts, next, true);
        pts = next;
        sol.iterations_c = it;
        if (delta < kPointTol) {
            converged = true;
            break;
        }
    }
    sol.points = pts;
    sol.residual = std::max(residual_ou, residual_c);
    if (!converged) {
        throw convergence_error("centered decision points did not converge", sol);
    }
    return sol;
}

EquitySolution solve_exact(const WinLossParams& wl, const JumpDistribution& dist, int n,
                           std::optional<DecisionPoints> initial) {
    const Grid grid = Grid::uniform(n);
    const std::vector<JumpDistribution> dists(static_cast<std::size_t>(n) + 1, dist);
    return solve_exact(wl, dists, grid, std::move(initial));
}

} // namespace jumpcube
