#pragma once

#include "jumpcube/decision_points.hpp"
#include "jumpcube/distributions.hpp"
#include "jumpcube/errors.hpp"
#include "jumpcube/params.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace jumpcube {

/// Discretization of the win-probability axis: P_0 = 0 < P_1 < ... < P_N = 1.
struct Grid {
    std::vector<double> p;

    static Grid uniform(int n);
    int n() const { return static_cast<int>(p.size()) - 1; }
    void validate() const;
};

/// Converged solution of the three cubeful-equity integral equations on a
/// grid. Arrays have N+1 entries with e[0] = -L and e[N] = +W pinned;
/// everything is normalized to the current cube value.
struct EquitySolution {
    Grid grid;
    std::vector<double> e_o;
    std::vector<double> e_u;
    std::vector<double> e_c;
    DecisionPoints points;
    int iterations_ou = 0;
    int iterations_c = 0;
    double residual = 0.0; // max |A x - b| over the final linear solves

    // Linear interpolation of one of the equity arrays at arbitrary P.
    double interpolate(const std::vector<double>& values, double p) const;
};

class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, EquitySolution last_iterate)
        : std::runtime_error(what), last(std::move(last_iterate)) {}
    EquitySolution last;
};

/// One pass of the discretized player-owned/unavailable system: assembles the
/// 2(N-1) coupled equations for the given decision points and solves them.
/// dists supplies the jump distribution at each grid node (N+1 entries).
std::pair<std::vector<double>, std::vector<double>> assemble_and_solve_ou(
    const WinLossParams& wl, const std::vector<JumpDistribution>& dists, const Grid& grid,
    const DecisionPoints& points);

/// Centered-cube system given already-solved owned/unavailable arrays.
std::vector<double> assemble_and_solve_c(const WinLossParams& wl,
                                         const std::vector<JumpDistribution>& dists,
                                         const Grid& grid, const DecisionPoints& points,
                                         const std::vector<double>& e_o,
                                         const std::vector<double>& e_u);

/// Re-reads all ten decision points off the solved equity arrays, treating
/// each array as piecewise linear between grid nodes. When e_c is null the
/// four centered points are carried over from `base`.
DecisionPoints refine_points(const Grid& grid, const std::vector<double>& e_o,
                             const std::vector<double>& e_u, const std::vector<double>* e_c,
                             const DecisionPoints& base);

/// Full fixed-point iteration: solve O/U, refine the six cube-owned points,
/// repeat to convergence; then the same for the centered system and its four
/// points. Convergence is max point movement < 1e-6 with a cap of 25
/// iterations per phase (convergence_error carries the last iterate).
/// The default initial guess is the linear approximation.
EquitySolution solve_exact(const WinLossParams& wl, const std::vector<JumpDistribution>& dists,
                           const Grid& grid, std::optional<DecisionPoints> initial = std::nullopt);

/// Constant-volatility convenience overload on a uniform grid.
EquitySolution solve_exact(const WinLossParams& wl, const JumpDistribution& dist, int n = 500,
                           std::optional<DecisionPoints> initial = std::nullopt);

} // namespace jumpcube
