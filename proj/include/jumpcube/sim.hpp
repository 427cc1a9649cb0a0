#pragma once

#include "jumpcube/distributions.hpp"
#include "jumpcube/params.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jumpcube {

/// Optional state-dependent volatility multiplier, tabulated on a uniform
/// grid over [0,1] and linearly interpolated. Values are the per-ply jump
/// volatility to use at that win probability.
struct VolatilityProfileTable {
    std::vector<double> alphas;

    bool empty() const { return alphas.empty(); }
    double at(double p) const;
};

/// Synthetic money-game process: win probability starts at 1/2 and takes one
/// independent jump per ply, clamped to [0,1] with absorption at the ends.
/// Each side may double before its ply per its strategy. Stands in for a
/// real backgammon bot; W and L stay constant within a game.
struct ProcessConfig {
    JumpDistribution per_ply = JumpDistribution(JumpKind::DoubleExponential, 0.05);
    double w = 1.0; // side A's expected points on a win
    double l = 1.0; // side A's expected points on a loss
    std::int64_t cube_cap = 64;
    int max_plies = 2000;
    VolatilityProfileTable profile;

    void validate() const;
};

/// Deterministic cube policy: double/take decisions from the acting side's
/// own view of the win probability.
struct Strategy {
    std::string name;
    std::function<bool(double p_view, bool cube_centered)> should_double;
    std::function<bool(double p_view)> should_take;
};

/// Cube policy driven by the linear-approximation decision points for the
/// assumed (W, L, volatility). Pass statistically-estimated volatilities
/// through scale_statistical_volatility() first if that calibration is
/// wanted; it is never applied here.
Strategy jump_model_strategy(std::string name, const WinLossParams& wl,
                             const VolatilityPair& vols);

/// Never doubles, always takes; yields cubeless games.
Strategy never_double_strategy(std::string name = "cubeless");

enum class TerminalKind {
    Absorbed,  // p reached 0 or 1
    CubePass,  // a double was passed
    Truncated, // hit max_plies; scored at cubeless expectation
};

struct Trajectory {
    std::uint64_t game_id = 0;
    std::vector<double> p; // p[0] = initial state, p[t] = after ply t
    TerminalKind terminal = TerminalKind::Truncated;
    double points_a = 0.0;
};

struct GameResult {
    double points_a = 0.0;
    Trajectory trajectory;
};

/// One game between strategies a and b. Side A's payoff sign convention:
/// wins pay +w*cube, losses -l*cube, cube passes +/-cube. Side B prices its
/// game with w and l swapped.
GameResult play_game(const ProcessConfig& cfg, const Strategy& a, const Strategy& b,
                     std::uint64_t seed, bool a_moves_first = true, std::uint64_t game_id = 0);

struct DuelResult {
    std::uint64_t games = 0;
    double mean_ppg = 0.0;
    double stderr_ppg = 0.0;
    bool stderr_defined = false;
    std::uint64_t seed = 0;
    std::uint64_t truncated_games = 0;
};

/// n_games independent games; game g is seeded with seed + g and the first
/// mover alternates with g's parity, so results are reproducible and
/// independent of execution order. When `trajectories` is non-null every
/// game's trajectory is appended to it.
DuelResult duel(const ProcessConfig& cfg, const Strategy& a, const Strategy& b,
                std::uint64_t n_games, std::uint64_t seed,
                std::vector<Trajectory>* trajectories = nullptr);

/// Weighted mean and standard deviation of post-two-roll win probabilities;
/// the local-volatility estimator over a full two-roll enumeration. The mean
/// is estimated from the sample rather than assumed equal to the pre-roll
/// probability. Weights must sum to 1 within 1e-9.
struct LocalVolEstimate {
    double sigma_j = 0.0;
    double p_a = 0.0;
};

LocalVolEstimate estimate_local_volatility(
    std::span<const std::pair<double, double>> weighted_outcomes);

/// 1/36^2 when both rolls are doubles, 1/18^2 when both are mixed,
/// 1/(18*36) for one of each. The 441 roll pairs weighted this way sum to 1.
double roll_pair_weight(bool first_is_double, bool second_is_double);

struct WindowPair {
    double low_lo = 0.20;
    double low_hi = 0.35;
    double high_lo = 0.65;
    double high_hi = 0.80;
};

/// Remote-volatility estimator: keeps trajectories whose win probability
/// visited one window and later the opposite one, then collects the two-ply
/// probability change at every in-window state of those trajectories.
/// Returns both the expected absolute jump and the standard deviation of the
/// jumps, plus the sample count.
struct RemoteVolEstimate {
    double mean_abs_jump = 0.0;
    double std_jump = 0.0;
    std::size_t samples = 0;
    std::size_t trajectories_seen = 0;
    std::size_t trajectories_qualified = 0;
};

RemoteVolEstimate estimate_remote_volatility(std::span<const Trajectory> trajectories,
                                             const WindowPair& windows = {});

/// One draw from the jump law. Uses only raw engine output so results are
/// identical across standard library implementations.
double draw_jump(const JumpDistribution& dist, std::mt19937_64& rng);

// Trajectory CSV: header game_id,ply,p_win; one row per ply including the
// initial state at ply 0.
void write_trajectories_csv(std::ostream& out, std::span<const Trajectory> trajectories);
std::vector<Trajectory> read_trajectories_csv(std::istream& in);

} // namespace jumpcube
