#include "jumpcube/sim.hpp"

#include "jumpcube/linear_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace jumpcube {

namespace {

constexpr double kTwoPi = 6.283185307179586;

// Uniform in (0,1): 53 random bits, nudged away from zero.
double next_uniform(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
}

} // namespace

double draw_jump(const JumpDistribution& dist, std::mt19937_64& rng) {
    switch (dist.kind()) {
    case JumpKind::DoubleExponential: {
        const double u = next_uniform(rng);
        if (u < 0.5) return dist.scale() * std::log(2.0 * u);
        return -dist.scale() * std::log(2.0 * (1.0 - u));
    }
    case JumpKind::Gaussian: {
        const double u1 = next_uniform(rng);
        const double u2 = next_uniform(rng);
        return dist.scale() * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }
    }
    return 0.0;
}

double VolatilityProfileTable::at(double p) const {
    if (alphas.empty()) return 0.0;
    if (alphas.size() == 1) return alphas.front();
    const double x = std::clamp(p, 0.0, 1.0) * static_cast<double>(alphas.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(x), alphas.size() - 2);
    const double t = x - static_cast<double>(k);
    return alphas[k] + t * (alphas[k + 1] - alphas[k]);
}

void ProcessConfig::validate() const {
    if (cube_cap < 2 || (cube_cap & (cube_cap - 1)) != 0) {
        throw invalid_parameter_error("cube cap must be a power of two, at least 2");
    }
    if (max_plies < 10) {
        throw invalid_parameter_error("max_plies must be at least 10");
    }
    if (!(w > 0.0) || !(l > 0.0)) {
        throw invalid_parameter_error("per-game W and L must be positive");
    }
    for (double a : profile.alphas) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw invalid_parameter_error("volatility profile entries must be nonnegative");
        }
    }
}

Strategy jump_model_strategy(std::string name, const WinLossParams& wl,
                             const VolatilityPair& vols) {
    const DecisionPoints pts = decision_points_linear(wl, vols);
    Strategy s;
    s.name = std::move(name);
    s.should_double = [pts](double p_view, bool cube_centered) {
        if (cube_centered) return p_view >= pts.id_o && p_view < pts.tgc_o;
        return p_view >= pts.rd_o && p_view < pts.tg_o;
    };
    s.should_take = [pts](double p_view) { return p_view >= pts.tp; };
    return s;
}

Strategy never_double_strategy(std::string name) {
    Strategy s;
    s.name = std::move(name);
    s.should_double = [](double, bool) { return false; };
    s.should_take = [](double) { return true; };
    return s;
}

GameResult play_game(const ProcessConfig& cfg, const Strategy& a, const Strategy& b,
                     std::uint64_t seed, bool a_moves_first, std::uint64_t game_id) {
    cfg.validate();
    std::mt19937_64 rng(seed);

    GameResult out;
    Trajectory& traj = out.trajectory;
    traj.game_id = game_id;
    traj.p.reserve(64);

    double p = 0.5; // side A's win probability
    traj.p.push_back(p);

    std::int64_t cube = 1;
    int cube_owner = -1; // -1 centered, 0 = A, 1 = B
    const double base_alpha = cfg.per_ply.jump_volatility();

    int actor = a_moves_first ? 0 : 1;
    for (int ply = 0; ply < cfg.max_plies; ++ply, actor ^= 1) {
        const Strategy& actor_strategy = actor == 0 ? a : b;
        const Strategy& other_strategy = actor == 0 ? b : a;
        const double view = actor == 0 ? p : 1.0 - p;

        const bool has_cube = cube_owner == -1 || cube_owner == actor;
        if (has_cube && cube < cfg.cube_cap &&
            actor_strategy.should_double(view, cube_owner == -1)) {
            if (!other_strategy.should_take(1.0 - view)) {
                out.points_a = (actor == 0 ? 1.0 : -1.0) * static_cast<double>(cube);
                traj.terminal = TerminalKind::CubePass;
                traj.points_a = out.points_a;
                return out;
            }
            cube *= 2;
            cube_owner = actor ^ 1;
        }

        double jump = draw_jump(cfg.per_ply, rng);
        if (!cfg.profile.empty() && base_alpha > 0.0) {
            jump *= cfg.profile.at(p) / base_alpha;
        }
        p = std::clamp(p + jump, 0.0, 1.0);
        traj.p.push_back(p);

        if (p == 0.0 || p == 1.0) {
            out.points_a = p == 1.0 ? cfg.w * static_cast<double>(cube)
                                    : -cfg.l * static_cast<double>(cube);
            traj.terminal = TerminalKind::Absorbed;
            traj.points_a = out.points_a;
            return out;
        }
    }

    // Truncated: settle at the cubeless expectation.
    out.points_a = (p * cfg.w - (1.0 - p) * cfg.l) * static_cast<double>(cube);
    traj.terminal = TerminalKind::Truncated;
    traj.points_a = out.points_a;
    return out;
}

DuelResult duel(const ProcessConfig& cfg, const Strategy& a, const Strategy& b,
                std::uint64_t n_games, std::uint64_t seed, std::vector<Trajectory>* trajectories) {
    if (n_games < 1) {
        throw invalid_parameter_error("duel needs at least one game");
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t truncated = 0;
    for (std::uint64_t g = 0; g < n_games; ++g) {
        GameResult r = play_game(cfg, a, b, seed + g, g % 2 == 0, g);
        sum += r.points_a;
        sum_sq += r.points_a * r.points_a;
        if (r.trajectory.terminal == TerminalKind::Truncated) ++truncated;
        if (trajectories != nullptr) trajectories->push_back(std::move(r.trajectory));
    }

    DuelResult out;
    out.games = n_games;
    out.seed = seed;
    out.truncated_games = truncated;
    const double n = static_cast<double>(n_games);
    out.mean_ppg = sum / n;
    if (n_games > 1) {
        const double var = std::max(0.0, (sum_sq - n * out.mean_ppg * out.mean_ppg) / (n - 1.0));
        out.stderr_ppg = std::sqrt(var / n);
        out.stderr_defined = true;
    }
    return out;
}

LocalVolEstimate estimate_local_volatility(
    std::span<const std::pair<double, double>> weighted_outcomes) {
    if (weighted_outcomes.empty()) {
        throw empty_filter_error("local volatility estimator got no outcomes", 0, 0);
    }
    double wsum = 0.0;
    double mean = 0.0;
    for (const auto& [w, p] : weighted_outcomes) {
        wsum += w;
        mean += w * p;
    }
    if (std::fabs(wsum - 1.0) > 1e-9) {
        throw invalid_parameter_error("outcome weights must sum to 1");
    }
    double var = 0.0;
    for (const auto& [w, p] : weighted_outcomes) {
        var += w * (p - mean) * (p - mean);
    }
    return {std::sqrt(std::max(var, 0.0)), mean};
}

double roll_pair_weight(bool first_is_double, bool second_is_double) {
    if (first_is_double && second_is_double) return 1.0 / 1296.0;
    if (!first_is_double && !second_is_double) return 1.0 / 324.0;
    return 1.0 / 648.0;
}

RemoteVolEstimate estimate_remote_volatility(std::span<const Trajectory> trajectories,
                                             const WindowPair& windows) {
    if (trajectories.empty()) {
        throw empty_filter_error("remote volatility estimator got no trajectories", 0, 0);
    }
    auto in_low = [&](double p) { return p >= windows.low_lo && p <= windows.low_hi; };
    auto in_high = [&](double p) { return p >= windows.high_lo && p <= windows.high_hi; };

    double abs_sum = 0.0;
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t samples = 0;
    std::size_t qualified = 0;

    for (const Trajectory& traj : trajectories) {
        bool seen_low = false;
        bool seen_high = false;
        bool passes = false;
        for (double p : traj.p) {
            const bool lo = in_low(p);
            const bool hi = in_high(p);
            if ((lo && seen_high) || (hi && seen_low)) {
                passes = true;
                break;
            }
            seen_low = seen_low || lo;
            seen_high = seen_high || hi;
        }
        if (!passes) continue;
        ++qualified;

        const std::size_t last = traj.p.size() - 1;
        for (std::size_t t = 0; t <= last; ++t) {
            const double p = traj.p[t];
            if (!in_low(p) && !in_high(p)) continue;
            std::size_t t2 = t + 2;
            if (t2 > last) {
                // Absorbing states persist; anything else just ends the record.
                if (traj.terminal != TerminalKind::Absorbed) continue;
                t2 = last;
            }
            const double dp = traj.p[t2] - p;
            abs_sum += std::fabs(dp);
            sum += dp;
            sum_sq += dp * dp;
            ++samples;
        }
    }

    if (samples == 0) {
        throw empty_filter_error("no two-ply samples survived the window filter",
                                 trajectories.size(), qualified);
    }

    RemoteVolEstimate out;
    out.samples = samples;
    out.trajectories_seen = trajectories.size();
    out.trajectories_qualified = qualified;
    const double n = static_cast<double>(samples);
    out.mean_abs_jump = abs_sum / n;
    const double mean = sum / n;
    out.std_jump = std::sqrt(std::max(0.0, sum_sq / n - mean * mean));
    return out;
}

void write_trajectories_csv(std::ostream& out, std::span<const Trajectory> trajectories) {
    out << "game_id,ply,p_win\n";
    char buf[64];
    for (const Trajectory& traj : trajectories) {
        for (std::size_t t = 0; t < traj.p.size(); ++t) {
            std::snprintf(buf, sizeof(buf), "%llu,%zu,%.12g\n",
                          static_cast<unsigned long long>(traj.game_id), t, traj.p[t]);
            out << buf;
        }
    }
}

std::vector<Trajectory> read_trajectories_csv(std::istream& in) {
    std::vector<Trajectory> out;
    std::string line;
    if (!std::getline(in, line)) {
        throw invalid_parameter_error("trajectory CSV is empty");
    }
    if (line.rfind("game_id,ply,p_win", 0) != 0) {
        throw invalid_parameter_error("trajectory CSV must start with header game_id,ply,p_win");
    }
    bool have_current = false;
    std::uint64_t current_id = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id_s, ply_s, p_s;
        if (!std::getline(row, id_s, ',') || !std::getline(row, ply_s, ',') ||
            !std::getline(row, p_s, ',')) {
            throw invalid_parameter_error("malformed trajectory CSV row: " + line);
        }
        std::uint64_t id = 0;
        double p = 0.0;
        try {
            id = std::stoull(id_s);
            p = std::stod(p_s);
        } catch (const std::exception&) {
            throw invalid_parameter_error("malformed trajectory CSV row: " + line);
        }
        if (!(p >= 0.0 && p <= 1.0)) {
            throw invalid_parameter_error("trajectory probability out of [0,1]: " + line);
        }
        if (!have_current || id != current_id) {
            out.emplace_back();
            out.back().game_id = id;
            current_id = id;
            have_current = true;
        }
        out.back().p.push_back(p);
    }
    for (Trajectory& traj : out) {
        if (!traj.p.empty() && (traj.p.back() == 0.0 || traj.p.back() == 1.0)) {
            traj.terminal = TerminalKind::Absorbed;
        } else {
            traj.terminal = TerminalKind::Truncated;
        }
    }
    return out;
}

} // namespace jumpcube
