// jumpcube: cubeful backgammon equities and cube decision points under a
// jump-process model of game evolution.

#include "jumpcube/advisor.hpp"
#include "jumpcube/exact_solver.hpp"
#include "jumpcube/janowski.hpp"
#include "jumpcube/linear_approx.hpp"
#include "jumpcube/nonlinear_approx.hpp"
#include "jumpcube/sim.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace jumpcube;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

enum class Format { Text, Json, Csv };

std::string fmt_g(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Round half-up to two decimals. The 1e-9 nudge keeps exact decimal ties
// (e.g. 0.775 stored as 0.7749999...) rounding upward.
std::string fmt_2dec(double x) {
    const double r = std::floor(x * 100.0 + 0.5 + 1e-9) / 100.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", r);
    return buf;
}

struct CommonModelArgs {
    double w = 1.0;
    double l = 1.0;
    double alpha = 0.0;
    double alpha_local = -1.0;
    double alpha_remote = -1.0;
    bool scale_statistical = false;
    std::string method = "linear";
    std::string dist = "double-exponential";
    int grid_n = 500;

    void add_to(CLI::App* cmd, bool with_method = true) {
        cmd->add_option("--w", w, "Expected points won on a win (W)")->capture_default_str();
        cmd->add_option("--l", l, "Expected points lost on a loss (L)")->capture_default_str();
        cmd->add_option("--alpha", alpha, "Jump volatility; sets both local and remote")
            ->capture_default_str();
        cmd->add_option("--alpha-local", alpha_local,
                        "Local jump volatility (overrides --alpha)");
        cmd->add_option("--alpha-remote", alpha_remote,
                        "Remote jump volatility (overrides --alpha)");
        cmd->add_flag("--scale-statistical", scale_statistical,
                      "Scale the supplied volatilities by 11.3/9.1 before use "
                      "(for statistically estimated values fed to the linear model)");
        if (with_method) {
            cmd->add_option("--method", method, "linear, nonlinear, or exact")
                ->check(CLI::IsMember({"linear", "nonlinear", "exact"}))
                ->capture_default_str();
            cmd->add_option("--dist", dist, "Jump law for nonlinear/exact methods")
                ->check(CLI::IsMember({"double-exponential", "gaussian"}))
                ->capture_default_str();
            cmd->add_option("--grid-n", grid_n, "Grid buckets for the exact method")
                ->capture_default_str();
        }
    }

    VolatilityPair vols() const {
        double local = alpha_local >= 0.0 ? alpha_local : alpha;
        double remote = alpha_remote >= 0.0 ? alpha_remote : alpha;
        if (scale_statistical) {
            local = scale_statistical_volatility(local);
            remote = scale_statistical_volatility(remote);
        }
        return VolatilityPair(local, remote);
    }

    WinLossParams win_loss() const { return WinLossParams(w, l); }

    JumpKind kind() const {
        return dist == "gaussian" ? JumpKind::Gaussian : JumpKind::DoubleExponential;
    }

    Method method_enum() const {
        if (method == "linear") return Method::Linear;
        if (method == "nonlinear") return Method::Nonlinear;
        return Method::Exact;
    }
};

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Text;
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

json points_to_json(const DecisionPoints& pts) {
    return json{{"tg_u", pts.tg_u}, {"tp", pts.tp},       {"rd_u", pts.rd_u},
                {"rd_o", pts.rd_o}, {"cp", pts.cp},       {"tg_o", pts.tg_o},
                {"tgc_u", pts.tgc_u}, {"id_u", pts.id_u}, {"id_o", pts.id_o},
                {"tgc_o", pts.tgc_o}};
}

const std::vector<std::pair<const char*, double DecisionPoints::*>> kPointFields = {
    {"tg_u", &DecisionPoints::tg_u},  {"tp", &DecisionPoints::tp},
    {"rd_u", &DecisionPoints::rd_u},  {"rd_o", &DecisionPoints::rd_o},
    {"cp", &DecisionPoints::cp},      {"tg_o", &DecisionPoints::tg_o},
    {"tgc_u", &DecisionPoints::tgc_u}, {"id_u", &DecisionPoints::id_u},
    {"id_o", &DecisionPoints::id_o},  {"tgc_o", &DecisionPoints::tgc_o}};

// ---------------------------------------------------------------- points --

int run_points(const CommonModelArgs& args, const std::string& format_s) {
    const Format format = parse_format(format_s);
    const WinLossParams wl = args.win_loss();
    const VolatilityPair vols = args.vols();

    DecisionPoints pts;
    int iterations_ou = 0, iterations_c = 0;
    switch (args.method_enum()) {
    case Method::Linear: pts = decision_points_linear(wl, vols); break;
    case Method::Nonlinear: pts = decision_points_nonlinear(wl, vols, args.kind()); break;
    case Method::Exact: {
        if (vols.alpha_local != vols.alpha_remote) {
            throw invalid_parameter_error(
                "the exact method uses one constant volatility; pass --alpha");
        }
        const JumpDistribution d =
            JumpDistribution::from_volatility(args.kind(), std::max(vols.alpha_remote, 1e-9));
        const EquitySolution sol = solve_exact(wl, d, args.grid_n);
        pts = sol.points;
        iterations_ou = sol.iterations_ou;
        iterations_c = sol.iterations_c;
        break;
    }
    }

    if (format == Format::Json) {
        json out{{"schema", "jumpcube.points.v1"},
                 {"method", args.method},
                 {"w", wl.w()},
                 {"l", wl.l()},
                 {"alpha_local", vols.alpha_local},
                 {"alpha_remote", vols.alpha_remote},
                 {"points", points_to_json(pts)},
                 {"live", json{{"tp", live_take_point(wl)}, {"cp", live_cash_point(wl)}}},
                 {"clamped", pts.clamped}};
        if (args.method_enum() == Method::Exact) {
            out["iterations"] = json{{"owned_unavailable", iterations_ou}, {"centered", iterations_c}};
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "point,value\n";
        for (const auto& [name, field] : kPointFields) {
            std::cout << name << "," << fmt_g(pts.*field) << "\n";
        }
    } else {
        std::printf("cube decision points (method: %s, W=%g, L=%g, alpha_l=%g, alpha_r=%g)\n",
                    args.method.c_str(), wl.w(), wl.l(), vols.alpha_local, vols.alpha_remote);
        std::printf("  %-6s %10.6f   opponent too good to redouble below\n", "TG_U", pts.tg_u);
        std::printf("  %-6s %10.6f   take point (take above, pass below)\n", "TP", pts.tp);
        std::printf("  %-6s %10.6f   opponent redoubles above\n", "RD_U", pts.rd_u);
        std::printf("  %-6s %10.6f   player redoubles above\n", "RD_O", pts.rd_o);
        std::printf("  %-6s %10.6f   cash point (opponent passes above)\n", "CP", pts.cp);
        std::printf("  %-6s %10.6f   player too good to double above\n", "TG_O", pts.tg_o);
        std::printf("  %-6s %10.6f   centered: opponent too good below\n", "TGC_U", pts.tgc_u);
        std::printf("  %-6s %10.6f   centered: opponent initial double below\n", "ID_U", pts.id_u);
        std::printf("  %-6s %10.6f   centered: player initial double above\n", "ID_O", pts.id_o);
        std::printf("  %-6s %10.6f   centered: player too good above\n", "TGC_O", pts.tgc_o);
        std::printf("  live-cube reference: TP=%.6f CP=%.6f\n", live_take_point(wl),
                    live_cash_point(wl));
        if (args.method_enum() == Method::Exact) {
            std::printf("  solver iterations: %d (owned/unavailable), %d (centered)\n",
                        iterations_ou, iterations_c);
        }
        if (pts.clamped) std::printf("  note: at least one point was clamped to a boundary\n");
    }
    return kExitOk;
}

// ----------------------------------------------------------------- curve --

int run_curve(const CommonModelArgs& args, int n_points, const std::string& format_s) {
    const Format format = parse_format(format_s);
    if (n_points < 2) {
        throw invalid_parameter_error("curve needs at least two sample points");
    }
    const WinLossParams wl = args.win_loss();
    const VolatilityPair vols = args.vols();

    std::vector<double> ps(n_points);
    for (int i = 0; i < n_points; ++i) {
        ps[i] = static_cast<double>(i) / (n_points - 1);
    }

    std::vector<double> e_c(n_points), e_o(n_points), e_u(n_points);
    switch (args.method_enum()) {
    case Method::Linear: {
        const auto owned = owned_equity_curve(wl, vols.alpha_local, vols.alpha_remote);
        const auto unav = unavailable_equity_curve(wl, vols.alpha_remote);
        const auto cent = centered_equity_curve(wl, vols.alpha_local, vols.alpha_remote);
        for (int i = 0; i < n_points; ++i) {
            e_c[i] = cent.value(ps[i]);
            e_o[i] = owned.value(ps[i]);
            e_u[i] = unav.value(ps[i]);
        }
        break;
    }
    case Method::Nonlinear: {
        const NonlinearModel m = NonlinearModel::build(wl, vols, args.kind());
        for (int i = 0; i < n_points; ++i) {
            e_c[i] = m.centered_current.eval(ps[i]);
            e_o[i] = m.owned_current.eval(ps[i]);
            e_u[i] = m.unavailable_current.eval(ps[i]);
        }
        break;
    }
    case Method::Exact: {
        if (vols.alpha_local != vols.alpha_remote) {
            throw invalid_parameter_error(
                "the exact method uses one constant volatility; pass --alpha");
        }
        const JumpDistribution d =
            JumpDistribution::from_volatility(args.kind(), std::max(vols.alpha_remote, 1e-9));
        const EquitySolution sol = solve_exact(wl, d, args.grid_n);
        for (int i = 0; i < n_points; ++i) {
            e_c[i] = sol.interpolate(sol.e_c, ps[i]);
            e_o[i] = sol.interpolate(sol.e_o, ps[i]);
            e_u[i] = sol.interpolate(sol.e_u, ps[i]);
        }
        break;
    }
    }
    // endpoints are known exactly in every method
    e_c.front() = e_o.front() = e_u.front() = -wl.l();
    e_c.back() = e_o.back() = e_u.back() = wl.w();

    if (format == Format::Json) {
        json out{{"schema", "jumpcube.curve.v1"},
                 {"method", args.method},
                 {"w", wl.w()},
                 {"l", wl.l()},
                 {"alpha_local", vols.alpha_local},
                 {"alpha_remote", vols.alpha_remote},
                 {"p", ps},
                 {"e_centered", e_c},
                 {"e_owned", e_o},
                 {"e_unavailable", e_u}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p,e_centered,e_owned,e_unavailable\n";
        for (int i = 0; i < n_points; ++i) {
            std::cout << fmt_g(ps[i]) << "," << fmt_g(e_c[i]) << "," << fmt_g(e_o[i]) << ","
                      << fmt_g(e_u[i]) << "\n";
        }
    }
    return kExitOk;
}

// ------------------------------------------------------------- implied-x --

int run_implied_x(double alpha, std::vector<double> w_list, std::vector<double> l_list,
                  const std::string& format_s) {
    const Format format = parse_format(format_s);
    if (w_list.empty()) w_list = {1.0, 1.25, 1.5, 1.75, 2.0};
    if (l_list.empty()) l_list = w_list;

    const ImpliedIndexTable table = implied_index_table(w_list, l_list, alpha);

    if (format == Format::Json) {
        json cells = json::array();
        for (std::size_t i = 0; i < table.l_values.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < table.w_values.size(); ++j) {
                row.push_back(json{{"x1", table.cells[i][j].x1}, {"x2", table.cells[i][j].x2}});
            }
            cells.push_back(row);
        }
        json out{{"schema", "jumpcube.implied_x.v1"},
                 {"alpha", alpha},
                 {"w_values", table.w_values},
                 {"l_values", table.l_values},
                 {"cells", cells}};
        std::cout << out.dump(2) << "\n";
    } else if (format == Format::Csv) {
        std::cout << "w,l,x1,x2\n";
        for (std::size_t i = 0; i < table.l_values.size(); ++i) {
            for (std::size_t j = 0; j < table.w_values.size(); ++j) {
                std::cout << fmt_g(table.w_values[j]) << "," << fmt_g(table.l_values[i]) << ","
                          << fmt_g(table.cells[i][j].x1) << "," << fmt_g(table.cells[i][j].x2)
                          << "\n";
            }
        }
    } else {
        std::printf("implied cube life indexes x1/x2 at alpha=%g (rows: L, columns: W)\n", alpha);
        std::printf("%8s", "L \\ W");
        for (double w : table.w_values) std::printf(" %10s", fmt_2dec(w).c_str());
        std::printf("\n");
        for (std::size_t i = 0; i < table.l_values.size(); ++i) {
            std::printf("%8s", fmt_2dec(table.l_values[i]).c_str());
            for (std::size_t j = 0; j < table.w_values.size(); ++j) {
                const std::string pair =
                    fmt_2dec(table.cells[i][j].x1) + "/" + fmt_2dec(table.cells[i][j].x2);
                std::printf(" %10s", pair.c_str());
            }
            std::printf("\n");
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- advise --

const char* doubler_name(DoublerAction a) {
    switch (a) {
    case DoublerAction::NoDouble: return "no-double";
    case DoublerAction::Double: return "double";
    case DoublerAction::TooGoodToDouble: return "too-good";
    }
    return "?";
}

const char* taker_name(TakerAction a) {
    switch (a) {
    case TakerAction::Take: return "take";
    case TakerAction::Pass: return "pass";
    case TakerAction::NotApplicable: return "n/a";
    }
    return "?";
}

int run_advise(const CommonModelArgs& args, const GammonProbs& g, const std::string& cube_s,
               std::int64_t cube_value, const std::string& format_s) {
    const Format format = parse_format(format_s);
    CubeOwner owner = CubeOwner::Centered;
    if (cube_s == "player") owner = CubeOwner::PlayerOwns;
    else if (cube_s == "opponent") owner = CubeOwner::OpponentOwns;
    const CubeState cube(owner, cube_value);

    AdvisorOptions options;
    options.kind = args.kind();
    options.grid_n = args.grid_n;
    const CubeAdvice advice = recommend(g, cube, args.vols(), args.method_enum(), options);

    if (format == Format::Json) {
        json out{{"schema", "jumpcube.advise.v1"},
                 {"method", args.method},
                 {"p_win", g.p_win},
                 {"cube", cube_s},
                 {"cube_value", cube_value},
                 {"doubler_action", doubler_name(advice.doubler_action)},
                 {"taker_action", taker_name(advice.taker_action)},
                 {"equities",
                  json{{"no_double", advice.equity_no_double},
                       {"double_take", advice.equity_double_take},
                       {"double_pass", advice.equity_double_pass}}},
                 {"points_used", points_to_json(advice.points_used)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("cube advice (method: %s, p_win=%g, cube: %s x%lld)\n", args.method.c_str(),
                    g.p_win, cube_s.c_str(), static_cast<long long>(cube_value));
        if (owner == CubeOwner::OpponentOwns) {
            std::printf("  if doubled: %s\n", taker_name(advice.taker_action));
        } else {
            std::printf("  doubler: %s\n", doubler_name(advice.doubler_action));
            std::printf("  opponent reply to a double: %s\n", taker_name(advice.taker_action));
        }
        std::printf("  equity no-double:   %+.6f\n", advice.equity_no_double);
        std::printf("  equity double/take: %+.6f\n", advice.equity_double_take);
        std::printf("  equity double/pass: %+.6f\n", advice.equity_double_pass);
    }
    return kExitOk;
}

// -------------------------------------------------------------- simulate --

int run_simulate(double alpha_ply, double w, double l, std::int64_t cube_cap, int max_plies,
                 double alpha_a, double alpha_b, bool scale_statistical, std::uint64_t games,
                 std::uint64_t seed, const std::string& dist, const std::string& dump_file,
                 const std::string& format_s) {
    const Format format = parse_format(format_s);
    const JumpKind kind = dist == "gaussian" ? JumpKind::Gaussian : JumpKind::DoubleExponential;

    ProcessConfig cfg;
    cfg.per_ply = JumpDistribution::from_volatility(kind, alpha_ply);
    cfg.w = w;
    cfg.l = l;
    cfg.cube_cap = cube_cap;
    cfg.max_plies = max_plies;

    if (scale_statistical) {
        alpha_a = scale_statistical_volatility(alpha_a);
        alpha_b = scale_statistical_volatility(alpha_b);
    }
    const Strategy a =
        jump_model_strategy("A", WinLossParams(w, l), VolatilityPair::uniform(alpha_a));
    const Strategy b =
        jump_model_strategy("B", WinLossParams(l, w), VolatilityPair::uniform(alpha_b));

    std::vector<Trajectory> trajectories;
    std::vector<Trajectory>* sink = dump_file.empty() ? nullptr : &trajectories;
    const DuelResult result = duel(cfg, a, b, games, seed, sink);

    if (sink != nullptr) {
        std::ofstream out(dump_file);
        if (!out) {
            throw invalid_parameter_error("cannot open trajectory file for writing: " + dump_file);
        }
        write_trajectories_csv(out, trajectories);
    }

    if (format == Format::Json) {
        json out{{"schema", "jumpcube.duel.v1"},
                 {"games", result.games},
                 {"mean_ppg", result.mean_ppg},
                 {"seed", result.seed},
                 {"truncated_games", result.truncated_games}};
        if (result.stderr_defined) {
            out["stderr_ppg"] = result.stderr_ppg;
        } else {
            out["stderr_ppg"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("duel: %llu games, seed %llu\n", static_cast<unsigned long long>(result.games),
                    static_cast<unsigned long long>(result.seed));
        std::printf("  side A assumed alpha: %g, side B assumed alpha: %g\n", alpha_a, alpha_b);
        std::printf("  mean points per game (A): %+.6f\n", result.mean_ppg);
        if (result.stderr_defined) {
            std::printf("  standard error:           %.6f\n", result.stderr_ppg);
        } else {
            std::printf("  standard error:           undefined (one game)\n");
        }
        std::printf("  truncated games:          %llu\n",
                    static_cast<unsigned long long>(result.truncated_games));
    }
    return kExitOk;
}

// -------------------------------------------------------------- estimate --

int run_estimate(const std::string& file, std::vector<double> window_low,
                 std::vector<double> window_high, const std::string& format_s) {
    const Format format = parse_format(format_s);
    if (window_low.size() != 2 || window_high.size() != 2) {
        throw invalid_parameter_error("windows must be given as two probabilities: lo,hi");
    }
    WindowPair windows;
    windows.low_lo = window_low[0];
    windows.low_hi = window_low[1];
    windows.high_lo = window_high[0];
    windows.high_hi = window_high[1];

    std::ifstream in(file);
    if (!in) {
        throw invalid_parameter_error("cannot open trajectory file: " + file);
    }
    const std::vector<Trajectory> trajectories = read_trajectories_csv(in);
    const RemoteVolEstimate est = estimate_remote_volatility(trajectories, windows);

    if (format == Format::Json) {
        json out{{"schema", "jumpcube.estimate.v1"},
                 {"file", file},
                 {"window_low", window_low},
                 {"window_high", window_high},
                 {"mean_abs_jump", est.mean_abs_jump},
                 {"std_jump", est.std_jump},
                 {"samples", est.samples},
                 {"trajectories", est.trajectories_seen},
                 {"qualified", est.trajectories_qualified}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("remote volatility estimate from %s\n", file.c_str());
        std::printf("  trajectories:    %zu (%zu qualified)\n", est.trajectories_seen,
                    est.trajectories_qualified);
        std::printf("  two-ply samples: %zu\n", est.samples);
        std::printf("  mean |dP|:       %.6f\n", est.mean_abs_jump);
        std::printf("  std of dP:       %.6f\n", est.std_jump);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jumpcube: cubeful backgammon money-game equities under a jump model"};
    app.require_subcommand(1);

    // points
    CommonModelArgs points_args;
    std::string points_format = "text";
    CLI::App* points_cmd =
        app.add_subcommand("points", "All ten cube decision points for a game state");
    points_args.add_to(points_cmd);
    add_format_option(points_cmd, points_format);

    // curve
    CommonModelArgs curve_args;
    std::string curve_format = "csv";
    int curve_n_points = 101;
    CLI::App* curve_cmd =
        app.add_subcommand("curve", "Cubeful equity vs win probability for all cube states");
    curve_args.add_to(curve_cmd);
    curve_cmd->add_option("--n-points", curve_n_points, "Number of samples in [0,1]")
        ->capture_default_str();
    add_format_option(curve_cmd, curve_format);

    // implied-x
    double ix_alpha = 0.10;
    std::vector<double> ix_w, ix_l;
    std::string ix_format = "text";
    CLI::App* ix_cmd =
        app.add_subcommand("implied-x", "Implied Janowski cube life indexes x1/x2");
    ix_cmd->add_option("--alpha", ix_alpha, "Constant jump volatility")->capture_default_str();
    ix_cmd->add_option("--w-list", ix_w, "W grid (default 1,1.25,1.5,1.75,2)")->delimiter(',');
    ix_cmd->add_option("--l-list", ix_l, "L grid (defaults to the W grid)")->delimiter(',');
    add_format_option(ix_cmd, ix_format);

    // advise
    CommonModelArgs advise_args;
    GammonProbs advise_probs;
    std::string advise_cube = "centered";
    std::int64_t advise_cube_value = 1;
    std::string advise_format = "text";
    CLI::App* advise_cmd = app.add_subcommand("advise", "Cube recommendation for a position");
    advise_cmd->add_option("--p", advise_probs.p_win, "Cubeless win probability")->required();
    advise_cmd->add_option("--p-gammon-win", advise_probs.p_gammon_win,
                           "Cubeless gammon-or-better win probability");
    advise_cmd->add_option("--p-backgammon-win", advise_probs.p_backgammon_win,
                           "Cubeless backgammon win probability");
    advise_cmd->add_option("--p-gammon-loss", advise_probs.p_gammon_loss,
                           "Cubeless gammon-or-better loss probability");
    advise_cmd->add_option("--p-backgammon-loss", advise_probs.p_backgammon_loss,
                           "Cubeless backgammon loss probability");
    advise_cmd->add_option("--cube", advise_cube, "centered, player, or opponent")
        ->check(CLI::IsMember({"centered", "player", "opponent"}))
        ->capture_default_str();
    advise_cmd->add_option("--cube-value", advise_cube_value, "Current cube value")
        ->capture_default_str();
    advise_args.add_to(advise_cmd);
    add_format_option(advise_cmd, advise_format);

    // simulate
    double sim_alpha_ply = 0.05;
    double sim_w = 1.0, sim_l = 1.0;
    std::int64_t sim_cube_cap = 64;
    int sim_max_plies = 2000;
    double sim_alpha_a = 0.075, sim_alpha_b = 0.075;
    bool sim_scale = false;
    std::uint64_t sim_games = 10000, sim_seed = 1;
    std::string sim_dist = "double-exponential";
    std::string sim_dump, sim_format = "text";
    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "Synthetic jump-process money-game strategy duel");
    sim_cmd->add_option("--alpha-ply", sim_alpha_ply, "Per-ply jump volatility of the process")
        ->capture_default_str();
    sim_cmd->add_option("--w", sim_w, "Side A points on a win")->capture_default_str();
    sim_cmd->add_option("--l", sim_l, "Side A points on a loss")->capture_default_str();
    sim_cmd->add_option("--cube-cap", sim_cube_cap, "Maximum cube value")->capture_default_str();
    sim_cmd->add_option("--max-plies", sim_max_plies, "Truncation horizon")->capture_default_str();
    sim_cmd->add_option("--alpha-a", sim_alpha_a, "Side A's assumed round jump volatility")
        ->capture_default_str();
    sim_cmd->add_option("--alpha-b", sim_alpha_b, "Side B's assumed round jump volatility")
        ->capture_default_str();
    sim_cmd->add_flag("--scale-statistical", sim_scale,
                      "Scale both assumed volatilities by 11.3/9.1 before use");
    sim_cmd->add_option("--games", sim_games, "Number of games")->capture_default_str();
    sim_cmd->add_option("--seed", sim_seed, "Master seed; game g uses seed+g")
        ->capture_default_str();
    sim_cmd->add_option("--dist", sim_dist, "Per-ply jump law")
        ->check(CLI::IsMember({"double-exponential", "gaussian"}))
        ->capture_default_str();
    sim_cmd->add_option("--dump-trajectories", sim_dump, "Write all trajectories to a CSV file");
    add_format_option(sim_cmd, sim_format);

    // estimate
    std::string est_file, est_format = "text";
    std::vector<double> est_low = {0.20, 0.35}, est_high = {0.65, 0.80};
    CLI::App* est_cmd =
        app.add_subcommand("estimate", "Remote-volatility estimator over a trajectory CSV");
    est_cmd->add_option("--file", est_file, "Trajectory CSV (game_id,ply,p_win)")->required();
    est_cmd->add_option("--window-low", est_low, "Lower window as lo,hi")->delimiter(',');
    est_cmd->add_option("--window-high", est_high, "Upper window as lo,hi")->delimiter(',');
    add_format_option(est_cmd, est_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (points_cmd->parsed()) return run_points(points_args, points_format);
        if (curve_cmd->parsed()) return run_curve(curve_args, curve_n_points, curve_format);
        if (ix_cmd->parsed()) return run_implied_x(ix_alpha, ix_w, ix_l, ix_format);
        if (advise_cmd->parsed()) {
            return run_advise(advise_args, advise_probs, advise_cube, advise_cube_value,
                              advise_format);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(sim_alpha_ply, sim_w, sim_l, sim_cube_cap, sim_max_plies,
                                sim_alpha_a, sim_alpha_b, sim_scale, sim_games, sim_seed, sim_dist,
                                sim_dump, sim_format);
        }
        if (est_cmd->parsed()) return run_estimate(est_file, est_low, est_high, est_format);
    } catch (const invalid_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const degenerate_state_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
