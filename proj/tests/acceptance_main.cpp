// Acceptance suite: one line of output per criterion, nonzero exit on any
// failure. Everything here is pinned — tolerances, parameters, and the
// reference tables — so a regression anywhere in the stack shows up as a
// FAIL line rather than a silent drift.

#include "jumpcube/advisor.hpp"
#include "jumpcube/exact_solver.hpp"
#include "jumpcube/janowski.hpp"
#include "jumpcube/linear_approx.hpp"
#include "jumpcube/nonlinear_approx.hpp"
#include "jumpcube/sim.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace jumpcube;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void report(int id, const char* name, const Outcome& outcome) {
    std::printf("[%s] %2d. %-42s %s\n", outcome.pass ? "PASS" : "FAIL", id, name,
                outcome.detail.c_str());
    if (!outcome.pass) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// --------------------------------------------------------------------------
// 1. implied cube-life-index tables at alpha = 0.10 and the alpha sweep
// --------------------------------------------------------------------------

Outcome criterion_index_tables() {
    const double grid[] = {1.0, 1.25, 1.5, 1.75, 2.0};
    // reference pairs x1/x2, rows L, columns W
    const double ref_x1[5][5] = {{0.69, 0.75, 0.78, 0.79, 0.80},
                                 {0.66, 0.73, 0.77, 0.78, 0.79},
                                 {0.64, 0.72, 0.76, 0.78, 0.79},
                                 {0.62, 0.70, 0.74, 0.77, 0.78},
                                 {0.59, 0.69, 0.73, 0.76, 0.78}};
    const double ref_x2[5][5] = {{0.69, 0.66, 0.64, 0.62, 0.59},
                                 {0.75, 0.73, 0.72, 0.70, 0.69},
                                 {0.78, 0.77, 0.76, 0.74, 0.73},
                                 {0.79, 0.78, 0.78, 0.77, 0.76},
                                 {0.80, 0.79, 0.79, 0.78, 0.78}};
    const double tol = 0.005 + 1e-9;

    double max_dev = 0.0;
    const ImpliedIndexTable table = implied_index_table(grid, grid, 0.10);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            max_dev = std::max(max_dev, std::fabs(table.cells[i][j].x1 - ref_x1[i][j]));
            max_dev = std::max(max_dev, std::fabs(table.cells[i][j].x2 - ref_x2[i][j]));
        }
    }

    // symmetric sweep: rows alpha in {0,.05,.10,.15,.20}, columns W = L
    const double alphas[] = {0.0, 0.05, 0.10, 0.15, 0.20};
    const double ref_sweep[5][5] = {{1.00, 1.00, 1.00, 1.00, 1.00},
                                    {0.84, 0.87, 0.88, 0.88, 0.89},
                                    {0.69, 0.73, 0.76, 0.77, 0.78},
                                    {0.53, 0.60, 0.63, 0.65, 0.66},
                                    {0.38, 0.47, 0.51, 0.53, 0.55}};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const ImpliedIndexes x = implied_indexes(WinLossParams(grid[j], grid[j]), alphas[i]);
            max_dev = std::max(max_dev, std::fabs(x.x1 - ref_sweep[i][j]));
            max_dev = std::max(max_dev, std::fabs(x.x2 - ref_sweep[i][j]));
        }
    }
    return {max_dev <= tol, fmt("max table deviation %.4f (tol 0.005)", max_dev)};
}

// --------------------------------------------------------------------------
// 2. implied-index anchor: W = L = 1.27, alpha = 0.113 -> x = 0.70
// --------------------------------------------------------------------------

Outcome criterion_index_anchor() {
    const ImpliedIndexes x = implied_indexes(WinLossParams(1.27, 1.27), 0.113);
    const double dev = std::max(std::fabs(x.x1 - 0.70), std::fabs(x.x2 - 0.70));
    return {dev <= 0.005, fmt("x = %.5f (target 0.70 +- 0.005)", x.x1)};
}

// --------------------------------------------------------------------------
// 3. zero-volatility limits across all three methods
// --------------------------------------------------------------------------

Outcome criterion_zero_volatility() {
    const WinLossParams sym(1, 1);
    double worst = 0.0;

    const DecisionPoints lin = decision_points_linear(sym, VolatilityPair::uniform(0.0));
    worst = std::max({worst, std::fabs(lin.tp - 0.2), std::fabs(lin.cp - 0.8)});

    const DecisionPoints non = decision_points_nonlinear(sym, VolatilityPair::uniform(0.0));
    worst = std::max({worst, std::fabs(non.tp - 0.2), std::fabs(non.cp - 0.8)});

    const EquitySolution sol =
        solve_exact(sym, JumpDistribution(JumpKind::DoubleExponential, 1e-6), 500);
    worst = std::max({worst, std::fabs(sol.points.tp - 0.2), std::fabs(sol.points.cp - 0.8)});

    return {worst < 1e-3, fmt("max |tp-0.2|,|cp-0.8| over methods = %.2e (tol 1e-3)", worst)};
}

// --------------------------------------------------------------------------
// 4. jump volatility to standard deviation ratios
// --------------------------------------------------------------------------

Outcome criterion_volatility_ratios() {
    const JumpDistribution gauss(JumpKind::Gaussian, 0.1);
    const JumpDistribution dexp(JumpKind::DoubleExponential, 0.1);
    const double rg = gauss.jump_volatility() / gauss.std_deviation();
    const double rd = dexp.jump_volatility() / dexp.std_deviation();
    const bool pass = std::fabs(rg - 0.7979) <= 1e-4 && std::fabs(rd - 0.7071) <= 1e-4;
    return {pass, fmt("gaussian %.5f (0.7979), double-exp %.5f (0.7071)", rg, rd)};
}

// --------------------------------------------------------------------------
// 5. distribution insensitivity of the exact solution
// --------------------------------------------------------------------------

Outcome criterion_distribution_insensitivity() {
    const WinLossParams wl(1.2, 1.1);
    const int n = 400;
    const EquitySolution a =
        solve_exact(wl, JumpDistribution::from_volatility(JumpKind::DoubleExponential, 0.08), n);
    const EquitySolution b =
        solve_exact(wl, JumpDistribution::from_volatility(JumpKind::Gaussian, 0.08), n);
    double max_dc = 0.0;
    for (int k = 0; k <= n; ++k) {
        max_dc = std::max(max_dc, std::fabs(a.e_c[k] - b.e_c[k]));
    }
    return {max_dc < 0.02, fmt("max |dE_C| = %.5f (tol 0.02)", max_dc)};
}

// --------------------------------------------------------------------------
// 6. approximation ordering under stress
// --------------------------------------------------------------------------

Outcome criterion_approximation_ordering() {
    const WinLossParams wl(1.4, 1.0);
    const double alpha = 0.20;
    const VolatilityPair vols = VolatilityPair::uniform(alpha);
    const EquitySolution sol =
        solve_exact(wl, JumpDistribution::from_volatility(JumpKind::DoubleExponential, alpha), 500);
    const NonlinearModel non = NonlinearModel::build(wl, vols);
    const PiecewiseLinearEquity lin_o = owned_equity_curve(wl, alpha, alpha);
    const PiecewiseLinearEquity lin_u = unavailable_equity_curve(wl, alpha);
    const PiecewiseLinearEquity lin_c = centered_equity_curve(wl, alpha, alpha);

    double dl[3] = {0, 0, 0};
    double dn[3] = {0, 0, 0};
    for (int k = 0; k <= sol.grid.n(); ++k) {
        const double p = sol.grid.p[k];
        dl[0] = std::max(dl[0], std::fabs(lin_o.value(p) - sol.e_o[k]));
        dn[0] = std::max(dn[0], std::fabs(non.owned_current.eval(p) - sol.e_o[k]));
        dl[1] = std::max(dl[1], std::fabs(lin_u.value(p) - sol.e_u[k]));
        dn[1] = std::max(dn[1], std::fabs(non.unavailable_current.eval(p) - sol.e_u[k]));
        dl[2] = std::max(dl[2], std::fabs(lin_c.value(p) - sol.e_c[k]));
        dn[2] = std::max(dn[2], std::fabs(non.centered_current.eval(p) - sol.e_c[k]));
    }
    const bool pass = dn[0] < dl[0] && dn[1] < dl[1] && dn[2] < dl[2] && dn[0] < 0.05 &&
                      dn[1] < 0.05 && dn[2] < 0.05;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "owned %.4f<%.4f unavail %.4f<%.4f centered %.4f<%.4f (nonlinear<linear)",
                  dn[0], dl[0], dn[1], dl[1], dn[2], dl[2]);
    return {pass, buf};
}

// --------------------------------------------------------------------------
// 7. solver convergence and grid-refinement stability
// --------------------------------------------------------------------------

Outcome criterion_solver_convergence() {
    const WinLossParams wl(1.2, 1.1);
    const JumpDistribution d = JumpDistribution::from_volatility(JumpKind::DoubleExponential, 0.08);
    const EquitySolution coarse = solve_exact(wl, d, 400);
    const EquitySolution fine = solve_exact(wl, d, 800);

    double move = 0.0;
    const DecisionPoints& a = coarse.points;
    const DecisionPoints& b = fine.points;
    for (auto [x, y] :
         {std::pair{a.tg_u, b.tg_u}, {a.tp, b.tp}, {a.rd_u, b.rd_u}, {a.rd_o, b.rd_o},
          {a.cp, b.cp}, {a.tg_o, b.tg_o}, {a.tgc_u, b.tgc_u}, {a.id_u, b.id_u},
          {a.id_o, b.id_o}, {a.tgc_o, b.tgc_o}}) {
        move = std::max(move, std::fabs(x - y));
    }
    const int iters = std::max(coarse.iterations_ou, coarse.iterations_c);
    const bool pass = iters <= 10 && coarse.residual < 1e-8 && move < 1e-3;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "iterations %d (<=10), residual %.1e (<1e-8), N400->800 move %.1e (<1e-3)",
                  iters, coarse.residual, move);
    return {pass, buf};
}

// --------------------------------------------------------------------------
// 8. structural invariants over 200 random parameter draws
// --------------------------------------------------------------------------

Outcome criterion_structural_invariants() {
    std::mt19937_64 rng(20120408);
    std::uniform_real_distribution<double> wl_draw(1.0, 2.0);
    std::uniform_real_distribution<double> a_draw(0.02, 0.2);

    int violations = 0;
    std::string first_violation;
    auto fail = [&](const std::string& what) {
        if (violations == 0) first_violation = what;
        ++violations;
    };

    std::vector<std::tuple<double, double, double>> draws;
    for (int t = 0; t < 200; ++t) {
        double w = wl_draw(rng);
        double l = (t % 10 == 0) ? w : wl_draw(rng); // sprinkle exact symmetry
        draws.emplace_back(w, l, a_draw(rng));
    }

    for (const auto& [w, l, alpha] : draws) {
        const WinLossParams wl(w, l);
        const VolatilityPair vols = VolatilityPair::uniform(alpha);

        const DecisionPoints lin = decision_points_linear(wl, vols);
        if (!lin.ordered(1e-9)) fail(fmt("linear ordering w=%.3f l=%.3f a=%.3f", w, l, alpha));
        const DecisionPoints non = decision_points_nonlinear(wl, vols);
        if (!non.ordered(1e-6)) fail(fmt("nonlinear ordering w=%.3f l=%.3f a=%.3f", w, l, alpha));

        if (w == l) {
            if (std::fabs(lin.tp - (1.0 - lin.cp)) > 1e-9) fail("linear tp != 1-cp");
            if (std::fabs(non.tp - (1.0 - non.cp)) > 1e-6) fail("nonlinear tp != 1-cp");
        }

        const PiecewiseLinearEquity lo = owned_equity_curve(wl, alpha, alpha);
        const PiecewiseLinearEquity lu = unavailable_equity_curve(wl, alpha);
        const PiecewiseLinearEquity lc = centered_equity_curve(wl, alpha, alpha);
        const NonlinearModel nm = NonlinearModel::build(wl, vols);

        if (std::fabs(lo.value(0.0) + l) > 1e-9 || std::fabs(lo.value(1.0) - w) > 1e-9 ||
            std::fabs(lu.value(0.0) + l) > 1e-9 || std::fabs(lu.value(1.0) - w) > 1e-9 ||
            std::fabs(lc.value(0.0) + l) > 1e-9 || std::fabs(lc.value(1.0) - w) > 1e-9) {
            fail("linear endpoints");
        }
        if (std::fabs(nm.owned_current.eval(0.0) + l) > 1e-9 ||
            std::fabs(nm.owned_current.eval(1.0) - w) > 1e-9 ||
            std::fabs(nm.centered_current.eval(0.0) + l) > 1e-9 ||
            std::fabs(nm.centered_current.eval(1.0) - w) > 1e-9 ||
            std::fabs(nm.unavailable_current.eval(0.0) + l) > 1e-9 ||
            std::fabs(nm.unavailable_current.eval(1.0) - w) > 1e-9) {
            fail("nonlinear endpoints");
        }

        double prev_lo = -10, prev_lu = -10, prev_lc = -10;
        double prev_no = -10, prev_nu = -10, prev_nc = -10;
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            const double vlo = lo.value(p), vlu = lu.value(p), vlc = lc.value(p);
            const double vno = nm.owned_current.eval(p);
            const double vnu = nm.unavailable_current.eval(p);
            const double vnc = nm.centered_current.eval(p);
            if (vlu > vlc + 1e-9 || vlc > vlo + 1e-9) fail(fmt("linear ordering at p=%.2f", p));
            if (vnu > vnc + 1e-7 || vnc > vno + 1e-7) fail(fmt("nonlinear ordering at p=%.2f", p));
            if (vlo < prev_lo - 1e-9 || vlu < prev_lu - 1e-9 || vlc < prev_lc - 1e-9) {
                fail("linear monotonicity");
            }
            if (vno < prev_no - 1e-7 || vnu < prev_nu - 1e-7 || vnc < prev_nc - 1e-7) {
                fail("nonlinear monotonicity");
            }
            prev_lo = vlo; prev_lu = vlu; prev_lc = vlc;
            prev_no = vno; prev_nu = vnu; prev_nc = vnc;
        }
    }

    // the exact solver is spot-checked on a subset; each solve is a dense
    // linear system so 200 of them would dominate the suite's runtime
    for (int t = 0; t < 12; ++t) {
        const auto& [w, l, alpha] = draws[static_cast<std::size_t>(t) * 16];
        const WinLossParams wl(w, l);
        const int n = 250;
        const EquitySolution sol =
            solve_exact(wl, JumpDistribution::from_volatility(JumpKind::DoubleExponential, alpha), n);
        if (!sol.points.ordered(2.0 / n)) fail(fmt("exact ordering w=%.3f l=%.3f", w, l));
        if (sol.e_o[0] != -l || sol.e_o[n] != w) fail("exact endpoints");
        for (int k = 0; k <= n; ++k) {
            if (sol.e_u[k] > sol.e_c[k] + 1e-6 || sol.e_c[k] > sol.e_o[k] + 1e-6) {
                fail(fmt("exact state ordering w=%.3f l=%.3f", w, l));
                break;
            }
        }
        for (int k = 1; k <= n; ++k) {
            if (sol.e_o[k] < sol.e_o[k - 1] - 1e-6 || sol.e_u[k] < sol.e_u[k - 1] - 1e-6 ||
                sol.e_c[k] < sol.e_c[k - 1] - 1e-6) {
                fail("exact monotonicity");
                break;
            }
        }
        if (w == l && std::fabs(sol.points.tp - (1.0 - sol.points.cp)) > 2.0 / n) {
            fail("exact tp != 1-cp in symmetric game");
        }
    }

    if (violations == 0) {
        return {true, "200 draws (linear+nonlinear) and 12 exact solves clean"};
    }
    return {false, fmt("%g violations; first: ", violations) + first_violation};
}

// --------------------------------------------------------------------------
// 9. simulator statistics
// --------------------------------------------------------------------------

double two_ply_abs_oracle(const JumpDistribution& d) {
    const double lim = 40.0 * d.scale();
    const int ns = 2001, nx = 2001;
    const double hs = 2.0 * lim / (ns - 1);
    const double hx = 2.0 * lim / (nx - 1);
    double total = 0.0;
    for (int i = 0; i < ns; ++i) {
        const double s = -lim + i * hs;
        double conv = 0.0;
        for (int j = 0; j < nx; ++j) {
            const double x = -lim + j * hx;
            const double w = (j == 0 || j == nx - 1) ? 0.5 : 1.0;
            conv += w * d.pdf(x) * d.pdf(s - x);
        }
        const double ws = (i == 0 || i == ns - 1) ? 0.5 : 1.0;
        total += ws * std::fabs(s) * conv * hx;
    }
    return total * hs;
}

Outcome criterion_simulator_statistics() {
    ProcessConfig cfg;
    cfg.per_ply = JumpDistribution::from_volatility(JumpKind::DoubleExponential, 0.06);
    const WinLossParams wl(1, 1);

    // symmetric self-duel
    const Strategy self = jump_model_strategy("self", wl, VolatilityPair::uniform(0.09));
    const DuelResult sym = duel(cfg, self, self, 100000, 777);
    const bool sym_ok = std::fabs(sym.mean_ppg) <= 3.0 * sym.stderr_ppg;

    // estimator consistency against the numerical convolution
    ProcessConfig est_cfg;
    est_cfg.per_ply = JumpDistribution::from_volatility(JumpKind::DoubleExponential, 0.05);
    const Strategy cubeless = never_double_strategy();
    std::vector<Trajectory> trajs;
    duel(est_cfg, cubeless, cubeless, 8000, 31337, &trajs);
    const RemoteVolEstimate est = estimate_remote_volatility(trajs);
    const double oracle = two_ply_abs_oracle(est_cfg.per_ply);
    const double rel_err = std::fabs(est.mean_abs_jump - oracle) / oracle;
    const bool est_ok = est.samples >= 100000 && rel_err < 0.05;

    // score vs assumed volatility: rises to an interior optimum then falls
    const Strategy opponent = jump_model_strategy("opp", wl, VolatilityPair::uniform(0.30));
    const double sweep[] = {0.05, 0.11, 0.17, 0.20, 0.25};
    double score[5], err[5];
    for (int i = 0; i < 5; ++i) {
        const Strategy player = jump_model_strategy("p", wl, VolatilityPair::uniform(sweep[i]));
        const DuelResult r = duel(cfg, player, opponent, 150000, 4242);
        score[i] = r.mean_ppg;
        err[i] = r.stderr_ppg;
    }
    int best = 0;
    for (int i = 1; i < 5; ++i) {
        if (score[i] > score[best]) best = i;
    }
    const bool interior = best != 0 && best != 4;
    const bool separated =
        interior &&
        score[best] - score[0] > 3.0 * std::hypot(err[best], err[0]) &&
        score[best] - score[4] > 3.0 * std::hypot(err[best], err[4]);

    const bool pass = sym_ok && est_ok && separated;
    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "self-duel |m|/se=%.2f (<=3); estimator err %.2f%% (<5%%, %zu samples); "
                  "sweep peak interior at %.2f",
                  std::fabs(sym.mean_ppg) / sym.stderr_ppg, 100.0 * rel_err, est.samples,
                  sweep[best]);
    return {pass, buf};
}

// --------------------------------------------------------------------------
// 10. advisor worked examples
// --------------------------------------------------------------------------

Outcome criterion_advisor_examples() {
    const VolatilityPair vols = VolatilityPair::uniform(0.1);
    const GammonProbs strong{0.9, 0, 0, 0, 0};
    const GammonProbs weak{0.15, 0, 0, 0, 0};
    const GammonProbs even{0.5, 0, 0, 0, 0};

    const CubeAdvice a =
        recommend(strong, CubeState(CubeOwner::PlayerOwns, 1), vols, Method::Linear);
    const bool case1 =
        a.doubler_action == DoublerAction::Double && a.taker_action == TakerAction::Pass;

    const CubeAdvice b =
        recommend(weak, CubeState(CubeOwner::OpponentOwns, 2), vols, Method::Linear);
    const bool case2 = b.taker_action == TakerAction::Pass;

    const CubeAdvice c = recommend(even, CubeState(CubeOwner::Centered, 1), vols, Method::Linear);
    const bool case3 = c.doubler_action == DoublerAction::NoDouble;

    const bool pass = case1 && case2 && case3;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "double/pass@0.9:%s pass@0.15:%s no-double@0.5:%s",
                  case1 ? "ok" : "BAD", case2 ? "ok" : "BAD", case3 ? "ok" : "BAD");
    return {pass, buf};
}

Outcome guarded(const std::function<Outcome()>& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

} // namespace

int main() {
    std::printf("jumpcube acceptance suite\n");
    report(1, "implied cube-life-index tables", guarded(criterion_index_tables));
    report(2, "implied-index anchor (W=L=1.27)", guarded(criterion_index_anchor));
    report(3, "zero-volatility limits, all methods", guarded(criterion_zero_volatility));
    report(4, "volatility / standard deviation ratios", guarded(criterion_volatility_ratios));
    report(5, "exact-solver distribution insensitivity", guarded(criterion_distribution_insensitivity));
    report(6, "approximation ordering vs exact", guarded(criterion_approximation_ordering));
    report(7, "solver convergence and grid stability", guarded(criterion_solver_convergence));
    report(8, "structural invariants, 200 draws", guarded(criterion_structural_invariants));
    report(9, "simulator statistics", guarded(criterion_simulator_statistics));
    report(10, "advisor worked examples", guarded(criterion_advisor_examples));

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}
