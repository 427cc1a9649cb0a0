#pragma once

#include "jumpcube/params.hpp"

#include <span>
#include <vector>

namespace jumpcube {

/// Janowski cube-life indexes implied by a constant jump volatility:
/// x1 governs the take point, x2 the cash point. Both are 1 at alpha = 0
/// (the live-cube limit) and fall off linearly in alpha; they coincide when
/// W = L.
struct ImpliedIndexes {
    double x1 = 1.0;
    double x2 = 1.0;
};

ImpliedIndexes implied_indexes(const WinLossParams& wl, double alpha);

/// Janowski take/cash points for given cube-life indexes; back-substituting
/// the implied indexes reproduces the jump-model take and cash points.
double janowski_take_point(const WinLossParams& wl, double x1);
double janowski_cash_point(const WinLossParams& wl, double x2);

struct ImpliedIndexTable {
    double alpha = 0.0;
    std::vector<double> w_values;
    std::vector<double> l_values;
    std::vector<std::vector<ImpliedIndexes>> cells; // cells[l_index][w_index]
};

ImpliedIndexTable implied_index_table(std::span<const double> w_values,
                                      std::span<const double> l_values, double alpha);

} // namespace jumpcube
