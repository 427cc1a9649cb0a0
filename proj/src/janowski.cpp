#include "jumpcube/janowski.hpp"

#include "jumpcube/errors.hpp"

namespace jumpcube {

ImpliedIndexes implied_indexes(const WinLossParams& wl, double alpha) {
    const double w = wl.w();
    const double l = wl.l();
    if (alpha < 0.0) {
        throw invalid_parameter_error("jump volatility must be nonnegative");
    }
    const double s = w + l + 0.5;
    ImpliedIndexes out;
    out.x1 = 1.0 - alpha * s * s / (2.0 * (l + 1.0) * (w - 0.5));
    out.x2 = 1.0 - alpha * s * s / (2.0 * (w + 1.0) * (l - 0.5));
    return out;
}

double janowski_take_point(const WinLossParams& wl, double x1) {
    return (wl.l() - 0.5) / (wl.w() + wl.l() + 0.5 * x1);
}

double janowski_cash_point(const WinLossParams& wl, double x2) {
    return 1.0 - (wl.w() - 0.5) / (wl.w() + wl.l() + 0.5 * x2);
}

ImpliedIndexTable implied_index_table(std::span<const double> w_values,
                                      std::span<const double> l_values, double alpha) {
    if (w_values.empty() || l_values.empty()) {
        throw invalid_parameter_error("implied index table needs nonempty W and L grids");
    }
    ImpliedIndexTable table;
    table.alpha = alpha;
    table.w_values.assign(w_values.begin(), w_values.end());
    table.l_values.assign(l_values.begin(), l_values.end());
    table.cells.reserve(l_values.size());
    for (double l : l_values) {
        std::vector<ImpliedIndexes> row;
        row.reserve(w_values.size());
        for (double w : w_values) {
            row.push_back(implied_indexes(WinLossParams(w, l), alpha));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

} // namespace jumpcube
