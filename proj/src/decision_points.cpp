#include "jumpcube/decision_points.hpp"

#include <initializer_list>

namespace jumpcube {

bool DecisionPoints::ordered(double tol) const {
    auto in_unit = [tol](double p) { return p >= -tol && p <= 1.0 + tol; };
    for (double p : {tg_u, tp, rd_u, rd_o, cp, tg_o, tgc_u, id_u, id_o, tgc_o}) {
        if (!in_unit(p)) return false;
    }
    return tg_u <= tp + tol && tp <= rd_u + tol && rd_u <= rd_o + tol &&
           rd_o <= cp + tol && cp <= tg_o + tol &&
           tgc_u <= tp + tol && tp <= id_u + tol && id_u <= id_o + tol &&
           id_o <= rd_o + tol && cp <= tgc_o + tol;
}

DecisionPoints DecisionPoints::mirrored() const {
    DecisionPoints m;
    m.tg_u = 1.0 - tg_o;
    m.tp = 1.0 - cp;
    m.rd_u = 1.0 - rd_o;
    m.rd_o = 1.0 - rd_u;
    m.cp = 1.0 - tp;
    m.tg_o = 1.0 - tg_u;
    m.tgc_u = 1.0 - tgc_o;
    m.id_u = 1.0 - id_o;
    m.id_o = 1.0 - id_u;
    m.tgc_o = 1.0 - tgc_u;
    m.clamped = clamped;
    return m;
}

} // namespace jumpcube
