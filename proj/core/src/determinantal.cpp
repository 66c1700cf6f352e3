#include "enumpw/heatpoly.hpp"
#include "enumpw/pwmatrix.hpp"

namespace enumpw::heat {

DetRelationReport det_tildeQ_relation(int k, int h, const std::vector<long>& g_samples) {
    DetRelationReport rep{k, h, {}, true, true};
    std::optional<Rational> first_b, first_w;
    for (long g : g_samples) {
        DetRelationRow row{g, determinant(pwmatrix::build_Qtilde(g, k, h).m), B_det(k, h, Rational(g), Rational(3 * g - 2 - k)),
                           Rational(1), std::nullopt, std::nullopt};
        for (int i = 0; i <= h; ++i) row.prod_w *= W_eval(k, i, Rational(g), Rational(3 * g - k - i - 2));
        if (!row.det_b.is_zero()) row.ratio_b = row.det_qtilde / row.det_b;
        if (!row.prod_w.is_zero()) row.ratio_w = row.det_qtilde / row.prod_w;
        auto track = [](const std::optional<Rational>& r, std::optional<Rational>& first, bool& ok) {
            if (!r || r->is_zero()) ok = false;
            else if (!first) first = r;
            else if (*first != *r) ok = false;
        };
        track(row.ratio_b, first_b, rep.ratio_b_constant);
        track(row.ratio_w, first_w, rep.ratio_w_constant);
        rep.rows.push_back(std::move(row));
    }
    if (g_samples.empty()) rep.ratio_b_constant = rep.ratio_w_constant = false;
    return rep;
}

}  // namespace enumpw::heat
