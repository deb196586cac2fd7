#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "isocrit/errors.hpp"

namespace isocrit {

namespace gk {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1,1].
// Abscissa, Gauss weight, Kronrod weight; node 0 is the midpoint, the rest
// enter symmetrically at +-x.
inline constexpr double nodes[8][3] = {
    {0.000000000000000000000000000000000, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714},
    {0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014},
    {0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238},
    {0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204},
    {0.207784955007898467600689403773245, 0.0,                                 0.204432940075298892414161999234649},
    {0.586087235467691130294144838258730, 0.0,                                 0.169004726639267902826583426598550},
    {0.864864423359769072789712788640926, 0.0,                                 0.104790010322250183839876322541518},
    {0.991455371120812639206854697526329, 0.0,                                 0.022935322010529224963732008058970},
};

} // namespace gk

// One Gauss-Kronrod panel; returns the K15 value and |K15 - G7| in *err.
template <class F>
double gk15_panel(F&& f, double a, double b, double* err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = gk::nodes[0][1] * f0;
    double k15 = gk::nodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk::nodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += gk::nodes[i][1] * fi;
        k15 += gk::nodes[i][2] * fi;
    }
    *err = std::abs(k15 - g7) * std::abs(half);
    return k15 * half;
}

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;       // absolute floor on the total error
    int max_panels = 4000;
    int initial_panels = 1;     // pre-split count (useful for oscillatory integrands)
};

// Globally adaptive Gauss-Kronrod integration on [a,b]. The panel with the
// largest error estimate is bisected until the summed error meets the
// tolerance. Throws QuadratureError (carrying the last two refinement values)
// if the panel cap is reached first.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
    if (a == b) return 0.0;

    struct Panel {
        double a, b, value, error;
    };
    std::vector<Panel> panels;
    panels.reserve(64);

    const int pre = std::max(1, opts.initial_panels);
    for (int i = 0; i < pre; ++i) {
        const double pa = a + (b - a) * i / pre;
        const double pb = a + (b - a) * (i + 1) / pre;
        double err = 0.0;
        const double val = gk15_panel(f, pa, pb, &err);
        panels.push_back({pa, pb, val, err});
    }

    double previous_total = 0.0;
    for (;;) {
        double total = 0.0, total_err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            total_err += panels[i].error;
            if (panels[i].error > worst_err) {
                worst_err = panels[i].error;
                worst = i;
            }
        }
        if (total_err <= std::max(opts.rel_tol * std::abs(total), opts.abs_tol)) return total;
        if (static_cast<int>(panels.size()) >= opts.max_panels) {
            throw QuadratureError("adaptive quadrature did not converge within the panel cap",
                                  total, previous_total);
        }
        previous_total = total;

        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        double err_l = 0.0, err_r = 0.0;
        const double val_l = gk15_panel(f, p.a, mid, &err_l);
        const double val_r = gk15_panel(f, mid, p.b, &err_r);
        panels[worst] = {p.a, mid, val_l, err_l};
        panels.push_back({mid, p.b, val_r, err_r});
    }
}

} // namespace isocrit
