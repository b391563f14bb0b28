#include "lueq/detail/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lueq::detail {

NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> x0, double scale, int max_iter, double ftol) {
    const int n = static_cast<int>(x0.size());
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fx(n + 1);
    for (int i = 0; i < n; ++i) {
        simplex[i + 1][i] += scale;
    }
    for (int i = 0; i <= n; ++i) {
        fx[i] = eval(simplex[i]);
    }

    std::vector<int> order(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fx[a] < fx[b]; });
        const int best = order[0];
        const int worst = order[n];
        const int second_worst = order[n - 1];

        if (fx[worst] - fx[best] < ftol) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (int d = 0; d < n; ++d) centroid[d] += simplex[i][d];
        }
        for (int d = 0; d < n; ++d) centroid[d] /= n;

        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (int d = 0; d < n; ++d) {
                x[d] = centroid[d] + t * (simplex[worst][d] - centroid[d]);
            }
            return x;
        };

        std::vector<double> reflected = blend(-1.0);
        const double f_ref = eval(reflected);
        if (f_ref < fx[best]) {
            std::vector<double> expanded = blend(-2.0);
            const double f_exp = eval(expanded);
            if (f_exp < f_ref) {
                simplex[worst] = std::move(expanded);
                fx[worst] = f_exp;
            } else {
                simplex[worst] = std::move(reflected);
                fx[worst] = f_ref;
            }
        } else if (f_ref < fx[second_worst]) {
            simplex[worst] = std::move(reflected);
            fx[worst] = f_ref;
        } else {
            const bool outside = f_ref < fx[worst];
            std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
            const double f_con = eval(contracted);
            if (f_con < std::min(f_ref, fx[worst])) {
                simplex[worst] = std::move(contracted);
                fx[worst] = f_con;
            } else {
                // shrink toward the best vertex
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (int d = 0; d < n; ++d) {
                        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
                    }
                    fx[i] = eval(simplex[i]);
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i) {
        if (fx[i] < fx[best]) best = i;
    }
    return {simplex[best], fx[best], evals};
}

NmResult nelder_mead_polished(const std::function<double(const std::vector<double>&)>& f,
                              std::vector<double> x0, double scale, int max_iter, double ftol,
                              int polish_rounds) {
    NmResult best = nelder_mead(f, std::move(x0), scale, max_iter, ftol);
    double round_scale = scale;
    for (int round = 0; round < polish_rounds; ++round) {
        round_scale *= 0.1;
        NmResult next = nelder_mead(f, best.x, round_scale, max_iter, ftol);
        next.evaluations += best.evaluations;
        if (next.value < best.value) {
            best = std::move(next);
        } else {
            best.evaluations = next.evaluations;
        }
    }
    return best;
}

double golden_section_min(const std::function<double(double)>& f, double a, double b, double xtol,
                          int max_iter) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 < f2) ? x1 : x2;
}

}  // namespace lueq::detail
