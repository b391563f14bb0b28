#pragma once

#include <functional>
#include <vector>

namespace lueq::detail {

struct NmResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

// Standard Nelder-Mead downhill simplex (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5). Starts from x0 with an axis-aligned simplex of
// the given edge scale; stops when the simplex f-spread drops below ftol or
// after max_iter iterations. Deterministic.
NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                     std::vector<double> x0, double scale, int max_iter, double ftol);

// Runs nelder_mead, then re-polishes from the best point with progressively
// smaller simplices. Useful to push smooth objectives to near machine
// precision.
NmResult nelder_mead_polished(const std::function<double(const std::vector<double>&)>& f,
                              std::vector<double> x0, double scale, int max_iter, double ftol,
                              int polish_rounds);

// Golden-section minimization of a unimodal scalar function on [a, b];
// returns the argmin.
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double xtol = 1e-10, int max_iter = 200);

}  // namespace lueq::detail
