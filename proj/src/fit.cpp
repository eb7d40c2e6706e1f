// Copyright 2026 The spinmotion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinmotion/fit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "spinmotion/constants.hpp"
#include "spinmotion/fock.hpp"

namespace spinmotion {

namespace {

struct Objective {
    const CurveFn &model;
    const ScanResult &data;
    mutable int n_eval = 0;

    double operator()(std::span<const double> params) const
    {
        ++n_eval;
        const std::vector<double> curve = model(params);
        double chi2 = 0.0;
        for (size_t i = 0; i < data.p.size(); ++i) {
            const double s = data.sigma[i] > 0.0 ? data.sigma[i] : 1.0;
            const double r = (data.p[i] - curve[i]) / s;
            chi2 += r * r;
        }
        return chi2;
    }
};

// Deterministic start points: van der Corput sequences, one base per axis.
double van_der_corput(int index, int base)
{
    double x = 0.0, denom = 1.0;
    int n = index + 1;
    while (n > 0) {
        denom *= base;
        x += (n % base) / denom;
        n /= base;
    }
    return x;
}

constexpr int kBases[] = {2, 3, 5, 7, 11, 13, 17, 19};

struct SimplexOutcome {
    std::vector<double> best;
    double best_value = 0.0;
    bool converged = false;
};

// Nelder-Mead with points clamped to the bound box.
SimplexOutcome nelder_mead(const Objective &objective, std::span<const FitParam> box,
                           std::span<const double> start, double diameter_tol, int max_eval)
{
    const size_t k = box.size();
    auto clamp = [&](std::vector<double> &x) {
        for (size_t d = 0; d < k; ++d) {
            x[d] = std::clamp(x[d], box[d].lo, box[d].hi);
        }
    };

    std::vector<std::vector<double>> pts(k + 1, std::vector<double>(start.begin(), start.end()));
    for (size_t d = 0; d < k; ++d) {
        const double width = box[d].hi - box[d].lo;
        pts[d + 1][d] += 0.1 * width * (pts[d + 1][d] + 0.2 * width <= box[d].hi ? 1.0 : -1.0);
        clamp(pts[d + 1]);
    }
    std::vector<double> vals(k + 1);
    for (size_t i = 0; i <= k; ++i) {
        vals[i] = objective(pts[i]);
    }

    const int eval_start = objective.n_eval;
    auto diameter = [&]() {
        double dia = 0.0;
        for (size_t i = 0; i <= k; ++i) {
            for (size_t j = i + 1; j <= k; ++j) {
                double d2 = 0.0;
                for (size_t d = 0; d < k; ++d) {
                    const double w = box[d].hi - box[d].lo;
                    const double r = (pts[i][d] - pts[j][d]) / w;
                    d2 += r * r;
                }
                dia = std::max(dia, std::sqrt(d2));
            }
        }
        return dia;
    };

    while (objective.n_eval - eval_start < max_eval) {
        std::vector<size_t> order(k + 1);
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
        {
            std::vector<std::vector<double>> p2(k + 1);
            std::vector<double> v2(k + 1);
            for (size_t i = 0; i <= k; ++i) {
                p2[i] = pts[order[i]];
                v2[i] = vals[order[i]];
            }
            pts.swap(p2);
            vals.swap(v2);
        }
        if (diameter() < diameter_tol) {
            return SimplexOutcome{pts[0], vals[0], true};
        }

        std::vector<double> centroid(k, 0.0);
        for (size_t i = 0; i < k; ++i) {
            for (size_t d = 0; d < k; ++d) {
                centroid[d] += pts[i][d] / static_cast<double>(k);
            }
        }
        auto blend = [&](double coeff) {
            std::vector<double> x(k);
            for (size_t d = 0; d < k; ++d) {
                x[d] = centroid[d] + coeff * (centroid[d] - pts[k][d]);
            }
            clamp(x);
            return x;
        };

        std::vector<double> refl = blend(1.0);
        const double f_refl = objective(refl);
        if (f_refl < vals[0]) {
            std::vector<double> expa = blend(2.0);
            const double f_expa = objective(expa);
            if (f_expa < f_refl) {
                pts[k] = std::move(expa);
                vals[k] = f_expa;
            } else {
                pts[k] = std::move(refl);
                vals[k] = f_refl;
            }
        } else if (f_refl < vals[k - 1]) {
            pts[k] = std::move(refl);
            vals[k] = f_refl;
        } else {
            std::vector<double> contr = blend(f_refl < vals[k] ? 0.5 : -0.5);
            const double f_contr = objective(contr);
            if (f_contr < std::min(f_refl, vals[k])) {
                pts[k] = std::move(contr);
                vals[k] = f_contr;
            } else {
                // shrink toward the best point
                for (size_t i = 1; i <= k; ++i) {
                    for (size_t d = 0; d < k; ++d) {
                        pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
                    }
                    clamp(pts[i]);
                    vals[i] = objective(pts[i]);
                }
            }
        }
    }
    std::vector<size_t> order(k + 1);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    return SimplexOutcome{pts[order[0]], vals[order[0]], false};
}

} // namespace

FitResult fit_least_squares(const CurveFn &model, std::span<const FitParam> free_params,
                            const ScanResult &data, const FitOptions &opts)
{
    data.validate();
    if (free_params.empty()) {
        throw std::domain_error("at least one free parameter is required");
    }
    for (const auto &p : free_params) {
        if (!(p.lo < p.hi) || !std::isfinite(p.lo) || !std::isfinite(p.hi)) {
            throw std::domain_error("degenerate bounds for parameter " + p.name);
        }
    }
    if (data.p.size() < 2 * free_params.size()) {
        throw std::domain_error("need at least twice as many data points as free parameters");
    }

    Objective objective{model, data};
    SimplexOutcome best;
    bool have_best = false;
    for (int s = 0; s < opts.multistarts; ++s) {
        std::vector<double> start(free_params.size());
        for (size_t d = 0; d < free_params.size(); ++d) {
            const double f = van_der_corput(s, kBases[d % std::size(kBases)]);
            start[d] = free_params[d].lo + (0.1 + 0.8 * f) * (free_params[d].hi - free_params[d].lo);
        }
        SimplexOutcome out = nelder_mead(objective, free_params, start, opts.diameter_tol,
                                         opts.max_eval_per_start);
        if (!have_best || out.best_value < best.best_value) {
            best = std::move(out);
            have_best = true;
        }
    }

    FitResult result;
    for (size_t d = 0; d < free_params.size(); ++d) {
        result.params[free_params[d].name] = best.best[d];
    }
    result.residual = best.best_value;
    result.converged = best.converged;
    result.n_eval = objective.n_eval;
    return result;
}

CurveFn make_nbar_spectrum_model(const LineshapeModel &base, std::vector<double> grid,
                                 double nbar_max)
{
    base.validate();
    if (!(nbar_max > 0.0)) {
        throw std::domain_error("nbar_max must be positive");
    }

    struct Cache {
        LineshapeModel model;
        std::vector<double> grid;
        int cutoff = 0;
        std::vector<double> carrier;  // per grid point
        std::vector<double> sideband; // [point * cutoff + n]: blue(n) + red(n)
    };
    auto cache = std::make_shared<Cache>();
    cache->model = base;
    cache->grid = std::move(grid);
    cache->cutoff = ThermalEnsemble::dim_for_tail(nbar_max, 1e-10);
    const size_t npts = cache->grid.size();
    cache->carrier.resize(npts);
    cache->sideband.resize(npts * static_cast<size_t>(cache->cutoff));
    const double sb_rabi = base.eta_eff * base.rabi;
    for (size_t i = 0; i < npts; ++i) {
        const double delta = cache->grid[i] - base.carrier_freq;
        cache->carrier[i] = rabi_line(delta, base.rabi, base.pulse_time);
        for (int n = 0; n < cache->cutoff; ++n) {
            double v = rabi_line(delta - base.nu_z, sb_rabi * std::sqrt(n + 1.0), base.pulse_time);
            if (n > 0) {
                v += rabi_line(delta + base.nu_z, sb_rabi * std::sqrt(double(n)), base.pulse_time);
            }
            cache->sideband[i * static_cast<size_t>(cache->cutoff) + static_cast<size_t>(n)] = v;
        }
    }

    return [cache](std::span<const double> params) {
        const double nbar = params[0];
        const ThermalEnsemble ensemble(nbar, cache->cutoff);
        const size_t npts = cache->grid.size();
        std::vector<double> out(npts);
        for (size_t i = 0; i < npts; ++i) {
            const double *row = cache->sideband.data() + i * static_cast<size_t>(cache->cutoff);
            double acc = 0.0;
            for (int n = 0; n < cache->cutoff; ++n) {
                acc += ensemble.weight(n) * row[n];
            }
            out[i] = std::min(1.0, cache->carrier[i] + acc);
        }
        return out;
    };
}

std::vector<FitParam> two_ion_default_bounds(const ScanResult &data)
{
    data.validate();
    if (data.x.size() < 8) {
        throw std::domain_error("too few points to locate two resonances");
    }
    const auto [lo_it, hi_it] = std::minmax_element(data.x.begin(), data.x.end());
    const double window = (*hi_it - *lo_it) / 10.0;
    if (!(window > 0.0)) {
        throw std::domain_error("degenerate frequency axis");
    }

    size_t first = 0;
    for (size_t i = 1; i < data.p.size(); ++i) {
        if (data.p[i] > data.p[first]) {
            first = i;
        }
    }
    size_t second = data.p.size();
    for (size_t i = 0; i < data.p.size(); ++i) {
        if (std::abs(data.x[i] - data.x[first]) < window) {
            continue;
        }
        if (second == data.p.size() || data.p[i] > data.p[second]) {
            second = i;
        }
    }
    if (second == data.p.size()) {
        throw std::domain_error("could not locate a second resonance");
    }
    const double fa = std::min(data.x[first], data.x[second]);
    const double fb = std::max(data.x[first], data.x[second]);
    return {{"f1", fa - window, fa + window},
            {"f2", fb - window, fb + window},
            {"rabi", constants::two_pi * 1e3, constants::two_pi * 200e3}};
}

CurveFn make_two_ion_model(double pulse_time, std::vector<double> grid,
                           bool independent_excitation)
{
    if (!(pulse_time > 0.0)) {
        throw std::domain_error("pulse time must be positive");
    }
    return [pulse_time, grid = std::move(grid),
            independent_excitation](std::span<const double> params) {
        const double f1 = params[0], f2 = params[1], rabi = params[2];
        std::vector<double> out(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) {
            const double p1 = rabi_line(grid[i] - f1, rabi, pulse_time);
            const double p2 = rabi_line(grid[i] - f2, rabi, pulse_time);
            out[i] = independent_excitation ? 1.0 - (1.0 - p1) * (1.0 - p2)
                                            : std::min(1.0, p1 + p2);
        }
        return out;
    };
}

} // namespace spinmotion
