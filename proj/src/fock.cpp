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

#include "spinmotion/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinmotion/errors.hpp"

namespace spinmotion {

int leak_window(int dim) { return (dim + 9) / 10; }

namespace {

double tail_population(const std::vector<cplx> &amp, int dim, int window)
{
    double s = 0.0;
    for (int n = dim - window; n < dim; ++n) {
        s += std::norm(amp[static_cast<size_t>(n)]);
    }
    return s;
}

void check_dim(int dim)
{
    if (dim < 1) {
        throw std::domain_error("Fock truncation must be at least 1");
    }
}

int next_pow2(int n)
{
    int p = 1;
    while (p < n) {
        p *= 2;
    }
    return p;
}

// Poisson tail mass beyond level dim-1 for a coherent state.
double coherent_tail(double abs2_alpha, int dim)
{
    double term = std::exp(-abs2_alpha); // P(n=0)
    double cum = term;
    for (int n = 1; n < dim; ++n) {
        term *= abs2_alpha / n;
        cum += term;
    }
    return std::max(0.0, 1.0 - cum);
}

} // namespace

FockVector::FockVector(int dim) : dim_(dim), amp_(static_cast<size_t>(dim))
{
    check_dim(dim);
}

FockVector FockVector::vacuum(int dim) { return fock(0, dim); }

FockVector FockVector::fock(int n, int dim)
{
    check_dim(dim);
    if (n < 0 || n >= dim) {
        throw std::domain_error("Fock level outside truncation");
    }
    FockVector v(dim);
    v[n] = 1.0;
    return v;
}

FockVector FockVector::coherent(cplx alpha, int dim)
{
    check_dim(dim);
    const double a2 = std::norm(alpha);
    const double tail = coherent_tail(a2, dim);
    if (tail >= kLeakageBudget) {
        const int suggested = required_dim(std::abs(alpha), 0);
        throw TruncationError("coherent-state tail exceeds the leakage budget", suggested);
    }
    FockVector v(dim);
    cplx c = std::exp(-0.5 * a2); // c_0
    v[0] = c;
    for (int n = 1; n < dim; ++n) {
        c *= alpha / std::sqrt(static_cast<double>(n));
        v[n] = c;
    }
    v.normalize();
    return v;
}

double FockVector::norm() const
{
    double s = 0.0;
    for (const auto &c : amp_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

void FockVector::normalize()
{
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &c : amp_) {
        c /= n;
    }
}

double FockVector::mean_n() const
{
    double s = 0.0;
    for (int n = 0; n < dim_; ++n) {
        s += n * std::norm(amp_[static_cast<size_t>(n)]);
    }
    return s;
}

double FockVector::leakage() const { return tail_population(amp_, dim_, leak_window(dim_)); }

FockVector FockVector::resized(int dim) const
{
    if (dim < dim_) {
        throw std::domain_error("resized() only grows the truncation");
    }
    FockVector v(dim);
    for (int n = 0; n < dim_; ++n) {
        v[n] = amp_[static_cast<size_t>(n)];
    }
    return v;
}

cplx inner(const FockVector &a, const FockVector &b)
{
    if (a.dim() != b.dim()) {
        throw std::domain_error("dimension mismatch");
    }
    cplx s = 0.0;
    for (int n = 0; n < a.dim(); ++n) {
        s += std::conj(a[n]) * b[n];
    }
    return s;
}

double fidelity(const FockVector &a, const FockVector &b) { return std::norm(inner(a, b)); }

FockVector displace(const FockVector &state, cplx alpha)
{
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::domain_error("displacement must be finite");
    }
    const int dim = state.dim();

    // Generator G = alpha a^dag - alpha^* a. 1-norm bound 2|alpha|sqrt(dim).
    const double gnorm = 2.0 * std::abs(alpha) * std::sqrt(static_cast<double>(dim));
    int squarings = 0;
    while (gnorm / static_cast<double>(1 << squarings) > 0.5) {
        ++squarings;
    }
    const double scale = 1.0 / static_cast<double>(1 << squarings);
    const cplx a_up = alpha * scale;         // coefficient on a^dag
    const cplx a_dn = -std::conj(alpha) * scale;

    std::vector<double> sq(static_cast<size_t>(dim));
    for (int n = 0; n < dim; ++n) {
        sq[static_cast<size_t>(n)] = std::sqrt(static_cast<double>(n));
    }

    // exp(G) = exp(G/2^s)^(2^s); each substep by a Taylor series on the vector.
    FockVector out = state;
    std::vector<cplx> term(static_cast<size_t>(dim));
    std::vector<cplx> next(static_cast<size_t>(dim));
    const long reps = 1L << squarings;
    for (long r = 0; r < reps; ++r) {
        term = out.amplitudes();
        double base = 0.0;
        for (const auto &c : term) {
            base += std::norm(c);
        }
        for (int k = 1; k <= 64; ++k) {
            // next = (G*scale/k) term
            for (int n = 0; n < dim; ++n) {
                cplx v = 0.0;
                if (n > 0) {
                    v += a_up * sq[static_cast<size_t>(n)] * term[static_cast<size_t>(n - 1)];
                }
                if (n + 1 < dim) {
                    v += a_dn * sq[static_cast<size_t>(n + 1)] * term[static_cast<size_t>(n + 1)];
                }
                next[static_cast<size_t>(n)] = v / static_cast<double>(k);
            }
            term.swap(next);
            double tnorm = 0.0;
            for (int n = 0; n < dim; ++n) {
                out[n] += term[static_cast<size_t>(n)];
                tnorm += std::norm(term[static_cast<size_t>(n)]);
            }
            if (tnorm <= 1e-34 * base) {
                break;
            }
        }
    }

    if (out.leakage() >= kLeakageBudget) {
        const int suggested =
            next_pow2(std::max(2 * dim, required_dim(std::abs(alpha), static_cast<int>(std::ceil(state.mean_n())))));
        throw TruncationError("displacement leaks past the truncation", suggested);
    }
    return out;
}

SpinMotionState::SpinMotionState(int dim) : dim_(dim), amp_(2 * static_cast<size_t>(dim))
{
    check_dim(dim);
}

SpinMotionState SpinMotionState::product(const std::array<cplx, 2> &spin, const FockVector &motion)
{
    const double sn = std::sqrt(std::norm(spin[0]) + std::norm(spin[1]));
    if (sn == 0.0) {
        throw std::domain_error("spin amplitudes must not both vanish");
    }
    SpinMotionState st(motion.dim());
    for (int s = 0; s < 2; ++s) {
        const cplx c = spin[static_cast<size_t>(s)] / sn;
        for (int n = 0; n < motion.dim(); ++n) {
            st.at(s, n) = c * motion[n];
        }
    }
    return st;
}

double SpinMotionState::norm() const
{
    double s = 0.0;
    for (const auto &c : amp_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

void SpinMotionState::normalize()
{
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &c : amp_) {
        c /= n;
    }
}

double SpinMotionState::leakage() const
{
    const int window = leak_window(dim_);
    double s = 0.0;
    for (int sp = 0; sp < 2; ++sp) {
        for (int n = dim_ - window; n < dim_; ++n) {
            s += std::norm(at(sp, n));
        }
    }
    return s;
}

double SpinMotionState::population_up() const
{
    double s = 0.0;
    for (int n = 0; n < dim_; ++n) {
        s += std::norm(at(1, n));
    }
    return s;
}

cplx SpinMotionState::expect_a() const
{
    cplx s = 0.0;
    for (int sp = 0; sp < 2; ++sp) {
        for (int n = 0; n + 1 < dim_; ++n) {
            s += std::conj(at(sp, n)) * std::sqrt(static_cast<double>(n + 1)) * at(sp, n + 1);
        }
    }
    return s;
}

FockVector SpinMotionState::spin_component(const std::array<cplx, 2> &spin) const
{
    FockVector v(dim_);
    for (int n = 0; n < dim_; ++n) {
        v[n] = std::conj(spin[0]) * at(0, n) + std::conj(spin[1]) * at(1, n);
    }
    return v;
}

std::string SpinMotionState::snapshot_json() const
{
    std::ostringstream os;
    os.precision(17);
    os << "{\"dim\":" << dim_ << ",\"leakage\":" << leakage() << ",\"amplitudes\":[";
    bool first = true;
    for (int sp = 0; sp < 2; ++sp) {
        for (int n = 0; n < dim_; ++n) {
            if (!first) {
                os << ",";
            }
            first = false;
            os << "[" << sp << "," << n << "," << at(sp, n).real() << "," << at(sp, n).imag()
               << "]";
        }
    }
    os << "]}";
    return os.str();
}

cplx inner(const SpinMotionState &a, const SpinMotionState &b)
{
    if (a.dim() != b.dim()) {
        throw std::domain_error("dimension mismatch");
    }
    cplx s = 0.0;
    for (size_t i = 0; i < a.amplitudes().size(); ++i) {
        s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return s;
}

double fidelity(const SpinMotionState &a, const SpinMotionState &b)
{
    return std::norm(inner(a, b));
}

SpinBasis ms_spin_basis(double phi_sum)
{
    const double inv = 1.0 / std::sqrt(2.0);
    const cplx ph = std::exp(cplx(0.0, phi_sum));
    return SpinBasis{{inv, inv * ph}, {inv, -inv * ph}};
}

int required_dim(double alpha_max, int n_init)
{
    if (n_init < 0 || !std::isfinite(alpha_max)) {
        throw std::domain_error("invalid required_dim arguments");
    }
    alpha_max = std::abs(alpha_max);
    int dim;
    if (alpha_max == 0.0) {
        dim = std::max(8, next_pow2(n_init + 1));
    } else {
        const double spread = std::sqrt(static_cast<double>(n_init + 1)) + alpha_max + 6.0;
        dim = next_pow2(static_cast<int>(std::ceil(spread * spread)));
    }
    // The initial level itself must sit below the leakage window.
    while (n_init >= dim - leak_window(dim)) {
        dim *= 2;
    }
    return dim;
}

ThermalEnsemble::ThermalEnsemble(double nbar, int dim) : nbar_(nbar)
{
    check_dim(dim);
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::domain_error("mean occupation must be non-negative and finite");
    }
    // Geometric tail beyond dim-1 is (nbar/(nbar+1))^dim.
    const double tail = nbar == 0.0 ? 0.0 : std::exp(dim * std::log(nbar / (nbar + 1.0)));
    if (tail >= 1e-6) {
        throw TruncationError("thermal tail exceeds 1e-6", dim_for_tail(nbar, 1e-6));
    }
    weights_.resize(static_cast<size_t>(dim));
    const double ratio = nbar / (nbar + 1.0);
    double w = 1.0 / (nbar + 1.0);
    double sum = 0.0;
    for (int n = 0; n < dim; ++n) {
        weights_[static_cast<size_t>(n)] = w;
        sum += w;
        w *= ratio;
    }
    for (auto &x : weights_) {
        x /= sum;
    }
}

int ThermalEnsemble::dim_for_tail(double nbar, double tail_mass)
{
    if (!(tail_mass > 0.0) || !(nbar >= 0.0)) {
        throw std::domain_error("invalid thermal tail request");
    }
    if (nbar == 0.0) {
        return 1;
    }
    const double n = std::log(tail_mass) / std::log(nbar / (nbar + 1.0));
    return static_cast<int>(std::ceil(n)) + 1;
}

ThermalEnsemble ThermalEnsemble::for_tail(double nbar, double tail_mass)
{
    return ThermalEnsemble(nbar, dim_for_tail(nbar, tail_mass));
}

double laguerre(int n, double x)
{
    if (n < 0) {
        throw std::domain_error("Laguerre order must be non-negative");
    }
    // Upward recurrence; stable for x >= 0.
    double lm = 1.0; // L_0
    if (n == 0) {
        return lm;
    }
    double lc = 1.0 - x; // L_1
    for (int k = 2; k <= n; ++k) {
        const double ln = ((2.0 * k - 1.0 - x) * lc - (k - 1.0) * lm) / k;
        lm = lc;
        lc = ln;
    }
    return lc;
}

} // namespace spinmotion
