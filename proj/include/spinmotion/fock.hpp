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

#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace spinmotion {

using cplx = std::complex<double>;

/// Population budget tolerated in the top ceil(dim/10) Fock levels.
inline constexpr double kLeakageBudget = 1e-8;

int leak_window(int dim); // number of top levels counted as leakage

/// Motional-only amplitude vector on Fock levels 0..dim-1.
class FockVector {
  public:
    explicit FockVector(int dim);

    static FockVector vacuum(int dim);
    static FockVector fock(int n, int dim);
    /// Truncated coherent state, renormalized. Throws TruncationError when the
    /// pre-truncation tail beyond dim-1 exceeds the leakage budget.
    static FockVector coherent(cplx alpha, int dim);

    int dim() const { return dim_; }
    cplx &operator[](int n) { return amp_[static_cast<size_t>(n)]; }
    const cplx &operator[](int n) const { return amp_[static_cast<size_t>(n)]; }
    const std::vector<cplx> &amplitudes() const { return amp_; }

    double norm() const;
    void normalize();
    double mean_n() const;
    /// Population in the top ceil(dim/10) levels.
    double leakage() const;
    /// Same state on a larger (zero-padded) or equal truncation.
    FockVector resized(int dim) const;

  private:
    int dim_;
    std::vector<cplx> amp_;
};

cplx inner(const FockVector &a, const FockVector &b);
double fidelity(const FockVector &a, const FockVector &b); // |<a|b>|^2

/// exp(alpha a^dag - alpha^* a) applied on the truncated space, computed by
/// scaled repeated application of a Taylor-summed exponential of the
/// (tridiagonal, anti-Hermitian) truncated generator. Unitary on the retained
/// subspace to 1e-9. Throws TruncationError when the result leaks past the
/// budget, with a suggested larger dim.
FockVector displace(const FockVector &state, cplx alpha);

/// Spin (|0>, |+1>) tensor Fock 0..dim-1; amplitude index = spin*dim + n.
class SpinMotionState {
  public:
    SpinMotionState(int dim);

    /// Product state spin (x) motion; the spin pair is normalized first.
    static SpinMotionState product(const std::array<cplx, 2> &spin, const FockVector &motion);

    int dim() const { return dim_; }
    cplx &at(int spin, int n) { return amp_[static_cast<size_t>(spin * dim_ + n)]; }
    const cplx &at(int spin, int n) const { return amp_[static_cast<size_t>(spin * dim_ + n)]; }
    std::vector<cplx> &amplitudes() { return amp_; }
    const std::vector<cplx> &amplitudes() const { return amp_; }

    double norm() const;
    void normalize();
    double leakage() const;
    /// P(spin = |+1>), summed over all motional levels.
    double population_up() const;
    /// <a> over the full state.
    cplx expect_a() const;
    /// Motional component along the (un-normalized is fine) spin covector
    /// conj(c0)<0| + conj(c1)<+1|.
    FockVector spin_component(const std::array<cplx, 2> &spin) const;

    /// Snapshot for debugging and golden tests: dim, leakage and one
    /// (spin, n, re, im) row per amplitude.
    std::string snapshot_json() const;

  private:
    int dim_;
    std::vector<cplx> amp_;
};

cplx inner(const SpinMotionState &a, const SpinMotionState &b);
double fidelity(const SpinMotionState &a, const SpinMotionState &b);

struct SpinBasis {
    std::array<cplx, 2> right; // (|0> + e^{i phi} |+1>)/sqrt2
    std::array<cplx, 2> left;  // (|0> - e^{i phi} |+1>)/sqrt2
};

/// Spin-flip eigenbasis for an aggregate drive phase phi_sum.
SpinBasis ms_spin_basis(double phi_sum);

/// Smallest power-of-two truncation keeping a state displaced by up to
/// |alpha_max| from Fock level n_init inside the leakage budget.
int required_dim(double alpha_max, int n_init);

/// Geometric Fock-level weights p_n = nbar^n / (nbar+1)^(n+1), renormalized
/// over 0..dim-1. Construction requires the pre-renormalization tail beyond
/// dim-1 to be below 1e-6.
class ThermalEnsemble {
  public:
    ThermalEnsemble(double nbar, int dim);

    static int dim_for_tail(double nbar, double tail_mass);
    static ThermalEnsemble for_tail(double nbar, double tail_mass);

    double nbar() const { return nbar_; }
    int dim() const { return static_cast<int>(weights_.size()); }
    double weight(int n) const { return weights_[static_cast<size_t>(n)]; }
    const std::vector<double> &weights() const { return weights_; }

  private:
    double nbar_;
    std::vector<double> weights_;
};

/// Laguerre polynomial L_n(x) (used by the displaced-Fock closed forms).
double laguerre(int n, double x);

} // namespace spinmotion
