// Copyright 2026 The wtype Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense n-qubit pure states, 2x2 local operators and single-qubit marginals.
//
// Basis convention: party 0 is the most significant bit of the amplitude
// index, so the single excitation of party k lives at index 1 << (n - 1 - k).

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wtype/tolerances.hpp"

namespace wtype {

using complex = std::complex<double>;

/// 2x2 complex matrix acting on one party. Row-major storage.
class LocalOperator {
  public:
    constexpr LocalOperator() = default;
    constexpr LocalOperator(complex a00, complex a01, complex a10, complex a11)
        : m_{a00, a01, a10, a11} {}

    static constexpr LocalOperator identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr LocalOperator pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
    static constexpr LocalOperator diagonal(complex d0, complex d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr complex operator()(std::size_t row, std::size_t col) const { return m_[2 * row + col]; }
    constexpr complex &operator()(std::size_t row, std::size_t col) { return m_[2 * row + col]; }

    complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    LocalOperator adjoint() const;

    /// Largest entrywise modulus of U U^dagger - I.
    double unitarity_error() const;
    bool is_unitary(double tol) const { return unitarity_error() <= tol; }

    friend LocalOperator operator*(const LocalOperator &a, const LocalOperator &b);
    friend bool operator==(const LocalOperator &, const LocalOperator &) = default;

  private:
    std::array<complex, 4> m_{};
};

/// Largest entrywise modulus of a - b.
double max_abs_difference(const LocalOperator &a, const LocalOperator &b);

/// Normalized amplitude vector over n qubits.
class PureState {
  public:
    /// Normalizes `amplitudes` and remembers the incoming norm.
    /// Throws InvalidArity unless the length is 2^n with 1 <= n <= dense cap,
    /// ZeroState when the norm is below the zero threshold.
    static PureState from_amplitudes(std::vector<complex> amplitudes,
                                     const Tolerances &tol = default_tolerances());

    int parties() const noexcept { return parties_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
    complex operator[](std::size_t index) const { return amplitudes_[index]; }

    /// Norm of the vector handed to the constructor, before normalization.
    double original_norm() const noexcept { return original_norm_; }

  private:
    PureState(int parties, std::vector<complex> amplitudes, double original_norm)
        : parties_(parties), amplitudes_(std::move(amplitudes)), original_norm_(original_norm) {}

    int parties_ = 0;
    std::vector<complex> amplitudes_;
    double original_norm_ = 1.0;
};

/// Index of the basis state in which only `party` is excited.
constexpr std::size_t excitation_index(int parties, int party) {
    return std::size_t{1} << (parties - 1 - party);
}

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class SingleQubitDensity {
  public:
    /// Validates hermiticity, trace and positivity within `tol.construction`
    /// and `tol.psd_slack`; throws NumericalViolation otherwise.
    static SingleQubitDensity from_matrix(const LocalOperator &m,
                                          const Tolerances &tol = default_tolerances());

    const LocalOperator &matrix() const noexcept { return m_; }
    /// rho_00 rho_11 - |rho_01|^2, always real for a Hermitian matrix.
    double determinant() const;

  private:
    explicit SingleQubitDensity(const LocalOperator &m) : m_(m) {}
    LocalOperator m_;
};

struct Spectrum {
    double lambda_min;
    double lambda_max;
    double det;
};

/// |W>_n: uniform superposition of the n single-excitation basis states.
PureState build_w_state(int parties);

/// State with amplitude d0 on |0...0> and d[k] on the excitation of party k.
PureState assemble_excitation_state(complex d0, std::span<const complex> d,
                                    const Tolerances &tol = default_tolerances());

/// (ops[0] (x) ... (x) ops[n-1]) |state>, normalized. The returned state's
/// original_norm() is the norm of the image before normalization.
PureState apply_local(const PureState &state, std::span<const LocalOperator> ops,
                      const Tolerances &tol = default_tolerances());

/// Partial trace over every party except `party` (0-based).
SingleQubitDensity reduced_density(const PureState &state, int party,
                                   const Tolerances &tol = default_tolerances());

Spectrum spectrum_and_det(const SingleQubitDensity &rho,
                          const Tolerances &tol = default_tolerances());

/// Eigenvalues of a unit-trace 2x2 density matrix from its determinant alone.
Spectrum spectrum_from_det(double det, const Tolerances &tol = default_tolerances());

/// Euclidean norm of a - b over the full amplitude vectors.
double state_distance(const PureState &a, const PureState &b);

}  // namespace wtype
