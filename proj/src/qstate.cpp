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

#include "wtype/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wtype/error.hpp"

namespace wtype {

LocalOperator LocalOperator::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

LocalOperator operator*(const LocalOperator &a, const LocalOperator &b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

double max_abs_difference(const LocalOperator &a, const LocalOperator &b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
        }
    }
    return worst;
}

double LocalOperator::unitarity_error() const {
    return max_abs_difference(*this * adjoint(), identity());
}

namespace {

double squared_norm(std::span<const complex> v) {
    double total = 0.0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

int log2_exact(std::size_t length) {
    if (length == 0 || (length & (length - 1)) != 0) {
        return -1;
    }
    int n = 0;
    while ((std::size_t{1} << n) < length) {
        ++n;
    }
    return n;
}

}  // namespace

PureState PureState::from_amplitudes(std::vector<complex> amplitudes, const Tolerances &tol) {
    const int n = log2_exact(amplitudes.size());
    if (n < 1 || n > tol.dense_party_cap) {
        throw Error(ErrorKind::InvalidArity,
                    "amplitude vector of length " + std::to_string(amplitudes.size()) +
                        " is not 2^n with 1 <= n <= " + std::to_string(tol.dense_party_cap));
    }
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm >= tol.zero_norm)) {
        throw Error(ErrorKind::ZeroState, "state has zero norm");
    }
    for (auto &a : amplitudes) {
        a /= norm;
    }
    return PureState(n, std::move(amplitudes), norm);
}

SingleQubitDensity SingleQubitDensity::from_matrix(const LocalOperator &m, const Tolerances &tol) {
    const double herm = std::max({std::abs(m(0, 1) - std::conj(m(1, 0))), std::abs(m(0, 0).imag()),
                                  std::abs(m(1, 1).imag())});
    if (herm > tol.construction) {
        throw Error(ErrorKind::NumericalViolation, "density matrix is not Hermitian");
    }
    const double p0 = m(0, 0).real();
    const double p1 = m(1, 1).real();
    if (std::abs(p0 + p1 - 1.0) > tol.construction) {
        throw Error(ErrorKind::NumericalViolation, "density matrix trace differs from 1");
    }
    const complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const LocalOperator hermitized(p0, off, std::conj(off), p1);
    SingleQubitDensity rho(hermitized);
    const double det = rho.determinant();
    const double trace = p0 + p1;
    const double disc = std::max(0.0, trace * trace - 4.0 * det);
    const double lambda_min = 0.5 * (trace - std::sqrt(disc));
    if (lambda_min < -tol.psd_slack) {
        throw Error(ErrorKind::NumericalViolation, "density matrix has a negative eigenvalue");
    }
    return rho;
}

double SingleQubitDensity::determinant() const {
    return m_(0, 0).real() * m_(1, 1).real() - std::norm(m_(0, 1));
}

PureState build_w_state(int parties) {
    if (parties < 2) {
        throw Error(ErrorKind::InvalidArity, "W state needs at least 2 parties");
    }
    std::vector<complex> d(static_cast<std::size_t>(parties), complex(1.0, 0.0));
    return assemble_excitation_state(0.0, d);
}

PureState assemble_excitation_state(complex d0, std::span<const complex> d, const Tolerances &tol) {
    const int n = static_cast<int>(d.size());
    if (n < 1 || n > tol.dense_party_cap) {
        throw Error(ErrorKind::InvalidArity, "party count " + std::to_string(n) + " out of range");
    }
    std::vector<complex> amps(std::size_t{1} << n, complex(0.0, 0.0));
    amps[0] = d0;
    for (int k = 0; k < n; ++k) {
        amps[excitation_index(n, k)] = d[static_cast<std::size_t>(k)];
    }
    return PureState::from_amplitudes(std::move(amps), tol);
}

PureState apply_local(const PureState &state, std::span<const LocalOperator> ops, const Tolerances &tol) {
    const int n = state.parties();
    if (static_cast<int>(ops.size()) != n) {
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(n) + " local operators, got " +
                                                  std::to_string(ops.size()));
    }
    std::vector<complex> v(state.amplitudes().begin(), state.amplitudes().end());
    for (int k = 0; k < n; ++k) {
        const LocalOperator &m = ops[static_cast<std::size_t>(k)];
        const std::size_t stride = excitation_index(n, k);
        for (std::size_t block = 0; block < v.size(); block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                const complex a0 = v[i];
                const complex a1 = v[i + stride];
                v[i] = m(0, 0) * a0 + m(0, 1) * a1;
                v[i + stride] = m(1, 0) * a0 + m(1, 1) * a1;
            }
        }
    }
    if (std::sqrt(squared_norm(v)) < tol.zero_norm) {
        throw Error(ErrorKind::SingularImage, "local operators annihilate the state");
    }
    return PureState::from_amplitudes(std::move(v), tol);
}

SingleQubitDensity reduced_density(const PureState &state, int party, const Tolerances &tol) {
    const int n = state.parties();
    if (party < 0 || party >= n) {
        throw Error(ErrorKind::InvalidParty,
                    "party " + std::to_string(party) + " outside [0, " + std::to_string(n) + ")");
    }
    const auto amps = state.amplitudes();
    const std::size_t stride = excitation_index(n, party);
    double p0 = 0.0;
    double p1 = 0.0;
    complex off(0.0, 0.0);
    for (std::size_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const complex a0 = amps[i];
            const complex a1 = amps[i + stride];
            p0 += std::norm(a0);
            p1 += std::norm(a1);
            off += a0 * std::conj(a1);
        }
    }
    return SingleQubitDensity::from_matrix(LocalOperator(p0, off, std::conj(off), p1), tol);
}

Spectrum spectrum_and_det(const SingleQubitDensity &rho, const Tolerances &tol) {
    return spectrum_from_det(rho.determinant(), tol);
}

Spectrum spectrum_from_det(double det, const Tolerances &tol) {
    if (det > 0.25 + tol.psd_slack || det < -tol.psd_slack) {
        throw Error(ErrorKind::NumericalViolation,
                    "marginal determinant " + std::to_string(det) + " outside [0, 1/4]");
    }
    det = std::clamp(det, 0.0, 0.25);
    const double lambda_max = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * det));
    // det / lambda_max avoids cancellation in (1 - sqrt(1 - 4 det)) / 2.
    const double lambda_min = det / lambda_max;
    return {lambda_min, lambda_max, det};
}

double state_distance(const PureState &a, const PureState &b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorKind::ArityMismatch, "states live on different party counts");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        total += std::norm(a[i] - b[i]);
    }
    return std::sqrt(total);
}

}  // namespace wtype
