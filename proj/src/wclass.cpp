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

#include "wtype/wclass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "wtype/error.hpp"
#include "wtype/numerics.hpp"

namespace wtype {

namespace {

void require_w_arity(int n) {
    if (n < kMinWParties) {
        throw Error(ErrorKind::InvalidArity,
                    "W-class operations need at least 3 parties, got " + std::to_string(n));
    }
}

}  // namespace

WCanonical WCanonical::make(double u, std::vector<double> c, const Tolerances &tol) {
    require_w_arity(static_cast<int>(c.size()));
    if (!std::isfinite(u) || u < 0.0) {
        throw Error(ErrorKind::InvalidCanonical, "u must be finite and nonnegative");
    }
    double total = u;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!std::isfinite(c[k]) || !(c[k] > 0.0)) {
            throw Error(ErrorKind::InvalidCanonical, "c[" + std::to_string(k) + "] must be positive");
        }
        total += c[k];
    }
    if (std::abs(total - 1.0) > tol.construction) {
        throw Error(ErrorKind::InvalidCanonical, "u + sum(c) = " + std::to_string(total) + ", expected 1");
    }
    return WCanonical(u, std::move(c));
}

PureState WCanonical::to_state(const Tolerances &tol) const {
    std::vector<complex> d(c_.size());
    std::transform(c_.begin(), c_.end(), d.begin(), [](double ck) { return complex(std::sqrt(ck), 0.0); });
    return assemble_excitation_state(std::sqrt(u_), d, tol);
}

double WCanonical::max_difference(const WCanonical &other) const {
    if (other.parties() != parties()) {
        throw Error(ErrorKind::ArityMismatch, "canonical forms have different party counts");
    }
    double worst = std::abs(u_ - other.u_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        worst = std::max(worst, std::abs(c_[k] - other.c_[k]));
    }
    return worst;
}

SloccForm SloccForm::make(std::vector<LocalOperator> ops, const Tolerances &tol) {
    require_w_arity(static_cast<int>(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (!(std::abs(ops[k].determinant()) > tol.singular_det)) {
            throw Error(ErrorKind::SingularOperator, "operator for party " + std::to_string(k) + " is singular");
        }
    }
    return SloccForm(std::move(ops));
}

PureState SloccForm::to_state(const Tolerances &tol) const {
    return apply_local(build_w_state(parties()), ops_, tol);
}

WitnessLU WitnessLU::make(std::vector<LocalOperator> ops, const Tolerances &tol) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (!ops[k].is_unitary(tol.unitary)) {
            throw Error(ErrorKind::NumericalViolation, "witness operator " + std::to_string(k) + " is not unitary");
        }
    }
    return WitnessLU(std::move(ops));
}

WitnessLU WitnessLU::identity(int parties) {
    return WitnessLU(std::vector<LocalOperator>(static_cast<std::size_t>(parties), LocalOperator::identity()));
}

Canonicalization canonicalize_excitation(complex d0, std::span<const complex> d, const Tolerances &tol) {
    const int n = static_cast<int>(d.size());
    require_w_arity(n);
    double norm2 = std::norm(d0);
    for (const auto &dk : d) {
        norm2 += std::norm(dk);
    }
    const double norm = std::sqrt(norm2);
    if (!(norm >= tol.zero_norm)) {
        throw Error(ErrorKind::ZeroState, "excitation amplitudes are all zero");
    }
    for (int k = 0; k < n; ++k) {
        if (std::abs(d[static_cast<std::size_t>(k)]) <= tol.degeneracy * norm) {
            throw Error(ErrorKind::DegenerateState,
                        "single-excitation weight of party " + std::to_string(k) + " vanishes");
        }
    }

    // Diagonal gauge: theta_k share the phase of |0...0> evenly (zero when
    // that amplitude vanishes); phi_k then fixes each excitation phase.
    const double theta = std::abs(d0) > 0.0 ? std::arg(d0) / n : 0.0;
    const double theta_sum = theta * n;
    std::vector<double> c(static_cast<std::size_t>(n));
    std::vector<LocalOperator> phases(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const complex dk = d[static_cast<std::size_t>(k)];
        c[static_cast<std::size_t>(k)] = std::norm(dk) / norm2;
        const double phi = std::arg(dk) - (theta_sum - theta);
        phases[static_cast<std::size_t>(k)] = LocalOperator::diagonal(std::polar(1.0, theta), std::polar(1.0, phi));
    }
    const double u = std::norm(d0) / norm2;
    return {WCanonical::make(u, std::move(c), tol), WitnessLU::make(std::move(phases), tol)};
}

Canonicalization canonicalize_excitation(const PureState &state, const Tolerances &tol) {
    const int n = state.parties();
    require_w_arity(n);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::popcount(i) > 1 && std::abs(amps[i]) > tol.zero_norm) {
            throw Error(ErrorKind::NotExcitationForm,
                        "amplitude at index " + std::to_string(i) + " has Hamming weight > 1");
        }
    }
    std::vector<complex> d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        d[static_cast<std::size_t>(k)] = amps[excitation_index(n, k)];
    }
    return canonicalize_excitation(amps[0], d, tol);
}

Canonicalization canonicalize_slocc(const SloccForm &form, const Tolerances &tol) {
    const int n = form.parties();
    require_w_arity(n);
    // With B_k = p_k [[1, q_k'], [0, r_k']] the image of |W>_n is, up to the
    // dropped factor prod p_k / sqrt(n):
    //     (sum_k q_k')|0...0> + sum_k r_k' |e_k>.
    std::vector<LocalOperator> unitaries(static_cast<std::size_t>(n));
    std::vector<complex> d(static_cast<std::size_t>(n));
    complex d0(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const auto qr = qr_2x2(form.ops()[static_cast<std::size_t>(k)], tol);
        const double p = qr.upper(0, 0).real();
        d0 += qr.upper(0, 1) / p;
        d[static_cast<std::size_t>(k)] = qr.upper(1, 1).real() / p;
        unitaries[static_cast<std::size_t>(k)] = qr.unitary;
    }
    auto excitation = canonicalize_excitation(d0, d, tol);
    std::vector<LocalOperator> witness(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        witness[static_cast<std::size_t>(k)] =
            unitaries[static_cast<std::size_t>(k)] * excitation.witness.ops()[static_cast<std::size_t>(k)];
    }
    return {std::move(excitation.canonical), WitnessLU::make(std::move(witness), tol)};
}

InvariantProfile invariant_profile(const WCanonical &w) {
    const auto c = w.c();
    const double total = std::accumulate(c.begin(), c.end(), 0.0);
    InvariantProfile profile;
    profile.dets.reserve(c.size());
    for (double ck : c) {
        profile.dets.push_back(ck * (total - ck));
    }
    return profile;
}

InvariantProfile invariant_profile_from_state(const PureState &state, const Tolerances &tol) {
    const int n = state.parties();
    require_w_arity(n);
    InvariantProfile profile;
    profile.dets.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double det = reduced_density(state, k, tol).determinant();
        if (det <= tol.psd_slack) {
            throw Error(ErrorKind::NonPositiveDeterminant,
                        "det rho_" + std::to_string(k) + " = " + std::to_string(det) + " is not positive");
        }
        profile.dets.push_back(det);
    }
    return profile;
}

namespace {

double profile_gap(const WCanonical &a, const WCanonical &b) {
    if (a.parties() != b.parties()) {
        throw Error(ErrorKind::ArityMismatch, "party counts " + std::to_string(a.parties()) + " and " +
                                                  std::to_string(b.parties()) + " differ");
    }
    const auto pa = invariant_profile(a);
    const auto pb = invariant_profile(b);
    double gap = 0.0;
    for (std::size_t k = 0; k < pa.dets.size(); ++k) {
        gap = std::max(gap, std::abs(pa.dets[k] - pb.dets[k]));
    }
    return gap;
}

}  // namespace

LuDecision lu_equivalent(const WCanonical &a, const WCanonical &b, double equivalence_tol) {
    LuDecision decision;
    decision.max_profile_gap = profile_gap(a, b);
    decision.equivalent = decision.max_profile_gap <= equivalence_tol;
    if (decision.equivalent) {
        decision.witness = WitnessLU::identity(a.parties());
    }
    return decision;
}

LuDecision lu_equivalent(const WCanonical &a, const WCanonical &b) {
    return lu_equivalent(a, b, default_tolerances().equivalence);
}

LuDecision lu_equivalent(const Canonicalization &a, const Canonicalization &b, double equivalence_tol) {
    LuDecision decision;
    decision.max_profile_gap = profile_gap(a.canonical, b.canonical);
    decision.equivalent = decision.max_profile_gap <= equivalence_tol;
    if (decision.equivalent) {
        const auto wa = a.witness.ops();
        const auto wb = b.witness.ops();
        std::vector<LocalOperator> ops(wa.size());
        for (std::size_t k = 0; k < wa.size(); ++k) {
            ops[k] = wa[k] * wb[k].adjoint();
        }
        decision.witness = WitnessLU::make(std::move(ops));
    }
    return decision;
}

LuDecision lu_equivalent(const Canonicalization &a, const Canonicalization &b) {
    return lu_equivalent(a, b, default_tolerances().equivalence);
}

double witness_residual(const WitnessLU &witness, const PureState &from, const PureState &to,
                        const Tolerances &tol) {
    return state_distance(apply_local(from, witness.ops(), tol), to);
}

}  // namespace wtype
