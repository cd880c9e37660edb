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

// Canonical form of W-class states under local unitaries, their marginal
// invariants, and the local-unitary equivalence decision.
//
// Every W-class state is LU-equivalent to exactly one
//     sqrt(u)|0...0> + sum_k sqrt(c_k)|e_k>,   c_k > 0, u >= 0,
// and two such states are LU-equivalent iff their single-party marginal
// determinants agree party by party.

#include <optional>
#include <span>
#include <vector>

#include "wtype/qstate.hpp"
#include "wtype/tolerances.hpp"

namespace wtype {

inline constexpr int kMinWParties = 3;

class WCanonical {
  public:
    /// Throws InvalidArity for fewer than 3 parties and InvalidCanonical when
    /// some c_k <= 0, u < 0 or u + sum c differs from 1 by more than
    /// `tol.construction`.
    static WCanonical make(double u, std::vector<double> c, const Tolerances &tol = default_tolerances());

    int parties() const noexcept { return static_cast<int>(c_.size()); }
    double u() const noexcept { return u_; }
    std::span<const double> c() const noexcept { return c_; }
    double c(int k) const { return c_[static_cast<std::size_t>(k)]; }

    /// Dense amplitudes sqrt(u), sqrt(c_k) on the weight <= 1 subspace.
    PureState to_state(const Tolerances &tol = default_tolerances()) const;

    /// max(|u - other.u|, max_k |c_k - other.c_k|).
    double max_difference(const WCanonical &other) const;

  private:
    WCanonical(double u, std::vector<double> c) : u_(u), c_(std::move(c)) {}
    double u_;
    std::vector<double> c_;
};

/// (A_1 (x) ... (x) A_n)|W>_n with every A_k invertible.
class SloccForm {
  public:
    /// Throws InvalidArity for n < 3 and SingularOperator for a factor with
    /// |det| <= tol.singular_det.
    static SloccForm make(std::vector<LocalOperator> ops, const Tolerances &tol = default_tolerances());

    int parties() const noexcept { return static_cast<int>(ops_.size()); }
    std::span<const LocalOperator> ops() const noexcept { return ops_; }

    /// The normalized dense state. Needs n within the dense cap.
    PureState to_state(const Tolerances &tol = default_tolerances()) const;

  private:
    explicit SloccForm(std::vector<LocalOperator> ops) : ops_(std::move(ops)) {}
    std::vector<LocalOperator> ops_;
};

struct InvariantProfile {
    /// dets[k] = det rho_k.
    std::vector<double> dets;

    int parties() const noexcept { return static_cast<int>(dets.size()); }
};

class WitnessLU {
  public:
    /// Throws NumericalViolation unless every operator is unitary within tol.unitary.
    static WitnessLU make(std::vector<LocalOperator> ops, const Tolerances &tol = default_tolerances());
    static WitnessLU identity(int parties);

    int parties() const noexcept { return static_cast<int>(ops_.size()); }
    std::span<const LocalOperator> ops() const noexcept { return ops_; }

  private:
    explicit WitnessLU(std::vector<LocalOperator> ops) : ops_(std::move(ops)) {}
    std::vector<LocalOperator> ops_;
};

/// Canonical coefficients together with the local unitaries that carry the
/// canonical state back to the (normalized) input state.
struct Canonicalization {
    WCanonical canonical;
    WitnessLU witness;
};

/// Per-party QR A_k = V_k B_k, closed-form image of the triangular factors on
/// |W>_n, then diagonal phase fixing. Never materializes a 2^n vector.
/// Throws DegenerateState when some single-excitation weight vanishes.
Canonicalization canonicalize_slocc(const SloccForm &form, const Tolerances &tol = default_tolerances());

/// For a state supported on Hamming weight <= 1; the witness is diagonal.
/// Throws NotExcitationForm for support outside weight <= 1 and
/// DegenerateState when some single-excitation amplitude is zero.
Canonicalization canonicalize_excitation(const PureState &state, const Tolerances &tol = default_tolerances());

/// Same as the dense overload, from the n + 1 relevant amplitudes only.
Canonicalization canonicalize_excitation(complex d0, std::span<const complex> d,
                                         const Tolerances &tol = default_tolerances());

/// Closed form dets[k] = c_k * sum_{j != k} c_j.
InvariantProfile invariant_profile(const WCanonical &w);

/// Determinants of the dense partial-trace marginals. Throws
/// NonPositiveDeterminant when some det rho_k <= tol.psd_slack.
InvariantProfile invariant_profile_from_state(const PureState &state, const Tolerances &tol = default_tolerances());

struct LuDecision {
    bool equivalent = false;
    /// Present iff equivalent; (x) witness maps b's state onto a's state.
    std::optional<WitnessLU> witness;
    double max_profile_gap = 0.0;
};

/// Party-wise profile comparison at tolerance `equivalence_tol`.
/// Throws ArityMismatch on differing party counts.
LuDecision lu_equivalent(const WCanonical &a, const WCanonical &b, double equivalence_tol);
LuDecision lu_equivalent(const WCanonical &a, const WCanonical &b);

/// Same decision for canonicalized states; the witness composes both
/// canonicalization witnesses, W_k = Wa_k Wb_k^dagger.
LuDecision lu_equivalent(const Canonicalization &a, const Canonicalization &b, double equivalence_tol);
LuDecision lu_equivalent(const Canonicalization &a, const Canonicalization &b);

/// || (x)witness |from> - |to> ||, dense.
double witness_residual(const WitnessLU &witness, const PureState &from, const PureState &to,
                        const Tolerances &tol = default_tolerances());

}  // namespace wtype
