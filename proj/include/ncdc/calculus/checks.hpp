#pragma once

#include "ncdc/calculus/ideal.hpp"
#include "ncdc/calculus/tower.hpp"

#include <optional>

namespace ncdc::calculus {

/// d0⊗id_V + b0∘(id_V⊗d0): V⊗V → W⊗V, the degree-2 component of d.
LinMap leibniz_map(const LinMap& d0, const LinMap& b0);
/// (b0⊗id_V)∘(id_V⊗b0): V⊗V⊗W → W⊗V⊗V.
LinMap double_twist(const LinMap& b0);

/// The twist c used by the operator-form checks: the given one, or the
/// projection of V⊗V onto K along the normal-form words.
LinMap effective_twist(const Presentation& pres);

/// d K = 0, evaluated on an echelon basis of K and, independently, as the
/// matrix identity L∘c = 0. The two routes must agree.
Report check_linear(const InitialData& data, const Presentation& pres);

/// b_2(K⊗W) ⊆ W⊗K.
Report check_quadratic(const InitialData& data, const Presentation& pres);

/// b^ρ(K) ⊆ End(W)⊗K: b_2 reshaped into End(W)-valued coefficients on V⊗V,
/// each of which must lie in K. Always agrees with check_quadratic.
Report check_operator_form(const InitialData& data, const Presentation& pres);

struct BraidResult {
    Report report;
    /// a = (b0⊗id_V)∘(id_V⊗b0), emitted on a pass.
    std::optional<LinMap> intertwiner;
};

/// (b0⊗id)(id⊗b0)(c⊗id_W) = (id_W⊗c)(b0⊗id)(id⊗b0) on V⊗V⊗W.
BraidResult check_braid(const LinMap& b0, const LinMap& c);

/// d I_n ⊆ W⊗I_{n-1} and b_n(I_n⊗W) ⊆ W⊗I_n for every n ≤ max_degree.
Report check_truncated(const InitialData& data, const GradedIdeal& ideal, std::size_t max_degree);
Report check_truncated(const CalculusTower& tower, const GradedIdeal& ideal, std::size_t max_degree);

/// For every word u of degree ≤ N: Φ_d(δu) = d(u), where δu = u⊗1 - 1⊗u is
/// expanded through the telescoping sum of prefix.δ(v).suffix terms and Φ_d
/// is applied term-wise using only d0 and the b-tower; compared against the
/// recursively built d-tower.
Report universal_delta_check(const InitialData& data, std::size_t max_degree);

}  // namespace ncdc::calculus
