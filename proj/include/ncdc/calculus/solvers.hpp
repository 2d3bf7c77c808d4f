#pragma once

#include "ncdc/calculus/checks.hpp"

namespace ncdc::calculus {

struct OptimalRelations {
    Subspace kernel_space;  // K⁰ = ker(d0⊗id_V + b0∘(id_V⊗d0))
    Subspace optimal;       // K*, the largest b-stable subspace of K⁰
    std::size_t iterations = 0;
    Report report;
};

/// Greatest quadratic space compatible with the initial data: start from the
/// kernel of the degree-2 Leibniz map and shrink to the largest subspace K
/// with b_2(K⊗W) ⊆ W⊗K. Every quadratic K passing both consistency checks
/// lies inside the result.
OptimalRelations optimal_quadratic_relations(const InitialData& data);

/// ker(d0⊗id_V): the quadratic space read off from the switch-only form of the
/// linear condition. Differs from K⁰ in general.
Subspace switch_form_space(const InitialData& data);

/// Basis of all d0: V → W with [d0⊗id_V + b0∘(id_V⊗d0)]∘c = 0.
std::vector<LinMap> solve_d0(const LinMap& b0, const LinMap& c);

}  // namespace ncdc::calculus
