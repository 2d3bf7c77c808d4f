#pragma once

#include "ncdc/calculus/checks.hpp"
#include "ncdc/calculus/quotient.hpp"

namespace ncdc::calculus {

/// The calculus induced on A = TV/I by a consistent cover calculus on TV.
/// d_tilde[n]: A_n → W⊗A_{n-1} (rows indexed γ·dim A_{n-1} + a), for n ≥ 1;
/// b_tilde[n]: A_n⊗W → W⊗A_n. Entry 0 of d_tilde is an empty placeholder.
struct FactorCalculus {
    QuotientAlgebra algebra;
    std::vector<Matrix> d_tilde;
    std::vector<Matrix> b_tilde;
    std::vector<Report> consistency;  // the checks that licensed the construction
    Report diagram;                   // (id_W⊗r)∘d = d̃∘r on every word
};

/// Builds d̃ = (id_W⊗r)∘d∘s and b̃ = (id_W⊗r)∘b∘(s⊗id_W) from the normal-form
/// section. Throws ConsistencyError carrying the failing report when the
/// consistency checks fail (linear + quadratic for quadratic relations, the
/// truncated scan otherwise).
FactorCalculus factor_calculus(const InitialData& data, const Presentation& pres);

/// D_γ(a) for every W basis element γ, with d̃(a) = Σ_γ ξ^γ ⊗ D_γ(a). The
/// element is given by degree in V^{⊗n} coordinates and is reduced first;
/// results are in A_{n-1} coordinates.
std::vector<GradedElement> partial_derivatives(const FactorCalculus& fc, const GradedElement& element);

/// d̃ applied to an element already in normal-form coordinates; the result maps
/// degree n-1 to coordinates in W⊗A_{n-1}.
GradedElement apply_d_tilde(const FactorCalculus& fc, const GradedElement& reduced);

}  // namespace ncdc::calculus
