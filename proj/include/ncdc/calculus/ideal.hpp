#pragma once

#include "ncdc/calculus/presentation.hpp"

namespace ncdc::calculus {

/// A homogeneous ideal of TV truncated at a degree bound, one subspace of
/// V^{⊗n} per degree n (components below the lowest generator are zero).
class GradedIdeal {
public:
    GradedIdeal() = default;
    explicit GradedIdeal(std::vector<Subspace> components) : components_(std::move(components)) {}

    std::size_t max_degree() const noexcept { return components_.empty() ? 0 : components_.size() - 1; }
    const Subspace& component(std::size_t n) const { return components_.at(n); }
    const std::vector<Subspace>& components() const noexcept { return components_; }

private:
    std::vector<Subspace> components_;
};

/// I_{n+1} = V⊗I_n + I_n⊗V + (degree n+1 generators), up to pres.max_degree.
GradedIdeal build_ideal(const Presentation& pres);

/// The ideal generated by a quadratic space K alone, up to `max_degree`.
GradedIdeal quadratic_ideal(const Subspace& k, std::size_t max_degree);

}  // namespace ncdc::calculus
