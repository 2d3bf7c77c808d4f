#pragma once

#include "ncdc/calculus/report.hpp"

#include <vector>

namespace ncdc::calculus {

/// The unique calculus on TV (truncated at degree N) determined by initial
/// data: commutation rules b_n: V^{⊗n}⊗W → W⊗V^{⊗n} for 0 ≤ n ≤ N, with
/// b_0 = id_W, and the derivation d_n: V^{⊗n} → W⊗V^{⊗n-1} for 1 ≤ n ≤ N.
class CalculusTower {
public:
    CalculusTower(std::vector<LinMap> b, std::vector<LinMap> d);

    std::size_t max_degree() const noexcept { return b_.size() - 1; }
    std::size_t dim_v() const noexcept { return dim_v_; }
    std::size_t dim_w() const noexcept { return dim_w_; }
    const LinMap& b(std::size_t n) const { return b_.at(n); }
    /// d on degree n ≥ 1 (d vanishes on scalars).
    const LinMap& d(std::size_t n) const;
    const std::vector<LinMap>& b_maps() const noexcept { return b_; }
    const std::vector<LinMap>& d_maps() const noexcept { return d_; }

    /// Left action of the word u ∈ V^{⊗p} on x ∈ W⊗V^{⊗m}: u.(w⊗y) = b_p(u⊗w)⊗y.
    Vector left_act(std::size_t p, std::size_t u, const Vector& x, std::size_t m) const;

private:
    std::size_t dim_v_;
    std::size_t dim_w_;
    std::vector<LinMap> b_;
    std::vector<LinMap> d_;  // d_[0] is unused
};

/// Right action by concatenation: (w⊗y).v for v ∈ V^{⊗r}; x ∈ W⊗V^{⊗m}.
Vector right_concat(const Vector& x, std::size_t v, std::size_t dim_v_pow_r);

/// b_n = (b0 ⊗ id_{V^{n-1}}) ∘ (id_V ⊗ b_{n-1}), b_1 = b0, b_0 = id_W.
std::vector<LinMap> extend_b(const InitialData& data, std::size_t max_degree);
/// d_n = d0 ⊗ id_{V^{n-1}} + (b0 ⊗ id_{V^{n-2}}) ∘ (id_V ⊗ d_{n-1}), d_1 = d0.
/// Entry 0 of the result is an empty placeholder.
std::vector<LinMap> extend_d(const InitialData& data, std::size_t max_degree);

CalculusTower build_tower(const InitialData& data, std::size_t max_degree);

/// d(u⊗v) = d(u).v + u.d(v) for all basis words with |u| + |v| ≤ N.
Report verify_leibniz(const CalculusTower& tower, std::size_t max_degree);
/// b_{p+r} = (b_p ⊗ id_{V^r}) ∘ (id_{V^p} ⊗ b_r) for all splits up to N.
Report verify_coherence(const CalculusTower& tower, std::size_t max_degree);

std::size_t ipow(std::size_t base, std::size_t exp);

}  // namespace ncdc::calculus
