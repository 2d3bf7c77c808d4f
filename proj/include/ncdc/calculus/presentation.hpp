#pragma once

#include "ncdc/tensor/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncdc::calculus {

using exact::Scalar;
using tensor::LinMap;
using tensor::Shape;
using tensor::Subspace;
using tensor::Vector;

/// A homogeneous relation: a vector in V^{⊗length}.
struct Relation {
    std::size_t length = 2;
    Vector coords;
};

/// Generators V, coefficient module W, homogeneous relations and an optional
/// twist c on V⊗V whose image must equal the span of the quadratic relations.
struct Presentation {
    std::size_t dim_v = 0;
    std::size_t dim_w = 0;
    std::vector<std::string> v_names;
    std::vector<std::string> w_names;
    std::vector<Relation> relations;
    std::optional<LinMap> twist_c;
    std::size_t max_degree = 2;

    Shape v_power(std::size_t n) const { return Shape::v_power(n, dim_v, dim_w); }
    Shape w_v_power(std::size_t n) const { return Shape::w_v_power(n, dim_v, dim_w); }
    Shape v_power_w(std::size_t n) const { return Shape::v_power_w(n, dim_v, dim_w); }
    Shape w_shape() const { return Shape({tensor::Factor::W}, dim_v, dim_w); }

    /// True when every relation has length 2 (the empty set counts).
    bool is_quadratic() const;
    std::size_t max_relation_length() const;
    /// Span of the length-2 relations inside V⊗V.
    Subspace quadratic_space() const;
};

/// Throws DomainError/ShapeError when the presentation violates its invariants:
/// names and dims disagree, a relation has the wrong length or is zero, the
/// degree bound is below 2 or below a relation length, or Im c differs from
/// the span of the quadratic relations.
void validate(const Presentation& pres);

/// d0: V → W and b0: V⊗W → W⊗V.
struct InitialData {
    LinMap d0;
    LinMap b0;
};

/// Shape-checks d0 and b0 against the presentation.
void validate(const InitialData& data, const Presentation& pres);

/// v⊗w ↦ w⊗v.
LinMap switch_map(std::size_t dim_v, std::size_t dim_w);
/// u⊗v ↦ v⊗u on V⊗V.
LinMap flip_vv(std::size_t dim_v, std::size_t dim_w);

/// Presentation with no relations and generic names, for tests and tools.
Presentation free_presentation(std::size_t dim_v, std::size_t dim_w, std::size_t max_degree);

}  // namespace ncdc::calculus
