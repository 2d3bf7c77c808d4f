#pragma once

#include "ncdc/calculus/ideal.hpp"

#include <map>

namespace ncdc::calculus {

using tensor::Matrix;

/// One degree of A = TV/I: normal-form words are the non-pivot columns of the
/// echelon basis of I_n. `reduction` is r_n (dim A_n × dim V^n), projection
/// along I_n; `section` is s_n (dim V^n × dim A_n), the inclusion of normal words.
struct QuotientDegree {
    std::vector<std::size_t> normal_words;  // indices into V^{⊗n}
    Matrix reduction;
    Matrix section;

    std::size_t dim() const noexcept { return normal_words.size(); }
};

/// An element of A (or TV) split by degree; vectors are coordinates in A_n
/// (or V^{⊗n}, depending on context).
using GradedElement = std::map<std::size_t, Vector>;

class QuotientAlgebra {
public:
    QuotientAlgebra() = default;
    QuotientAlgebra(std::size_t dim_v, std::size_t dim_w, std::vector<QuotientDegree> degrees)
        : dim_v_(dim_v), dim_w_(dim_w), degrees_(std::move(degrees)) {}

    std::size_t max_degree() const noexcept { return degrees_.size() - 1; }
    std::size_t dim_v() const noexcept { return dim_v_; }
    std::size_t dim_w() const noexcept { return dim_w_; }
    const QuotientDegree& degree(std::size_t n) const { return degrees_.at(n); }
    std::size_t dim(std::size_t n) const { return degree(n).dim(); }
    std::vector<std::size_t> dims() const;

    /// r_n applied to a vector of V^{⊗n}.
    Vector reduce(std::size_t n, const Vector& v) const;
    /// s_n applied to A_n coordinates.
    Vector lift(std::size_t n, const Vector& a) const;
    /// id_W ⊗ r_n on W⊗V^{⊗n}; result is indexed γ·dim A_n + a.
    Vector reduce_w(std::size_t n, const Vector& v) const;
    /// id_W ⊗ s_n.
    Vector lift_w(std::size_t n, const Vector& a) const;

    /// Reduces every degree of a TV element.
    GradedElement reduce(const GradedElement& element) const;

private:
    std::size_t dim_v_ = 0;
    std::size_t dim_w_ = 0;
    std::vector<QuotientDegree> degrees_;
};

QuotientAlgebra build_quotient(const Presentation& pres, const GradedIdeal& ideal);

}  // namespace ncdc::calculus
