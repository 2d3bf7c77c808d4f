#include "ncdc/calculus/quotient.hpp"

#include "ncdc/error.hpp"

namespace ncdc::calculus {

std::vector<std::size_t> QuotientAlgebra::dims() const {
    std::vector<std::size_t> d;
    for (const auto& deg : degrees_) d.push_back(deg.dim());
    return d;
}

Vector QuotientAlgebra::reduce(std::size_t n, const Vector& v) const {
    const Matrix& r = degree(n).reduction;
    if (v.size() != r.cols()) throw ShapeError("reduce: vector length does not match V^" + std::to_string(n));
    Vector out(r.rows());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (!r(i, j).is_zero()) out[i].add_product(r(i, j), v[j]);
    }
    return out;
}

Vector QuotientAlgebra::lift(std::size_t n, const Vector& a) const {
    const QuotientDegree& d = degree(n);
    if (a.size() != d.dim()) throw ShapeError("lift: coordinate length does not match A_" + std::to_string(n));
    Vector out(d.section.rows());
    for (std::size_t i = 0; i < a.size(); ++i) out[d.normal_words[i]] = a[i];
    return out;
}

Vector QuotientAlgebra::reduce_w(std::size_t n, const Vector& v) const {
    const std::size_t block = degree(n).reduction.cols();
    if (v.size() != dim_w_ * block) throw ShapeError("reduce_w: vector length does not match W⊗V^" + std::to_string(n));
    Vector out;
    out.reserve(dim_w_ * dim(n));
    for (std::size_t g = 0; g < dim_w_; ++g) {
        const Vector slice(v.begin() + static_cast<std::ptrdiff_t>(g * block),
                           v.begin() + static_cast<std::ptrdiff_t>((g + 1) * block));
        const Vector r = reduce(n, slice);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

Vector QuotientAlgebra::lift_w(std::size_t n, const Vector& a) const {
    const std::size_t block = dim(n);
    if (a.size() != dim_w_ * block) throw ShapeError("lift_w: vector length does not match W⊗A_" + std::to_string(n));
    Vector out;
    for (std::size_t g = 0; g < dim_w_; ++g) {
        const Vector slice(a.begin() + static_cast<std::ptrdiff_t>(g * block),
                           a.begin() + static_cast<std::ptrdiff_t>((g + 1) * block));
        const Vector l = lift(n, slice);
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

GradedElement QuotientAlgebra::reduce(const GradedElement& element) const {
    GradedElement out;
    for (const auto& [n, v] : element) {
        if (n > max_degree()) throw DomainError("element has degree " + std::to_string(n) + " above the bound " +
                                                std::to_string(max_degree()));
        out[n] = reduce(n, v);
    }
    return out;
}

QuotientAlgebra build_quotient(const Presentation& pres, const GradedIdeal& ideal) {
    std::vector<QuotientDegree> degrees;
    for (std::size_t n = 0; n <= ideal.max_degree(); ++n) {
        const Subspace& k = ideal.component(n);
        const std::size_t total = k.ambient().total_dim();
        std::vector<bool> pivot(total, false);
        for (std::size_t p : k.pivots()) pivot[p] = true;

        QuotientDegree d;
        std::vector<std::size_t> position(total, 0);
        for (std::size_t j = 0; j < total; ++j)
            if (!pivot[j]) {
                position[j] = d.normal_words.size();
                d.normal_words.push_back(j);
            }
        d.reduction = Matrix(d.dim(), total);
        d.section = Matrix(total, d.dim());
        for (std::size_t a = 0; a < d.dim(); ++a) {
            d.reduction(a, d.normal_words[a]) = Scalar(1L);
            d.section(d.normal_words[a], a) = Scalar(1L);
        }
        // a pivot word equals minus the rest of its echelon row modulo I_n
        for (std::size_t r = 0; r < k.dim(); ++r) {
            const Vector& row = k.basis()[r];
            for (std::size_t j = 0; j < total; ++j)
                if (!pivot[j] && !row[j].is_zero()) d.reduction(position[j], k.pivots()[r]) = -row[j];
        }
        degrees.push_back(std::move(d));
    }
    return QuotientAlgebra(pres.dim_v, pres.dim_w, std::move(degrees));
}

}  // namespace ncdc::calculus
