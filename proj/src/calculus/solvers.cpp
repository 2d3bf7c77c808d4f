#include "ncdc/calculus/solvers.hpp"

#include "ncdc/error.hpp"

namespace ncdc::calculus {

namespace {

/// {α : Σ_i α_i b_2(k_i⊗w) ∈ W⊗K for all w}, mapped back to V⊗V.
Subspace stable_part(const Subspace& k, const LinMap& b2, std::size_t dim_w) {
    const Shape vv = k.ambient();
    const std::size_t block = vv.total_dim();
    const Shape coeffs = Shape::v_power(1, k.dim(), dim_w);
    // columns: basis vectors of K; rows: (w, γ, word) residuals modulo K
    LinMap constraint(coeffs, Shape::v_power(1, dim_w * dim_w * block, dim_w));
    for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t w = 0; w < dim_w; ++w) {
            Vector e(dim_w);
            e[w] = Scalar(1L);
            const Vector y = b2.apply(tensor::tensor_vectors(k.basis()[i], e));
            for (std::size_t g = 0; g < dim_w; ++g) {
                const Vector slice(y.begin() + static_cast<std::ptrdiff_t>(g * block),
                                   y.begin() + static_cast<std::ptrdiff_t>((g + 1) * block));
                const Vector residual = k.reduce(slice);
                for (std::size_t j = 0; j < block; ++j)
                    constraint((w * dim_w + g) * block + j, i) = residual[j];
            }
        }
    const Subspace alphas = tensor::kernel_image(constraint).first;
    Subspace out(vv);
    for (const auto& a : alphas.basis()) {
        Vector v(block);
        for (std::size_t i = 0; i < a.size(); ++i) tensor::axpy(v, a[i], k.basis()[i]);
        out.insert(std::move(v));
    }
    return out;
}

}  // namespace

OptimalRelations optimal_quadratic_relations(const InitialData& data) {
    const std::size_t dw = data.b0.dom().dim_w();
    const LinMap l = leibniz_map(data.d0, data.b0);
    const LinMap b2 = double_twist(data.b0);

    OptimalRelations res;
    res.kernel_space = tensor::kernel_image(l).first;
    res.optimal = res.kernel_space;
    for (;;) {
        Subspace next = stable_part(res.optimal, b2, dw);
        ++res.iterations;
        if (next.dim() == res.optimal.dim()) break;
        res.optimal = std::move(next);
    }
    res.report = passing("optimal", "largest K ⊆ ker(d0⊗id_V + b0∘(id_V⊗d0)) with b_2(K⊗W) ⊆ W⊗K");
    res.report.notes.push_back("dim K0 = " + std::to_string(res.kernel_space.dim()) +
                               ", dim K* = " + std::to_string(res.optimal.dim()) + " after " +
                               std::to_string(res.iterations) + " refinement step(s)");
    res.report.notes.push_back("b-stability refinement beyond the switch case is an extension");
    return res;
}

Subspace switch_form_space(const InitialData& data) {
    const Shape v = data.d0.dom();
    return tensor::kernel_image(kron(data.d0, LinMap::identity(v))).first;
}

std::vector<LinMap> solve_d0(const LinMap& b0, const LinMap& c) {
    const std::size_t dv = b0.dom().dim_v(), dw = b0.dom().dim_w();
    const Shape v = Shape::v_power(1, dv, dw);
    const Shape w({tensor::Factor::W}, dv, dw);
    const Shape vv = Shape::v_power(2, dv, dw);
    if (!(c.dom() == vv) || !(c.cod() == vv)) throw ShapeError("solve_d0: c must map V⊗V -> V⊗V");

    // unknown d0 ↦ flattened [d0⊗id_V + b0∘(id_V⊗d0)]∘c; unknown index γ·dim V + i
    const std::size_t unknowns = dw * dv;
    const Shape target = Shape::w_v_power(1, dv, dw);
    const std::size_t out_len = target.total_dim() * vv.total_dim();
    LinMap op(Shape::v_power(1, unknowns, dw), Shape::v_power(1, out_len, dw));
    for (std::size_t g = 0; g < dw; ++g)
        for (std::size_t i = 0; i < dv; ++i) {
            LinMap e(v, w);
            e(g, i) = Scalar(1L);
            const LinMap image = compose(leibniz_map(e, b0), c);
            for (std::size_t r = 0; r < target.total_dim(); ++r)
                for (std::size_t s = 0; s < vv.total_dim(); ++s) op(r * vv.total_dim() + s, g * dv + i) = image(r, s);
        }

    std::vector<LinMap> basis;
    const Subspace solutions = tensor::kernel_image(op).first;
    for (const auto& sol : solutions.basis()) {
        LinMap d0(v, w);
        for (std::size_t g = 0; g < dw; ++g)
            for (std::size_t i = 0; i < dv; ++i) d0(g, i) = sol[g * dv + i];
        if (!compose(leibniz_map(d0, b0), c).is_zero()) throw InternalError("solve_d0 returned a non-solution");
        basis.push_back(std::move(d0));
    }
    return basis;
}

}  // namespace ncdc::calculus
