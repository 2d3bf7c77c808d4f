#include "ncdc/calculus/factor.hpp"

#include "ncdc/error.hpp"

namespace ncdc::calculus {

namespace {

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r(i, j).add_product(a(i, k), b(k, j));
        }
    return r;
}

/// id_W ⊗ m for a matrix m.
Matrix w_block(const Matrix& m, std::size_t dim_w) {
    Matrix r(dim_w * m.rows(), dim_w * m.cols());
    for (std::size_t g = 0; g < dim_w; ++g)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) r(g * m.rows() + i, g * m.cols() + j) = m(i, j);
    return r;
}

/// m ⊗ id_W.
Matrix block_w(const Matrix& m, std::size_t dim_w) {
    Matrix r(m.rows() * dim_w, m.cols() * dim_w);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t g = 0; g < dim_w; ++g) r(i * dim_w + g, j * dim_w + g) = m(i, j);
    return r;
}

Vector multiply(const Matrix& m, const Vector& v) {
    Vector out(m.rows());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out[i].add_product(m(i, j), v[j]);
    }
    return out;
}

}  // namespace

FactorCalculus factor_calculus(const InitialData& data, const Presentation& pres) {
    validate(data, pres);
    const GradedIdeal ideal = build_ideal(pres);
    const CalculusTower tower = build_tower(data, pres.max_degree);

    FactorCalculus fc;
    if (pres.is_quadratic()) {
        fc.consistency.push_back(check_linear(data, pres));
        fc.consistency.push_back(check_quadratic(data, pres));
    } else {
        fc.consistency.push_back(check_truncated(tower, ideal, pres.max_degree));
    }
    for (const auto& r : fc.consistency)
        if (!r.pass) throw ConsistencyError(r);

    fc.algebra = build_quotient(pres, ideal);
    const QuotientAlgebra& qa = fc.algebra;
    const std::size_t dw = pres.dim_w;

    fc.d_tilde.emplace_back();
    for (std::size_t n = 1; n <= pres.max_degree; ++n)
        fc.d_tilde.push_back(multiply(w_block(qa.degree(n - 1).reduction, dw),
                                      multiply(tower.d(n).entries(), qa.degree(n).section)));
    for (std::size_t n = 0; n <= pres.max_degree; ++n)
        fc.b_tilde.push_back(multiply(w_block(qa.degree(n).reduction, dw),
                                      multiply(tower.b(n).entries(), block_w(qa.degree(n).section, dw))));

    // the cover square, checked on every word rather than only on generators
    fc.diagram = passing("factor-diagram", "(id_W⊗π)∘d = d̃∘π and (id_W⊗π)∘b = b̃∘(π⊗id_W) on every word");
    for (std::size_t n = 1; n <= pres.max_degree && fc.diagram.pass; ++n) {
        const Shape vn = pres.v_power(n);
        for (std::size_t j = 0; j < vn.total_dim(); ++j) {
            Vector e(vn.total_dim());
            e[j] = Scalar(1L);
            const Vector lhs = qa.reduce_w(n - 1, tower.d(n).column(j));
            const Vector rhs = multiply(fc.d_tilde[n], qa.reduce(n, e));
            if (lhs != rhs) {
                Vector diff = lhs;
                for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= rhs[i];
                fc.diagram = failing(fc.diagram.check, fc.diagram.condition,
                                     {n, "d does not descend through π", {vn, e}, std::nullopt});
                break;
            }
            for (std::size_t g = 0; g < dw; ++g) {
                const std::size_t col = j * dw + g;
                const Vector lb = qa.reduce_w(n, tower.b(n).column(col));
                Vector re(dw * qa.dim(n));
                const Vector red = qa.reduce(n, e);
                for (std::size_t a = 0; a < red.size(); ++a) re[a * dw + g] = red[a];
                if (lb != multiply(fc.b_tilde[n], re)) {
                    Vector x(vn.total_dim() * dw);
                    x[col] = Scalar(1L);
                    fc.diagram = failing(fc.diagram.check, fc.diagram.condition,
                                         {n, "b does not descend through π", {pres.v_power_w(n), x}, std::nullopt});
                    break;
                }
            }
            if (!fc.diagram.pass) break;
        }
    }
    if (!fc.diagram.pass) throw InternalError("consistent data produced a non-commuting cover diagram");
    return fc;
}

GradedElement apply_d_tilde(const FactorCalculus& fc, const GradedElement& reduced) {
    GradedElement out;
    for (const auto& [n, a] : reduced) {
        if (n == 0) continue;
        if (n >= fc.d_tilde.size())
            throw DomainError("degree " + std::to_string(n) + " exceeds the degree bound " +
                              std::to_string(fc.d_tilde.size() - 1));
        Vector image = multiply(fc.d_tilde[n], a);
        auto [it, inserted] = out.emplace(n - 1, image);
        if (!inserted) tensor::axpy(it->second, Scalar(1L), image);
    }
    return out;
}

std::vector<GradedElement> partial_derivatives(const FactorCalculus& fc, const GradedElement& element) {
    const GradedElement reduced = fc.algebra.reduce(element);
    const GradedElement da = apply_d_tilde(fc, reduced);
    const std::size_t dw = fc.algebra.dim_w();
    std::vector<GradedElement> parts(dw);
    for (std::size_t g = 0; g < dw; ++g) {
        for (const auto& [m, v] : da) {
            const std::size_t block = fc.algebra.dim(m);
            parts[g][m] = Vector(v.begin() + static_cast<std::ptrdiff_t>(g * block),
                                 v.begin() + static_cast<std::ptrdiff_t>((g + 1) * block));
        }
    }
    return parts;
}

}  // namespace ncdc::calculus
