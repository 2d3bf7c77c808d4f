#include "ncdc/calculus/tower.hpp"

#include "ncdc/error.hpp"

namespace ncdc::calculus {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

CalculusTower::CalculusTower(std::vector<LinMap> b, std::vector<LinMap> d)
    : dim_v_(b.at(0).dom().dim_v()), dim_w_(b.at(0).dom().dim_w()), b_(std::move(b)), d_(std::move(d)) {
    if (d_.size() != b_.size()) throw InternalError("b and d towers of different height");
}

const LinMap& CalculusTower::d(std::size_t n) const {
    if (n == 0 || n >= d_.size()) throw DomainError("d is tabulated on degrees 1.." + std::to_string(max_degree()));
    return d_[n];
}

Vector CalculusTower::left_act(std::size_t p, std::size_t u, const Vector& x, std::size_t m) const {
    const std::size_t vm = ipow(dim_v_, m);
    const std::size_t vpm = ipow(dim_v_, p + m);
    const LinMap& bp = b(p);
    Vector out(dim_w_ * vpm);
    for (std::size_t g = 0; g < dim_w_; ++g)
        for (std::size_t y = 0; y < vm; ++y) {
            const Scalar& c = x[g * vm + y];
            if (c.is_zero()) continue;
            const std::size_t col = u * dim_w_ + g;
            for (std::size_t row = 0; row < bp.cod().total_dim(); ++row) {
                const Scalar& e = bp(row, col);
                if (e.is_zero()) continue;
                // row = γ'·V^p + u'  ↦  γ'·V^{p+m} + u'·V^m + y
                out[row * vm + y].add_product(e, c);
            }
        }
    return out;
}

Vector right_concat(const Vector& x, std::size_t v, std::size_t dim_v_pow_r) {
    Vector out(x.size() * dim_v_pow_r);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out[i * dim_v_pow_r + v] = x[i];
    return out;
}

std::vector<LinMap> extend_b(const InitialData& data, std::size_t max_degree) {
    const std::size_t dv = data.b0.dom().dim_v(), dw = data.b0.dom().dim_w();
    std::vector<LinMap> b;
    b.push_back(LinMap::identity(Shape({tensor::Factor::W}, dv, dw)));
    if (max_degree >= 1) b.push_back(data.b0);
    for (std::size_t n = 2; n <= max_degree; ++n) {
        const LinMap& prev = b[n - 1];
        LinMap bn(Shape::v_power_w(n, dv, dw), Shape::w_v_power(n, dv, dw));
        const std::size_t tail = ipow(dv, n - 1);  // V^{n-1}
        const std::size_t prev_cols = tail * dw;
        for (std::size_t v = 0; v < dv; ++v)
            for (std::size_t rw = 0; rw < prev_cols; ++rw) {
                // (id_V ⊗ b_{n-1})(v⊗rest⊗w) = v ⊗ Σ c·(w'⊗y), then b0(v⊗w') ⊗ y
                const std::size_t col = v * prev_cols + rw;
                for (std::size_t r = 0; r < prev.cod().total_dim(); ++r) {
                    const Scalar& c = prev(r, rw);
                    if (c.is_zero()) continue;
                    const std::size_t w1 = r / tail, y = r % tail;
                    const std::size_t b0_col = v * dw + w1;
                    for (std::size_t r0 = 0; r0 < dw * dv; ++r0) {
                        const Scalar& e = data.b0(r0, b0_col);
                        if (!e.is_zero()) bn(r0 * tail + y, col).add_product(e, c);
                    }
                }
            }
        b.push_back(std::move(bn));
    }
    return b;
}

std::vector<LinMap> extend_d(const InitialData& data, std::size_t max_degree) {
    const std::size_t dv = data.b0.dom().dim_v(), dw = data.b0.dom().dim_w();
    std::vector<LinMap> d(1);
    if (max_degree >= 1) d.push_back(data.d0);
    for (std::size_t n = 2; n <= max_degree; ++n) {
        const LinMap& prev = d[n - 1];
        LinMap dn(Shape::v_power(n, dv, dw), Shape::w_v_power(n - 1, dv, dw));
        const std::size_t tail = ipow(dv, n - 1);  // V^{n-1}
        const std::size_t inner = ipow(dv, n - 2);  // V^{n-2}
        for (std::size_t v = 0; v < dv; ++v)
            for (std::size_t rest = 0; rest < tail; ++rest) {
                const std::size_t col = v * tail + rest;
                // d0(v) ⊗ rest
                for (std::size_t g = 0; g < dw; ++g)
                    if (!data.d0(g, v).is_zero()) dn(g * tail + rest, col) += data.d0(g, v);
                // b0(v ⊗ w') ⊗ y  for d_{n-1}(rest) = Σ c·(w'⊗y)
                for (std::size_t r = 0; r < prev.cod().total_dim(); ++r) {
                    const Scalar& c = prev(r, rest);
                    if (c.is_zero()) continue;
                    const std::size_t w1 = r / inner, y = r % inner;
                    const std::size_t b0_col = v * dw + w1;
                    for (std::size_t r0 = 0; r0 < dw * dv; ++r0) {
                        const Scalar& e = data.b0(r0, b0_col);
                        if (!e.is_zero()) dn(r0 * inner + y, col).add_product(e, c);
                    }
                }
            }
        d.push_back(std::move(dn));
    }
    return d;
}

CalculusTower build_tower(const InitialData& data, std::size_t max_degree) {
    return CalculusTower(extend_b(data, max_degree), extend_d(data, max_degree));
}

namespace {

TensorVector word_vector(const Shape& shape, std::size_t index) {
    Vector v(shape.total_dim());
    v[index] = Scalar(1L);
    return {shape, std::move(v)};
}

}  // namespace

Report verify_leibniz(const CalculusTower& tower, std::size_t max_degree) {
    const char* name = "leibniz";
    const char* cond = "d(u⊗v) = d(u).v + u.d(v) for every split of every word";
    const std::size_t dv = tower.dim_v(), dw = tower.dim_w();
    for (std::size_t n = 2; n <= max_degree; ++n)
        for (std::size_t p = 1; p < n; ++p) {
            const std::size_t r = n - p;
            const std::size_t vr = ipow(dv, r);
            for (std::size_t u = 0; u < ipow(dv, p); ++u)
                for (std::size_t v = 0; v < vr; ++v) {
                    const std::size_t word = u * vr + v;
                    const Vector lhs = tower.d(n).column(word);
                    Vector rhs = right_concat(tower.d(p).column(u), v, vr);
                    const Vector right = tower.left_act(p, u, tower.d(r).column(v), r - 1);
                    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += right[i];
                    if (lhs != rhs) {
                        Vector diff = lhs;
                        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= rhs[i];
                        return failing(name, cond,
                                       {n, "split " + std::to_string(p) + "+" + std::to_string(r) + " violated",
                                        word_vector(Shape::v_power(n, dv, dw), word),
                                        TensorVector{Shape::w_v_power(n - 1, dv, dw), diff}});
                    }
                }
        }
    return passing(name, cond);
}

Report verify_coherence(const CalculusTower& tower, std::size_t max_degree) {
    const char* name = "coherence";
    const char* cond = "b_{p+r} = (b_p ⊗ id) ∘ (id ⊗ b_r) for every split";
    const std::size_t dv = tower.dim_v(), dw = tower.dim_w();
    for (std::size_t n = 2; n <= max_degree; ++n)
        for (std::size_t p = 1; p < n; ++p) {
            const std::size_t r = n - p;
            const std::size_t vr = ipow(dv, r);
            for (std::size_t v = 0; v < vr; ++v)
                for (std::size_t g = 0; g < dw; ++g) {
                    // (id ⊗ b_r)(u⊗v⊗w) = u ⊗ b_r(v⊗w), then b_p acts on u ⊗ (W part)
                    const Vector inner = tower.b(r).column(v * dw + g);
                    for (std::size_t u = 0; u < ipow(dv, p); ++u) {
                        const std::size_t col = (u * vr + v) * dw + g;
                        const Vector rhs = tower.left_act(p, u, inner, r);
                        const LinMap& bn = tower.b(n);
                        bool equal = true;
                        for (std::size_t i = 0; equal && i < rhs.size(); ++i) equal = bn(i, col) == rhs[i];
                        if (!equal) {
                            Vector diff = bn.column(col);
                            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= rhs[i];
                            return failing(name, cond,
                                           {n, "split " + std::to_string(p) + "+" + std::to_string(r) + " violated",
                                            word_vector(Shape::v_power_w(n, dv, dw), col),
                                            TensorVector{Shape::w_v_power(n, dv, dw), diff}});
                        }
                    }
                }
        }
    return passing(name, cond);
}

}  // namespace ncdc::calculus
