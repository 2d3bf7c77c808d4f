#include "ncdc/calculus/checks.hpp"

#include "ncdc/error.hpp"

#include <map>

namespace ncdc::calculus {

namespace {

void require_quadratic(const Presentation& pres, const char* op) {
    if (!pres.is_quadratic())
        throw DomainError(std::string(op) + " needs a quadratic presentation; relations of length " +
                          std::to_string(pres.max_relation_length()) + " present");
}

Vector unit(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = Scalar(1L);
    return e;
}

/// x ∈ W⊗V^{⊗n} lies in W⊗I iff each of its W-slices lies in I.
std::optional<std::size_t> first_slice_outside(const Vector& x, const Subspace& ideal_part, std::size_t dim_w) {
    const std::size_t block = ideal_part.ambient().total_dim();
    for (std::size_t g = 0; g < dim_w; ++g) {
        Vector slice(x.begin() + static_cast<std::ptrdiff_t>(g * block),
                     x.begin() + static_cast<std::ptrdiff_t>((g + 1) * block));
        if (!ideal_part.contains(slice)) return g;
    }
    return std::nullopt;
}

}  // namespace

LinMap leibniz_map(const LinMap& d0, const LinMap& b0) {
    const Shape v = d0.dom();
    return add_maps(kron(d0, LinMap::identity(v)), compose(b0, kron(LinMap::identity(v), d0)));
}

LinMap double_twist(const LinMap& b0) {
    const std::size_t dv = b0.dom().dim_v(), dw = b0.dom().dim_w();
    const LinMap id_v = LinMap::identity(Shape::v_power(1, dv, dw));
    return compose(kron(b0, id_v), kron(id_v, b0));
}

LinMap effective_twist(const Presentation& pres) {
    if (pres.twist_c) return *pres.twist_c;
    const Subspace k = pres.quadratic_space();
    const Shape vv = pres.v_power(2);
    LinMap c(vv, vv);
    for (std::size_t j = 0; j < vv.total_dim(); ++j) {
        Vector col = unit(vv.total_dim(), j);
        const Vector rest = k.reduce(col);
        for (std::size_t i = 0; i < col.size(); ++i) col[i] -= rest[i];
        c.entries().set_column(j, col);
    }
    return c;
}

Report check_linear(const InitialData& data, const Presentation& pres) {
    require_quadratic(pres, "check_linear");
    const char* name = "linear";
    const char* cond = "d K = 0, i.e. [d0⊗id_V + b0∘(id_V⊗d0)] vanishes on K";
    const LinMap l = leibniz_map(data.d0, data.b0);
    const Subspace k = pres.quadratic_space();

    std::optional<Witness> witness;
    for (const auto& kv : k.basis()) {
        Vector image = l.apply(kv);
        if (!tensor::is_zero(image)) {
            witness = Witness{2, "d maps a relation to a nonzero 1-form", {pres.v_power(2), kv},
                              TensorVector{pres.w_v_power(1), std::move(image)}};
            break;
        }
    }

    const bool operator_route = compose(l, effective_twist(pres)).is_zero();
    if (operator_route != !witness)
        throw InternalError("check_linear: basis route and twist route disagree");

    Report r = witness ? failing(name, cond, *witness) : passing(name, cond);
    if (!pres.twist_c) r.notes.push_back("twist c synthesized as the projection onto K along normal-form words");
    return r;
}

Report check_quadratic(const InitialData& data, const Presentation& pres) {
    require_quadratic(pres, "check_quadratic");
    const char* name = "quadratic";
    const char* cond = "(b0⊗id_V)∘(id_V⊗b0)(K⊗W) ⊆ W⊗K";
    const LinMap b2 = double_twist(data.b0);
    const Subspace k = pres.quadratic_space();
    const Subspace wk = tensor::tensor_with_full(k, pres.w_shape(), tensor::Side::left);

    Subspace image(pres.w_v_power(2));
    for (const auto& kv : k.basis())
        for (std::size_t g = 0; g < pres.dim_w; ++g) {
            const Vector x = tensor::tensor_vectors(kv, unit(pres.dim_w, g));
            Vector y = b2.apply(x);
            if (!wk.contains(y))
                return failing(name, cond,
                               {2, "b_2(k⊗w) leaves W⊗K", {pres.v_power_w(2), x},
                                TensorVector{pres.w_v_power(2), std::move(y)}});
            image.insert(std::move(y));
        }
    Report r = passing(name, cond);
    r.notes.push_back("dim b_2(K⊗W) = " + std::to_string(image.dim()) + ", dim W⊗K = " + std::to_string(wk.dim()));
    return r;
}

Report check_operator_form(const InitialData& data, const Presentation& pres) {
    require_quadratic(pres, "check_operator_form");
    const char* name = "operator-form";
    const char* cond = "b^ρ(K) ⊆ End(W)⊗K";
    const LinMap b2 = double_twist(data.b0);
    const Subspace k = pres.quadratic_space();
    const std::size_t dw = pres.dim_w, vv = pres.v_power(2).total_dim();

    std::optional<Witness> witness;
    for (std::size_t r = 0; r < k.dim() && !witness; ++r) {
        const Vector& kv = k.basis()[r];
        // b^ρ(k) = Σ_{out,in} E_{out,in} ⊗ coeff(out, in); coeff(out, in)[word] = Σ_u k[u]·b2[(out,word),(u,in)]
        for (std::size_t in = 0; in < dw && !witness; ++in)
            for (std::size_t out = 0; out < dw && !witness; ++out) {
                Vector coeff(vv);
                for (std::size_t word = 0; word < vv; ++word)
                    for (std::size_t u = 0; u < vv; ++u) {
                        if (kv[u].is_zero()) continue;
                        const Scalar& e = b2(out * vv + word, u * dw + in);
                        if (!e.is_zero()) coeff[word].add_product(kv[u], e);
                    }
                if (!k.contains(coeff))
                    witness = Witness{2,
                                      "End(W) component (" + pres.w_names[out] + " <- " + pres.w_names[in] +
                                          ") of b^ρ(k) is not in K",
                                      {pres.v_power_w(2), tensor::tensor_vectors(kv, unit(dw, in))},
                                      TensorVector{pres.v_power(2), std::move(coeff)}};
            }
    }
    Report rep = witness ? failing(name, cond, *witness) : passing(name, cond);
    if (check_quadratic(data, pres).pass != rep.pass)
        throw InternalError("check_operator_form disagrees with check_quadratic");
    return rep;
}

BraidResult check_braid(const LinMap& b0, const LinMap& c) {
    const std::size_t dv = b0.dom().dim_v(), dw = b0.dom().dim_w();
    const Shape vv = Shape::v_power(2, dv, dw);
    if (!(c.dom() == vv) || !(c.cod() == vv)) throw ShapeError("check_braid: c must map V⊗V -> V⊗V");
    const char* name = "braid";
    const char* cond = "(b0⊗id)(id⊗b0)(c⊗id_W) = (id_W⊗c)(b0⊗id)(id⊗b0) on V⊗V⊗W";
    const Shape w({tensor::Factor::W}, dv, dw);
    const LinMap b2 = double_twist(b0);
    const LinMap lhs = compose(b2, kron(c, LinMap::identity(w)));
    const LinMap rhs = compose(kron(LinMap::identity(w), c), b2);
    for (std::size_t j = 0; j < lhs.dom().total_dim(); ++j) {
        Vector l = lhs.column(j);
        const Vector r = rhs.column(j);
        if (l == r) continue;
        for (std::size_t i = 0; i < l.size(); ++i) l[i] -= r[i];
        return {failing(name, cond,
                        {2, "both sides differ on a basis vector", {lhs.dom(), unit(lhs.dom().total_dim(), j)},
                         TensorVector{lhs.cod(), std::move(l)}}),
                std::nullopt};
    }
    Report rep = passing(name, cond);
    rep.notes.push_back("intertwiner a = (b0⊗id_V)∘(id_V⊗b0) satisfies b_2∘(c⊗id_W) = (id_W⊗c)∘a");
    return {rep, b2};
}

Report check_truncated(const CalculusTower& tower, const GradedIdeal& ideal, std::size_t max_degree) {
    if (max_degree > ideal.max_degree() || max_degree > tower.max_degree())
        throw DomainError("check_truncated: degree " + std::to_string(max_degree) + " exceeds the presentation bound " +
                          std::to_string(std::min(ideal.max_degree(), tower.max_degree())));
    const char* name = "truncated";
    const char* cond = "d I + b(I⊗W) ⊆ W⊗I, degree by degree";
    const std::size_t dv = tower.dim_v(), dw = tower.dim_w();
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const Subspace& in = ideal.component(n);
        for (const auto& kv : in.basis()) {
            Vector y = tower.d(n).apply(kv);
            if (first_slice_outside(y, ideal.component(n - 1), dw))
                return failing(name, cond,
                               {n, "d I_n is not contained in W⊗I_" + std::to_string(n - 1),
                                {Shape::v_power(n, dv, dw), kv}, TensorVector{Shape::w_v_power(n - 1, dv, dw), y}});
        }
        for (const auto& kv : in.basis())
            for (std::size_t g = 0; g < dw; ++g) {
                const Vector x = tensor::tensor_vectors(kv, unit(dw, g));
                Vector y = tower.b(n).apply(x);
                if (first_slice_outside(y, in, dw))
                    return failing(name, cond,
                                   {n, "b_n(I_n⊗W) is not contained in W⊗I_n", {Shape::v_power_w(n, dv, dw), x},
                                    TensorVector{Shape::w_v_power(n, dv, dw), y}});
            }
    }
    Report r = passing(name, cond);
    r.notes.push_back("checked degrees 1.." + std::to_string(max_degree));
    return r;
}

Report check_truncated(const InitialData& data, const GradedIdeal& ideal, std::size_t max_degree) {
    if (max_degree > ideal.max_degree())
        throw DomainError("check_truncated: degree " + std::to_string(max_degree) + " exceeds the presentation bound " +
                          std::to_string(ideal.max_degree()));
    return check_truncated(build_tower(data, max_degree), ideal, max_degree);
}

Report universal_delta_check(const InitialData& data, std::size_t max_degree) {
    const char* name = "universal-delta";
    const char* cond = "d = Φ_d ∘ δ with δ(u) = u⊗1 - 1⊗u";
    const std::size_t dv = data.b0.dom().dim_v(), dw = data.b0.dom().dim_w();
    const CalculusTower tower = build_tower(data, max_degree);

    using Word = std::vector<std::size_t>;
    using TensorSquare = std::map<std::pair<Word, Word>, Scalar>;
    const auto add_term = [](TensorSquare& t, const Word& a, const Word& b, const Scalar& c) {
        Scalar& slot = t[{a, b}];
        slot += c;
        if (slot.is_zero()) t.erase({a, b});
    };
    const auto index_of = [dv](const Word& w, std::size_t from, std::size_t to) {
        std::size_t idx = 0;
        for (std::size_t i = from; i < to; ++i) idx = idx * dv + w[i];
        return idx;
    };

    // degree 0: δ(1) = 1⊗1 - 1⊗1 vanishes, matching d(1) = 0
    {
        TensorSquare delta;
        add_term(delta, {}, {}, Scalar(1L));
        add_term(delta, {}, {}, Scalar(-1L));
        if (!delta.empty()) throw InternalError("δ(1) is not zero");
    }

    for (std::size_t n = 1; n <= max_degree; ++n) {
        const Shape vn = Shape::v_power(n, dv, dw);
        for (std::size_t u = 0; u < vn.total_dim(); ++u) {
            const Word word = vn.multi_index(u);

            TensorSquare delta;
            add_term(delta, word, {}, Scalar(1L));
            add_term(delta, {}, word, Scalar(-1L));

            // δ(u) = Σ_k prefix_k . δ(v_k) . suffix_k, expanded in TV⊗TV
            TensorSquare telescoped;
            for (std::size_t k = 0; k < n; ++k) {
                const Word prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
                const Word prefix_v(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k + 1));
                const Word suffix(word.begin() + static_cast<std::ptrdiff_t>(k + 1), word.end());
                const Word v_suffix(word.begin() + static_cast<std::ptrdiff_t>(k), word.end());
                add_term(telescoped, prefix_v, suffix, Scalar(1L));
                add_term(telescoped, prefix, v_suffix, Scalar(-1L));
            }
            if (telescoped != delta) throw InternalError("telescoping expansion of δ(u) is wrong");

            // Φ_d term-wise: Φ_d(x⊗y) = d(x).y, with d on lower degrees from the tower
            Vector termwise(dw * ipow(dv, n - 1));
            for (const auto& [key, c] : telescoped) {
                const auto& [x, y] = key;
                if (x.empty()) continue;  // d(1) = 0
                Vector dx = tower.d(x.size()).column(index_of(x, 0, x.size()));
                tensor::axpy(termwise, c, right_concat(dx, index_of(y, 0, y.size()), ipow(dv, y.size())));
            }

            // Φ_d as a bimodule map: Σ_k prefix_k . d0(v_k) . suffix_k, using only d0 and the b-tower
            Vector expanded(dw * ipow(dv, n - 1));
            for (std::size_t k = 0; k < n; ++k) {
                const Vector d0v = data.d0.column(word[k]);
                const Vector left = tower.left_act(k, index_of(word, 0, k), d0v, 0);
                const Vector full = right_concat(left, index_of(word, k + 1, n), ipow(dv, n - k - 1));
                tensor::axpy(expanded, Scalar(1L), full);
            }

            const Vector direct = tower.d(n).column(u);
            if (termwise != direct || expanded != direct) {
                Vector diff = expanded;
                for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= direct[i];
                return failing(name, cond,
                               {n, "Φ_d(δu) differs from d(u)", {vn, unit(vn.total_dim(), u)},
                                TensorVector{Shape::w_v_power(n - 1, dv, dw), diff}});
            }
        }
    }
    Report r = passing(name, cond);
    r.notes.push_back("all words of degree <= " + std::to_string(max_degree));
    return r;
}

}  // namespace ncdc::calculus
