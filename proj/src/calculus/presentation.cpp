#include "ncdc/calculus/presentation.hpp"

#include "ncdc/error.hpp"

#include <algorithm>

namespace ncdc::calculus {

bool Presentation::is_quadratic() const {
    return std::all_of(relations.begin(), relations.end(), [](const Relation& r) { return r.length == 2; });
}

std::size_t Presentation::max_relation_length() const {
    std::size_t m = 0;
    for (const auto& r : relations) m = std::max(m, r.length);
    return m;
}

Subspace Presentation::quadratic_space() const {
    Subspace k(v_power(2));
    for (const auto& r : relations)
        if (r.length == 2) k.insert(r.coords);
    return k;
}

void validate(const Presentation& pres) {
    if (pres.v_names.size() != pres.dim_v)
        throw ShapeError("V: " + std::to_string(pres.v_names.size()) + " names for dimension " +
                         std::to_string(pres.dim_v));
    if (pres.w_names.size() != pres.dim_w)
        throw ShapeError("W: " + std::to_string(pres.w_names.size()) + " names for dimension " +
                         std::to_string(pres.dim_w));
    if (pres.max_degree < 2) throw DomainError("max_degree must be at least 2");
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        const Relation& r = pres.relations[i];
        const std::string where = "relations[" + std::to_string(i) + "]";
        if (r.length < 2) throw DomainError(where + ": relation words must have length >= 2");
        if (r.length > pres.max_degree)
            throw DomainError(where + ": length " + std::to_string(r.length) + " exceeds max_degree " +
                              std::to_string(pres.max_degree));
        if (r.coords.size() != pres.v_power(r.length).total_dim())
            throw ShapeError(where + ": coordinate vector does not match V^" + std::to_string(r.length));
    }
    if (pres.twist_c) {
        const LinMap& c = *pres.twist_c;
        if (!(c.dom() == pres.v_power(2)) || !(c.cod() == pres.v_power(2)))
            throw ShapeError("c: expected a map V⊗V -> V⊗V");
        const Subspace image = tensor::kernel_image(c).second;
        if (!(image == pres.quadratic_space()))
            throw DomainError("c: image of the twist (dim " + std::to_string(image.dim()) +
                              ") differs from the span of the quadratic relations (dim " +
                              std::to_string(pres.quadratic_space().dim()) + ")");
    }
}

void validate(const InitialData& data, const Presentation& pres) {
    const Shape v = pres.v_power(1);
    if (!(data.d0.dom() == v) || !(data.d0.cod() == pres.w_shape()))
        throw ShapeError("d0: expected a map V -> W");
    if (!(data.b0.dom() == pres.v_power_w(1)) || !(data.b0.cod() == pres.w_v_power(1)))
        throw ShapeError("b0: expected a map V⊗W -> W⊗V");
}

LinMap switch_map(std::size_t dim_v, std::size_t dim_w) {
    const Shape dom = Shape::v_power_w(1, dim_v, dim_w);
    const Shape cod = Shape::w_v_power(1, dim_v, dim_w);
    LinMap s(dom, cod);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t g = 0; g < dim_w; ++g) s(cod.index({g, i}), dom.index({i, g})) = Scalar(1L);
    return s;
}

LinMap flip_vv(std::size_t dim_v, std::size_t dim_w) {
    const Shape s = Shape::v_power(2, dim_v, dim_w);
    LinMap f(s, s);
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_v; ++j) f(s.index({j, i}), s.index({i, j})) = Scalar(1L);
    return f;
}

Presentation free_presentation(std::size_t dim_v, std::size_t dim_w, std::size_t max_degree) {
    Presentation p;
    p.dim_v = dim_v;
    p.dim_w = dim_w;
    for (std::size_t i = 0; i < dim_v; ++i) p.v_names.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < dim_w; ++i) p.w_names.push_back("w" + std::to_string(i));
    p.max_degree = max_degree;
    return p;
}

}  // namespace ncdc::calculus
