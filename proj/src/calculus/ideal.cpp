#include "ncdc/calculus/ideal.hpp"

namespace ncdc::calculus {

namespace {

GradedIdeal grow(std::size_t dim_v, std::size_t dim_w, std::size_t max_degree,
                 const std::vector<std::vector<Vector>>& generators_by_degree) {
    std::vector<Subspace> comps;
    comps.reserve(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        Subspace k(Shape::v_power(n, dim_v, dim_w));
        if (n >= 1 && comps[n - 1].dim() > 0) {
            k = tensor::embed_shifted(comps[n - 1], tensor::Side::left);
            const Subspace right = tensor::embed_shifted(comps[n - 1], tensor::Side::right);
            for (const auto& v : right.basis()) k.insert(v);
        }
        if (n < generators_by_degree.size())
            for (const auto& g : generators_by_degree[n]) k.insert(g);
        comps.push_back(std::move(k));
    }
    return GradedIdeal(std::move(comps));
}

}  // namespace

GradedIdeal build_ideal(const Presentation& pres) {
    std::vector<std::vector<Vector>> gens(pres.max_degree + 1);
    for (const auto& r : pres.relations)
        if (r.length <= pres.max_degree) gens[r.length].push_back(r.coords);
    return grow(pres.dim_v, pres.dim_w, pres.max_degree, gens);
}

GradedIdeal quadratic_ideal(const Subspace& k, std::size_t max_degree) {
    std::vector<std::vector<Vector>> gens(3);
    gens[2] = k.basis();
    return grow(k.ambient().dim_v(), k.ambient().dim_w(), max_degree, gens);
}

}  // namespace ncdc::calculus
