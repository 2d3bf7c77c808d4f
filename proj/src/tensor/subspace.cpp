#include "ncdc/tensor/subspace.hpp"

#include "ncdc/error.hpp"

#include <algorithm>

namespace ncdc::tensor {

namespace {

void require_same_ambient(const Shape& a, const Shape& b) {
    if (!(a == b)) throw ShapeError("ambient mismatch: " + a.to_string() + " vs " + b.to_string());
}

std::optional<std::size_t> leading_index(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
    return std::nullopt;
}

}  // namespace

Subspace Subspace::full(const Shape& ambient) {
    Subspace s(ambient);
    const std::size_t n = ambient.total_dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = Scalar(1L);
        s.rows_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient_.total_dim())
        throw ShapeError("vector of length " + std::to_string(v.size()) + " in ambient " + ambient_.to_string());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (v[p].is_zero()) continue;
        const Scalar f = -v[p];
        axpy(v, f, rows_[r]);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(Vector v) {
    v = reduce(std::move(v));
    const auto lead = leading_index(v);
    if (!lead) return false;
    const std::size_t p = *lead;
    if (!v[p].is_one()) {
        const Scalar inv = v[p].inverse();
        for (auto& x : v)
            if (!x.is_zero()) x *= inv;
    }
    for (auto& row : rows_) {
        if (row[p].is_zero()) continue;
        const Scalar f = -row[p];
        axpy(row, f, v);
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto offset = at - pivots_.begin();
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
}

Subspace rref_basis(const Shape& ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Containment subspace_contains(const Subspace& s, const Vector& v) {
    if (s.contains(v)) return {};
    return {false, v};
}

Containment subspace_contains(const Subspace& s, const Subspace& t) {
    require_same_ambient(s.ambient(), t.ambient());
    for (const auto& v : t.basis())
        if (!s.contains(v)) return {false, v};
    return {};
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
    require_same_ambient(s.ambient(), t.ambient());
    Subspace r = s.dim() >= t.dim() ? s : t;
    for (const auto& v : (s.dim() >= t.dim() ? t : s).basis()) r.insert(v);
    return r;
}

std::pair<Subspace, Subspace> kernel_image(const LinMap& a) {
    const std::size_t rows = a.cod().total_dim();
    const std::size_t cols = a.dom().total_dim();

    Subspace row_space(a.dom());
    for (std::size_t i = 0; i < rows; ++i) row_space.insert(a.entries().row(i));

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : row_space.pivots()) is_pivot[p] = true;
    Subspace kernel(a.dom());
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector x(cols);
        x[f] = Scalar(1L);
        for (std::size_t r = 0; r < row_space.dim(); ++r)
            if (!row_space.basis()[r][f].is_zero()) x[row_space.pivots()[r]] = -row_space.basis()[r][f];
        kernel.insert(std::move(x));
    }

    Subspace image(a.cod());
    for (std::size_t j = 0; j < cols; ++j) image.insert(a.column(j));

    if (kernel.dim() + image.dim() != cols)
        throw InternalError("rank-nullity violated: kernel " + std::to_string(kernel.dim()) + " + image " +
                            std::to_string(image.dim()) + " != " + std::to_string(cols));
    return {std::move(kernel), std::move(image)};
}

Subspace tensor_with_full(const Subspace& s, const Shape& other, Side side) {
    const Shape amb = side == Side::left ? other * s.ambient() : s.ambient() * other;
    Subspace r(amb);
    for (std::size_t i = 0; i < other.total_dim(); ++i) {
        Vector e(other.total_dim());
        e[i] = Scalar(1L);
        for (const auto& b : s.basis()) r.insert(side == Side::left ? tensor_vectors(e, b) : tensor_vectors(b, e));
    }
    return r;
}

Subspace embed_shifted(const Subspace& s, Side side) {
    if (!s.ambient().is_v_power())
        throw ShapeError("embed_shifted needs a pure power of V, got " + s.ambient().to_string());
    return tensor_with_full(s, Shape::v_power(1, s.ambient().dim_v(), s.ambient().dim_w()), side);
}

}  // namespace ncdc::tensor
