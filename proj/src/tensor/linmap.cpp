#include "ncdc/tensor/linmap.hpp"

#include "ncdc/error.hpp"

#include <algorithm>

namespace ncdc::tensor {

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

LinMap::LinMap(Shape dom, Shape cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(cod_.total_dim(), dom_.total_dim()) {}

LinMap::LinMap(Shape dom, Shape cod, Matrix entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(entries)) {
    if (m_.rows() != cod_.total_dim() || m_.cols() != dom_.total_dim())
        throw ShapeError("matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + ", map " +
                         dom_.to_string() + " -> " + cod_.to_string() + " needs " + std::to_string(cod_.total_dim()) +
                         "x" + std::to_string(dom_.total_dim()));
}

LinMap LinMap::identity(const Shape& s) {
    LinMap id(s, s);
    for (std::size_t i = 0; i < s.total_dim(); ++i) id(i, i) = Scalar(1L);
    return id;
}

Vector LinMap::apply(const Vector& x) const {
    if (x.size() != dom_.total_dim())
        throw ShapeError("vector of length " + std::to_string(x.size()) + " applied to map on " + dom_.to_string());
    Vector y(cod_.total_dim());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (!m_(i, j).is_zero()) y[i].add_product(m_(i, j), x[j]);
    }
    return y;
}

LinMap LinMap::scaled(const Scalar& s) const {
    LinMap r = *this;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!r(i, j).is_zero()) r(i, j) *= s;
    return r;
}

LinMap kron(const LinMap& a, const LinMap& b) {
    LinMap r(a.dom() * b.dom(), a.cod() * b.cod());
    const std::size_t br = b.cod().total_dim();
    const std::size_t bc = b.dom().total_dim();
    for (std::size_t i1 = 0; i1 < a.cod().total_dim(); ++i1)
        for (std::size_t j1 = 0; j1 < a.dom().total_dim(); ++j1) {
            const Scalar& x = a(i1, j1);
            if (x.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < br; ++i2)
                for (std::size_t j2 = 0; j2 < bc; ++j2) {
                    const Scalar& y = b(i2, j2);
                    if (!y.is_zero()) r(i1 * br + i2, j1 * bc + j2) = x * y;
                }
        }
    return r;
}

LinMap compose(const LinMap& a, const LinMap& b) {
    if (!(b.cod() == a.dom()))
        throw ShapeError("cannot compose " + a.dom().to_string() + " -> " + a.cod().to_string() + " after " +
                         b.dom().to_string() + " -> " + b.cod().to_string());
    LinMap r(b.dom(), a.cod());
    const std::size_t inner = a.dom().total_dim();
    for (std::size_t i = 0; i < a.cod().total_dim(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.dom().total_dim(); ++j)
                if (!b(k, j).is_zero()) r(i, j).add_product(x, b(k, j));
        }
    return r;
}

namespace {

void require_same_shapes(const LinMap& a, const LinMap& b) {
    if (!(a.dom() == b.dom()) || !(a.cod() == b.cod()))
        throw ShapeError("shape mismatch: " + a.dom().to_string() + " -> " + a.cod().to_string() + " vs " +
                         b.dom().to_string() + " -> " + b.cod().to_string());
}

}  // namespace

LinMap add_maps(const LinMap& a, const LinMap& b) {
    require_same_shapes(a, b);
    LinMap r = a;
    for (std::size_t i = 0; i < r.cod().total_dim(); ++i)
        for (std::size_t j = 0; j < r.dom().total_dim(); ++j)
            if (!b(i, j).is_zero()) r(i, j) += b(i, j);
    return r;
}

LinMap sub_maps(const LinMap& a, const LinMap& b) {
    require_same_shapes(a, b);
    return add_maps(a, b.scaled(Scalar(-1L)));
}

Vector tensor_vectors(const Vector& v, const Vector& w) {
    Vector r(v.size() * w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) r[i * w.size() + j] = v[i] * w[j];
    }
    return r;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& y, const Scalar& f, const Vector& x) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].add_product(f, x[i]);
}

std::vector<std::vector<std::string>> serialize(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j).to_string());
    return rows;
}

Matrix deserialize(const std::vector<std::vector<std::string>>& rows, std::size_t expect_rows,
                   std::size_t expect_cols) {
    if (rows.size() != expect_rows)
        throw ShapeError("expected " + std::to_string(expect_rows) + " rows, got " + std::to_string(rows.size()));
    Matrix m(expect_rows, expect_cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != expect_cols)
            throw ShapeError("row " + std::to_string(i) + ": expected " + std::to_string(expect_cols) +
                             " entries, got " + std::to_string(rows[i].size()));
        for (std::size_t j = 0; j < expect_cols; ++j) m(i, j) = Scalar::parse(rows[i][j]);
    }
    return m;
}

}  // namespace ncdc::tensor
