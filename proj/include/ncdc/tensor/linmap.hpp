#pragma once

#include "ncdc/exact/scalar.hpp"
#include "ncdc/tensor/shape.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ncdc::tensor {

using exact::Scalar;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// A k-linear map between tensor components. Entries act on coordinate
/// columns: cod.total_dim() rows by dom.total_dim() columns.
class LinMap {
public:
    LinMap() = default;
    LinMap(Shape dom, Shape cod);
    LinMap(Shape dom, Shape cod, Matrix entries);

    static LinMap identity(const Shape& s);
    static LinMap zero(const Shape& dom, const Shape& cod) { return LinMap(dom, cod); }

    const Shape& dom() const noexcept { return dom_; }
    const Shape& cod() const noexcept { return cod_; }
    const Matrix& entries() const noexcept { return m_; }
    Matrix& entries() noexcept { return m_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    Vector apply(const Vector& x) const;
    Vector column(std::size_t j) const { return m_.column(j); }
    bool is_zero() const { return m_.is_zero(); }
    LinMap scaled(const Scalar& s) const;

    friend bool operator==(const LinMap& a, const LinMap& b) = default;

private:
    Shape dom_;
    Shape cod_;
    Matrix m_;
};

/// (kron(A,B))·(x⊗y) = (A·x)⊗(B·y).
LinMap kron(const LinMap& a, const LinMap& b);
/// a ∘ b; requires b.cod() == a.dom().
LinMap compose(const LinMap& a, const LinMap& b);
LinMap add_maps(const LinMap& a, const LinMap& b);
LinMap sub_maps(const LinMap& a, const LinMap& b);

/// v ⊗ w on coordinate vectors with the global index convention.
Vector tensor_vectors(const Vector& v, const Vector& w);
bool is_zero(const Vector& v);
/// y += f * x
void axpy(Vector& y, const Scalar& f, const Vector& x);

/// Row-major list of rows with canonical scalar spellings.
std::vector<std::vector<std::string>> serialize(const Matrix& m);
Matrix deserialize(const std::vector<std::vector<std::string>>& rows, std::size_t expect_rows, std::size_t expect_cols);

}  // namespace ncdc::tensor
