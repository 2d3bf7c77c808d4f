#include "ncdc/tensor/shape.hpp"

#include "ncdc/error.hpp"

#include <algorithm>

namespace ncdc::tensor {

Shape::Shape(std::vector<Factor> factors, std::size_t dim_v, std::size_t dim_w)
    : factors_(std::move(factors)), dim_v_(dim_v), dim_w_(dim_w) {
    for (std::size_t k = 0; k < factors_.size(); ++k) total_ *= factor_dim(k);
}

Shape Shape::v_power(std::size_t n, std::size_t dim_v, std::size_t dim_w) {
    return Shape(std::vector<Factor>(n, Factor::V), dim_v, dim_w);
}

Shape Shape::w_v_power(std::size_t n, std::size_t dim_v, std::size_t dim_w) {
    std::vector<Factor> f(n + 1, Factor::V);
    f.front() = Factor::W;
    return Shape(std::move(f), dim_v, dim_w);
}

Shape Shape::v_power_w(std::size_t n, std::size_t dim_v, std::size_t dim_w) {
    std::vector<Factor> f(n + 1, Factor::V);
    f.back() = Factor::W;
    return Shape(std::move(f), dim_v, dim_w);
}

bool Shape::is_v_power() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [](Factor f) { return f == Factor::V; });
}

std::size_t Shape::count(Factor f) const noexcept {
    return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), f));
}

std::size_t Shape::index(const std::vector<std::size_t>& multi) const {
    if (multi.size() != factors_.size()) throw ShapeError("multi-index length mismatch for " + to_string());
    std::size_t idx = 0;
    for (std::size_t k = 0; k < multi.size(); ++k) {
        if (multi[k] >= factor_dim(k)) throw ShapeError("multi-index out of range for " + to_string());
        idx = idx * factor_dim(k) + multi[k];
    }
    return idx;
}

std::vector<std::size_t> Shape::multi_index(std::size_t index) const {
    if (index >= total_) throw ShapeError("index out of range for " + to_string());
    std::vector<std::size_t> multi(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        const std::size_t d = factor_dim(k);
        multi[k] = index % d;
        index /= d;
    }
    return multi;
}

Shape operator*(const Shape& a, const Shape& b) {
    if (a.dim_v_ != b.dim_v_ || a.dim_w_ != b.dim_w_)
        throw ShapeError("tensor product of shapes over different V/W: " + a.to_string() + ", " + b.to_string());
    std::vector<Factor> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return Shape(std::move(f), a.dim_v_, a.dim_w_);
}

std::vector<std::string> Shape::factor_names() const {
    std::vector<std::string> names;
    for (Factor f : factors_) names.emplace_back(f == Factor::V ? "V" : "W");
    return names;
}

std::string Shape::to_string() const {
    if (factors_.empty()) return "k";
    std::string s;
    for (Factor f : factors_) {
        if (!s.empty()) s += "⊗";
        s += f == Factor::V ? 'V' : 'W';
    }
    return s;
}

}  // namespace ncdc::tensor
