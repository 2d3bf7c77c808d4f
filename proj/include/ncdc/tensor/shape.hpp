#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ncdc::tensor {

enum class Factor : char { V, W };

/// An ordered tensor product of copies of V and W. Basis vectors are
/// enumerated lexicographically with the leftmost factor most significant;
/// this is the one index convention used everywhere, including file I/O.
class Shape {
public:
    Shape() = default;
    Shape(std::vector<Factor> factors, std::size_t dim_v, std::size_t dim_w);

    static Shape v_power(std::size_t n, std::size_t dim_v, std::size_t dim_w);
    /// W ⊗ V^{⊗n}
    static Shape w_v_power(std::size_t n, std::size_t dim_v, std::size_t dim_w);
    /// V^{⊗n} ⊗ W
    static Shape v_power_w(std::size_t n, std::size_t dim_v, std::size_t dim_w);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t rank() const noexcept { return factors_.size(); }
    std::size_t dim_v() const noexcept { return dim_v_; }
    std::size_t dim_w() const noexcept { return dim_w_; }
    std::size_t factor_dim(std::size_t k) const { return factors_[k] == Factor::V ? dim_v_ : dim_w_; }
    std::size_t total_dim() const noexcept { return total_; }

    bool is_v_power() const noexcept;
    std::size_t count(Factor f) const noexcept;

    std::size_t index(const std::vector<std::size_t>& multi) const;
    std::vector<std::size_t> multi_index(std::size_t index) const;

    /// Concatenation: the shape of a tensor product.
    friend Shape operator*(const Shape& a, const Shape& b);
    friend bool operator==(const Shape& a, const Shape& b) = default;

    /// "W⊗V⊗V"; the empty product prints as "k".
    std::string to_string() const;
    std::vector<std::string> factor_names() const;

private:
    std::vector<Factor> factors_;
    std::size_t dim_v_ = 0;
    std::size_t dim_w_ = 0;
    std::size_t total_ = 1;
};

}  // namespace ncdc::tensor
