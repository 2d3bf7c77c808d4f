#pragma once

#include "ncdc/tensor/linmap.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ncdc::tensor {

/// A subspace held as a reduced row-echelon basis. Pivots are the leftmost
/// nonzero column of each row, every pivot entry is 1, and rows are sorted by
/// pivot, so the basis is a canonical function of the subspace.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Shape ambient) : ambient_(std::move(ambient)) {}

    static Subspace full(const Shape& ambient);

    const Shape& ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vector>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Adds v to the span. Returns false if v was already a member.
    bool insert(Vector v);

    /// v minus its projection along the basis onto the pivot coordinates;
    /// zero exactly when v is a member.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Shape ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

struct Containment {
    bool holds = true;
    std::optional<Vector> witness;  // first basis vector of the candidate not in the container
};

Subspace rref_basis(const Shape& ambient, const std::vector<Vector>& vectors);
Containment subspace_contains(const Subspace& s, const Subspace& t);
Containment subspace_contains(const Subspace& s, const Vector& v);
Subspace subspace_sum(const Subspace& s, const Subspace& t);

/// Kernel in dom and image in cod; rank–nullity is checked on every call.
std::pair<Subspace, Subspace> kernel_image(const LinMap& a);

enum class Side { left, right };

/// V⊗S (left) or S⊗V (right) for S inside a pure power of V.
Subspace embed_shifted(const Subspace& s, Side side);

/// Span of s ⊗ e over basis vectors e of `other` (right) or e ⊗ s (left).
Subspace tensor_with_full(const Subspace& s, const Shape& other, Side side);

}  // namespace ncdc::tensor
