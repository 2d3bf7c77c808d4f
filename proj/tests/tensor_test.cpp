#include "generators.hpp"

#include "ncdc/error.hpp"
#include "ncdc/tensor/subspace.hpp"

#include <doctest.h>

using namespace ncdc;
using namespace ncdc::tensor;
using exact::Scalar;

namespace {

Vector vec(std::initializer_list<const char*> entries) {
    Vector v;
    for (const char* e : entries) v.push_back(Scalar::parse(e));
    return v;
}

Shape vpow(std::size_t n, std::size_t dv = 2, std::size_t dw = 2) { return Shape::v_power(n, dv, dw); }

LinMap flip_vv(std::size_t dv) {
    const Shape s = vpow(2, dv);
    LinMap f(s, s);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) f(s.index({j, i}), s.index({i, j})) = Scalar(1L);
    return f;
}

}  // namespace

TEST_CASE("basis enumeration round trip") {
    for (const Shape& s : {Shape({Factor::W, Factor::V, Factor::V}, 3, 2), Shape({}, 2, 2),
                           Shape({Factor::V, Factor::W}, 2, 3), Shape::v_power(4, 2, 1)}) {
        for (std::size_t i = 0; i < s.total_dim(); ++i) CHECK(s.index(s.multi_index(i)) == i);
    }
    const Shape wv({Factor::W, Factor::V}, 3, 2);
    CHECK(wv.index({1, 2}) == 5);
    CHECK(wv.total_dim() == 6);
    CHECK(wv.to_string() == "W⊗V");
    CHECK(Shape().to_string() == "k");
}

TEST_CASE("kron follows the lexicographic convention") {
    const Shape one = vpow(0), two = vpow(1);
    LinMap a(two, one), b(two, one);
    a(0, 0) = Scalar::parse("2");
    a(0, 1) = Scalar::parse("3");
    b(0, 0) = Scalar::parse("5");
    b(0, 1) = Scalar::parse("q");
    const LinMap k = kron(a, b);
    CHECK(k.dom().total_dim() == 4);
    CHECK(k.entries().row(0) == vec({"10", "2*q", "15", "3*q"}));

    const Shape v({Factor::V}, 2, 3), w({Factor::W}, 2, 3);
    CHECK(kron(LinMap::identity(v), LinMap::identity(w)) == LinMap::identity(v * w));
}

TEST_CASE("kron mixed-product law on random maps") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> d(1, 3);
    for (int t = 0; t < 120; ++t) {
        // all shapes share (dim V, dim W) so that tensor products are defined
        const std::size_t dv = d(rng), dw = d(rng);
        const Shape v({Factor::V}, dv, dw), w({Factor::W}, dv, dw), vv({Factor::V, Factor::V}, dv, dw);
        const Shape vw({Factor::V, Factor::W}, dv, dw), k({}, dv, dw);
        const LinMap A = testing::random_map(rng, v, w, true);
        const LinMap C = testing::random_map(rng, vw, v, true);
        const LinMap B = testing::random_map(rng, w, vv);
        const LinMap D = testing::random_map(rng, k, w);
        CHECK(compose(kron(A, B), kron(C, D)) == kron(compose(A, C), compose(B, D)));
    }
}

TEST_CASE("compose and add") {
    const LinMap f = flip_vv(2);
    CHECK(compose(f, f) == LinMap::identity(vpow(2)));
    std::mt19937 rng(11);
    const LinMap a = testing::random_map(rng, vpow(2), vpow(1), true);
    CHECK(add_maps(a, a.scaled(Scalar(-1L))).is_zero());
    CHECK(compose(a, LinMap::identity(vpow(2))) == a);
    CHECK_THROWS_AS(compose(a, a), ShapeError);
    CHECK_THROWS_AS(add_maps(a, f), ShapeError);
    try {
        compose(a, a);
    } catch (const ShapeError& e) {
        CHECK(std::string(e.what()).find("V⊗V") != std::string::npos);
    }
}

TEST_CASE("rref_basis") {
    const Shape s = vpow(1);
    Subspace a = rref_basis(s, {vec({"1", "-q"}), vec({"q", "-q^2"})});
    CHECK(a.dim() == 1);
    CHECK(a.basis()[0] == vec({"1", "-q"}));
    CHECK(rref_basis(s, {}).dim() == 0);
    Subspace c = rref_basis(s, {vec({"1", "0"}), vec({"1", "1"})});
    CHECK(c.dim() == 2);
    CHECK(c.basis()[0] == vec({"1", "0"}));
    CHECK(c.basis()[1] == vec({"0", "1"}));
    // insertion order does not change the canonical basis
    CHECK(rref_basis(s, {vec({"q", "-q^2"}), vec({"2", "-2*q"})}) == a);
}

TEST_CASE("subspace_contains") {
    const Subspace a = rref_basis(vpow(1), {vec({"1", "-q"})});
    CHECK(subspace_contains(a, vec({"q", "-q^2"})).holds);
    CHECK(subspace_contains(a, vec({"0", "0"})).holds);
    const Shape s3 = Shape::v_power(1, 3, 1);
    const Subspace e0 = rref_basis(s3, {vec({"1", "0", "0"})});
    const Containment c = subspace_contains(e0, rref_basis(s3, {vec({"0", "1", "0"})}));
    CHECK_FALSE(c.holds);
    REQUIRE(c.witness);
    CHECK(*c.witness == vec({"0", "1", "0"}));
    CHECK_THROWS_AS(subspace_contains(e0, rref_basis(vpow(1), {})), ShapeError);
}

TEST_CASE("generators belong to their span") {
    std::mt19937 rng(3);
    const Shape s = vpow(3);
    for (int t = 0; t < 30; ++t) {
        std::vector<Vector> gens;
        for (int k = 0; k < 4; ++k) gens.push_back(testing::random_map(rng, vpow(0), s, true).column(0));
        const Subspace span = rref_basis(s, gens);
        for (const auto& g : gens) CHECK(subspace_contains(span, g).holds);
        for (std::size_t r = 0; r < span.dim(); ++r) CHECK(span.basis()[r][span.pivots()[r]].is_one());
    }
}

TEST_CASE("subspace_sum") {
    const Shape s3 = Shape::v_power(1, 3, 1);
    const Subspace a = rref_basis(s3, {vec({"1", "0", "0"})});
    const Subspace b = rref_basis(s3, {vec({"0", "1", "0"})});
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK(subspace_sum(a, a) == a);
    CHECK(subspace_sum(a, Subspace(s3)) == a);
}

TEST_CASE("kernel_image") {
    LinMap a(vpow(1), vpow(0));
    a(0, 0) = Scalar(1L);
    a(0, 1) = -Scalar::q();
    auto [ker, im] = kernel_image(a);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(vec({"q", "1"})));
    CHECK(im.dim() == 1);

    auto [zk, zi] = kernel_image(LinMap::zero(vpow(2), vpow(1)));
    CHECK(zk.dim() == 4);
    CHECK(zi.dim() == 0);

    // id - flip on V⊗V, dim V = 2, reduced by hand: image span{e01 - e10}, kernel span{e00, e01 + e10, e11}
    auto [fk, fi] = kernel_image(sub_maps(LinMap::identity(vpow(2)), flip_vv(2)));
    CHECK(fi.dim() == 1);
    CHECK(fi.basis()[0] == vec({"0", "1", "-1", "0"}));
    CHECK(fk.dim() == 3);
    CHECK(fk.contains(vec({"0", "1", "1", "0"})));
    CHECK(fk.contains(vec({"1", "0", "0", "0"})));
    CHECK(fk.contains(vec({"0", "0", "0", "1"})));
}

TEST_CASE("embed_shifted") {
    const Subspace k = rref_basis(vpow(2), {vec({"0", "1", "-q", "0"})});
    const Subspace left = embed_shifted(k, Side::left);
    // e0⊗k = e001 - q e010, e1⊗k = e101 - q e110
    CHECK(left.dim() == 2);
    CHECK(left.basis()[0] == vec({"0", "1", "-q", "0", "0", "0", "0", "0"}));
    CHECK(left.basis()[1] == vec({"0", "0", "0", "0", "0", "1", "-q", "0"}));
    const Subspace right = embed_shifted(k, Side::right);
    CHECK(right.contains(vec({"0", "0", "1", "0", "-q", "0", "0", "0"})));

    CHECK(embed_shifted(Subspace(vpow(2)), Side::left).dim() == 0);
    const Subspace full = Subspace::full(vpow(2));
    CHECK(subspace_sum(embed_shifted(full, Side::left), embed_shifted(full, Side::right)).dim() == 8);
    CHECK_THROWS_AS(embed_shifted(Subspace(Shape({Factor::W, Factor::V}, 2, 2)), Side::left), ShapeError);
}
