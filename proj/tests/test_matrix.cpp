#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncnewton/matrix.hpp"
#include "support/testsupport.hpp"

using namespace ncnewton;
using testsupport::Rng;

namespace {

Matrix<Rational> rmat(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix<Rational> m(static_cast<int>(rows.size()),
                       static_cast<int>(rows.begin()->size()), Rational(0));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (int v : row) m.at(r, c++) = Rational(v);
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("submatrix selection") {
    auto m = rmat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(submatrix(m, {0, 1}, {0, 1}) == rmat({{1, 2}, {4, 5}}));

    auto two = rmat({{1, 2}, {3, 4}});
    CHECK(submatrix(two, {1, 0}, {0, 1}) == rmat({{2, 1}, {4, 3}}));

    // power matrix rows/columns follow the (column i, row k) convention
    auto vd = vandermonde({Rational(0), Rational(1), Rational(2)}, 2);
    CHECK(submatrix(vd, {0, 2}, {1, 2}) == rmat({{0, 2}, {0, 4}}));

    CHECK_THROWS_AS(submatrix(m, {0, 3}, {0, 1}), IndexOutOfBoundsError);
    CHECK_THROWS_AS(submatrix(m, {0, -1}, {0, 1}), IndexOutOfBoundsError);
    CHECK_THROWS_AS(submatrix(m, {0, 0}, {0, 1}), DuplicateIndexError);
}

TEST_CASE("invert examples") {
    auto id = Matrix<Rational>::identity(3, Rational(1));
    CHECK(invert(id) == id);

    auto m = rmat({{1, 2}, {3, 4}});
    auto z = invert(m);
    CHECK(z.at(0, 0) == Rational(-2));
    CHECK(z.at(0, 1) == Rational(1));
    CHECK(z.at(1, 0) == Rational(3, 2));
    CHECK(z.at(1, 1) == Rational(-1, 2));
    CHECK(z == testsupport::adjugate_inverse(m));

    CHECK(invert(Matrix<Rational>{}) == Matrix<Rational>{});

    auto zero = rmat({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(invert(zero), NonGenericError);
    try {
        invert(zero);
    } catch (const NonGenericError& e) {
        CHECK(e.order() == 0);
    }
    // elimination stalls one column in here
    try {
        invert(rmat({{1, 2}, {2, 4}}));
    } catch (const NonGenericError& e) {
        CHECK(e.order() == 1);
    }
}

TEST_CASE("invert needs a row swap when a leading pivot vanishes") {
    auto m = rmat({{0, 1}, {1, 0}});
    CHECK(invert(m) == m);
}

TEST_CASE("block matrix with invertible diagonal blocks inverts exactly") {
    Rng rng(0x200);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<BlockElement> m(2, 2, BlockElement(2));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                BlockElement b = rng.block(2);
                if (r == c)
                    while (!b.try_inverse()) b = rng.block(2);
                m.at(r, c) = b;
            }
        Matrix<BlockElement> z;
        try {
            z = invert(m);
        } catch (const NonGenericError&) {
            continue;  // random off-diagonal data may still be degenerate
        }
        auto id = Matrix<BlockElement>::identity(2, BlockElement::identity(2));
        CHECK(m * z == id);
        CHECK(z * m == id);
    }
}

TEST_CASE("invert round-trips on random generic matrices, both variants") {
    Rng rng(0x201);
    for (int n = 1; n <= 6; ++n) {
        auto m = testsupport::generic_rational_matrix(rng, n - 1);
        auto z = invert(m);
        auto id = Matrix<Rational>::identity(n, Rational(1));
        CHECK(m * z == id);
        CHECK(z * m == id);
    }
    for (int n = 1; n <= 4; ++n) {
        auto m = testsupport::generic_block_matrix(rng, n - 1, 2);
        auto z = invert(m);
        auto id = Matrix<BlockElement>::identity(n, BlockElement::identity(2));
        CHECK(m * z == id);
        CHECK(z * m == id);
    }
}

TEST_CASE("block inversion agrees with the flattened rational realization") {
    Rng rng(0x202);
    for (int n = 1; n <= 3; ++n) {
        auto m = testsupport::generic_block_matrix(rng, n - 1, 2);
        auto flat_inv = testsupport::solve_linear(
            testsupport::flatten(m),
            Matrix<Rational>::identity(2 * n, Rational(1)));
        CHECK(invert(m) == testsupport::unflatten(flat_inv, 2));
    }
}

TEST_CASE("quasidet examples") {
    Matrix<Rational> one(1, 1, Rational(5));
    CHECK(quasidet(one, 0, 0) == Rational(5));
    Matrix<Rational> zero1(1, 1, Rational(0));
    CHECK(quasidet(zero1, 0, 0) == Rational(0));  // single entry, even when zero

    auto m = rmat({{1, 2}, {3, 4}});
    CHECK(quasidet(m, 0, 0) == Rational(-1, 2));
    CHECK(quasidet(m, 1, 0) == Rational(2, 3));

    CHECK_THROWS_AS(quasidet(Matrix<Rational>{}, 0, 0), IndexOutOfBoundsError);
    CHECK_THROWS_AS(quasidet(m, 2, 0), IndexOutOfBoundsError);
    CHECK_THROWS_AS(quasidet(rmat({{0, 0}, {0, 0}}), 0, 0), NonGenericError);
}

TEST_CASE("quasidet matches the signed determinant ratio on rationals") {
    Rng rng(0x203);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform(2, 5);
        Matrix<Rational> m = rng.rational_matrix(n, n);
        Rational det = testsupport::det_cofactor(m);
        if (det.is_zero()) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational minor = testsupport::det_cofactor(testsupport::delete_col_row(m, i, j));
                if (minor.is_zero()) continue;
                Rational expected = ((i + j) % 2 == 0 ? det : -det) / minor;
                CHECK(quasidet(m, i, j) == expected);
                ++checked;
            }
    }
    CHECK(checked > 100);
}

TEST_CASE("quasidet is the inverse of the corresponding inverse entry") {
    Rng rng(0x204);
    auto check_duality = [](const auto& m) {
        auto z = invert(m);
        const int n = m.rows();
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                auto inv = try_inverse(z.at(i, k));
                if (!inv) {
                    CHECK_THROWS_AS((void)quasidet(m, i, k), NonGenericError);
                } else {
                    CHECK(quasidet(m, i, k) == *inv);
                }
            }
    };
    check_duality(testsupport::generic_rational_matrix(rng, 3));
    check_duality(testsupport::generic_block_matrix(rng, 2, 2));
}

TEST_CASE("inverse entries of nested truncations satisfy the heredity identity") {
    // For i, k < m: z_m(i,k) - z_m(i,m) z_m(m,m)^{-1} z_m(m,k) = z_{m-1}(i,k),
    // where z_m inverts the order-m leading truncation.
    Rng rng(0x205);
    auto check_heredity = [](const auto& d, int order) {
        for (int m = 1; m <= order; ++m) {
            auto zm = invert(leading(d, m + 1));
            auto zp = invert(leading(d, m));
            auto corner = try_inverse(zm.at(m, m));
            REQUIRE(corner.has_value());
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k)
                    CHECK(zm.at(i, k) - zm.at(i, m) * *corner * zm.at(m, k) == zp.at(i, k));
        }
    };
    check_heredity(testsupport::generic_rational_matrix(rng, 5), 5);
    check_heredity(testsupport::generic_block_matrix(rng, 3, 2), 3);
}

TEST_CASE("matrix product preserves factor order") {
    Matrix<BlockElement> a(1, 1, BlockElement{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});
    Matrix<BlockElement> b(1, 1, BlockElement{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}});
    CHECK(!((a * b) == (b * a)));
}

TEST_CASE("index sequence validation") {
    CHECK_THROWS_AS(validate_index_sequence({0, 1, 1}, 5, "row"), DuplicateIndexError);
    CHECK_THROWS_AS(validate_index_sequence({0, 5}, 5, "row"), IndexOutOfBoundsError);
    CHECK_NOTHROW(validate_index_sequence({4, 0, 2}, 5, "row"));
}
