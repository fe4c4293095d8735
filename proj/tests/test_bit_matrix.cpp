#include <doctest.h>

#include "helpers.hpp"

using namespace cnotopt;
using testutil::dense5;
using testutil::dense5_perm_matrix;
using testutil::dense5_published_seq;
using testutil::random_invertible;

TEST_CASE("matrix text round trip and rejection") {
    const BitMatrix a = dense5();
    CHECK(parse_matrix(format_matrix(a)) == a);

    CHECK_THROWS_AS(parse_matrix("matrix 2\n1 0\n0"), Error);
    CHECK_THROWS_AS(parse_matrix("matrix 2\n1 0\n0 2"), Error);
    CHECK_THROWS_AS(parse_matrix("matrix 2\n1 0\n0 1\n1"), Error);
    CHECK_THROWS_AS(parse_matrix("table 2\n1 0\n0 1"), Error);
}

TEST_CASE("mat_mul basics") {
    const BitMatrix a = dense5();
    CHECK(mat_mul(BitMatrix::identity(5), a) == a);

    const BitMatrix e12 = op_matrix(ElementaryOp::row_add(0, 1), 5);
    CHECK(mat_mul(e12, e12) == BitMatrix::identity(5));

    CHECK_THROWS_AS(mat_mul(BitMatrix::identity(3), BitMatrix::identity(4)), Error);
}

TEST_CASE("published product reconstructs the 5x5 example") {
    // A = P * E(3+2) * E(5+2) * E(1+3) * E(1+5) * E(2+1) * E(4+3) * E(2+4)
    BitMatrix product = dense5_perm_matrix();
    for (const ElementaryOp& op : dense5_published_seq())
        product = mat_mul(product, op_matrix(op, 5));
    CHECK(product == dense5());
}

TEST_CASE("apply_op semantics") {
    const BitMatrix with_entry = apply_op(BitMatrix::identity(5), ElementaryOp::row_add(0, 1));
    BitMatrix expected = BitMatrix::identity(5);
    expected.set(0, 1, true);
    CHECK(with_entry == expected);

    // row 3 of the example becomes (1,0,1,0,1) xor (0,0,1,1,0) = (1,0,0,1,1)
    const BitMatrix bumped = apply_op(dense5(), ElementaryOp::row_add(2, 1));
    const std::vector<int> row = {1, 0, 0, 1, 1};
    for (int j = 0; j < 5; ++j) CHECK(bumped.get(2, j) == (row[static_cast<std::size_t>(j)] != 0));

    CHECK_THROWS_AS(apply_op(BitMatrix::identity(3), ElementaryOp::row_add(0, 3)), Error);
}

TEST_CASE("row add is an involution") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BitMatrix m = random_invertible(6, seed);
        Rng rng(seed + 100);
        const int i = rng.below_int(6);
        int j = rng.below_int(5);
        if (j >= i) ++j;
        const ElementaryOp op = ElementaryOp::row_add(i, j);
        CHECK(apply_op(apply_op(m, op), op) == m);
    }
}

TEST_CASE("gauss_jordan replay and reconstruction") {
    CHECK(gauss_jordan(BitMatrix::identity(4)).empty());
    CHECK_THROWS_AS(gauss_jordan(BitMatrix(4)), Error);

    const BitMatrix a = dense5();
    const std::vector<ElementaryOp> ops = gauss_jordan(a);
    BitMatrix replay = a;
    for (const ElementaryOp& op : ops) replay.apply(op);
    CHECK(replay == BitMatrix::identity(5));

    // applying ops O_1..O_m in order reduces a to I, so a == M(O_1)...M(O_m)
    BitMatrix product = BitMatrix::identity(5);
    for (const ElementaryOp& op : ops) product = mat_mul(product, op_matrix(op, 5));
    CHECK(product == a);
}

TEST_CASE("gauss_jordan replay property over random invertible matrices") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const BitMatrix a = random_invertible(n, seed);
        BitMatrix replay = a;
        for (const ElementaryOp& op : gauss_jordan(a)) replay.apply(op);
        CHECK(replay == BitMatrix::identity(n));
    }
}

TEST_CASE("permutation_of") {
    const auto sigma = permutation_of(dense5_perm_matrix());
    REQUIRE(sigma.has_value());
    CHECK(sigma->image_vector() == std::vector<int>{4, 3, 0, 1, 2});

    const auto id = permutation_of(BitMatrix::identity(4));
    REQUIRE(id.has_value());
    CHECK(id->is_identity());

    CHECK_FALSE(permutation_of(dense5()).has_value());
    BitMatrix doubled(3);
    doubled.set(0, 0, true);
    doubled.set(1, 0, true);
    doubled.set(2, 2, true);
    CHECK_FALSE(permutation_of(doubled).has_value());
}

TEST_CASE("permutation_of succeeds exactly on weight-one rows and columns") {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + rng.below_int(5);
        BitMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, rng.below(4) == 0);
        bool unit_rows_and_columns = true;
        for (int i = 0; i < n; ++i) {
            int row = 0, column = 0;
            for (int j = 0; j < n; ++j) {
                row += m.get(i, j) ? 1 : 0;
                column += m.get(j, i) ? 1 : 0;
            }
            if (row != 1 || column != 1) unit_rows_and_columns = false;
        }
        CHECK(permutation_of(m).has_value() == unit_rows_and_columns);
    }
}

TEST_CASE("permutation composition matches matrix products") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + rng.below_int(6);
        std::vector<int> ia(static_cast<std::size_t>(n)), ib(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) ia[static_cast<std::size_t>(v)] = ib[static_cast<std::size_t>(v)] = v;
        rng.shuffle(ia);
        rng.shuffle(ib);
        const Permutation a{std::vector<int>(ia)}, b{std::vector<int>(ib)};
        CHECK(perm_matrix(perm_product(a, b)) == mat_mul(perm_matrix(a), perm_matrix(b)));
        CHECK(perm_product(a, a.inverse()).is_identity());

        Permutation swapped = a;
        swapped.apply_swap_right(0, 1);
        CHECK(perm_matrix(swapped) ==
              mat_mul(perm_matrix(a), op_matrix(ElementaryOp::swap(0, 1), n)));
    }
}

TEST_CASE("circuit_matrix") {
    const std::vector<CnotGate> single = {{0, 1}};
    const BitMatrix m = circuit_matrix(single, 2);
    CHECK(m == BitMatrix::from_rows({{1, 0}, {1, 1}}));

    const std::vector<CnotGate> swap3 = {{0, 1}, {1, 0}, {0, 1}};
    CHECK(circuit_matrix(swap3, 2) == BitMatrix::from_rows({{0, 1}, {1, 0}}));

    CHECK(circuit_matrix({}, 3) == BitMatrix::identity(3));
    const std::vector<CnotGate> bad = {{0, 5}};
    CHECK_THROWS_AS(circuit_matrix(bad, 3), Error);
}

TEST_CASE("circuit_matrix is a monoid homomorphism") {
    Rng rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + rng.below_int(5);
        std::vector<CnotGate> first, second;
        for (int g = 0; g < 6; ++g) {
            const int c = rng.below_int(n);
            int t = rng.below_int(n - 1);
            if (t >= c) ++t;
            (g % 2 ? first : second).push_back({c, t});
        }
        std::vector<CnotGate> all = first;
        all.insert(all.end(), second.begin(), second.end());
        CHECK(circuit_matrix(all, n) ==
              mat_mul(circuit_matrix(second, n), circuit_matrix(first, n)));
    }
}

TEST_CASE("rank") {
    CHECK(BitMatrix::identity(6).rank() == 6);
    CHECK(BitMatrix(6).rank() == 0);
    CHECK(dense5().rank() == 5);
    BitMatrix degenerate = dense5();
    degenerate.xor_row(0, 1);
    degenerate.xor_row(0, 1);
    CHECK(degenerate.rank() == 5);
}
