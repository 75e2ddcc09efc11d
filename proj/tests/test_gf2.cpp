#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fiblie/gf2.hpp"

using namespace fiblie;
using gf2::BitMatrix;
using gf2::BitVec;

namespace {

BitMatrix from_bits(const std::vector<std::vector<int>>& bits) {
    BitMatrix m(bits.size(), bits.empty() ? 0 : bits[0].size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        for (std::size_t j = 0; j < bits[i].size(); ++j)
            if (bits[i][j])
                m.set(i, j);
    return m;
}

}  // namespace

TEST_CASE("echelonize fixes the identity") {
    BitMatrix id = gf2::identity_matrix(2);
    gf2::EchelonForm e = gf2::echelonize(id);
    CHECK(e.matrix == id);
    CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("echelonize collapses duplicate rows") {
    gf2::EchelonForm e = gf2::echelonize(from_bits({{1, 1}, {1, 1}}));
    CHECK(e.rank() == 1);
    REQUIRE(e.matrix.n_rows() == 1);
    CHECK(e.matrix.get(0, 0));
    CHECK(e.matrix.get(0, 1));
}

TEST_CASE("echelonize sees xor dependencies") {
    CHECK(gf2::echelonize(from_bits({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})).rank() == 2);
}

TEST_CASE("echelonize is idempotent and preserves the row space") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m(6, 9);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                if (rng() & 1)
                    m.set(i, j);
        gf2::EchelonForm e = gf2::echelonize(m);
        CHECK(gf2::echelonize(e.matrix).matrix == e.matrix);
        for (const BitVec& r : m.rows())
            CHECK(gf2::member(r, e.matrix.rows()));
        for (const BitVec& r : e.matrix.rows())
            CHECK(gf2::member(r, m.rows()));
        CHECK(std::is_sorted(e.pivot_cols.begin(), e.pivot_cols.end()));
        for (std::size_t c : e.pivot_cols) {
            std::size_t ones = 0;
            for (std::size_t i = 0; i < e.matrix.n_rows(); ++i)
                ones += e.matrix.get(i, c);
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("results do not depend on row order") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BitVec> rows;
        for (int i = 0; i < 5; ++i) {
            BitVec v(8);
            for (std::size_t j = 0; j < 8; ++j)
                if (rng() & 1)
                    v.set(j);
            rows.push_back(v);
        }
        BitMatrix m = BitMatrix::from_rows(rows, 8);
        std::shuffle(rows.begin(), rows.end(), rng);
        BitMatrix p = BitMatrix::from_rows(rows, 8);
        CHECK(gf2::echelonize(m).matrix == gf2::echelonize(p).matrix);
        CHECK(gf2::kernel_basis(m) == gf2::kernel_basis(p));
    }
}

TEST_CASE("rank examples") {
    CHECK(gf2::rank(BitMatrix(3, 3)) == 0);
    CHECK(gf2::rank(gf2::identity_matrix(3)) == 3);
    CHECK(gf2::rank(from_bits({{1, 1, 1}, {1, 0, 1}, {0, 1, 0}})) == 2);
}

TEST_CASE("kernel_basis examples") {
    CHECK(gf2::kernel_basis(gf2::identity_matrix(2)).empty());

    auto sym = gf2::kernel_basis(from_bits({{1, 1}, {1, 1}}));
    REQUIRE(sym.size() == 1);
    CHECK(sym[0].get(0));
    CHECK(sym[0].get(1));

    CHECK(gf2::kernel_basis(BitMatrix(1, 3)).size() == 3);
}

TEST_CASE("rank plus nullity is the column count") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
        BitMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() & 1)
                    m.set(i, j);
        CHECK(gf2::rank(m) + gf2::kernel_basis(m).size() == cols);
        for (const BitVec& k : gf2::kernel_basis(m))
            CHECK(gf2::multiply(m, k).zero());
    }
}

TEST_CASE("quotient_dim examples") {
    std::vector<BitVec> e1e2 = {BitVec::unit(2, 0), BitVec::unit(2, 1)};
    CHECK(gf2::quotient_dim({}, e1e2) == 2);
    CHECK(gf2::quotient_dim(e1e2, e1e2) == 0);
    CHECK(gf2::quotient_dim({BitVec::unit(2, 0) ^ BitVec::unit(2, 1)}, e1e2) == 1);
    CHECK_THROWS_AS(gf2::quotient_dim({BitVec::unit(3, 2)},
                                      {BitVec::unit(3, 0), BitVec::unit(3, 1)}),
                    ContainmentViolation);
}

TEST_CASE("member examples") {
    std::vector<BitVec> span = {BitVec::unit(3, 0), BitVec::unit(3, 1)};
    CHECK(gf2::member(BitVec::unit(3, 0) ^ BitVec::unit(3, 1), span));
    CHECK_FALSE(gf2::member(BitVec::unit(3, 2), span));
    CHECK(gf2::member(BitVec(4), {}));
    CHECK_THROWS_AS(gf2::member(BitVec::unit(2, 0), span), DimensionMismatch);
}

TEST_CASE("LinearSolver expresses vectors deterministically") {
    std::vector<BitVec> gens = {BitVec::unit(3, 0) ^ BitVec::unit(3, 1), BitVec::unit(3, 1)};
    gf2::LinearSolver solver(gens, 3);
    auto combo = solver.express(BitVec::unit(3, 0));
    REQUIRE(combo.has_value());
    CHECK(combo->get(0));
    CHECK(combo->get(1));
    CHECK_FALSE(solver.express(BitVec::unit(3, 2)).has_value());
}
