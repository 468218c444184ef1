#include <doctest.h>

#include <random>

#include "sgr/matrix.hpp"

using namespace sgr;

namespace {

const Field Q = Field::rationals();

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            long long v = static_cast<long long>(rng() % 7) - 3;
            m.at(i, j) = Scalar::from_int(f, v);
        }
    return m;
}

}  // namespace

TEST_CASE("rref canonical form on a hand example") {
    // [[0,2,4],[1,1,1]] -> [[1,0,-1],[0,1,2]]
    Matrix m(Q, 2, 3);
    m.at(0, 1) = Scalar::from_int(Q, 2);
    m.at(0, 2) = Scalar::from_int(Q, 4);
    m.at(1, 0) = Scalar::from_int(Q, 1);
    m.at(1, 1) = Scalar::from_int(Q, 1);
    m.at(1, 2) = Scalar::from_int(Q, 1);
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.m.at(0, 0).is_one());
    CHECK(r.m.at(0, 1).is_zero());
    CHECK(r.m.at(0, 2) == Scalar::from_int(Q, -1));
    CHECK(r.m.at(1, 1).is_one());
    CHECK(r.m.at(1, 2) == Scalar::from_int(Q, 2));
}

TEST_CASE("serial and parallel elimination are bit-identical") {
    std::mt19937_64 rng(0x5EED0001ULL);
    for (const Field& f : {Q, Field::gf(7)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix m = random_matrix(f, 20, 24, rng);
            RrefResult a = rref_serial(m);
            RrefResult b = rref_parallel(m);
            CHECK(a.rank == b.rank);
            CHECK(a.pivot_cols == b.pivot_cols);
            CHECK(a.m == b.m);
        }
    }
}

TEST_CASE("solve returns the zero-free-variable particular solution") {
    // x + y = 2 with free y: solution (2, 0)
    Matrix m(Q, 1, 2);
    m.at(0, 0) = Scalar::one(Q);
    m.at(0, 1) = Scalar::one(Q);
    auto x = solve(m, {Scalar::from_int(Q, 2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar::from_int(Q, 2));
    CHECK((*x)[1].is_zero());

    // inconsistent system
    Matrix z(Q, 2, 1);
    z.at(0, 0) = Scalar::one(Q);
    z.at(1, 0) = Scalar::one(Q);
    CHECK_FALSE(solve(z, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)}).has_value());
}

TEST_CASE("kernel basis and inverse") {
    std::mt19937_64 rng(0x5EED0002ULL);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(Q, 6, 9, rng);
        for (const auto& v : kernel_basis(m)) {
            auto mv = m.apply(v);
            for (const auto& s : mv) CHECK(s.is_zero());
        }
    }
    Matrix a(Q, 2, 2);
    a.at(0, 0) = Scalar::from_int(Q, 2);
    a.at(0, 1) = Scalar::from_int(Q, 1);
    a.at(1, 0) = Scalar::from_int(Q, 5);
    a.at(1, 1) = Scalar::from_int(Q, 3);
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == Matrix::identity(Q, 2));
    Matrix sing(Q, 2, 2);
    sing.at(0, 0) = Scalar::one(Q);
    sing.at(1, 0) = Scalar::one(Q);
    CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("row space incremental insertion matches batch rref") {
    std::mt19937_64 rng(0x5EED0003ULL);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(Q, 8, 10, rng);
        RowSpace rs(Q, 10);
        for (std::size_t i = 0; i < 8; ++i) {
            std::vector<Scalar> row;
            for (std::size_t j = 0; j < 10; ++j) row.push_back(m.at(i, j));
            rs.insert(std::move(row));
        }
        RrefResult r = rref(m);
        CHECK(rs.rank() == r.rank);
        for (std::size_t i = 0; i < r.rank; ++i) {
            std::vector<Scalar> row;
            for (std::size_t j = 0; j < 10; ++j) row.push_back(r.m.at(i, j));
            CHECK(rs.rows()[i] == row);
        }
    }
}

TEST_CASE("row space coordinates reproduce members") {
    std::mt19937_64 rng(0x5EED0004ULL);
    RowSpace rs(Q, 6);
    std::vector<std::vector<Scalar>> inserted;
    for (int i = 0; i < 4; ++i) {
        std::vector<Scalar> v;
        for (int j = 0; j < 6; ++j)
            v.push_back(Scalar::from_int(Q, static_cast<long long>(rng() % 5) - 2));
        rs.insert(v);
        inserted.push_back(std::move(v));
    }
    for (const auto& v : inserted) {
        auto coords = rs.coordinates(v);
        REQUIRE(coords.has_value());
        std::vector<Scalar> rebuilt(6, Scalar::zero(Q));
        for (std::size_t r = 0; r < coords->size(); ++r)
            for (int j = 0; j < 6; ++j) rebuilt[j] += (*coords)[r] * rs.rows()[r][j];
        CHECK(rebuilt == v);
    }
    std::vector<Scalar> outside(6, Scalar::zero(Q));
    outside[5] = Scalar::one(Q);
    if (!rs.contains(outside)) CHECK_FALSE(rs.coordinates(outside).has_value());
}
