#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "isoform/cyclotomic.hpp"
#include "isoform/linalg.hpp"

using namespace isoform;

namespace {

Cyclotomic cy(long v) { return Cyclotomic(v); }

Matrix<Cyclotomic> from_longs(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    Matrix<Cyclotomic> m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = cy(*it++);
    return m;
}

}  // namespace

TEST_CASE("rref, rank, nullspace") {
    auto m = from_longs(3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 1, 0});
    CHECK(rank(m) == 2);

    auto ns = nullspace(m, cy(1));
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Cyclotomic acc;
            for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("solve and inverse") {
    auto a = from_longs(2, 2, {1, 1, 0, 2});
    auto x = solve(a, {cy(3), cy(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == cy(1));
    CHECK((*x)[1] == cy(2));

    auto inv = inverse_matrix(a, cy(1));
    CHECK(a * inv == Matrix<Cyclotomic>::identity(2, cy(1)));

    auto b = from_longs(2, 1, {1, 1});
    auto none = solve(b, {cy(1), cy(2)});
    CHECK(!none.has_value());
}

TEST_CASE("determinant over a cyclotomic field") {
    Cyclotomic i = Cyclotomic::zeta(4);
    Matrix<Cyclotomic> m(2, 2);
    m(0, 0) = i;
    m(0, 1) = cy(1);
    m(1, 0) = cy(-1);
    m(1, 1) = i;
    CHECK(det(m).is_zero());  // i*i + 1 = 0

    auto s = from_longs(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5});
    CHECK(det(s) == cy(30));

    auto p = from_longs(2, 2, {0, 1, 1, 0});
    CHECK(det(p) == cy(-1));
}

TEST_CASE("independent rows") {
    std::vector<std::vector<Cyclotomic>> rows = {
        {cy(1), cy(0)}, {cy(2), cy(0)}, {cy(0), cy(1)}};
    auto idx = independent_rows(rows);
    CHECK(idx == std::vector<std::size_t>{0, 2});
}

TEST_CASE("random solve round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int rep = 0; rep < 10; ++rep) {
        Matrix<Cyclotomic> a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                a(i, j) = Cyclotomic::zeta(12, d(rng)) * Rational(d(rng));
        std::vector<Cyclotomic> x0(4);
        for (auto& v : x0) v = cy(d(rng));
        std::vector<Cyclotomic> b(4);
        for (std::size_t i = 0; i < 4; ++i) {
            Cyclotomic acc;
            for (std::size_t j = 0; j < 4; ++j) acc = acc + a(i, j) * x0[j];
            b[i] = acc;
        }
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < 4; ++i) {
            Cyclotomic acc;
            for (std::size_t j = 0; j < 4; ++j) acc = acc + a(i, j) * (*x)[j];
            CHECK(acc == b[i]);
        }
    }
}
