#include "doctest.h"
#include "dgw/linalg.hpp"
#include "oracle.hpp"

using namespace dgw;

namespace {

SparseMatrix from_dense(const oracle::Dense& d) {
    SparseMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.set(r, c, Scalar(d[r][c]));
    return m;
}

}  // namespace

TEST_CASE("scalar parsing and arithmetic") {
    Field::use_rationals();
    CHECK(Scalar::parse("-1/2") * Scalar(4) == Scalar(-2));
    CHECK(Scalar::parse("6/4").str() == "3/2");
    CHECK(Scalar::parse(" 7 ") == Scalar(7));
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    CHECK(Scalar::parse("2/3").inverse() == Scalar::parse("3/2"));
}

TEST_CASE("prime field arithmetic") {
    Field::use_prime(7);
    CHECK(Scalar(10) == Scalar(3));
    CHECK(Scalar(3).inverse() == Scalar(5));
    CHECK(Scalar::parse("1/2") == Scalar(4));
    CHECK(-Scalar(1) == Scalar(6));
    CHECK_THROWS_AS(Field::use_prime(8), std::invalid_argument);
    Field::configure("rational");
    CHECK(Field::describe() == "rational");
    CHECK_THROWS_AS(Field::configure("fp:x"), std::invalid_argument);
}

TEST_CASE("rank, kernel and solve on small matrices") {
    Field::use_rationals();
    SparseMatrix m(2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    CHECK(rank(m) == 1);
    CHECK(rank(SparseMatrix(3, 4)) == 0);

    SparseMatrix row(1, 2);
    row.set(0, 0, 1);
    row.set(0, 1, 1);
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == SparseVec{{0, Scalar(-1)}, {1, Scalar(1)}});

    auto x = solve(m, SparseVec{{0, Scalar(3)}, {1, Scalar(6)}});
    REQUIRE(x);
    CHECK(m.apply(*x) == SparseVec{{0, Scalar(3)}, {1, Scalar(6)}});
    CHECK_FALSE(solve(m, SparseVec{{0, Scalar(1)}}));
}

TEST_CASE("quotient representatives") {
    Field::use_rationals();
    auto q = quotient_basis(4, {SparseVec{{0, Scalar(1)}, {1, Scalar(1)}}, unit_vector(2)});
    CHECK(q.representatives == std::vector<int>{1, 3});
    CHECK(q.project(unit_vector(0)) == SparseVec{{1, Scalar(-1)}});
    CHECK(q.project(unit_vector(2)).empty());
    CHECK_THROWS(quotient_basis(2, {unit_vector(5)}));
}

TEST_CASE("random matrices agree with dense elimination") {
    Field::use_rationals();
    std::mt19937 rng(12345);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + static_cast<int>(rng() % 9), c = 1 + static_cast<int>(rng() % 9);
        auto d = oracle::random_dense(rng, r, c, 40, 3);
        auto m = from_dense(d);
        CHECK(static_cast<int>(rank(m)) == oracle::dense_rank(d));
        auto k = kernel_basis(m);
        CHECK(static_cast<int>(k.size()) == c - oracle::dense_rank(d));
        for (const auto& v : k) CHECK(m.apply(v).empty());
        // b in the image is always solvable
        SparseVec x;
        for (int j = 0; j < c; ++j) x[j] = Scalar(static_cast<long>(rng() % 5) - 2);
        for (auto it = x.begin(); it != x.end();) it = it->second.is_zero() ? x.erase(it) : std::next(it);
        auto b = m.apply(x);
        auto y = solve(m, b);
        REQUIRE(y);
        CHECK(m.apply(*y) == b);
    }
}

TEST_CASE("pivot set does not depend on insertion order") {
    Field::use_rationals();
    std::vector<SparseVec> vs{{{0, Scalar(1)}, {2, Scalar(1)}}, {{1, Scalar(2)}, {2, Scalar(1)}},
                              {{0, Scalar(1)}, {1, Scalar(2)}, {2, Scalar(2)}}};
    auto q1 = quotient_basis(3, vs);
    std::reverse(vs.begin(), vs.end());
    auto q2 = quotient_basis(3, vs);
    CHECK(q1.representatives == q2.representatives);
    CHECK(q1.subspace.rref() == q2.subspace.rref());
}
