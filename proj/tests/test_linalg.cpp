#include <doctest.h>

#include "cographic/linalg.hpp"

using namespace cographic;

namespace {

// Small deterministic generator for property checks.
struct Lcg {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    long next(long lo, long hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((state >> 33) % static_cast<uint64_t>(hi - lo + 1));
    }
};

IntMat random_int_mat(Lcg& rng, Eigen::Index rows, Eigen::Index cols, long bound) {
    IntMat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.next(-bound, bound);
    return m;
}

}  // namespace

TEST_CASE("row reduce, rank, kernel") {
    RatMat m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(rank<Rat>(m) == 1);
    RatMat ker = kernel_basis<Rat>(m);
    CHECK(ker.cols() == 2);
    CHECK((m * ker).isZero());
}

TEST_CASE("solve_linear") {
    RatMat a(2, 2);
    a << 1, 1, 1, -1;
    RatVec b(2);
    b << 3, 1;
    const auto x = solve_linear<Rat>(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == 2);
    CHECK((*x)(1) == 1);

    RatMat sing(2, 2);
    sing << 1, 1, 1, 1;
    RatVec c(2);
    c << 0, 1;
    CHECK_FALSE(solve_linear<Rat>(sing, c).has_value());
}

TEST_CASE("determinant and inverse") {
    RatMat m(3, 3);
    m << 2, 0, 1, 1, 1, 0, 0, 3, 1;
    const Rat d = determinant<Rat>(m);
    CHECK(d == 5);
    const RatMat inv = inverse<Rat>(m);
    CHECK(RatMat(m * inv) == RatMat::Identity(3, 3));
}

TEST_CASE("hermite normal form spans the same column lattice") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        const IntMat m = random_int_mat(rng, 3, 4, 5);
        const IntMat h = hnf_columns(m);
        // Every column of h solves m x = h.col and vice versa over Z.
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            CHECK(solve_integer(m, IntVec(h.col(j))).has_value());
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            CHECK(solve_integer(h, IntVec(m.col(j))).has_value());
    }
}

TEST_CASE("smith normal form factorization") {
    Lcg rng;
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
        const IntMat m = random_int_mat(rng, rows, cols, 6);
        const SmithResult s = smith_normal_form(m);
        CHECK(IntMat(s.u * m * s.v) == s.s);
        Rat du = determinant<Rat>(to_rat_mat(s.u));
        Rat dv = determinant<Rat>(to_rat_mat(s.v));
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        const Eigen::Index t = std::min(rows, cols);
        for (Eigen::Index k = 0; k + 1 < t; ++k) {
            if (s.s(k + 1, k + 1) == 0) continue;
            CHECK(s.s(k, k) != 0);
            CHECK(s.s(k + 1, k + 1) % s.s(k, k) == 0);
        }
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j)
                if (i != j) CHECK(s.s(i, j) == 0);
    }
}

TEST_CASE("integer kernel is saturated") {
    IntMat a(1, 3);
    a << 2, 4, 6;
    const IntMat k = integer_kernel(a);
    CHECK(k.cols() == 2);
    CHECK((a * k).isZero());
    // (1, 1, -1) is in the kernel and must be an integer combination.
    IntVec v(3);
    v << 1, 1, -1;
    CHECK(solve_integer(k, v).has_value());
}

TEST_CASE("solve_integer divisibility") {
    IntMat a(1, 1);
    a << 2;
    IntVec b(1);
    b << 3;
    CHECK_FALSE(solve_integer(a, b).has_value());
    b << 4;
    const auto x = solve_integer(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == 2);
}

TEST_CASE("rationals parse and print") {
    CHECK(rat_to_string(make_rat(6, -4)) == "-3/2");
    CHECK(rat_from_string("-3/2") == make_rat(-3, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK(is_integer(Rat(5)));
    CHECK_FALSE(is_integer(make_rat(1, 2)));
    CHECK(floor_rat(make_rat(-3, 2)) == -2);
    CHECK(ceil_rat(make_rat(-3, 2)) == -1);
}

TEST_CASE("primitive direction") {
    RatVec v(3);
    v << make_rat(2, 3), make_rat(4, 3), 2;
    const IntVec p = primitive_direction(v);
    IntVec expect(3);
    expect << 1, 2, 3;
    CHECK(p == expect);
}
