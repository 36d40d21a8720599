#include <doctest.h>

#include "oracle.hpp"
#include "polyarea/closedforms.hpp"

using namespace polyarea;

namespace {

const SequenceFamily kFib = SequenceFamily::of(FamilyKind::Fibonacci);
const SequenceFamily kLucas = SequenceFamily::of(FamilyKind::Lucas);
const SequenceFamily kPell = SequenceFamily::of(FamilyKind::Pell);
const SequenceFamily kPellLucas = SequenceFamily::of(FamilyKind::PellLucas);

std::vector<SequenceFamily> binet_families() {
    return {kFib, kLucas, kPell, kPellLucas, SequenceFamily::generalized(2, 3),
            SequenceFamily::generalized(1, 2), SequenceFamily::generalized(-3, 1)};
}

/// Independent area of the stride polygon, straight from the oracle header.
Rational oracle_area(const SequenceFamily& family, std::uint64_t n, std::uint64_t k, std::uint64_t m) {
    const std::size_t count = n + (2 * m - 1) * k + 1;
    std::vector<oracle::Int> seq;
    switch (family.kind) {
        case FamilyKind::Fibonacci: seq = oracle::fibonacci(count); break;
        case FamilyKind::Lucas: seq = oracle::lucas(count); break;
        case FamilyKind::Pell: seq = oracle::pell(count); break;
        case FamilyKind::PellLucas: seq = oracle::pell_lucas(count); break;
        case FamilyKind::GeneralizedFibonacci:
            seq = oracle::iterate({1, 1}, {oracle::Int(family.t - family.s), oracle::Int(family.s)}, count);
            break;
        case FamilyKind::Polygonal: seq = oracle::polygonal(static_cast<int>(family.rank), count); break;
        default: FAIL("no oracle for " << family.name());
    }
    return Rational(oracle::twice_area(oracle::stride_vertices(seq, n, k, m)), 2);
}

}  // namespace

TEST_CASE("closed triangle area examples") {
    CHECK(closed_triangle_area(kFib, 1).area == Rational(1, 2));
    CHECK(closed_triangle_area(kFib, 2).area == Rational(15, 2));
    CHECK(closed_triangle_area(kPell, 1).area == Rational(4));

    const auto r = closed_triangle_area(kFib, 2);
    CHECK(r.parity_branch == Parity::Even);
    CHECK(r.formula_label == "5*F_k^4*L_k/2");
    CHECK(closed_triangle_area(kPellLucas, 3).parity_branch == Parity::Odd);

    CHECK_THROWS_AS(closed_triangle_area(SequenceFamily::of(FamilyKind::Tribonacci), 1), UnsupportedFamily);
    CHECK_THROWS_AS(closed_triangle_area(kFib, 0), std::domain_error);
}

TEST_CASE("closed triangle area matches the oracle") {
    std::vector<SequenceFamily> families = binet_families();
    for (int s = -3; s <= 3; ++s)
        for (int t = -3; t <= 3; ++t) families.push_back(SequenceFamily::generalized(s, t));
    for (const auto& family : families) {
        CAPTURE(family.name());
        for (std::uint64_t k = 1; k <= 8; ++k) {
            const Rational closed = closed_triangle_area(family, k).area;
            REQUIRE(closed >= Rational(0));
            for (std::uint64_t n = 0; n <= 6; ++n) REQUIRE(closed == oracle_area(family, n, k, 3));
        }
    }
}

TEST_CASE("negative s^2+st-t^2 still yields a positive area") {
    const auto g = SequenceFamily::generalized(1, 2);  // 1 + 2 - 4 = -1
    CHECK(closed_triangle_area(g, 1).area == Rational(1, 2));
    CHECK(mgon_area(g, 1, 4) == Rational(5, 2));
}

TEST_CASE("general triangle area from the Binet parameters") {
    const auto fib = binet_params(kFib);
    const QuadElem a1 = general_triangle_area(fib, 1, 1);
    const QuadElem a2 = general_triangle_area(fib, 2, 1);
    CHECK(abs_rational(a1) == Rational(1, 2));
    CHECK(a2 == -a1);

    // 32 P_2^4 Q_2 = 32 * 16 * 6
    const QuadElem pl = general_triangle_area(binet_params(kPellLucas), 0, 2);
    CHECK(abs_rational(pl) == Rational(3072));
    CHECK(oracle_area(kPellLucas, 0, 2, 3) == Rational(3072));

    for (const auto& family : binet_families()) {
        const auto params = binet_params(family);
        for (std::int64_t n = 0; n <= 10; ++n) {
            for (std::uint64_t k = 1; k <= 8; ++k) {
                const QuadElem signed_area = general_triangle_area(params, n, k);
                REQUIRE(signed_area.is_rational());
                REQUIRE(abs_rational(signed_area) == closed_triangle_area(family, k).area);
            }
        }
    }
}

TEST_CASE("general m-gon area") {
    const auto fib = binet_params(kFib);
    CHECK(general_mgon_area(fib, 1, 3) == Rational(1, 2));
    CHECK(general_mgon_area(fib, 1, 4) == Rational(5, 2));
    CHECK(general_mgon_area(binet_params(kLucas), 1, 4) == Rational(25, 2));
    CHECK(oracle_area(kLucas, 1, 1, 4) == Rational(25, 2));
    CHECK_THROWS_AS(general_mgon_area(fib, 1, 2), std::domain_error);
}

TEST_CASE("m-gon area from sequence values") {
    CHECK(mgon_area(kFib, 1, 4) == Rational(5, 2));
    CHECK(mgon_area(kFib, 1, 3) == Rational(1, 2));
    CHECK(mgon_area(kPell, 1, 3) == Rational(4));
    CHECK_THROWS_AS(mgon_area(SequenceFamily::of(FamilyKind::Jacobsthal), 1, 3), UnsupportedFamily);

    for (const auto& family : binet_families()) {
        CAPTURE(family.name());
        const auto params = binet_params(family);
        for (std::uint64_t k = 1; k <= 10; ++k) {
            REQUIRE(mgon_area(family, k, 3) == closed_triangle_area(family, k).area);
        }
        for (std::uint64_t k = 1; k <= 6; ++k) {
            for (std::uint64_t m = 3; m <= 8; ++m) {
                const Rational expected = mgon_area(family, k, m);
                REQUIRE(general_mgon_area(params, k, m) == expected);
                REQUIRE(oracle_area(family, 2, k, m) == expected);
            }
        }
    }
}

TEST_CASE("polygonal closed forms") {
    CHECK(polygonal_triangle_area(3, 1) == Rational(4));
    CHECK(polygonal_triangle_area(4, 2) == Rational(256));
    CHECK(polygonal_triangle_area(7, 1) == Rational(100));
    CHECK(polygonal_mgon_area(3, 1, 5) == Rational(40));
    CHECK(polygonal_mgon_area(5, 1, 6) == Rational(720));
    CHECK(polygonal_mgon_area(7, 1, 7) == Rational(3500));
    CHECK_THROWS_AS(polygonal_triangle_area(2, 1), std::domain_error);
    CHECK_THROWS_AS(polygonal_mgon_area(3, 0, 3), std::domain_error);
    CHECK_THROWS_AS(polygonal_mgon_area(3, 1, 2), std::domain_error);

    const std::int64_t tetrahedral[] = {1, 4, 10, 20, 35};
    for (std::int64_t rank = 3; rank <= 10; ++rank) {
        for (std::uint64_t k = 1; k <= 5; ++k) {
            const Rational unit = polygonal_triangle_area(rank, k);
            REQUIRE(polygonal_mgon_area(rank, k, 3) == unit);
            for (std::uint64_t m = 3; m <= 7; ++m) {
                REQUIRE(polygonal_mgon_area(rank, k, m) / unit == Rational(tetrahedral[m - 3]));
            }
            for (std::uint64_t m = 3; m <= 9; ++m) {
                REQUIRE(oracle_area(SequenceFamily::polygonal(rank), 1, k, m) ==
                        polygonal_mgon_area(rank, k, m));
            }
        }
    }
}

TEST_CASE("Pell-Lucas odd k: the printed 8*P_k^2*Q_k^3 is exactly twice the true area") {
    const auto p = oracle::pell(40);
    const auto q = oracle::pell_lucas(40);
    for (std::uint64_t k = 1; k <= 7; k += 2) {
        const Rational printed(8 * p[k] * p[k] * q[k] * q[k] * q[k]);
        const Rational truth = oracle_area(kPellLucas, 1, k, 3);
        CHECK(printed == 2 * truth);
        CHECK(closed_triangle_area(kPellLucas, k).area == truth);
        CHECK(closed_triangle_area(kPellLucas, k).formula_label == "4*P_k^2*Q_k^3");
    }
}
