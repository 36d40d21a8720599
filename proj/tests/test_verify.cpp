#include <doctest.h>

#include "polyarea/report_format.hpp"
#include "polyarea/verify.hpp"

using namespace polyarea;

namespace {

IndexRange R(std::uint64_t a, std::uint64_t b) { return {a, b}; }

}  // namespace

TEST_CASE("index ranges") {
    CHECK(IndexRange::parse("1..5") == R(1, 5));
    CHECK(IndexRange::parse("7") == R(7, 7));
    CHECK(IndexRange::parse("1..5").size() == 5);
    CHECK_THROWS_AS(IndexRange::parse("5..1"), std::invalid_argument);
    CHECK_THROWS_AS(IndexRange::parse("a..b"), std::invalid_argument);
    CHECK_THROWS_AS(IndexRange::parse("1..."), std::invalid_argument);
}

TEST_CASE("verify_family: Fibonacci grid passes") {
    const auto report = verify_family(SequenceFamily::of(FamilyKind::Fibonacci), R(1, 5), R(1, 4), R(3, 5));
    CHECK(report.cells.size() == 5 * 4 * 3);
    CHECK(report.fail_count == 0);
    CHECK(report.pass_count == report.cells.size());

    // n outer, k middle, m inner
    CHECK(report.cells[0].spec.n == 1);
    CHECK(report.cells[0].spec.k == 1);
    CHECK(report.cells[0].spec.m == 3);
    CHECK(report.cells[1].spec.m == 4);
    CHECK(report.cells[3].spec.k == 2);
    CHECK(report.cells[12].spec.n == 2);
}

TEST_CASE("verify_family: polygonal and generalized grids pass") {
    const auto sq = verify_family(SequenceFamily::polygonal(4), R(1, 5), R(1, 4), R(3, 6));
    CHECK(sq.fail_count == 0);
    CHECK(sq.pass_count == 5 * 4 * 4);

    const auto gen = verify_family(SequenceFamily::generalized(1, 2), R(0, 3), R(1, 3), R(3, 3));
    CHECK(gen.fail_count == 0);
    CHECK(gen.pass_count == 12);
    CHECK(gen.cells[0].closed_area == Rational(1, 2));
}

TEST_CASE("verify_family: families without closed forms give oracle-only cells") {
    const auto report = verify_family(SequenceFamily::of(FamilyKind::Tribonacci), R(1, 1), R(1, 2), R(3, 3));
    CHECK(report.pass_count + report.fail_count == 0);
    CHECK(report.cells[0].oracle_area == Rational(3));
    CHECK_FALSE(report.cells[0].closed_area.has_value());
    CHECK_FALSE(report.cells[0].match);
}

TEST_CASE("verify_family rejects Jacobsthal and oversized grids") {
    CHECK_THROWS_AS(verify_family(SequenceFamily::of(FamilyKind::Jacobsthal), R(0, 1), R(1, 1), R(3, 3)),
                    UnsupportedFamily);
    CHECK_THROWS_AS(verify_family(SequenceFamily::of(FamilyKind::Fibonacci), R(0, 1), R(1, 40), R(3, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_family(SequenceFamily::of(FamilyKind::Fibonacci), R(0, 1), R(0, 1), R(3, 3)),
                    std::domain_error);
}

TEST_CASE("verify_collinearity") {
    const auto jac = verify_collinearity(SequenceFamily::of(FamilyKind::Jacobsthal), R(0, 8), R(1, 6), R(3, 8));
    CHECK(jac.fail_count == 0);
    CHECK(jac.pass_count == 9 * 6 * 6);
    for (const auto& c : jac.cells) CHECK(c.note == "collinear");

    const auto jl = verify_collinearity(SequenceFamily::of(FamilyKind::JacobsthalLucas), R(0, 8), R(1, 6), R(3, 8));
    CHECK(jl.fail_count == 0);

    CHECK_THROWS_AS(verify_collinearity(SequenceFamily::of(FamilyKind::Fibonacci), R(0, 1), R(1, 1), R(3, 3)),
                    UnsupportedFamily);
}

TEST_CASE("reports are identical regardless of worker count and seed") {
    const auto family = SequenceFamily::of(FamilyKind::Pell);
    const auto serial = verify_family(family, R(0, 4), R(1, 5), R(3, 6), {1, 1});
    const auto parallel = verify_family(family, R(0, 4), R(1, 5), R(3, 6), {8, 99});
    for (auto fmt : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Markdown}) {
        CHECK(format_report(serial, fmt) == format_report(parallel, fmt));
    }
}

TEST_CASE("n-independence of oracle areas") {
    for (const auto& family : {SequenceFamily::of(FamilyKind::Lucas), SequenceFamily::of(FamilyKind::PellLucas),
                               SequenceFamily::polygonal(6), SequenceFamily::generalized(-2, 3)}) {
        const auto report = verify_family(family, R(0, 6), R(1, 4), R(3, 6));
        const std::size_t per_n = 4 * 4;
        for (std::size_t i = per_n; i < report.cells.size(); ++i) {
            REQUIRE(report.cells[i].oracle_area == report.cells[i % per_n].oracle_area);
        }
    }
}

TEST_CASE("polygonal table reproduces the published coefficients") {
    const auto table = polygonal_table(R(3, 7), R(3, 7));
    CHECK(table.mismatch_count() == 0);
    CHECK(table.coefficients[0][0] == Rational(4));
    CHECK(table.coefficients[0][4] == Rational(100));
    CHECK(table.coefficients[3][2] == Rational(720));
    CHECK(table.coefficients[4][0] == Rational(140));
    CHECK(table.coefficients[4][4] == Rational(3500));

    const auto wide = polygonal_table(R(3, 9), R(3, 10));
    CHECK(wide.mismatch_count() == 0);
    CHECK_FALSE(wide.published[5][0].has_value());
    CHECK(rank_label(10) == "Decagonal");
    CHECK(rank_label(12) == "rank-12");
}

TEST_CASE("third-order table") {
    const auto table = third_order_table(1, 6);
    REQUIRE(table.rows.size() == 6);
    const std::int64_t trib[] = {3, 64, 849, 23360, 509729, 10049160};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(table.rows[i].tribonacci.computed == Rational(trib[i]));
        CHECK(table.rows[i].tribonacci.matches() == true);
    }
    CHECK(table.rows[0].perrin.computed == Rational(9, 2));
    CHECK(table.rows[2].perrin.computed == Rational(31, 2));
    CHECK(table.rows[2].perrin.published == Rational(31, 9));
    CHECK(table.rows[2].perrin.matches() == false);
    CHECK(table.rows[5].perrin.matches() == true);

    // Default Padovan convention [1,1,1] does not reproduce the printed column.
    CHECK(table.rows[0].padovan.computed == Rational(1, 2));
    CHECK(table.rows[0].padovan.matches() == false);

    // Published values are only attached for n = 1 and k <= 6.
    const auto longer = third_order_table(1, 8);
    CHECK_FALSE(longer.rows[7].tribonacci.published.has_value());
    const auto shifted = third_order_table(0, 3);
    CHECK_FALSE(shifted.rows[0].tribonacci.published.has_value());
    CHECK(shifted.mismatch_count() == 0);
}

TEST_CASE("csv quoting") {
    CHECK(csv_field("15/2") == "15/2");
    CHECK(csv_field("generalized(s=1,t=2)") == "\"generalized(s=1,t=2)\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("decimal approximation") {
    CHECK(approximate(Rational(15, 2)) == "7.5");
    CHECK(approximate(Rational(1, 3)) == "0.333333");
    CHECK(approximate(Rational(10049160)) == "1.00492e+07");
}
