#pragma once

// Grid harness: shoelace oracle vs. closed forms, collinearity sweeps, and the
// two published tables (polygonal m-gon coefficients, third-order triangles).

#include "polyarea/closedforms.hpp"
#include "polyarea/geometry.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyarea {

/// Largest sequence index n + (2m-1)k a grid may touch.
inline constexpr std::uint64_t kMaxSequenceIndex = 400;

/// Inclusive range a..b.
struct IndexRange {
    std::uint64_t first = 0;
    std::uint64_t last = 0;

    static IndexRange single(std::uint64_t v) { return {v, v}; }
    /// Parses "a..b" or a single "a".
    static IndexRange parse(const std::string& text);

    std::uint64_t size() const { return last - first + 1; }
    std::string str() const;

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct Grid {
    SequenceFamily family;
    IndexRange n;
    IndexRange k;
    IndexRange m;

    /// Checks ordering, k >= 1, m >= 3 and the index guardrail.
    void validate() const;
    std::string describe() const;
};

struct VerificationCell {
    PolygonSpec spec;
    Rational oracle_area;
    std::optional<Rational> closed_area;
    bool match = false;  // both areas present and equal
    std::string note;
};

struct VerificationReport {
    Grid grid;
    std::vector<VerificationCell> cells;  // n outer, k middle, m inner
    std::size_t pass_count = 0;
    std::size_t fail_count = 0;
    std::chrono::nanoseconds elapsed{0};

    bool ok() const { return fail_count == 0; }
};

struct RunOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
    /// Shuffles the order in which workers pick up cells; the report order never changes.
    std::uint64_t seed = 20240601;
};

/// Closed-form area for a polygon spec, when the family has one: the m-gon
/// formulas for Binet families, the tetrahedral formula for polygonal numbers,
/// and 0 for the Jacobsthal kinds (their vertices are collinear).
std::optional<Rational> closed_form_area(const PolygonSpec& spec);

/// Shoelace oracle vs. closed form over the grid. Families without a closed form
/// (third-order, custom) yield oracle-only cells that count neither as pass nor
/// fail. Jacobsthal kinds are rejected; use verify_collinearity.
VerificationReport verify_family(const SequenceFamily& family, IndexRange n, IndexRange k,
                                 IndexRange m, const RunOptions& options = {});

/// Every cell checks collinear(vertices) and zero oracle area.
VerificationReport verify_collinearity(const SequenceFamily& family, IndexRange n, IndexRange k,
                                       IndexRange m, const RunOptions& options = {});

/// "Triangular", "Square", ... "Decagonal"; "rank-N" beyond that.
std::string rank_label(std::int64_t rank);

struct PolygonalTable {
    std::vector<std::uint64_t> ms;
    std::vector<std::int64_t> ranks;
    /// coefficients[i][j]: coefficient of k^4 for m = ms[i], rank = ranks[j].
    std::vector<std::vector<Rational>> coefficients;
    /// Published value where the cell falls inside the printed 5x5 table.
    std::vector<std::vector<std::optional<Rational>>> published;

    std::size_t mismatch_count() const;
};

PolygonalTable polygonal_table(IndexRange m_range, IndexRange rank_range);

struct ThirdOrderEntry {
    Rational computed;
    std::optional<Rational> published;

    /// Empty when there is no published value to compare with.
    std::optional<bool> matches() const {
        if (!published) return std::nullopt;
        return *published == computed;
    }
};

struct ThirdOrderRow {
    std::uint64_t k = 0;
    ThirdOrderEntry tribonacci;
    ThirdOrderEntry perrin;
    ThirdOrderEntry padovan;
};

struct ThirdOrderTable {
    std::uint64_t n = 1;
    std::array<BigInt, 3> padovan_initial{1, 1, 1};
    std::vector<ThirdOrderRow> rows;

    /// Padovan initial terms are never stated alongside the published column,
    /// so that column is always reported as an unverified convention.
    static constexpr const char* kPadovanFlag = "UNVERIFIED-CONVENTION";

    std::size_t mismatch_count() const;
};

/// Triangle areas (m = 3) for k = 1..k_max. Published values are attached only
/// when n = 1 and k <= 6.
ThirdOrderTable third_order_table(std::uint64_t n, std::uint64_t k_max,
                                  std::array<BigInt, 3> padovan_initial = {1, 1, 1});

}  // namespace polyarea
