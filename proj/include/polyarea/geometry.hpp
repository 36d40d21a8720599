#pragma once

#include "polyarea/numerics.hpp"
#include "polyarea/sequences.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polyarea {

struct Point {
    BigInt x;
    BigInt y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered vertex list with at least three vertices. Order is significant:
/// the signed area flips with orientation, and nothing here ever sorts.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    std::span<const Point> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    Polygon reversed() const;
    Polygon translated(const BigInt& dx, const BigInt& dy) const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> vertices_;
};

/// m vertices (f(n + 2ik), f(n + (2i+1)k)), i = 0..m-1.
struct PolygonSpec {
    SequenceFamily family;
    std::uint64_t n = 0;
    std::uint64_t k = 1;
    std::uint64_t m = 3;

    /// Throws std::domain_error unless k >= 1 and m >= 3.
    void validate() const;

    /// Largest sequence index touched: n + (2m-1)k.
    std::uint64_t max_index() const { return n + (2 * m - 1) * k; }
};

Polygon build_vertices(const PolygonSpec& spec);

/// Same stride pattern over an already computed term list.
Polygon build_vertices(std::span<const BigInt> seq, std::uint64_t n, std::uint64_t k,
                       std::uint64_t m);

/// Surveyor's (shoelace) formula without the absolute value.
Rational shoelace_signed(const Polygon& poly);
Rational shoelace_area(const Polygon& poly);

/// 1/2 * det of edge differences (p2 - p1, p3 - p1), signed.
Rational triangle_area_det_signed(const Point& p1, const Point& p2, const Point& p3);
Rational triangle_area_det(const Point& p1, const Point& p2, const Point& p3);

/// True iff every point lies on the line through the first two distinct points.
/// Fewer than two distinct points counts as collinear.
bool collinear(std::span<const Point> points);

}  // namespace polyarea
