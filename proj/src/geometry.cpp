#include "polyarea/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyarea {

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw std::invalid_argument("a polygon needs at least 3 vertices, got " +
                                    std::to_string(vertices_.size()));
    }
}

Polygon Polygon::reversed() const {
    std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
    return Polygon(std::move(v));
}

Polygon Polygon::translated(const BigInt& dx, const BigInt& dy) const {
    std::vector<Point> v;
    v.reserve(vertices_.size());
    for (const auto& p : vertices_) v.push_back({p.x + dx, p.y + dy});
    return Polygon(std::move(v));
}

void PolygonSpec::validate() const {
    if (k < 1) throw std::domain_error("stride k must be >= 1");
    if (m < 3) throw std::domain_error("vertex count m must be >= 3, got " + std::to_string(m));
}

Polygon build_vertices(std::span<const BigInt> seq, std::uint64_t n, std::uint64_t k,
                       std::uint64_t m) {
    if (seq.size() <= n + (2 * m - 1) * k) {
        throw std::out_of_range("term list too short for the requested polygon");
    }
    std::vector<Point> v;
    v.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        v.push_back({seq[n + 2 * i * k], seq[n + (2 * i + 1) * k]});
    }
    return Polygon(std::move(v));
}

Polygon build_vertices(const PolygonSpec& spec) {
    spec.validate();
    const auto seq = family_terms(spec.family, spec.max_index() + 1);
    return build_vertices(seq, spec.n, spec.k, spec.m);
}

Rational shoelace_signed(const Polygon& poly) {
    const auto v = poly.vertices();
    BigInt forward = 0;
    BigInt backward = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& cur = v[i];
        const Point& next = v[(i + 1) % v.size()];
        forward += cur.x * next.y;
        backward += next.x * cur.y;
    }
    return Rational(forward - backward, 2);
}

Rational shoelace_area(const Polygon& poly) { return abs(shoelace_signed(poly)); }

Rational triangle_area_det_signed(const Point& p1, const Point& p2, const Point& p3) {
    const BigInt ax = p2.x - p1.x;
    const BigInt ay = p2.y - p1.y;
    const BigInt bx = p3.x - p1.x;
    const BigInt by = p3.y - p1.y;
    return Rational(ax * by - ay * bx, 2);
}

Rational triangle_area_det(const Point& p1, const Point& p2, const Point& p3) {
    return abs(triangle_area_det_signed(p1, p2, p3));
}

bool collinear(std::span<const Point> points) {
    if (points.empty()) return true;
    const Point& origin = points.front();
    const auto second = std::find_if(points.begin() + 1, points.end(),
                                     [&](const Point& p) { return p != origin; });
    if (second == points.end()) return true;
    const BigInt dx = second->x - origin.x;
    const BigInt dy = second->y - origin.y;
    return std::all_of(points.begin(), points.end(), [&](const Point& p) {
        return dx * (p.y - origin.y) == dy * (p.x - origin.x);
    });
}

}  // namespace polyarea
