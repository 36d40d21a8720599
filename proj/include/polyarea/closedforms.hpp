#pragma once

// Closed-form areas for the stride-pattern polygons: the family-specific
// triangle and m-gon formulas in terms of F_k, L_k, P_k, Q_k, the general
// Binet-parameter expressions evaluated in Q(sqrt d), and the polygonal-number
// formulas.

#include "polyarea/numerics.hpp"
#include "polyarea/sequences.hpp"

#include <cstdint>
#include <string>

namespace polyarea {

enum class Parity { Even, Odd };

inline Parity parity_of(std::uint64_t k) { return (k % 2 == 0) ? Parity::Even : Parity::Odd; }
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct ClosedFormResult {
    Rational area;  // >= 0
    Parity parity_branch;
    std::string formula_label;
};

/// Triangle (m = 3) area from the parity-split formulas. Independent of n.
/// Supports Fibonacci, Lucas, GeneralizedFibonacci, Pell and PellLucas.
ClosedFormResult closed_triangle_area(const SequenceFamily& family, std::uint64_t k);

/// Signed triangle area
///   ab(-1)^n/2 * (r^k - r^-k)^3 * (r^k + r^-k) * (r^k + (-1)^(k+1) r^-k)
/// evaluated exactly in the field of the parameters.
QuadElem general_triangle_area(const BinetParams& params, std::int64_t n, std::uint64_t k);

/// m-gon area from the Binet parameters:
///   |ab/2 * [(m-1) u (r^2k - r^-2k) - u (r^(2m-2)k - r^-(2m-2)k)]|
/// with u = r^k - r^-k for even k and u = r^k + r^-k for odd k.
/// Throws IrrationalResidue if the sqrt(d) part fails to cancel.
Rational general_mgon_area(const BinetParams& params, std::uint64_t k, std::uint64_t m);

/// m-gon area in terms of exact sequence values, e.g. 1/2 |(m-1) F_k F_2k - F_k F_(2m-2)k|.
Rational mgon_area(const SequenceFamily& family, std::uint64_t k, std::uint64_t m);

/// 4 (rank-2)^2 k^4
Rational polygonal_triangle_area(std::int64_t rank, std::uint64_t k);

/// 4 m (m-1) (m-2) (rank-2)^2 k^4 / 6
Rational polygonal_mgon_area(std::int64_t rank, std::uint64_t k, std::uint64_t m);

}  // namespace polyarea
