#pragma once

#include "polyarea/numerics.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyarea {

struct UnsupportedFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous linear recurrence
///   f(n) = c1*f(n-1) + c2*f(n-2) + ... + c_order*f(n-order)
/// with f(0)..f(order-1) given by initial_terms.
struct RecurrenceSpec {
    std::vector<std::int64_t> coefficients;
    std::vector<BigInt> initial_terms;
    std::string label;

    std::size_t order() const noexcept { return coefficients.size(); }

    /// Validating constructor; throws std::invalid_argument on length mismatch or order 0.
    static RecurrenceSpec make(std::vector<std::int64_t> coefficients,
                               std::vector<BigInt> initial_terms, std::string label);

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

enum class FamilyKind {
    Fibonacci,
    Lucas,
    GeneralizedFibonacci,
    Pell,
    PellLucas,
    Jacobsthal,
    JacobsthalLucas,
    Polygonal,
    Tribonacci,
    Perrin,
    Padovan,
    Custom,
};

/// A named integer sequence together with whatever parameters its kind needs.
/// Build one through the static factories so the invariants are checked.
struct SequenceFamily {
    FamilyKind kind = FamilyKind::Fibonacci;
    std::int64_t s = 0;     // GeneralizedFibonacci: G1
    std::int64_t t = 0;     // GeneralizedFibonacci: G2
    std::int64_t rank = 0;  // Polygonal
    std::array<BigInt, 3> padovan_initial{1, 1, 1};
    std::optional<RecurrenceSpec> custom;

    static SequenceFamily of(FamilyKind kind);
    static SequenceFamily generalized(std::int64_t s, std::int64_t t);
    static SequenceFamily polygonal(std::int64_t rank);
    static SequenceFamily padovan(std::array<BigInt, 3> initial);
    static SequenceFamily custom_recurrence(RecurrenceSpec spec);

    /// Stable human/machine label, e.g. "fibonacci", "generalized(s=2,t=3)", "polygonal(rank=6)".
    std::string name() const;

    friend bool operator==(const SequenceFamily&, const SequenceFamily&) = default;
};

/// Lower-case kind name as used on the command line ("pell-lucas", ...).
std::string kind_name(FamilyKind kind);
std::optional<FamilyKind> parse_kind(const std::string& name);

/// True for the families whose terms fit a*r^n + b*(-1)^(n+1)/r^n in a quadratic field.
bool has_binet_form(FamilyKind kind);

/// The recurrence behind a family. Polygonal numbers have no fixed-coefficient
/// recurrence here and raise UnsupportedFamily.
RecurrenceSpec preset(const SequenceFamily& family);

/// Exact n-th term by forward iteration.
BigInt term(const RecurrenceSpec& spec, std::uint64_t n);

/// Terms f(0)..f(count-1).
std::vector<BigInt> terms(const RecurrenceSpec& spec, std::size_t count);

/// Terms 0..count-1 of any family, polygonal included.
std::vector<BigInt> family_terms(const SequenceFamily& family, std::size_t count);

/// n(n(rank-2) - (rank-4))/2, for rank >= 3.
BigInt polygonal_number(std::int64_t rank, std::uint64_t n);

/// Coefficients of f(n) = a*r^n + b*(-1)^(n+1)*r^(-n), all in one quadratic field.
struct BinetParams {
    QuadElem a;
    QuadElem b;
    QuadElem r;
};

BinetParams binet_params(const SequenceFamily& family);

/// Evaluates a*r^n + b*(-1)^(n+1)*r^(-n) exactly. Any integer n is accepted.
Rational binet_eval(const BinetParams& params, std::int64_t n);

}  // namespace polyarea
