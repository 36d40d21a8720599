#include "polyarea/closedforms.hpp"

#include <stdexcept>

namespace polyarea {

namespace {

void require_stride(std::uint64_t k) {
    if (k < 1) throw std::domain_error("stride k must be >= 1");
}

void require_vertex_count(std::uint64_t m) {
    if (m < 3) throw std::domain_error("vertex count m must be >= 3, got " + std::to_string(m));
}

void require_rank(std::int64_t rank) {
    if (rank < 3) throw std::domain_error("polygonal rank must be >= 3, got " + std::to_string(rank));
}

BigInt fib(std::uint64_t n) { return term(preset(SequenceFamily::of(FamilyKind::Fibonacci)), n); }
BigInt lucas(std::uint64_t n) { return term(preset(SequenceFamily::of(FamilyKind::Lucas)), n); }
BigInt pell(std::uint64_t n) { return term(preset(SequenceFamily::of(FamilyKind::Pell)), n); }
BigInt pell_lucas(std::uint64_t n) {
    return term(preset(SequenceFamily::of(FamilyKind::PellLucas)), n);
}

/// |s^2 + st - t^2|
BigInt generalized_discriminant(const SequenceFamily& f) {
    BigInt s = f.s;
    BigInt t = f.t;
    BigInt v = s * s + s * t - t * t;
    return v < 0 ? BigInt(-v) : v;
}

/// r^j - r^-j or r^j + r^-j
QuadElem power_pair(const QuadElem& r, std::int64_t j, int sign) {
    QuadElem up = pow(r, j);
    QuadElem down = pow(r, -j);
    return sign > 0 ? up + down : up - down;
}

}  // namespace

ClosedFormResult closed_triangle_area(const SequenceFamily& family, std::uint64_t k) {
    require_stride(k);
    const Parity parity = parity_of(k);
    const bool even = parity == Parity::Even;

    switch (family.kind) {
        case FamilyKind::Fibonacci:
        case FamilyKind::Lucas:
        case FamilyKind::GeneralizedFibonacci: {
            const BigInt f = fib(k);
            const BigInt l = lucas(k);
            const BigInt core = even ? BigInt(5 * f * f * f * f * l) : BigInt(f * f * l * l * l);
            BigInt scale = 1;
            std::string prefix;
            if (family.kind == FamilyKind::Lucas) {
                scale = 5;
                prefix = "5*";
            } else if (family.kind == FamilyKind::GeneralizedFibonacci) {
                scale = generalized_discriminant(family);
                prefix = "|s^2+st-t^2|*";
            }
            return {Rational(scale * core, 2), parity,
                    prefix + (even ? "5*F_k^4*L_k/2" : "F_k^2*L_k^3/2")};
        }
        case FamilyKind::Pell: {
            const BigInt p = pell(k);
            const BigInt q = pell_lucas(k);
            if (even) return {Rational(4 * p * p * p * p * q), parity, "4*P_k^4*Q_k"};
            return {Rational(p * p * q * q * q, 2), parity, "P_k^2*Q_k^3/2"};
        }
        case FamilyKind::PellLucas: {
            const BigInt p = pell(k);
            const BigInt q = pell_lucas(k);
            if (even) return {Rational(32 * p * p * p * p * q), parity, "32*P_k^4*Q_k"};
            // 8x the Pell area (ab = -1 vs 1/8). The often-quoted 8*P_k^2*Q_k^3
            // overstates the odd case by a factor of 2.
            return {Rational(4 * p * p * q * q * q), parity, "4*P_k^2*Q_k^3"};
        }
        default:
            break;
    }
    throw UnsupportedFamily("no closed-form triangle area for " + family.name());
}

QuadElem general_triangle_area(const BinetParams& params, std::int64_t n, std::uint64_t k) {
    require_stride(k);
    const auto kk = static_cast<std::int64_t>(k);
    const QuadElem& r = params.r;
    const QuadElem minus = power_pair(r, kk, -1);
    const QuadElem plus = power_pair(r, kk, +1);
    // r^k + (-1)^(k+1) r^-k
    const QuadElem mixed = power_pair(r, kk, alternating_sign(kk + 1));

    QuadElem area = params.a * params.b;
    area *= Rational(alternating_sign(n), 2);
    area *= minus * minus * minus;
    area *= plus;
    area *= mixed;
    return area;
}

Rational general_mgon_area(const BinetParams& params, std::uint64_t k, std::uint64_t m) {
    require_stride(k);
    require_vertex_count(m);
    const auto kk = static_cast<std::int64_t>(k);
    const auto mm = static_cast<std::int64_t>(m);
    const QuadElem& r = params.r;

    const QuadElem first = power_pair(r, kk, parity_of(k) == Parity::Even ? -1 : +1);
    const QuadElem doubled = power_pair(r, 2 * kk, -1);
    const QuadElem closing = power_pair(r, (2 * mm - 2) * kk, -1);

    QuadElem bracket = Rational(mm - 1) * (first * doubled) - first * closing;
    QuadElem area = params.a * params.b * bracket * Rational(1, 2);
    return abs_rational(area);
}

Rational mgon_area(const SequenceFamily& family, std::uint64_t k, std::uint64_t m) {
    require_stride(k);
    require_vertex_count(m);
    const std::uint64_t closing_index = (2 * m - 2) * k;

    auto bracket = [&](auto&& seq) {
        const BigInt x_k = seq(k);
        BigInt v = BigInt(m - 1) * x_k * seq(2 * k) - x_k * seq(closing_index);
        return v < 0 ? BigInt(-v) : v;
    };

    switch (family.kind) {
        case FamilyKind::Fibonacci:
            return Rational(bracket(fib), 2);
        case FamilyKind::Lucas:
            return Rational(5 * bracket(fib), 2);
        case FamilyKind::GeneralizedFibonacci:
            return Rational(generalized_discriminant(family) * bracket(fib), 2);
        case FamilyKind::Pell:
            return Rational(bracket(pell), 2);
        case FamilyKind::PellLucas:
            return Rational(4 * bracket(pell));
        default:
            break;
    }
    throw UnsupportedFamily("no closed-form m-gon area for " + family.name());
}

Rational polygonal_triangle_area(std::int64_t rank, std::uint64_t k) {
    require_rank(rank);
    require_stride(k);
    const BigInt gap = rank - 2;
    const BigInt kk = k;
    return Rational(4 * gap * gap * kk * kk * kk * kk);
}

Rational polygonal_mgon_area(std::int64_t rank, std::uint64_t k, std::uint64_t m) {
    require_rank(rank);
    require_stride(k);
    require_vertex_count(m);
    const BigInt gap = rank - 2;
    const BigInt kk = k;
    const BigInt mm = m;
    return Rational(4 * mm * (mm - 1) * (mm - 2) * gap * gap * kk * kk * kk * kk, 6);
}

}  // namespace polyarea
