#include "polyarea/sequences.hpp"

#include <utility>

namespace polyarea {

RecurrenceSpec RecurrenceSpec::make(std::vector<std::int64_t> coefficients,
                                    std::vector<BigInt> initial_terms, std::string label) {
    if (coefficients.empty()) {
        throw std::invalid_argument("recurrence order must be at least 1");
    }
    if (coefficients.size() != initial_terms.size()) {
        throw std::invalid_argument("recurrence '" + label + "' has " +
                                    std::to_string(coefficients.size()) + " coefficients but " +
                                    std::to_string(initial_terms.size()) + " initial terms");
    }
    return RecurrenceSpec{std::move(coefficients), std::move(initial_terms), std::move(label)};
}

SequenceFamily SequenceFamily::of(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::GeneralizedFibonacci:
            return generalized(1, 1);
        case FamilyKind::Polygonal:
            throw std::invalid_argument("polygonal family needs a rank; use SequenceFamily::polygonal");
        case FamilyKind::Custom:
            throw std::invalid_argument("custom family needs a recurrence; use custom_recurrence");
        default:
            break;
    }
    SequenceFamily f;
    f.kind = kind;
    return f;
}

SequenceFamily SequenceFamily::generalized(std::int64_t s, std::int64_t t) {
    SequenceFamily f;
    f.kind = FamilyKind::GeneralizedFibonacci;
    f.s = s;
    f.t = t;
    return f;
}

SequenceFamily SequenceFamily::polygonal(std::int64_t rank) {
    if (rank < 3) {
        throw std::domain_error("polygonal rank must be >= 3, got " + std::to_string(rank));
    }
    SequenceFamily f;
    f.kind = FamilyKind::Polygonal;
    f.rank = rank;
    return f;
}

SequenceFamily SequenceFamily::padovan(std::array<BigInt, 3> initial) {
    SequenceFamily f;
    f.kind = FamilyKind::Padovan;
    f.padovan_initial = std::move(initial);
    return f;
}

SequenceFamily SequenceFamily::custom_recurrence(RecurrenceSpec spec) {
    SequenceFamily f;
    f.kind = FamilyKind::Custom;
    f.custom = std::move(spec);
    return f;
}

std::string SequenceFamily::name() const {
    switch (kind) {
        case FamilyKind::GeneralizedFibonacci:
            return "generalized(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")";
        case FamilyKind::Polygonal:
            return "polygonal(rank=" + std::to_string(rank) + ")";
        case FamilyKind::Padovan:
            return "padovan(" + padovan_initial[0].str() + "," + padovan_initial[1].str() + "," +
                   padovan_initial[2].str() + ")";
        case FamilyKind::Custom:
            return "custom(" + (custom ? custom->label : std::string{}) + ")";
        default:
            return kind_name(kind);
    }
}

namespace {

constexpr std::pair<FamilyKind, const char*> kKindNames[] = {
    {FamilyKind::Fibonacci, "fibonacci"},
    {FamilyKind::Lucas, "lucas"},
    {FamilyKind::GeneralizedFibonacci, "generalized"},
    {FamilyKind::Pell, "pell"},
    {FamilyKind::PellLucas, "pell-lucas"},
    {FamilyKind::Jacobsthal, "jacobsthal"},
    {FamilyKind::JacobsthalLucas, "jacobsthal-lucas"},
    {FamilyKind::Polygonal, "polygonal"},
    {FamilyKind::Tribonacci, "tribonacci"},
    {FamilyKind::Perrin, "perrin"},
    {FamilyKind::Padovan, "padovan"},
    {FamilyKind::Custom, "custom"},
};

}  // namespace

std::string kind_name(FamilyKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<FamilyKind> parse_kind(const std::string& name) {
    for (const auto& [k, n] : kKindNames) {
        if (name == n) return k;
    }
    return std::nullopt;
}

bool has_binet_form(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Fibonacci:
        case FamilyKind::Lucas:
        case FamilyKind::GeneralizedFibonacci:
        case FamilyKind::Pell:
        case FamilyKind::PellLucas:
            return true;
        default:
            return false;
    }
}

RecurrenceSpec preset(const SequenceFamily& family) {
    using V = std::vector<BigInt>;
    switch (family.kind) {
        case FamilyKind::Fibonacci:
            return RecurrenceSpec::make({1, 1}, V{0, 1}, "fibonacci");
        case FamilyKind::Lucas:
            return RecurrenceSpec::make({1, 1}, V{2, 1}, "lucas");
        case FamilyKind::GeneralizedFibonacci:
            return RecurrenceSpec::make({1, 1}, V{BigInt(family.t) - family.s, BigInt(family.s)},
                                        family.name());
        case FamilyKind::Pell:
            return RecurrenceSpec::make({2, 1}, V{0, 1}, "pell");
        case FamilyKind::PellLucas:
            return RecurrenceSpec::make({2, 1}, V{2, 2}, "pell-lucas");
        case FamilyKind::Jacobsthal:
            return RecurrenceSpec::make({1, 2}, V{0, 1}, "jacobsthal");
        case FamilyKind::JacobsthalLucas:
            return RecurrenceSpec::make({1, 2}, V{2, 1}, "jacobsthal-lucas");
        case FamilyKind::Tribonacci:
            return RecurrenceSpec::make({1, 1, 1}, V{0, 1, 1}, "tribonacci");
        case FamilyKind::Perrin:
            return RecurrenceSpec::make({0, 1, 1}, V{3, 0, 2}, "perrin");
        case FamilyKind::Padovan:
            return RecurrenceSpec::make(
                {0, 1, 1}, V{family.padovan_initial.begin(), family.padovan_initial.end()},
                family.name());
        case FamilyKind::Custom:
            if (!family.custom) throw std::invalid_argument("custom family without a recurrence");
            return *family.custom;
        case FamilyKind::Polygonal:
            break;
    }
    throw UnsupportedFamily("no fixed recurrence for " + family.name() +
                            "; use polygonal_number instead");
}

std::vector<BigInt> terms(const RecurrenceSpec& spec, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    const std::size_t order = spec.order();
    for (std::size_t i = 0; i < count && i < order; ++i) out.push_back(spec.initial_terms[i]);
    while (out.size() < count) {
        BigInt next = 0;
        const std::size_t n = out.size();
        for (std::size_t j = 0; j < order; ++j) {
            if (spec.coefficients[j] != 0) next += spec.coefficients[j] * out[n - 1 - j];
        }
        out.push_back(std::move(next));
    }
    return out;
}

BigInt term(const RecurrenceSpec& spec, std::uint64_t n) {
    const std::size_t order = spec.order();
    if (n < order) return spec.initial_terms[n];
    // Sliding window of the last `order` terms; oldest first.
    std::vector<BigInt> window(spec.initial_terms);
    for (std::uint64_t i = order; i <= n; ++i) {
        BigInt next = 0;
        for (std::size_t j = 0; j < order; ++j) {
            if (spec.coefficients[j] != 0) next += spec.coefficients[j] * window[order - 1 - j];
        }
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return window.back();
}

BigInt polygonal_number(std::int64_t rank, std::uint64_t n) {
    if (rank < 3) {
        throw std::domain_error("polygonal rank must be >= 3, got " + std::to_string(rank));
    }
    const BigInt nn = n;
    const BigInt twice = nn * (nn * (rank - 2) - (rank - 4));
    // n(n(r-2) - (r-4)) = (r-2)(n^2 - n) + 2n, and n^2 - n is even.
    if (twice % 2 != 0) throw std::logic_error("polygonal numerator is odd");
    return twice / 2;
}

std::vector<BigInt> family_terms(const SequenceFamily& family, std::size_t count) {
    if (family.kind == FamilyKind::Polygonal) {
        std::vector<BigInt> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(polygonal_number(family.rank, i));
        return out;
    }
    return terms(preset(family), count);
}

BinetParams binet_params(const SequenceFamily& family) {
    const QuadElem phi(Rational(1, 2), Rational(1, 2), 5);
    const QuadElem silver(1, 1, 2);  // 1 + sqrt 2
    switch (family.kind) {
        case FamilyKind::Fibonacci: {
            const QuadElem inv_sqrt5(0, Rational(1, 5), 5);
            return {inv_sqrt5, inv_sqrt5, phi};
        }
        case FamilyKind::Lucas:
            return {QuadElem(1, 0, 5), QuadElem(-1, 0, 5), phi};
        case FamilyKind::GeneralizedFibonacci: {
            const QuadElem inv_sqrt5(0, Rational(1, 5), 5);
            const QuadElem s(family.s, 0, 5);
            const QuadElem t(family.t, 0, 5);
            QuadElem a = (s + (t - s) * inverse(phi)) * inv_sqrt5;
            QuadElem b = (s + (s - t) * phi) * inv_sqrt5;
            return {std::move(a), std::move(b), phi};
        }
        case FamilyKind::Pell: {
            const QuadElem inv_two_sqrt2(0, Rational(1, 4), 2);
            return {inv_two_sqrt2, inv_two_sqrt2, silver};
        }
        case FamilyKind::PellLucas:
            return {QuadElem(1, 0, 2), QuadElem(-1, 0, 2), silver};
        default:
            break;
    }
    throw UnsupportedFamily(family.name() + " has no quadratic-field Binet form");
}

Rational binet_eval(const BinetParams& params, std::int64_t n) {
    QuadElem value = params.a * pow(params.r, n);
    QuadElem tail = params.b * pow(params.r, -n);
    if (alternating_sign(n + 1) < 0) tail = -tail;
    value += tail;
    return to_rational(value);
}

}  // namespace polyarea
