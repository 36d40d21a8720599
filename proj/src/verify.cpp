#include "polyarea/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace polyarea {

IndexRange IndexRange::parse(const std::string& text) {
    auto to_u64 = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("malformed range '" + text + "' (expected a..b)");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) return single(to_u64(text));
    const std::string_view view(text);
    IndexRange r{to_u64(view.substr(0, dots)), to_u64(view.substr(dots + 2))};
    if (r.first > r.last) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

std::string IndexRange::str() const {
    return std::to_string(first) + ".." + std::to_string(last);
}

void Grid::validate() const {
    for (const auto* r : {&n, &k, &m}) {
        if (r->first > r->last) throw std::invalid_argument("empty range " + r->str());
    }
    if (k.first < 1) throw std::domain_error("stride k must be >= 1");
    if (m.first < 3) throw std::domain_error("vertex count m must be >= 3");
    const std::uint64_t max_index = n.last + (2 * m.last - 1) * k.last;
    if (max_index > kMaxSequenceIndex) {
        throw std::invalid_argument("grid reaches sequence index " + std::to_string(max_index) +
                                    ", limit is " + std::to_string(kMaxSequenceIndex));
    }
}

std::string Grid::describe() const {
    return family.name() + " n=" + n.str() + " k=" + k.str() + " m=" + m.str();
}

std::optional<Rational> closed_form_area(const PolygonSpec& spec) {
    const FamilyKind kind = spec.family.kind;
    if (has_binet_form(kind)) return mgon_area(spec.family, spec.k, spec.m);
    if (kind == FamilyKind::Polygonal) return polygonal_mgon_area(spec.family.rank, spec.k, spec.m);
    if (kind == FamilyKind::Jacobsthal || kind == FamilyKind::JacobsthalLucas) return Rational(0);
    return std::nullopt;
}

namespace {

/// Runs task(i) for i in [0, count) across workers. Each index is handled once;
/// the pickup order is a seeded permutation.
template <typename Task>
void run_cells(std::size_t count, const RunOptions& options, Task&& task) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);

    unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(count, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t slot = next++; slot < count; slot = next++) {
            try {
                task(order[slot]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

struct CellIndex {
    std::uint64_t n, k, m;
};

std::vector<CellIndex> enumerate(const Grid& grid) {
    std::vector<CellIndex> cells;
    cells.reserve(grid.n.size() * grid.k.size() * grid.m.size());
    for (auto n = grid.n.first; n <= grid.n.last; ++n)
        for (auto k = grid.k.first; k <= grid.k.last; ++k)
            for (auto m = grid.m.first; m <= grid.m.last; ++m) cells.push_back({n, k, m});
    return cells;
}

template <typename Evaluate>
VerificationReport sweep(const Grid& grid, const RunOptions& options, Evaluate&& evaluate) {
    grid.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::vector<BigInt> seq =
        family_terms(grid.family, grid.n.last + (2 * grid.m.last - 1) * grid.k.last + 1);
    const auto indices = enumerate(grid);

    VerificationReport report;
    report.grid = grid;
    report.cells.resize(indices.size());
    run_cells(indices.size(), options, [&](std::size_t i) {
        const auto [n, k, m] = indices[i];
        VerificationCell& cell = report.cells[i];
        cell.spec = PolygonSpec{grid.family, n, k, m};
        evaluate(cell, build_vertices(seq, n, k, m));
    });

    for (const auto& cell : report.cells) {
        if (!cell.closed_area) continue;
        if (cell.match) {
            ++report.pass_count;
        } else {
            ++report.fail_count;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace

VerificationReport verify_family(const SequenceFamily& family, IndexRange n, IndexRange k,
                                 IndexRange m, const RunOptions& options) {
    if (family.kind == FamilyKind::Jacobsthal || family.kind == FamilyKind::JacobsthalLucas) {
        throw UnsupportedFamily(family.name() +
                                " polygons are degenerate; use verify_collinearity");
    }
    return sweep(Grid{family, n, k, m}, options, [](VerificationCell& cell, const Polygon& poly) {
        cell.oracle_area = shoelace_area(poly);
        cell.closed_area = closed_form_area(cell.spec);
        if (!cell.closed_area) {
            cell.note = "no closed form";
            return;
        }
        cell.match = *cell.closed_area == cell.oracle_area;
        if (!cell.match) cell.note = "oracle and closed form differ";
    });
}

VerificationReport verify_collinearity(const SequenceFamily& family, IndexRange n, IndexRange k,
                                       IndexRange m, const RunOptions& options) {
    if (family.kind != FamilyKind::Jacobsthal && family.kind != FamilyKind::JacobsthalLucas) {
        throw UnsupportedFamily("collinearity sweep is only defined for the Jacobsthal kinds, got " +
                                family.name());
    }
    return sweep(Grid{family, n, k, m}, options, [](VerificationCell& cell, const Polygon& poly) {
        const bool on_line = collinear(poly.vertices());
        cell.oracle_area = shoelace_area(poly);
        cell.closed_area = Rational(0);
        cell.match = on_line && cell.oracle_area.is_zero();
        cell.note = on_line ? "collinear" : "not collinear";
    });
}

std::string rank_label(std::int64_t rank) {
    static const char* const names[] = {"Triangular", "Square",    "Pentagonal", "Hexagonal",
                                        "Heptagonal", "Octagonal", "Nonagonal",  "Decagonal"};
    if (rank >= 3 && rank <= 10) return names[rank - 3];
    return "rank-" + std::to_string(rank);
}

namespace {

// Printed coefficients of k^4; rows m = 3..7, columns rank = 3..7.
constexpr std::int64_t kPublishedPolygonal[5][5] = {
    {4, 16, 36, 64, 100},
    {16, 64, 144, 256, 400},
    {40, 160, 360, 640, 1000},
    {80, 320, 720, 1280, 2000},
    {140, 560, 1260, 2240, 3500},
};

}  // namespace

std::size_t PolygonalTable::mismatch_count() const {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = 0; j < ranks.size(); ++j)
            if (published[i][j] && *published[i][j] != coefficients[i][j]) ++bad;
    return bad;
}

PolygonalTable polygonal_table(IndexRange m_range, IndexRange rank_range) {
    if (m_range.first < 3) throw std::domain_error("vertex count m must be >= 3");
    if (rank_range.first < 3) throw std::domain_error("polygonal rank must be >= 3");
    PolygonalTable table;
    for (auto m = m_range.first; m <= m_range.last; ++m) table.ms.push_back(m);
    for (auto r = rank_range.first; r <= rank_range.last; ++r)
        table.ranks.push_back(static_cast<std::int64_t>(r));

    for (const auto m : table.ms) {
        auto& coeff_row = table.coefficients.emplace_back();
        auto& pub_row = table.published.emplace_back();
        for (const auto rank : table.ranks) {
            coeff_row.push_back(polygonal_mgon_area(rank, 1, m));
            if (m <= 7 && rank <= 7) {
                pub_row.emplace_back(kPublishedPolygonal[m - 3][rank - 3]);
            } else {
                pub_row.emplace_back(std::nullopt);
            }
        }
    }
    return table;
}

namespace {

struct PublishedThirdOrder {
    Rational tribonacci;
    Rational perrin;
    Rational padovan;
};

// Values as printed for n = 1, k = 1..6, typos included (Perrin k = 3 reads 31/9).
const PublishedThirdOrder kPublishedThirdOrder[6] = {
    {3, Rational(9, 2), 0},
    {64, Rational(47, 2), 1},
    {849, Rational(31, 9), 15},
    {23360, Rational(298, 2), 44},
    {509729, Rational(1629, 2), 95},
    {10049160, Rational(9640, 2), 810},
};

}  // namespace

std::size_t ThirdOrderTable::mismatch_count() const {
    std::size_t bad = 0;
    for (const auto& row : rows)
        for (const auto* e : {&row.tribonacci, &row.perrin, &row.padovan})
            if (e->matches() == false) ++bad;
    return bad;
}

ThirdOrderTable third_order_table(std::uint64_t n, std::uint64_t k_max,
                                  std::array<BigInt, 3> padovan_initial) {
    if (k_max < 1) throw std::domain_error("k_max must be >= 1");
    if (n + 5 * k_max > kMaxSequenceIndex) {
        throw std::invalid_argument("third-order table exceeds sequence index limit");
    }
    ThirdOrderTable table;
    table.n = n;
    table.padovan_initial = padovan_initial;

    const std::size_t count = n + 5 * k_max + 1;
    const auto trib = family_terms(SequenceFamily::of(FamilyKind::Tribonacci), count);
    const auto perrin = family_terms(SequenceFamily::of(FamilyKind::Perrin), count);
    const auto padovan = family_terms(SequenceFamily::padovan(std::move(padovan_initial)), count);

    for (std::uint64_t k = 1; k <= k_max; ++k) {
        ThirdOrderRow row;
        row.k = k;
        row.tribonacci.computed = shoelace_area(build_vertices(trib, n, k, 3));
        row.perrin.computed = shoelace_area(build_vertices(perrin, n, k, 3));
        row.padovan.computed = shoelace_area(build_vertices(padovan, n, k, 3));
        if (n == 1 && k <= 6) {
            const auto& pub = kPublishedThirdOrder[k - 1];
            row.tribonacci.published = pub.tribonacci;
            row.perrin.published = pub.perrin;
            row.padovan.published = pub.padovan;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace polyarea
