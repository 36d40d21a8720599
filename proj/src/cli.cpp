#include "polyarea/cli.hpp"

#include "polyarea/report_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace polyarea::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FamilyOptions {
    std::string name;
    std::int64_t s = 1;
    std::int64_t t = 1;
    std::optional<std::int64_t> rank;
    std::string initial;
    std::string coeffs;

    void attach(CLI::App& cmd) {
        cmd.add_option("family", name,
                       "fibonacci, lucas, generalized, pell, pell-lucas, jacobsthal, "
                       "jacobsthal-lucas, polygonal, tribonacci, perrin, padovan, custom")
            ->required();
        cmd.add_option("--s", s, "generalized Fibonacci G1");
        cmd.add_option("--t", t, "generalized Fibonacci G2");
        cmd.add_option("--rank", rank, "polygonal rank (>= 3)");
        cmd.add_option("--initial", initial, "comma-separated initial terms (padovan, custom)");
        cmd.add_option("--coeffs", coeffs, "comma-separated recurrence coefficients (custom)");
    }
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<BigInt> parse_big_list(const std::string& text) {
    std::vector<BigInt> out;
    for (const auto& part : split_commas(text)) {
        const Rational v = Rational::parse(part);
        if (!v.is_integer()) throw UsageError("expected integers, got '" + part + "'");
        out.push_back(v.numerator());
    }
    return out;
}

std::array<BigInt, 3> parse_triple(const std::string& text) {
    const auto values = parse_big_list(text);
    if (values.size() != 3) throw UsageError("expected three comma-separated integers, got '" + text + "'");
    return {values[0], values[1], values[2]};
}

SequenceFamily make_family(const FamilyOptions& opts) {
    const auto kind = parse_kind(opts.name);
    if (!kind) throw UsageError("unknown family '" + opts.name + "'");
    if (!opts.initial.empty() && *kind != FamilyKind::Padovan && *kind != FamilyKind::Custom) {
        throw UsageError("--initial only applies to padovan and custom");
    }
    switch (*kind) {
        case FamilyKind::GeneralizedFibonacci:
            return SequenceFamily::generalized(opts.s, opts.t);
        case FamilyKind::Polygonal:
            if (!opts.rank) throw UsageError("polygonal needs --rank");
            return SequenceFamily::polygonal(*opts.rank);
        case FamilyKind::Padovan:
            return opts.initial.empty() ? SequenceFamily::of(FamilyKind::Padovan)
                                        : SequenceFamily::padovan(parse_triple(opts.initial));
        case FamilyKind::Custom: {
            if (opts.coeffs.empty() || opts.initial.empty()) {
                throw UsageError("custom needs --coeffs and --initial");
            }
            std::vector<std::int64_t> coeffs;
            for (const auto& c : parse_big_list(opts.coeffs)) coeffs.push_back(static_cast<std::int64_t>(c));
            return SequenceFamily::custom_recurrence(
                RecurrenceSpec::make(std::move(coeffs), parse_big_list(opts.initial), "custom"));
        }
        default:
            return SequenceFamily::of(*kind);
    }
}

std::string format_terms(const std::vector<BigInt>& values, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& v : values) arr.push_back(v.str());
            return arr.dump() + "\n";
        }
        case OutputFormat::Csv:
            out = "n,term\n";
            for (std::size_t i = 0; i < values.size(); ++i) {
                out += std::to_string(i) + "," + values[i].str() + "\n";
            }
            return out;
        case OutputFormat::Markdown:
            for (const auto& v : values) out += v.str() + "\n";
            return out;
    }
    return out;
}

struct AreaOutcome {
    std::string text;
    bool mismatch = false;
};

AreaOutcome area_command(const PolygonSpec& spec, const std::string& method, OutputFormat format) {
    if (method != "oracle" && method != "closed" && method != "both") {
        throw UsageError("--method must be oracle, closed or both");
    }
    std::optional<Rational> oracle;
    std::optional<Rational> closed;
    if (method != "closed") oracle = shoelace_area(build_vertices(spec));
    if (method != "oracle") {
        spec.validate();
        closed = closed_form_area(spec);
        if (!closed) throw UsageError("no closed form for " + spec.family.name());
    }
    std::optional<bool> match;
    if (oracle && closed) match = (*oracle == *closed);

    AreaOutcome outcome;
    outcome.mismatch = match == false;
    const std::string verdict = match ? (*match ? "MATCH" : "MISMATCH") : "";
    switch (format) {
        case OutputFormat::Json: {
            nlohmann::ordered_json doc = {{"family", spec.family.name()},
                                          {"n", spec.n},
                                          {"k", spec.k},
                                          {"m", spec.m}};
            doc["oracle"] = oracle ? nlohmann::ordered_json(oracle->str()) : nullptr;
            doc["closed"] = closed ? nlohmann::ordered_json(closed->str()) : nullptr;
            doc["verdict"] = match ? nlohmann::ordered_json(verdict) : nullptr;
            outcome.text = doc.dump(2) + "\n";
            break;
        }
        case OutputFormat::Csv:
            outcome.text = "family,n,k,m,oracle_area,closed_area,verdict\n" +
                           csv_field(spec.family.name()) + "," + std::to_string(spec.n) + "," +
                           std::to_string(spec.k) + "," + std::to_string(spec.m) + "," +
                           (oracle ? oracle->str() : "") + "," + (closed ? closed->str() : "") +
                           "," + verdict + "\n";
            break;
        case OutputFormat::Markdown:
            if (match) {
                outcome.text = "oracle " + oracle->str() + "\nclosed " + closed->str() + "\n" +
                               verdict + "\n";
            } else {
                outcome.text = (oracle ? oracle : closed)->str() + "\n";
            }
            break;
    }
    return outcome;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact areas of polygons with integer-sequence vertices", "polyarea"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "markdown";
    std::string out_path;
    std::uint64_t seed = RunOptions{}.seed;
    app.add_option("--format", format_name, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    app.add_option("--out", out_path, "write output to FILE instead of stdout");
    app.add_option("--seed", seed, "seed for the worker scheduling order");

    FamilyOptions gen_family;
    std::size_t count = 10;
    auto* gen = app.add_subcommand("gen", "print sequence terms 0..count-1");
    gen_family.attach(*gen);
    gen->add_option("--count", count, "number of terms");

    FamilyOptions area_family;
    std::uint64_t area_n = 0;
    std::uint64_t area_k = 1;
    std::uint64_t area_m = 3;
    std::string method = "oracle";
    auto* area = app.add_subcommand("area", "area of one stride-pattern polygon");
    area_family.attach(*area);
    area->add_option("--n", area_n, "start index");
    area->add_option("--k", area_k, "stride");
    area->add_option("--m", area_m, "vertex count");
    area->add_option("--method", method, "oracle, closed or both");

    FamilyOptions verify_family_opts;
    std::string n_range = "0..5";
    std::string k_range = "1..4";
    std::string m_range = "3..5";
    unsigned jobs = 0;
    auto* verify = app.add_subcommand("verify", "sweep a grid comparing oracle and closed form");
    verify_family_opts.attach(*verify);
    verify->add_option("--n", n_range, "start index range a..b");
    verify->add_option("--k", k_range, "stride range a..b");
    verify->add_option("--m", m_range, "vertex count range a..b");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    std::string which;
    std::string table_m = "3..7";
    std::string table_rank = "3..7";
    std::uint64_t table_n = 1;
    std::uint64_t k_max = 6;
    std::string padovan_initial = "1,1,1";
    bool strict = false;
    auto* table = app.add_subcommand("table", "regenerate a published table");
    table->add_option("which", which, "polygonal or third-order")
        ->required()
        ->check(CLI::IsMember({"polygonal", "third-order"}));
    table->add_option("--m-range", table_m, "polygonal: vertex counts a..b");
    table->add_option("--rank-range", table_rank, "polygonal: ranks a..b");
    table->add_option("--n", table_n, "third-order: start index");
    table->add_option("--k-max", k_max, "third-order: largest stride");
    table->add_option("--padovan-initial", padovan_initial, "third-order: Padovan f(0),f(1),f(2)");
    table->add_flag("--strict", strict, "third-order: exit 1 on any mismatch with printed values");

    std::vector<std::string> argv_storage{"polyarea"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const OutputFormat format = *parse_format(format_name);
    std::string text;
    int code = kExitOk;

    try {
        if (*gen) {
            text = format_terms(family_terms(make_family(gen_family), count), format);
        } else if (*area) {
            const PolygonSpec spec{make_family(area_family), area_n, area_k, area_m};
            auto outcome = area_command(spec, method, format);
            text = std::move(outcome.text);
            if (outcome.mismatch) code = kExitMismatch;
        } else if (*verify) {
            const SequenceFamily family = make_family(verify_family_opts);
            const RunOptions options{jobs, seed};
            const auto n = IndexRange::parse(n_range);
            const auto k = IndexRange::parse(k_range);
            const auto m = IndexRange::parse(m_range);
            const bool jacobsthal = family.kind == FamilyKind::Jacobsthal ||
                                    family.kind == FamilyKind::JacobsthalLucas;
            const VerificationReport report = jacobsthal
                                                  ? verify_collinearity(family, n, k, m, options)
                                                  : verify_family(family, n, k, m, options);
            text = format_report(report, format);
            err << report.grid.describe() << ": pass " << report.pass_count << ", fail "
                << report.fail_count << " ("
                << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()
                << " ms)\n";
            if (!report.ok()) code = kExitMismatch;
        } else if (*table) {
            if (which == "polygonal") {
                const auto t = polygonal_table(IndexRange::parse(table_m), IndexRange::parse(table_rank));
                text = format_polygonal_table(t, format);
                if (t.mismatch_count() != 0) code = kExitMismatch;
            } else {
                const auto t = third_order_table(table_n, k_max, parse_triple(padovan_initial));
                text = format_third_order_table(t, format);
                if (strict && t.mismatch_count() != 0) code = kExitMismatch;
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }

    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        file << text;
    }
    return code;
}

}  // namespace polyarea::cli
