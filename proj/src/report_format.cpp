#include "polyarea/report_format.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include <sstream>

namespace polyarea {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    return std::nullopt;
}

std::string approximate(const Rational& x) {
    using boost::multiprecision::cpp_bin_float_50;
    const cpp_bin_float_50 value =
        cpp_bin_float_50(x.numerator()) / cpp_bin_float_50(x.denominator());
    return value.str(6);
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string join_csv(std::initializer_list<std::string> fields) {
    std::string line;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) line += ',';
        line += csv_field(f);
        first = false;
    }
    line += '\n';
    return line;
}

ordered_json rational_or_null(const std::optional<Rational>& x) {
    if (!x) return nullptr;
    return x->str();
}

std::string verdict(const std::optional<bool>& match) {
    if (!match) return "";
    return *match ? "MATCH" : "MISMATCH";
}

}  // namespace

std::string format_report(const VerificationReport& report, OutputFormat format) {
    const Grid& grid = report.grid;
    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc;
            doc["grid"] = {{"family", grid.family.name()},
                           {"n", grid.n.str()},
                           {"k", grid.k.str()},
                           {"m", grid.m.str()}};
            ordered_json cells = ordered_json::array();
            for (const auto& c : report.cells) {
                cells.push_back({{"n", c.spec.n},
                                 {"k", c.spec.k},
                                 {"m", c.spec.m},
                                 {"oracle_area", c.oracle_area.str()},
                                 {"closed_area", rational_or_null(c.closed_area)},
                                 {"match", c.match},
                                 {"note", c.note}});
            }
            doc["cells"] = std::move(cells);
            doc["pass_count"] = report.pass_count;
            doc["fail_count"] = report.fail_count;
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = join_csv({"family", "n", "k", "m", "oracle_area", "closed_area",
                                        "match", "note"});
            const std::string family = grid.family.name();
            for (const auto& c : report.cells) {
                out += join_csv({family, std::to_string(c.spec.n), std::to_string(c.spec.k),
                                 std::to_string(c.spec.m), c.oracle_area.str(),
                                 c.closed_area ? c.closed_area->str() : std::string{},
                                 c.match ? "true" : "false", c.note});
            }
            return out;
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "## Verification: " << grid.describe() << "\n\n";
            os << "| n | k | m | oracle area | closed form | match | approx. | note |\n";
            os << "|---|---|---|---|---|---|---|---|\n";
            for (const auto& c : report.cells) {
                os << "| " << c.spec.n << " | " << c.spec.k << " | " << c.spec.m << " | "
                   << c.oracle_area.str() << " | "
                   << (c.closed_area ? c.closed_area->str() : std::string("-")) << " | "
                   << (c.closed_area ? (c.match ? "yes" : "**NO**") : "-") << " | "
                   << approximate(c.oracle_area) << " | " << c.note << " |\n";
            }
            os << "\npass " << report.pass_count << ", fail " << report.fail_count << "\n";
            return os.str();
        }
    }
    return {};
}

std::string format_polygonal_table(const PolygonalTable& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc;
            ordered_json ranks = ordered_json::array();
            for (const auto r : table.ranks) ranks.push_back({{"rank", r}, {"label", rank_label(r)}});
            doc["ranks"] = std::move(ranks);
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < table.ms.size(); ++i) {
                ordered_json cells = ordered_json::array();
                for (std::size_t j = 0; j < table.ranks.size(); ++j) {
                    const auto& pub = table.published[i][j];
                    ordered_json cell = {{"rank", table.ranks[j]},
                                         {"coefficient", table.coefficients[i][j].str()},
                                         {"published", rational_or_null(pub)}};
                    if (pub) cell["match"] = (*pub == table.coefficients[i][j]);
                    cells.push_back(std::move(cell));
                }
                rows.push_back({{"m", table.ms[i]}, {"cells", std::move(cells)}});
            }
            doc["rows"] = std::move(rows);
            doc["mismatch_count"] = table.mismatch_count();
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = join_csv({"m", "rank", "label", "coefficient", "published", "match"});
            for (std::size_t i = 0; i < table.ms.size(); ++i) {
                for (std::size_t j = 0; j < table.ranks.size(); ++j) {
                    const auto& pub = table.published[i][j];
                    std::optional<bool> match;
                    if (pub) match = (*pub == table.coefficients[i][j]);
                    out += join_csv({std::to_string(table.ms[i]), std::to_string(table.ranks[j]),
                                     rank_label(table.ranks[j]), table.coefficients[i][j].str(),
                                     pub ? pub->str() : std::string{},
                                     match ? (*match ? "true" : "false") : std::string{}});
                }
            }
            return out;
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "| m |";
            for (const auto r : table.ranks) os << ' ' << rank_label(r) << " |";
            os << "\n|---|";
            for (std::size_t j = 0; j < table.ranks.size(); ++j) os << "---|";
            os << '\n';
            for (std::size_t i = 0; i < table.ms.size(); ++i) {
                os << "| " << table.ms[i] << " |";
                for (std::size_t j = 0; j < table.ranks.size(); ++j) {
                    os << ' ' << table.coefficients[i][j].str() << "k^4";
                    const auto& pub = table.published[i][j];
                    if (pub && *pub != table.coefficients[i][j]) {
                        os << " MISMATCH (printed " << pub->str() << "k^4)";
                    }
                    os << " |";
                }
                os << '\n';
            }
            os << "\nmismatches against the published table: " << table.mismatch_count() << '\n';
            return os.str();
        }
    }
    return {};
}

namespace {

std::string padovan_initial_text(const ThirdOrderTable& table) {
    return table.padovan_initial[0].str() + "," + table.padovan_initial[1].str() + "," +
           table.padovan_initial[2].str();
}

std::string entry_status(const ThirdOrderEntry& e) {
    const auto m = e.matches();
    if (!m) return "-";
    if (*m) return "MATCH";
    return "MISMATCH (printed " + e.published->str() + ")";
}

}  // namespace

std::string format_third_order_table(const ThirdOrderTable& table, OutputFormat format) {
    struct Column {
        const char* name;
        const ThirdOrderEntry ThirdOrderRow::*entry;
        const char* flag;
    };
    const Column columns[] = {
        {"tribonacci", &ThirdOrderRow::tribonacci, ""},
        {"perrin", &ThirdOrderRow::perrin, ""},
        {"padovan", &ThirdOrderRow::padovan, ThirdOrderTable::kPadovanFlag},
    };

    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc;
            doc["n"] = table.n;
            doc["m"] = 3;
            doc["padovan_initial"] = {table.padovan_initial[0].str(), table.padovan_initial[1].str(),
                                      table.padovan_initial[2].str()};
            ordered_json rows = ordered_json::array();
            for (const auto& row : table.rows) {
                ordered_json r;
                r["k"] = row.k;
                for (const auto& col : columns) {
                    const ThirdOrderEntry& e = row.*col.entry;
                    ordered_json cell = {{"computed", e.computed.str()},
                                         {"published", rational_or_null(e.published)}};
                    if (const auto m = e.matches()) cell["match"] = *m;
                    if (*col.flag != '\0') cell["flag"] = col.flag;
                    r[col.name] = std::move(cell);
                }
                rows.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows);
            doc["mismatch_count"] = table.mismatch_count();
            return doc.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = join_csv({"k", "family", "computed", "published", "status", "flag"});
            for (const auto& row : table.rows) {
                for (const auto& col : columns) {
                    const ThirdOrderEntry& e = row.*col.entry;
                    out += join_csv({std::to_string(row.k), col.name, e.computed.str(),
                                     e.published ? e.published->str() : std::string{},
                                     verdict(e.matches()), col.flag});
                }
            }
            return out;
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "Triangle areas for n = " << table.n << ", m = 3. Padovan initial terms "
               << padovan_initial_text(table) << ": " << ThirdOrderTable::kPadovanFlag << ".\n\n";
            os << "| k | Tribonacci | check | Perrin | check | Padovan | check |\n";
            os << "|---|---|---|---|---|---|---|\n";
            for (const auto& row : table.rows) {
                os << "| " << row.k;
                for (const auto& col : columns) {
                    const ThirdOrderEntry& e = row.*col.entry;
                    os << " | " << e.computed.str();
                    if (!e.computed.is_integer()) os << " (" << approximate(e.computed) << ")";
                    os << " | " << entry_status(e);
                    if (*col.flag != '\0') os << ", " << col.flag;
                }
                os << " |\n";
            }
            os << "\nmismatches against the published table: " << table.mismatch_count() << '\n';
            return os.str();
        }
    }
    return {};
}

}  // namespace polyarea
