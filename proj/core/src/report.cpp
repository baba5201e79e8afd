#include "fracschrod/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "fracschrod/config.hpp"

namespace fracschrod {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

json complex_json(complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json echo_json(const ConfigEcho& echo) {
    json cfg = json::object();
    for (const auto& [k, v] : echo) cfg[k] = v;
    return cfg;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::Discrepant: return "Discrepant";
        case Verdict::FormulaOnly: return "FormulaOnly";
    }
    return "Unknown";
}

Verdict parse_verdict(std::string_view text) {
    if (text == "Confirmed") return Verdict::Confirmed;
    if (text == "Discrepant") return Verdict::Discrepant;
    if (text == "FormulaOnly") return Verdict::FormulaOnly;
    throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

const std::vector<std::string>& citation_vocabulary() {
    static const std::vector<std::string> vocabulary = [] {
        std::vector<std::string> v;
        for (int eq : {1, 8, 9, 13, 14, 16, 18, 19, 23, 24, 34, 35, 38, 39, 40, 44, 48, 49, 50, 52,
                       53, 54, 55, 56, 57, 58, 59, 60, 61, 64, 67, 69, 70, 71, 72, 74, 76}) {
            v.push_back(fmt::format("Eq. ({})", eq));
        }
        for (const char* extra : {"Eqs. (59)–(60)", "Eqs. (62)–(63)", "§I", "§II", "§III", "§IV",
                                  "§V", "§V-A", "§VII", "§VII-A"}) {
            v.emplace_back(extra);
        }
        return v;
    }();
    return vocabulary;
}

bool is_known_citation(std::string_view source) {
    const auto& v = citation_vocabulary();
    return std::find(v.begin(), v.end(), source) != v.end();
}

void retolerate(VerificationRow& row, double tolerance) {
    row.tolerance = tolerance;
    if (!row.oracle) {
        row.abs_deviation = 0.0;
        row.verdict = Verdict::FormulaOnly;
        return;
    }
    row.abs_deviation = std::abs(row.claimed - *row.oracle);
    row.verdict = row.abs_deviation <= tolerance ? Verdict::Confirmed : Verdict::Discrepant;
}

VerificationRow make_row(std::string claim_id, std::string source, complex claimed,
                         std::optional<complex> oracle, double tolerance, std::string note) {
    if (!is_known_citation(source)) throw std::invalid_argument("unknown citation '" + source + "'");
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
    VerificationRow row;
    row.claim_id = std::move(claim_id);
    row.source = std::move(source);
    row.claimed = claimed;
    row.oracle = oracle;
    row.note = std::move(note);
    retolerate(row, tolerance);
    return row;
}

std::string to_csv(const Table& table, const ConfigEcho& echo) {
    std::string out;
    for (const auto& [k, v] : echo) out += fmt::format("# {} = {}\n", k, v);
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += csv_field(fields[i]);
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) {
        if (r.size() != table.header.size()) throw std::logic_error("csv row width mismatch");
        line(r);
    }
    return out;
}

Table rows_table(const std::vector<VerificationRow>& rows) {
    Table t;
    t.header = {"claim_id", "source", "claimed_re", "claimed_im", "oracle_re", "oracle_im",
                "abs_deviation", "tolerance", "verdict", "note"};
    for (const auto& r : rows) {
        t.rows.push_back({r.claim_id, r.source, format_number(r.claimed.real()),
                          format_number(r.claimed.imag()),
                          r.oracle ? format_number(r.oracle->real()) : std::string{},
                          r.oracle ? format_number(r.oracle->imag()) : std::string{},
                          format_number(r.abs_deviation), format_number(r.tolerance),
                          std::string(to_string(r.verdict)), r.note});
    }
    return t;
}

std::string rows_to_csv(const std::vector<VerificationRow>& rows, const ConfigEcho& echo) {
    return to_csv(rows_table(rows), echo);
}

std::string rows_to_json(const std::vector<VerificationRow>& rows, const ConfigEcho& echo) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back(json{{"claim_id", r.claim_id},
                           {"source", r.source},
                           {"claimed", complex_json(r.claimed)},
                           {"oracle", r.oracle ? complex_json(*r.oracle) : json(nullptr)},
                           {"abs_deviation", r.abs_deviation},
                           {"tolerance", r.tolerance},
                           {"verdict", to_string(r.verdict)},
                           {"note", r.note}});
    }
    return json{{"config", echo_json(echo)}, {"rows", arr}}.dump(2) + "\n";
}

std::vector<VerificationRow> rows_from_json(std::string_view text) {
    const json doc = json::parse(text);
    std::vector<VerificationRow> rows;
    for (const auto& j : doc.at("rows")) {
        VerificationRow r;
        r.claim_id = j.at("claim_id").get<std::string>();
        r.source = j.at("source").get<std::string>();
        r.claimed = complex_from(j.at("claimed"));
        if (!j.at("oracle").is_null()) r.oracle = complex_from(j.at("oracle"));
        r.abs_deviation = j.at("abs_deviation").get<double>();
        r.tolerance = j.at("tolerance").get<double>();
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        r.note = j.at("note").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string table_to_json(const Table& table, const ConfigEcho& echo) {
    json arr = json::array();
    for (const auto& r : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = r.at(i);
        arr.push_back(std::move(obj));
    }
    return json{{"config", echo_json(echo)}, {"rows", arr}}.dump(2) + "\n";
}

void write_outputs(const std::filesystem::path& dir,
                   const std::vector<std::pair<std::string, std::string>>& files) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<fs::path> staged, placed;
    auto discard = [&] {
        std::error_code ec;
        for (const auto& p : staged) fs::remove(p, ec);
        for (const auto& p : placed) fs::remove(p, ec);
    };
    try {
        for (const auto& [name, content] : files) {
            const fs::path tmp = dir / (name + ".partial");
            staged.push_back(tmp);
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            out.close();
            if (!out) throw std::runtime_error("failed writing " + tmp.string());
        }
        for (std::size_t i = 0; i < files.size(); ++i) {
            fs::rename(staged[i], dir / files[i].first);
            placed.push_back(dir / files[i].first);
        }
    } catch (...) {
        discard();
        throw;
    }
}

}  // namespace fracschrod
