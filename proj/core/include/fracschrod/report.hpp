#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracschrod/grid.hpp"

namespace fracschrod {

enum class Verdict { Confirmed, Discrepant, FormulaOnly };

std::string_view to_string(Verdict verdict);
Verdict parse_verdict(std::string_view text);

/// One claim checked against an independent value.
struct VerificationRow {
    std::string claim_id;
    std::string source;  // citation, from citation_vocabulary()
    complex claimed;
    std::optional<complex> oracle;
    double abs_deviation = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::FormulaOnly;
    std::string note;

    bool operator==(const VerificationRow&) const = default;
};

/// Fills in deviation and verdict. Throws on a citation outside the vocabulary.
VerificationRow make_row(std::string claim_id, std::string source, complex claimed,
                         std::optional<complex> oracle, double tolerance, std::string note = {});

/// Recomputes the verdict after a tolerance change.
void retolerate(VerificationRow& row, double tolerance);

const std::vector<std::string>& citation_vocabulary();
bool is_known_citation(std::string_view source);

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Plain CSV table: '#'-prefixed config echo lines, header, rows. Fields
/// containing ',' '"' or newlines are quoted.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& table, const ConfigEcho& echo);

Table rows_table(const std::vector<VerificationRow>& rows);
std::string rows_to_csv(const std::vector<VerificationRow>& rows, const ConfigEcho& echo);

/// {"config": {...}, "rows": [...]}; complex values as {"re": .., "im": ..}.
std::string rows_to_json(const std::vector<VerificationRow>& rows, const ConfigEcho& echo);
std::vector<VerificationRow> rows_from_json(std::string_view text);
/// JSON for a plain table: an array of objects keyed by header.
std::string table_to_json(const Table& table, const ConfigEcho& echo);

/// Writes every file to `dir` through temporaries and renames them into place
/// only after all writes succeeded. On failure nothing new is left behind.
void write_outputs(const std::filesystem::path& dir,
                   const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace fracschrod
