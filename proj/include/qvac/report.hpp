#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qvac {

inline constexpr const char* kVersion = "qvac 1.0.0";

enum class OutputFormat { Csv, Json };

// One result: inputs and outputs keep insertion order, which fixes the CSV column order.
struct Record {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    std::vector<std::string> flags;
    double numerical_error = 0.0;
};

// "%.8e": nine significant digits, '.' separator regardless of locale.
std::string format_scientific(double value);

// CSV: header row from the first record's input and output keys, then `numerical_error` and
// `flags` (';'-joined). Every record must share the first record's keys.
void write_csv(std::ostream& out, const std::vector<Record>& records);

// JSON: one object {inputs, outputs, flags, numerical_error, version} per record; several
// records are emitted as an array.
void write_json(std::ostream& out, const std::vector<Record>& records);

nlohmann::ordered_json to_json(const Record& record);

}  // namespace qvac
