#include "qvac/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qvac {

std::string format_scientific(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.8e", value);
    // %e honours LC_NUMERIC; the CLI never changes it, but normalise anyway.
    for (char& ch : buffer) {
        if (ch == ',') {
            ch = '.';
        }
    }
    return buffer;
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v)
{
    if (v.is_number_float()) {
        return format_scientific(v.get<double>());
    }
    if (v.is_number_integer() || v.is_number_unsigned()) {
        return v.dump();
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

std::vector<std::string> keys_of(const Record& r)
{
    std::vector<std::string> keys;
    for (const auto& [k, _] : r.inputs.items()) {
        keys.push_back(k);
    }
    for (const auto& [k, _] : r.outputs.items()) {
        keys.push_back(k);
    }
    return keys;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<Record>& records)
{
    if (records.empty()) {
        return;
    }
    const std::vector<std::string> header = keys_of(records.front());
    for (const auto& key : header) {
        out << key << ',';
    }
    out << "numerical_error,flags\n";

    for (const Record& r : records) {
        if (keys_of(r) != header) {
            throw std::logic_error("CSV records disagree on columns");
        }
        for (const auto& [_, v] : r.inputs.items()) {
            out << csv_cell(v) << ',';
        }
        for (const auto& [_, v] : r.outputs.items()) {
            out << csv_cell(v) << ',';
        }
        out << format_scientific(r.numerical_error) << ',';
        for (std::size_t i = 0; i < r.flags.size(); ++i) {
            out << (i ? ";" : "") << r.flags[i];
        }
        out << '\n';
    }
}

nlohmann::ordered_json to_json(const Record& record)
{
    nlohmann::ordered_json j;
    j["inputs"] = record.inputs;
    j["outputs"] = record.outputs;
    j["flags"] = record.flags;
    j["numerical_error"] = record.numerical_error;
    j["version"] = kVersion;
    return j;
}

void write_json(std::ostream& out, const std::vector<Record>& records)
{
    if (records.size() == 1) {
        out << to_json(records.front()).dump(2) << '\n';
        return;
    }
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const Record& r : records) {
        array.push_back(to_json(r));
    }
    out << array.dump(2) << '\n';
}

}  // namespace qvac
