#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace hybridcomb::cli {

enum class Format { Csv, Json };

using Cell = std::variant<std::int64_t, double, std::string>;

/// Flat result table; CSV writes it directly, JSON writes it as an array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest text that reads back to the same double; infinities become "inf"/"-inf".
std::string format_double(double value);

void write_csv(std::ostream& os, const Table& table);

/// JSON value of a double; non-finite values are stored as strings.
nlohmann::ordered_json json_number(double value);
nlohmann::ordered_json table_records(const Table& table);

/// Serialized form used for every JSON data file, ending in a newline.
std::string dump_json(const nlohmann::ordered_json& doc);

}  // namespace hybridcomb::cli
