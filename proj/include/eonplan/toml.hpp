// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eonplan/errors.hpp"

namespace eonplan::toml {

// Minimal TOML reader covering the scenario-file grammar: top-level
// `key = value` pairs with strings, decimal numbers, booleans, (multi-line)
// arrays and single-line inline tables. Table headers, dotted keys, dates
// and exponents are rejected. Numbers are exact decimals with at most four
// fractional digits, surfaced as integers scaled by 1e4.

struct Pos {
  int line = 0;
  int col = 0;
};

class Value;

class Table {
 public:
  void set(std::string key, Value value);
  const Value* find(std::string_view key) const;
  const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, Value>> entries_;
};

using Array = std::vector<Value>;

class Value {
 public:
  using Storage = std::variant<std::string, int64_t, bool, Array, Table>;

  Value() = default;
  Value(Storage storage, Pos pos, std::shared_ptr<const std::string> source)
      : storage_(std::move(storage)), pos_(pos), source_(std::move(source)) {}

  Pos pos() const { return pos_; }
  // "file:line:col", for diagnostics.
  std::string where() const;

  bool is_string() const { return std::holds_alternative<std::string>(storage_); }
  bool is_number() const { return std::holds_alternative<int64_t>(storage_); }
  bool is_bool() const { return std::holds_alternative<bool>(storage_); }
  bool is_array() const { return std::holds_alternative<Array>(storage_); }
  bool is_table() const { return std::holds_alternative<Table>(storage_); }

  // Typed accessors throw a located validation error on mismatch.
  const std::string& as_string() const;
  int64_t as_number_e4() const;
  // Number that must be an integer (no fractional part).
  int64_t as_int() const;
  // Number re-scaled to 10^scale; rejects values finer than the scale.
  int64_t as_scaled(int scale) const;
  bool as_bool() const;
  const Array& as_array() const;
  const Table& as_table() const;
  std::vector<std::string> as_string_array() const;

 private:
  [[noreturn]] void type_error(const char* expected) const;

  Storage storage_;
  Pos pos_;
  std::shared_ptr<const std::string> source_;
};

struct Document {
  Table root;
  std::shared_ptr<const std::string> source_name;
};

Document parse(std::string_view text, std::string_view source_name);
Document parse_file(const std::string& path);

}  // namespace eonplan::toml
