// SPDX-License-Identifier: Apache-2.0
#include "eonplan/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eonplan/decimal.hpp"

namespace eonplan::toml {

namespace {

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  Parser(std::string_view text, std::shared_ptr<const std::string> source)
      : text_(text), source_(std::move(source)) {}

  Document parse_document() {
    Document doc;
    doc.source_name = source_;
    while (!at_end()) {
      skip_ws_and_comments_to_content();
      if (at_end()) break;
      if (peek() == '[') {
        fail(pos(), "table headers are not supported; use inline tables");
      }
      auto [key, key_pos] = parse_key();
      skip_inline_ws();
      expect('=', "'=' after key");
      skip_inline_ws();
      Value value = parse_value(/*allow_newlines=*/true);
      if (doc.root.find(key) != nullptr) {
        fail(key_pos, "duplicate key '" + key + "'");
      }
      doc.root.set(std::move(key), std::move(value));
      skip_inline_ws();
      if (!at_end() && peek() == '#') skip_comment();
      if (!at_end() && peek() != '\n') {
        fail(pos(), "unexpected text after value");
      }
    }
    return doc;
  }

 private:
  bool at_end() const { return index_ >= text_.size(); }
  char peek() const { return text_[index_]; }
  Pos pos() const { return Pos{line_, col_}; }

  char advance() {
    char c = text_[index_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(Pos p, const std::string& message) const {
    throw validation_error(*source_ + ":" + std::to_string(p.line) + ":" +
                           std::to_string(p.col) + ": " + message);
  }

  void expect(char c, const char* what) {
    if (at_end() || peek() != c) {
      fail(pos(), std::string("expected ") + what);
    }
    advance();
  }

  void skip_inline_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }

  void skip_comment() {
    while (!at_end() && peek() != '\n') advance();
  }

  // Skips whitespace, comments and newlines until the next content character.
  void skip_ws_and_comments_to_content() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        skip_comment();
      } else {
        break;
      }
    }
  }

  std::pair<std::string, Pos> parse_key() {
    Pos p = pos();
    if (!at_end() && peek() == '"') {
      return {parse_basic_string(), p};
    }
    std::string key;
    while (!at_end() && is_bare_key_char(peek())) key += advance();
    if (key.empty()) {
      fail(p, "expected key");
    }
    return {key, p};
  }

  std::string parse_basic_string() {
    Pos p = pos();
    expect('"', "'\"'");
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') {
        fail(p, "unterminated string");
      }
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail(p, "unterminated string");
        char esc = advance();
        switch (esc) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default:
            fail(pos(), std::string("unsupported escape '\\") + esc + "'");
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  Value parse_value(bool allow_newlines) {
    if (at_end()) fail(pos(), "expected value");
    Pos p = pos();
    char c = peek();
    if (c == '"') {
      return Value(parse_basic_string(), p, source_);
    }
    if (c == '[') {
      return parse_array(p, allow_newlines);
    }
    if (c == '{') {
      return parse_inline_table(p);
    }
    if (c == 't' || c == 'f') {
      return parse_boolean(p);
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      return parse_number(p);
    }
    fail(p, "expected value");
  }

  Value parse_boolean(Pos p) {
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += advance();
    if (word == "true") return Value(true, p, source_);
    if (word == "false") return Value(false, p, source_);
    fail(p, "expected value");
  }

  Value parse_number(Pos p) {
    std::string lexeme;
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '+' || c == '-') {
        lexeme += advance();
      } else if (c == 'e' || c == 'E' || c == '_' || c == 'x') {
        fail(p, "unsupported number syntax '" + lexeme + c + "'");
      } else {
        break;
      }
    }
    int64_t scaled;
    try {
      scaled = parse_scaled_decimal(lexeme, 4);
    } catch (const Error& e) {
      fail(p, e.what());
    }
    return Value(scaled, p, source_);
  }

  Value parse_array(Pos p, bool allow_newlines) {
    expect('[', "'['");
    Array items;
    while (true) {
      if (allow_newlines) {
        skip_ws_and_comments_to_content();
      } else {
        skip_inline_ws();
      }
      if (at_end()) fail(p, "unterminated array");
      if (peek() == ']') {
        advance();
        break;
      }
      items.push_back(parse_value(allow_newlines));
      if (allow_newlines) {
        skip_ws_and_comments_to_content();
      } else {
        skip_inline_ws();
      }
      if (at_end()) fail(p, "unterminated array");
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ']') {
        advance();
        break;
      }
      fail(pos(), "expected ',' or ']' in array");
    }
    return Value(std::move(items), p, source_);
  }

  // Inline tables stay on one line, per TOML.
  Value parse_inline_table(Pos p) {
    expect('{', "'{'");
    Table table;
    skip_inline_ws();
    if (!at_end() && peek() == '}') {
      advance();
      return Value(std::move(table), p, source_);
    }
    while (true) {
      skip_inline_ws();
      if (at_end() || peek() == '\n') fail(p, "unterminated inline table");
      auto [key, key_pos] = parse_key();
      skip_inline_ws();
      expect('=', "'=' after key");
      skip_inline_ws();
      Value value = parse_value(/*allow_newlines=*/false);
      if (table.find(key) != nullptr) {
        fail(key_pos, "duplicate key '" + key + "'");
      }
      table.set(std::move(key), std::move(value));
      skip_inline_ws();
      if (at_end() || peek() == '\n') fail(p, "unterminated inline table");
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        break;
      }
      fail(pos(), "expected ',' or '}' in inline table");
    }
    return Value(std::move(table), p, source_);
  }

  std::string_view text_;
  std::shared_ptr<const std::string> source_;
  size_t index_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

void Table::set(std::string key, Value value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

const Value* Table::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Value::where() const {
  std::string name = source_ ? *source_ : "<input>";
  return name + ":" + std::to_string(pos_.line) + ":" + std::to_string(pos_.col);
}

void Value::type_error(const char* expected) const {
  throw validation_error(where() + ": expected " + expected);
}

const std::string& Value::as_string() const {
  if (!is_string()) type_error("a string");
  return std::get<std::string>(storage_);
}

int64_t Value::as_number_e4() const {
  if (!is_number()) type_error("a number");
  return std::get<int64_t>(storage_);
}

int64_t Value::as_int() const {
  int64_t e4 = as_number_e4();
  if (e4 % 10000 != 0) type_error("an integer");
  return e4 / 10000;
}

int64_t Value::as_scaled(int scale) const {
  int64_t e4 = as_number_e4();
  int64_t divisor = 1;
  for (int i = scale; i < 4; ++i) divisor *= 10;
  if (e4 % divisor != 0) {
    throw validation_error(where() + ": number has more than " + std::to_string(scale) +
                           " decimal places");
  }
  return e4 / divisor;
}

bool Value::as_bool() const {
  if (!is_bool()) type_error("a boolean");
  return std::get<bool>(storage_);
}

const Array& Value::as_array() const {
  if (!is_array()) type_error("an array");
  return std::get<Array>(storage_);
}

const Table& Value::as_table() const {
  if (!is_table()) type_error("a table");
  return std::get<Table>(storage_);
}

std::vector<std::string> Value::as_string_array() const {
  std::vector<std::string> out;
  for (const Value& item : as_array()) {
    out.push_back(item.as_string());
  }
  return out;
}

Document parse(std::string_view text, std::string_view source_name) {
  auto source = std::make_shared<const std::string>(source_name);
  return Parser(text, source).parse_document();
}

Document parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw validation_error("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

}  // namespace eonplan::toml
