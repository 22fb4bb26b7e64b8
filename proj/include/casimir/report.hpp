// Deterministic machine-readable reporting: an insertion-ordered JSON value
// with round-trip-exact double formatting (17 significant digits), so that
// identical configurations always produce byte-identical output.
#pragma once

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir {

class JsonValue {
 public:
  JsonValue() : data_(nullptr) {}
  JsonValue(std::nullptr_t) : data_(nullptr) {}
  JsonValue(bool b) : data_(b) {}
  JsonValue(int i) : data_(static_cast<long long>(i)) {}
  JsonValue(long i) : data_(static_cast<long long>(i)) {}
  JsonValue(long long i) : data_(i) {}
  JsonValue(std::size_t i) : data_(static_cast<long long>(i)) {}
  JsonValue(double d) : data_(d) {}
  JsonValue(const char* s) : data_(std::string(s)) {}
  JsonValue(std::string s) : data_(std::move(s)) {}

  static JsonValue array() {
    JsonValue v;
    v.data_ = Array{};
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.data_ = Object{};
    return v;
  }

  /// Object access; inserts the key on first use, preserving insertion order.
  JsonValue& operator[](const std::string& key) {
    if (!std::holds_alternative<Object>(data_)) {
      if (std::holds_alternative<std::nullptr_t>(data_)) data_ = Object{};
      else throw std::logic_error("JsonValue: not an object");
    }
    auto& obj = std::get<Object>(data_);
    for (auto& [k, v] : obj)
      if (k == key) return v;
    obj.emplace_back(key, JsonValue());
    return obj.back().second;
  }

  void push(JsonValue v) {
    if (!std::holds_alternative<Array>(data_)) {
      if (std::holds_alternative<std::nullptr_t>(data_)) data_ = Array{};
      else throw std::logic_error("JsonValue: not an array");
    }
    std::get<Array>(data_).push_back(std::move(v));
  }

  std::string dump(int indent = 2) const {
    std::ostringstream os;
    write(os, indent, 0);
    return os.str();
  }

 private:
  using Array = std::vector<JsonValue>;
  using Object = std::vector<std::pair<std::string, JsonValue>>;
  std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> data_;

  static void write_escaped(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char ch : s) {
      switch (ch) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        case '\r': os << "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            os << buf;
          } else {
            os << ch;
          }
      }
    }
    os << '"';
  }

  static void write_double(std::ostringstream& os, double d) {
    if (!std::isfinite(d)) {
      os << "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    os << buf;
  }

  void write(std::ostringstream& os, int indent, int depth) const {
    auto pad = [&](int n) {
      if (indent > 0) {
        os << '\n';
        for (int i = 0; i < n * indent; ++i) os << ' ';
      }
    };
    if (std::holds_alternative<std::nullptr_t>(data_)) {
      os << "null";
    } else if (std::holds_alternative<bool>(data_)) {
      os << (std::get<bool>(data_) ? "true" : "false");
    } else if (std::holds_alternative<long long>(data_)) {
      os << std::get<long long>(data_);
    } else if (std::holds_alternative<double>(data_)) {
      write_double(os, std::get<double>(data_));
    } else if (std::holds_alternative<std::string>(data_)) {
      write_escaped(os, std::get<std::string>(data_));
    } else if (std::holds_alternative<Array>(data_)) {
      const auto& arr = std::get<Array>(data_);
      if (arr.empty()) {
        os << "[]";
        return;
      }
      os << '[';
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << ',';
        pad(depth + 1);
        arr[i].write(os, indent, depth + 1);
      }
      pad(depth);
      os << ']';
    } else {
      const auto& obj = std::get<Object>(data_);
      if (obj.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      for (std::size_t i = 0; i < obj.size(); ++i) {
        if (i) os << ',';
        pad(depth + 1);
        write_escaped(os, obj[i].first);
        os << (indent > 0 ? ": " : ":");
        obj[i].second.write(os, indent, depth + 1);
      }
      pad(depth);
      os << '}';
    }
  }
};

}  // namespace casimir
