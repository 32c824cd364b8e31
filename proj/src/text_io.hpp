#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/errors.hpp"

namespace cliquecover::detail {

/// Line-oriented tokenizer for the whitespace-separated text formats.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next line split on blanks; throws InputError at end of input.
  std::vector<std::string_view> next(const char* expected) {
    if (pos_ >= text_.size()) throw InputError(std::string("unexpected end of input, expected ") + expected, line_ + 1);
    auto eol = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
    pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return split(line);
  }

  /// Throws unless only blank lines remain.
  void expect_end() {
    while (pos_ < text_.size()) {
      auto toks = next("end of input");
      if (!toks.empty()) throw InputError("unexpected trailing content", line_);
    }
  }

  std::size_t line() const { return line_; }

  std::uint64_t to_uint(std::string_view tok) const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("expected a non-negative integer, got '" + std::string(tok) + "'", line_);
    }
    return value;
  }

  int to_int(std::string_view tok) const {
    auto v = to_uint(tok);
    if (v > static_cast<std::uint64_t>(INT32_MAX)) throw InputError("integer out of range '" + std::string(tok) + "'", line_);
    return static_cast<int>(v);
  }

  [[noreturn]] void fail(const std::string& message) const { throw InputError(message, line_); }

  static std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

}  // namespace cliquecover::detail
