#pragma once

// Line-oriented tokenizer shared by the text formats.

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tonelab/errors.hpp"

namespace tonelab::detail {

struct Record {
  int line = 0;
  std::vector<std::string_view> tokens;
  std::string storage;
};

class RecordReader {
 public:
  explicit RecordReader(std::istream& in, bool keep_blank = false)
      : in_(in), keep_blank_(keep_blank) {}

  /// Next record with comments stripped. Blank records are skipped unless the
  /// reader keeps them (the Latin-square format separates blocks by blanks).
  bool next(Record& rec) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      rec.storage = std::move(raw);
      rec.line = line_;
      rec.tokens.clear();
      split(rec);
      if (rec.tokens.empty() && !keep_blank_) continue;
      return true;
    }
    return false;
  }

  int line() const noexcept { return line_; }

 private:
  static void split(Record& rec) {
    std::string_view s = rec.storage;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      if (j > i) rec.tokens.push_back(s.substr(i, j - i));
      i = j;
    }
  }

  std::istream& in_;
  bool keep_blank_;
  int line_ = 0;
};

inline std::int64_t parse_int(std::string_view tok, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace tonelab::detail
