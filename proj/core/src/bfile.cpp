#include "eulerdenom/bfile.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace eulerdenom {

SequenceTable BFile::to_table() const {
  SequenceTable table;
  for (const auto& e : entries) {
    table.emplace(e.index, e.value);
  }
  return table;
}

BFileError::BFileError(Kind kind, long line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      kind_(kind),
      line_(line) {}

namespace {

bool is_integer_token(const std::string& token) {
  std::size_t i = token.size() && token[0] == '-' ? 1 : 0;
  if (i == token.size()) return false;
  return std::all_of(token.begin() + i, token.end(),
                     [](unsigned char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile result;
  std::string line;
  long line_no = 0;
  bool have_prev = false;
  std::int64_t prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() ||
        line.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    if (line[0] == '#') {
      result.comments.push_back(line.substr(1));
      continue;
    }
    std::istringstream tokens(line);
    std::string index_token, value_token, extra;
    tokens >> index_token >> value_token;
    if (value_token.empty() || (tokens >> extra)) {
      throw BFileError(BFileError::Kind::malformed, line_no,
                       "expected exactly two tokens \"<index> <value>\"");
    }
    if (!is_integer_token(index_token) || !is_integer_token(value_token)) {
      throw BFileError(BFileError::Kind::malformed, line_no,
                       "non-integer token");
    }
    if (index_token[0] == '-') {
      throw BFileError(BFileError::Kind::structure, line_no,
                       "negative index " + index_token);
    }
    std::int64_t index = 0;
    try {
      index = std::stoll(index_token);
    } catch (const std::out_of_range&) {
      throw BFileError(BFileError::Kind::structure, line_no,
                       "index out of range");
    }
    if (have_prev && index <= prev_index) {
      throw BFileError(BFileError::Kind::structure, line_no,
                       "index " + index_token + " not strictly increasing");
    }
    result.entries.push_back(BFileEntry{index, Int(value_token)});
    prev_index = index;
    have_prev = true;
  }
  return result;
}

BFile parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

void write_bfile(const SequenceTable& table, std::ostream& out) {
  for (const auto& [index, value] : table) {
    out << index << ' ' << value << '\n';
  }
}

std::string write_bfile(const SequenceTable& table) {
  std::ostringstream out;
  write_bfile(table, out);
  return out.str();
}

DiffReport compare_sequences(const SequenceTable& expected,
                             const SequenceTable& actual) {
  DiffReport report;
  for (const auto& [index, want] : expected) {
    auto it = actual.find(index);
    if (it == actual.end()) continue;
    if (report.compared == 0) {
      report.lo = report.hi = index;
    } else {
      report.lo = std::min(report.lo, index);
      report.hi = std::max(report.hi, index);
    }
    ++report.compared;
    if (it->second != want) {
      report.mismatches.push_back(SequenceMismatch{index, want, it->second});
    }
  }
  return report;
}

}  // namespace eulerdenom
