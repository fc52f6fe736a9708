#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerdenom/numeric.hpp"

namespace eulerdenom {

/// One "<index> <value>" data line of an OEIS b-file.
struct BFileEntry {
  std::int64_t index = 0;
  Int value;
  bool operator==(const BFileEntry&) const = default;
};

/// Parsed b-file: comment lines plus data pairs with strictly increasing
/// nonnegative indices.
struct BFile {
  std::vector<std::string> comments;  // '#' lines, in order, marker stripped
  std::vector<BFileEntry> entries;
  SequenceTable to_table() const;
};

class BFileError : public std::runtime_error {
 public:
  /// malformed: bad tokenization or a non-integer token.
  /// structure: well-formed line violating sequence constraints
  /// (negative or non-increasing index).
  enum class Kind { malformed, structure };

  BFileError(Kind kind, long line, const std::string& message);
  Kind kind() const { return kind_; }
  long line() const { return line_; }

 private:
  Kind kind_;
  long line_;
};

/// Parses "<index> <value>" lines; '#' comment lines and blank lines are
/// skipped.  Throws BFileError with a 1-based line number.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

/// Emits "<index> <value>\n" per entry in increasing index order.
/// parse_bfile is a left inverse of this.
void write_bfile(const SequenceTable& table, std::ostream& out);
std::string write_bfile(const SequenceTable& table);

struct SequenceMismatch {
  std::int64_t index = 0;
  Int expected;
  Int actual;
};

struct DiffReport {
  std::int64_t lo = 0;  // intersected index range; valid when compared > 0
  std::int64_t hi = 0;
  long compared = 0;  // number of shared indices
  std::vector<SequenceMismatch> mismatches;
  bool empty_intersection() const { return compared == 0; }
  bool agree() const { return mismatches.empty(); }
};

/// Compares on the intersection of the index sets.  An empty intersection is
/// a warning status in the report, not an error.
DiffReport compare_sequences(const SequenceTable& expected,
                             const SequenceTable& actual);

}  // namespace eulerdenom
