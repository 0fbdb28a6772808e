#pragma once

#include "modcone/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace modcone::cli {

enum class Format { Text, Json, Tsv, Markdown };

/// Exact text plus, for rationals, a decimal rendering for display.
struct Cell {
  enum class Kind { Text, Integer, Rational, Boolean };
  Kind kind = Kind::Text;
  std::string exact;
  std::optional<std::string> decimal;
  bool integral = true;
};

Cell text(std::string s);
Cell number(const Rational& q);
Cell integer(const BigInt& z);
Cell integer(long long z);
Cell flag(bool b);

class Table {
 public:
  Table(std::string title, std::vector<std::string> columns);

  Table& add(std::vector<Cell> cells);

  const std::string& title() const { return title_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

 private:
  std::string title_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// What a command prints. A `document` replaces the tables in text and JSON
/// output, so class files can be piped back into other commands.
struct Output {
  std::vector<Table> tables;
  std::optional<std::string> document;
  std::vector<std::string> notes;
  int status = 0;
};

void render(const Output& out, Format format, std::ostream& os);

}  // namespace modcone::cli
