#include "output.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace modcone::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string display(const Cell& c) {
  if (!c.decimal || c.integral) return c.exact;
  return c.exact + " (≈" + *c.decimal + ")";
}

Json cell_json(const Cell& c) {
  if (c.kind == Cell::Kind::Boolean) return c.exact == "yes";
  if (c.kind == Cell::Kind::Integer && c.exact.size() < 18) return std::stoll(c.exact);
  if (!c.decimal) return c.exact;
  return Json{{"exact", c.exact}, {"decimal", *c.decimal}};
}

std::size_t width(const std::string& s) {
  // Columns hold UTF-8 (≈, δ, ✓); count code points, not bytes.
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

void render_text(const Output& out, std::ostream& os) {
  bool first = true;
  for (const auto& t : out.tables) {
    if (!first) os << "\n";
    first = false;
    if (!t.title().empty()) os << t.title() << "\n";
    if (t.rows().size() == 1) {
      std::size_t key_width = 0;
      for (const auto& c : t.columns()) key_width = std::max(key_width, width(c));
      for (std::size_t k = 0; k < t.columns().size(); ++k) {
        const auto& c = t.columns()[k];
        os << "  " << c << ":" << std::string(key_width - width(c) + 1, ' ') << display(t.rows()[0][k]) << "\n";
      }
      continue;
    }
    if (t.rows().empty()) {
      os << "  (no rows)\n";
      continue;
    }
    std::vector<std::size_t> w;
    for (const auto& c : t.columns()) w.push_back(width(c));
    for (const auto& row : t.rows()) {
      for (std::size_t k = 0; k < row.size(); ++k) w[k] = std::max(w[k], width(display(row[k])));
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s = " ";
      for (std::size_t k = 0; k < cells.size(); ++k) {
        s += " " + cells[k];
        if (k + 1 < cells.size()) s += std::string(w[k] - width(cells[k]) + 1, ' ');
      }
      os << s << "\n";
    };
    line(t.columns());
    for (const auto& row : t.rows()) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(display(c));
      line(cells);
    }
  }
}

void render_markdown(const Output& out, std::ostream& os) {
  bool first = true;
  for (const auto& t : out.tables) {
    if (!first) os << "\n";
    first = false;
    if (!t.title().empty()) os << "### " << t.title() << "\n\n";
    os << "|";
    for (const auto& c : t.columns()) os << " " << c << " |";
    os << "\n|";
    for (std::size_t k = 0; k < t.columns().size(); ++k) os << "---|";
    os << "\n";
    for (const auto& row : t.rows()) {
      os << "|";
      for (const auto& c : row) os << " " << display(c) << " |";
      os << "\n";
    }
  }
}

void render_tsv(const Output& out, std::ostream& os) {
  bool first = true;
  for (const auto& t : out.tables) {
    if (!first) os << "\n";
    first = false;
    if (!t.title().empty()) os << "# " << t.title() << "\n";
    std::vector<bool> decimal(t.columns().size(), false);
    for (const auto& row : t.rows()) {
      for (std::size_t k = 0; k < row.size(); ++k) decimal[k] = decimal[k] || row[k].decimal.has_value();
    }
    std::vector<std::string> header;
    for (std::size_t k = 0; k < t.columns().size(); ++k) {
      header.push_back(t.columns()[k]);
      if (decimal[k]) header.push_back(t.columns()[k] + "_decimal");
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "\t" : "") << cells[k];
      os << "\n";
    };
    line(header);
    for (const auto& row : t.rows()) {
      std::vector<std::string> cells;
      for (std::size_t k = 0; k < row.size(); ++k) {
        cells.push_back(row[k].exact);
        if (decimal[k]) cells.push_back(row[k].decimal.value_or(""));
      }
      line(cells);
    }
  }
}

void render_json(const Output& out, std::ostream& os) {
  if (out.document) {
    os << *out.document;
    return;
  }
  Json doc = Json::object();
  for (const auto& t : out.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows()) {
      Json r = Json::object();
      for (std::size_t k = 0; k < row.size(); ++k) r[t.columns()[k]] = cell_json(row[k]);
      rows.push_back(std::move(r));
    }
    doc[t.title()] = std::move(rows);
  }
  if (!out.notes.empty()) doc["notes"] = out.notes;
  os << doc.dump(2) << "\n";
}

}  // namespace

Cell text(std::string s) { return {Cell::Kind::Text, std::move(s), std::nullopt, true}; }

Cell number(const Rational& q) {
  return {Cell::Kind::Rational, to_string(q), to_decimal(q), boost::multiprecision::denominator(q) == 1};
}

Cell integer(const BigInt& z) { return {Cell::Kind::Integer, z.str(), std::nullopt, true}; }

Cell integer(long long z) { return integer(BigInt(z)); }

Cell flag(bool b) { return {Cell::Kind::Boolean, b ? "yes" : "no", std::nullopt, true}; }

Table::Table(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {}

Table& Table::add(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("row width does not match table '" + title_ + "'");
  rows_.push_back(std::move(cells));
  return *this;
}

void render(const Output& out, Format format, std::ostream& os) {
  switch (format) {
    case Format::Json:
      render_json(out, os);
      return;
    case Format::Text:
      if (out.document) {
        os << *out.document;
      } else {
        render_text(out, os);
      }
      break;
    case Format::Markdown:
      render_markdown(out, os);
      break;
    case Format::Tsv:
      render_tsv(out, os);
      break;
  }
  if (format == Format::Json) return;
  for (const auto& n : out.notes) os << (format == Format::Tsv ? "# " : "note: ") << n << "\n";
}

}  // namespace modcone::cli
