#include "bicycle/matrix_text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "bicycle/errors.hpp"

namespace bicycle {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

struct Row {
  std::size_t line;
  std::string bits;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) lines.push_back({number, line});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> parse_natural(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

Row parse_row(const Line& line) {
  Row row{line.number, {}};
  for (std::size_t col = 0; col < line.text.size(); ++col) {
    const char c = line.text[col];
    if (c == '0' || c == '1') {
      row.bits.push_back(c);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "', expected 0 or 1",
                       line.number, col + 1);
    }
  }
  return row;
}

}  // namespace

Subspace parse_matrix_text(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) return Subspace::zero(0);

  std::optional<std::pair<std::size_t, std::size_t>> header;
  bool looks_like_header = false;
  if (const auto t = tokens(lines.front().text); t.size() == 2) {
    const auto n = parse_natural(t[0]);
    const auto k = parse_natural(t[1]);
    if (n && k) {
      header.emplace(*n, *k);
      looks_like_header = t[0].find_first_not_of("01") != std::string_view::npos ||
                          t[1].find_first_not_of("01") != std::string_view::npos;
    }
  }

  auto parse_rows = [&](std::size_t first) {
    std::vector<Row> rows;
    for (std::size_t i = first; i < lines.size(); ++i) rows.push_back(parse_row(lines[i]));
    return rows;
  };

  std::vector<Row> rows;
  std::size_t n = 0;
  bool used_header = false;
  if (header) {
    bool consistent = lines.size() - 1 == header->second;
    std::vector<Row> candidate;
    if (consistent) {
      try {
        candidate = parse_rows(1);
      } catch (const ParseError&) {
        if (looks_like_header) throw;
        consistent = false;
      }
      for (const auto& r : candidate) {
        if (r.bits.size() != header->first) consistent = false;
      }
    }
    if (consistent) {
      rows = std::move(candidate);
      n = header->first;
      used_header = true;
    } else if (looks_like_header) {
      if (lines.size() - 1 != header->second) {
        throw ParseError("header declares " + std::to_string(header->second) + " rows but " +
                             std::to_string(lines.size() - 1) + " follow",
                         lines.front().number, 1);
      }
      for (const auto& r : parse_rows(1)) {
        if (r.bits.size() != header->first) {
          throw ParseError("row has " + std::to_string(r.bits.size()) +
                               " entries but the header declares " + std::to_string(header->first),
                           r.line, 1);
        }
      }
    }
  }
  if (!used_header) {
    rows = parse_rows(0);
    n = rows.front().bits.size();
    for (const auto& r : rows) {
      if (r.bits.size() != n) {
        throw ParseError("row has " + std::to_string(r.bits.size()) + " entries, expected " +
                             std::to_string(n),
                         r.line, 1);
      }
    }
  }

  BitMatrix m(0, n);
  for (const auto& r : rows) m.append_row(BitVector::from_string(r.bits));
  return Subspace::from_rows(m);
}

std::string format_matrix_text(const Subspace& v) {
  std::string out = std::to_string(v.ground_size()) + " " + std::to_string(v.dim()) + "\n";
  for (const auto& r : v.basis().row_vectors()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace bicycle
