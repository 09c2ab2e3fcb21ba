#include "bikehiker/scheme.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "bikehiker/error.hpp"

namespace bikehiker {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + 63) / 64),
      words_(rows * ((cols + 63) / 64), 0) {}

void BitMatrix::swap_row_suffix(std::size_t a, std::size_t b, std::size_t from_col) {
  for (std::size_t c = from_col; c < cols_; ++c) {
    const bool va = get(a, c);
    const bool vb = get(b, c);
    set(a, c, vb);
    set(b, c, va);
  }
}

std::size_t BitMatrix::row_popcount(std::size_t row) const noexcept {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w)
    total += static_cast<std::size_t>(std::popcount(words_[row * words_per_row_ + w]));
  return total;
}

BinaryScheme::BinaryScheme(BitMatrix bits) : bits_(std::move(bits)) {
  if (bits_.rows() == 0 || bits_.cols() == 0)
    throw Error(ErrorCode::invalid_argument, "scheme must have at least one row and one column");
  row_sums_.resize(bits_.rows());
  col_sums_.assign(bits_.cols(), 0);
  for (std::size_t i = 0; i < bits_.rows(); ++i) {
    row_sums_[i] = bits_.row_popcount(i);
    for (std::size_t j = 0; j < bits_.cols(); ++j)
      col_sums_[j] += bits_.get(i, j) ? 1 : 0;
  }
}

BinaryScheme BinaryScheme::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw Error(ErrorCode::invalid_argument, "scheme must have at least one row and one column");
  BitMatrix bits(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != bits.cols())
      throw Error(ErrorCode::invalid_argument, "ragged row " + std::to_string(i));
    for (std::size_t j = 0; j < bits.cols(); ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1)
        throw Error(ErrorCode::invalid_argument, "entry " + std::to_string(v) + " not binary");
      bits.set(i, j, v == 1);
    }
  }
  return BinaryScheme(std::move(bits));
}

std::vector<bool> BinaryScheme::row(std::size_t i) const {
  std::vector<bool> out(cols());
  for (std::size_t j = 0; j < cols(); ++j) out[j] = at(i, j);
  return out;
}

UniformityReport uniformity(const BinaryScheme& m) {
  const auto rs = m.row_sums();
  const auto cs = m.col_sums();
  const bool rows_equal = std::all_of(rs.begin(), rs.end(), [&](std::size_t v) { return v == rs[0]; });
  const bool cols_equal = std::all_of(cs.begin(), cs.end(), [&](std::size_t v) { return v == cs[0]; });
  UniformityReport report;
  report.is_uniform = rows_equal && cols_equal;
  if (report.is_uniform) {
    report.k = cs[0];
    report.l = rs[0];
  }
  return report;
}

PrefixSums::PrefixSums(const BinaryScheme& m)
    : rows_(m.rows()), width_(m.cols() + 1), table_(rows_ * width_, 0) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      table_[i * width_ + j + 1] = table_[i * width_ + j] + (m.at(i, j) ? 1u : 0u);
}

PrefixSums prefix_sums(const BinaryScheme& m) { return PrefixSums(m); }

StageCut stage_cut(const BinaryScheme& m, std::size_t boundary) {
  if (boundary + 1 >= m.cols())
    throw Error(ErrorCode::invalid_argument,
                "boundary " + std::to_string(boundary) + " out of range for " +
                    std::to_string(m.cols()) + " stages");
  StageCut cut;
  cut.boundary = boundary;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const bool here = m.at(i, boundary);
    const bool next = m.at(i, boundary + 1);
    if (here && next)
      cut.x11.push_back(i);
    else if (here)
      cut.x10.push_back(i);
    else if (next)
      cut.x01.push_back(i);
    else
      cut.x00.push_back(i);
  }
  return cut;
}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    lines.push_back({number, line});
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) break;
    const auto end = line.find_first_of(" \t", pos);
    out.push_back(line.substr(pos, end - pos));
    if (end == std::string_view::npos) break;
    pos = end;
  }
  return out;
}

std::size_t parse_dimension(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
    throw ParseError(line, "malformed header: expected positive integer, got '" +
                               std::string(token) + "'");
  return value;
}

}  // namespace

BinaryScheme parse_scheme(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "malformed header: empty input");

  const auto header = tokens(lines[0].text);
  if (header.size() != 2)
    throw ParseError(lines[0].number, "malformed header: expected '<rows> <cols>'");
  const std::size_t rows = parse_dimension(header[0], lines[0].number);
  const std::size_t cols = parse_dimension(header[1], lines[0].number);

  if (lines.size() - 1 < rows)
    throw ParseError(0, "expected " + std::to_string(rows) + " rows, found " +
                            std::to_string(lines.size() - 1));
  if (lines.size() - 1 > rows)
    throw ParseError(lines[rows + 1].number, "unexpected extra row");

  BitMatrix bits(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Line& line = lines[i + 1];
    const auto toks = tokens(line.text);
    if (toks.size() != cols)
      throw ParseError(line.number, "ragged row: expected " + std::to_string(cols) +
                                        " entries, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < cols; ++j) {
      if (toks[j] == "1")
        bits.set(i, j, true);
      else if (toks[j] != "0")
        throw ParseError(line.number, "entry '" + std::string(toks[j]) + "' not binary");
    }
  }
  return BinaryScheme(std::move(bits));
}

std::string format_scheme(const BinaryScheme& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out.reserve(out.size() + m.rows() * m.cols() * 2);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out.push_back(' ');
      out.push_back(m.at(i, j) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

BinaryScheme permute_rows(const BinaryScheme& m, std::span<const std::size_t> pi) {
  if (pi.size() != m.rows())
    throw Error(ErrorCode::invalid_argument, "permutation size does not match row count");
  std::vector<bool> seen(m.rows(), false);
  for (std::size_t v : pi) {
    if (v >= m.rows() || seen[v])
      throw Error(ErrorCode::invalid_argument, "row map is not a permutation");
    seen[v] = true;
  }
  BitMatrix bits(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(i, j, m.at(pi[i], j));
  return BinaryScheme(std::move(bits));
}

BinaryScheme reverse_stages(const BinaryScheme& m) {
  BitMatrix bits(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(i, j, m.at(i, m.cols() - 1 - j));
  return BinaryScheme(std::move(bits));
}

BinaryScheme reverse_rows(const BinaryScheme& m) {
  BitMatrix bits(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(i, j, m.at(m.rows() - 1 - i, j));
  return BinaryScheme(std::move(bits));
}

BinaryScheme binary_dual(const BinaryScheme& m) {
  BitMatrix bits(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(i, j, !m.at(i, j));
  return BinaryScheme(std::move(bits));
}

BinaryScheme transpose(const BinaryScheme& m) {
  BitMatrix bits(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) bits.set(j, i, m.at(i, j));
  return BinaryScheme(std::move(bits));
}

BinaryScheme swap_columns(const BinaryScheme& m, std::size_t a, std::size_t b) {
  if (a >= m.cols() || b >= m.cols())
    throw Error(ErrorCode::invalid_argument, "column index out of range");
  BitMatrix bits = m.bits();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bits.set(i, a, m.at(i, b));
    bits.set(i, b, m.at(i, a));
  }
  return BinaryScheme(std::move(bits));
}

}  // namespace bikehiker
