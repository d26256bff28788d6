#include "cc4/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "cc4/errors.hpp"

namespace cc4 {
namespace {

// Draw uniformly from [0, n) with rejection so the result depends only on
// the mt19937_64 stream, not on the standard library's distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) {
      return draw % n;
    }
  }
}

char cell_char(int value) {
  switch (value) {
    case kCellNegative:
      return 'o';
    case kCellPositive:
      return '#';
    case kCellUnlearnt:
      return '.';
    default:
      throw std::invalid_argument("render_map: invalid cell value " +
                                  std::to_string(value));
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  return lines;
}

}  // namespace

GridPattern::GridPattern(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("GridPattern: dimensions must be >= 1");
  }
  labels_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                 0);
}

GridPattern::GridPattern(int rows, int cols, std::vector<std::uint8_t> labels)
    : GridPattern(rows, cols) {
  if (labels.size() != labels_.size()) {
    throw ShapeError("GridPattern: " + std::to_string(labels.size()) +
                     " labels for a " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " grid");
  }
  for (std::uint8_t label : labels) {
    if (label > 1) {
      throw std::invalid_argument("GridPattern: labels must be 0 or 1");
    }
  }
  labels_ = std::move(labels);
}

std::size_t GridPattern::index(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) {
    throw std::out_of_range("GridPattern: cell (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(col - 1);
}

int GridPattern::label(int row, int col) const {
  return labels_[index(row, col)];
}

void GridPattern::set_label(int row, int col, int label) {
  if (label != 0 && label != 1) {
    throw std::invalid_argument("GridPattern: labels must be 0 or 1");
  }
  labels_[index(row, col)] = static_cast<std::uint8_t>(label);
}

std::string render_map(const std::vector<std::vector<int>>& cells) {
  if (cells.empty()) {
    throw ShapeError("render_map: empty map");
  }
  const std::size_t cols = cells.front().size();
  std::string out;
  out.reserve((cols + 1) * cells.size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (cells[r].size() != cols) {
      throw ShapeError("render_map: ragged row " + std::to_string(r + 1));
    }
    for (int value : cells[r]) {
      out.push_back(cell_char(value));
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_map(const GridPattern& pattern) {
  std::string out;
  out.reserve(static_cast<std::size_t>((pattern.cols() + 1) * pattern.rows()));
  for (int r = 1; r <= pattern.rows(); ++r) {
    for (int c = 1; c <= pattern.cols(); ++c) {
      out.push_back(pattern.label(r, c) ? '#' : 'o');
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_map(const TrainingMask& mask) {
  std::vector<std::vector<int>> cells(
      static_cast<std::size_t>(mask.rows),
      std::vector<int>(static_cast<std::size_t>(mask.cols), kCellUnlearnt));
  for (const MaskEntry& entry : mask.entries) {
    if (entry.row < 1 || entry.row > mask.rows || entry.col < 1 ||
        entry.col > mask.cols) {
      throw std::out_of_range("render_map: mask entry (" +
                              std::to_string(entry.row) + ", " +
                              std::to_string(entry.col) + ") outside grid");
    }
    cells[static_cast<std::size_t>(entry.row - 1)]
         [static_cast<std::size_t>(entry.col - 1)] =
             entry.label ? kCellPositive : kCellNegative;
  }
  return render_map(cells);
}

GridPattern parse_pattern(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("pattern: empty input");
  }
  const std::size_t cols = lines.front().size();
  std::vector<std::uint8_t> labels;
  labels.reserve(lines.size() * cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) {
      throw ParseError("pattern: line length " + std::to_string(lines[r].size()) +
                           " != " + std::to_string(cols),
                       static_cast<int>(r + 1), 1);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch == '#' || ch == '1') {
        labels.push_back(1);
      } else if (ch == 'o' || ch == '0') {
        labels.push_back(0);
      } else {
        throw ParseError(std::string("pattern: unexpected character '") + ch +
                             "'",
                         static_cast<int>(r + 1), static_cast<int>(c + 1));
      }
    }
  }
  return GridPattern(static_cast<int>(lines.size()), static_cast<int>(cols),
                     std::move(labels));
}

TrainingMask parse_mask(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("mask: empty input");
  }
  const std::size_t cols = lines.front().size();
  TrainingMask mask;
  mask.rows = static_cast<int>(lines.size());
  mask.cols = static_cast<int>(cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) {
      throw ParseError("mask: line length " + std::to_string(lines[r].size()) +
                           " != " + std::to_string(cols),
                       static_cast<int>(r + 1), 1);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch == '.') {
        continue;
      }
      int label;
      if (ch == '#' || ch == '1') {
        label = 1;
      } else if (ch == 'o' || ch == '0') {
        label = 0;
      } else {
        throw ParseError(std::string("mask: unexpected character '") + ch + "'",
                         static_cast<int>(r + 1), static_cast<int>(c + 1));
      }
      mask.entries.push_back(
          {static_cast<int>(r + 1), static_cast<int>(c + 1), label});
    }
  }
  return mask;
}

TrainingMask sample_training_points(const GridPattern& pattern, int count,
                                    std::uint64_t seed) {
  const int total = pattern.cell_count();
  if (count < 1 || count > total) {
    throw std::invalid_argument("sample_training_points: count " +
                                std::to_string(count) + " outside [1, " +
                                std::to_string(total) + "]");
  }

  std::vector<int> cells(static_cast<std::size_t>(total));
  std::iota(cells.begin(), cells.end(), 0);

  // Partial Fisher-Yates: the first `count` slots end up as the sample.
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t j =
        static_cast<std::uint64_t>(i) +
        uniform_below(rng, static_cast<std::uint64_t>(total - i));
    std::swap(cells[static_cast<std::size_t>(i)], cells[j]);
  }
  cells.resize(static_cast<std::size_t>(count));
  std::sort(cells.begin(), cells.end());

  TrainingMask mask;
  mask.rows = pattern.rows();
  mask.cols = pattern.cols();
  mask.entries.reserve(cells.size());
  for (int cell : cells) {
    const int row = cell / pattern.cols() + 1;
    const int col = cell % pattern.cols() + 1;
    mask.entries.push_back({row, col, pattern.label(row, col)});
  }
  return mask;
}

int sample_count_from_fraction(const GridPattern& pattern, double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("sampling fraction must be in (0, 1], got " +
                                std::to_string(fraction));
  }
  const int total = pattern.cell_count();
  const int count = static_cast<int>(std::llround(fraction * total));
  return std::clamp(count, 1, total);
}

TrainingMask full_mask(const GridPattern& pattern) {
  TrainingMask mask;
  mask.rows = pattern.rows();
  mask.cols = pattern.cols();
  mask.entries.reserve(static_cast<std::size_t>(pattern.cell_count()));
  for (int row = 1; row <= pattern.rows(); ++row) {
    for (int col = 1; col <= pattern.cols(); ++col) {
      mask.entries.push_back({row, col, pattern.label(row, col)});
    }
  }
  return mask;
}

}  // namespace cc4
