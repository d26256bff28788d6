#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cc4/bit_vector.hpp"

namespace cc4 {

/// R x C binary label grid: 1 marks the positive (black) region, 0 the
/// negative (white) one. Rows and columns are numbered from 1; row 1 is the
/// first text line, column 1 the leftmost character.
class GridPattern {
 public:
  GridPattern(int rows, int cols);
  GridPattern(int rows, int cols, std::vector<std::uint8_t> labels);  // row-major

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cell_count() const { return rows_ * cols_; }

  int label(int row, int col) const;
  void set_label(int row, int col, int label);

  friend bool operator==(const GridPattern&, const GridPattern&) = default;

 private:
  std::size_t index(int row, int col) const;

  int rows_;
  int cols_;
  std::vector<std::uint8_t> labels_;
};

struct MaskEntry {
  int row = 0;
  int col = 0;
  int label = 0;

  friend bool operator==(const MaskEntry&, const MaskEntry&) = default;
};

/// The learnt subset of a grid's cells, with their labels. Entries are kept
/// in row-major order with distinct (row, col).
struct TrainingMask {
  int rows = 0;
  int cols = 0;
  std::vector<MaskEntry> entries;

  friend bool operator==(const TrainingMask&, const TrainingMask&) = default;
};

// Cell values accepted by render_map.
inline constexpr int kCellNegative = 0;
inline constexpr int kCellPositive = 1;
inline constexpr int kCellUnlearnt = 2;

/// One line per row, newline-terminated: 1 -> '#', 0 -> 'o', unlearnt -> '.'.
/// Throws ShapeError on ragged rows.
std::string render_map(const std::vector<std::vector<int>>& cells);
std::string render_map(const GridPattern& pattern);
std::string render_map(const TrainingMask& mask);

/// Inverse of render_map for full grids. Accepts '#'/'o' or '1'/'0'; throws
/// ParseError with line and column on anything else, including ragged lines.
GridPattern parse_pattern(const std::string& text);

/// Inverse of render_map for masks: '.' marks a cell that was not learnt.
TrainingMask parse_mask(const std::string& text);

/// Uniform sample of `count` distinct cells, labels copied from the pattern.
/// Deterministic: the same (pattern, count, seed) always yields the same
/// mask, independent of platform.
TrainingMask sample_training_points(const GridPattern& pattern, int count,
                                    std::uint64_t seed);

/// Cell count for a sampling fraction in (0, 1], rounded to the nearest
/// whole cell and clamped to at least 1.
int sample_count_from_fraction(const GridPattern& pattern, double fraction);

/// Mask covering every cell.
TrainingMask full_mask(const GridPattern& pattern);

}  // namespace cc4
