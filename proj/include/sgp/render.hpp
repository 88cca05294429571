#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgp/int_set.hpp"

namespace sgp {

/// A highlighted set. Empty color/glyph pick a default from the layer index.
struct Layer {
  std::string name;
  IntSet values;
  std::string color;
  char glyph = '\0';
};

/// Window of the integer strip: column x in [0, b), row y in [row_lo, row_hi]
/// shows origin + x*a + y*b.
struct StripSpec {
  Int a = 0;
  Int b = 0;
  Int origin = 0;
  Int row_lo = 0;
  Int row_hi = 0;
  std::vector<Layer> layers;
};

struct StripCell {
  Int x = 0;
  Int y = 0;
  Int value = 0;
  std::vector<std::size_t> layers;  ///< indices into StripSpec::layers
};

inline constexpr Int kMaxStripCells = 1'000'000;
/// SVG cells carry their number only when the grid has at most this many cells.
inline constexpr Int kSvgNumberLimit = 2'000;
inline constexpr char kOverlapGlyph = '#';

class StripGrid {
 public:
  /// Raises Errc::BadStrip for gcd(a, b) != 1, a or b < 1, row_lo > row_hi,
  /// or more than kMaxStripCells cells.
  static StripGrid layout(const StripSpec& spec);

  const StripSpec& spec() const noexcept { return spec_; }
  Int rows() const noexcept { return spec_.row_hi - spec_.row_lo + 1; }
  Int columns() const noexcept { return spec_.b; }

  /// Cells in display order: top row (row_hi) first, columns left to right.
  const std::vector<StripCell>& cells() const noexcept { return cells_; }
  const StripCell& cell(Int x, Int y) const;

  /// Column and row of a value, if it lies in the window.
  std::optional<std::pair<Int, Int>> locate(Int value) const;

  /// Values of the window highlighted by the given layer.
  IntSet highlighted(std::size_t layer) const;
  /// Values of a layer that fall outside the window.
  IntSet clipped(std::size_t layer) const;

  std::string color(std::size_t layer) const;
  char glyph(std::size_t layer) const;

 private:
  StripSpec spec_;
  std::vector<StripCell> cells_;
};

/// Fixed-width cells; a highlighted cell is prefixed by its layer glyph, or
/// by kOverlapGlyph when several layers meet. A legend follows the grid.
std::string render_text(const StripGrid& grid);

/// Self-contained SVG, one <rect> per cell. Overlaps are filled with a
/// striped linear gradient of the layer colors.
std::string render_svg(const StripGrid& grid);

}  // namespace sgp
