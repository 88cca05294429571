#include "sgp/render.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

namespace sgp {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#f4a261", "#2a9d8f", "#e9c46a", "#8ab17d",
                                                 "#e76f51", "#6d597a", "#90be6d", "#577590"};
constexpr std::array<char, 8> kGlyphs = {'*', '+', 'o', '~', '^', '%', '=', '@'};

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

StripGrid StripGrid::layout(const StripSpec& spec) {
  if (spec.a < 1 || spec.b < 1) throw Error(Errc::BadStrip, "a and b must be positive");
  if (std::gcd(spec.a, spec.b) != 1) {
    throw Error(Errc::BadStrip, "gcd(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ") != 1");
  }
  if (spec.row_lo > spec.row_hi) throw Error(Errc::BadStrip, "row range is reversed");
  if ((spec.row_hi - spec.row_lo + 1) > kMaxStripCells / spec.b) {
    throw Error(Errc::BadStrip, "strip has more than " + std::to_string(kMaxStripCells) + " cells");
  }

  StripGrid grid;
  grid.spec_ = spec;
  for (auto& layer : grid.spec_.layers) layer.values = normalized(std::move(layer.values));
  for (Int y = spec.row_hi; y >= spec.row_lo; --y) {
    for (Int x = 0; x < spec.b; ++x) {
      StripCell cell{x, y, spec.origin + x * spec.a + y * spec.b, {}};
      for (std::size_t l = 0; l < grid.spec_.layers.size(); ++l) {
        if (set_contains(grid.spec_.layers[l].values, cell.value)) cell.layers.push_back(l);
      }
      grid.cells_.push_back(std::move(cell));
    }
  }
  return grid;
}

const StripCell& StripGrid::cell(Int x, Int y) const {
  if (x < 0 || x >= spec_.b || y < spec_.row_lo || y > spec_.row_hi) {
    throw Error(Errc::OutOfRange, "cell (" + std::to_string(x) + "," + std::to_string(y) + ") outside the strip");
  }
  return cells_[static_cast<std::size_t>((spec_.row_hi - y) * spec_.b + x)];
}

std::optional<std::pair<Int, Int>> StripGrid::locate(Int value) const {
  // value - origin = x*a + y*b with 0 <= x < b is unique; x from a^{-1} mod b.
  const Int d = value - spec_.origin;
  for (Int x = 0; x < spec_.b; ++x) {
    const Int rest = d - x * spec_.a;
    if (rest % spec_.b != 0) continue;
    const Int y = rest / spec_.b;
    if (y < spec_.row_lo || y > spec_.row_hi) return std::nullopt;
    return std::make_pair(x, y);
  }
  return std::nullopt;
}

IntSet StripGrid::highlighted(std::size_t layer) const {
  IntSet out;
  for (const auto& c : cells_) {
    if (std::find(c.layers.begin(), c.layers.end(), layer) != c.layers.end()) out.push_back(c.value);
  }
  return normalized(std::move(out));
}

IntSet StripGrid::clipped(std::size_t layer) const {
  return set_difference(spec_.layers.at(layer).values, highlighted(layer));
}

std::string StripGrid::color(std::size_t layer) const {
  const auto& chosen = spec_.layers.at(layer).color;
  return chosen.empty() ? kPalette[layer % kPalette.size()] : chosen;
}

char StripGrid::glyph(std::size_t layer) const {
  const char chosen = spec_.layers.at(layer).glyph;
  return chosen != '\0' ? chosen : kGlyphs[layer % kGlyphs.size()];
}

std::string render_text(const StripGrid& grid) {
  std::size_t width = 1;
  for (const auto& c : grid.cells()) width = std::max(width, std::to_string(c.value).size());
  const auto& spec = grid.spec();

  std::ostringstream out;
  std::size_t col = 0;
  for (const auto& c : grid.cells()) {
    if (col == 0) {
      std::string label = std::to_string(c.y);
      out << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ') << label << " |";
    }
    char mark = ' ';
    if (c.layers.size() == 1) mark = grid.glyph(c.layers.front());
    if (c.layers.size() > 1) mark = kOverlapGlyph;
    const std::string number = std::to_string(c.value);
    out << ' ' << mark << std::string(width - number.size(), ' ') << number;
    if (++col == static_cast<std::size_t>(spec.b)) {
      out << '\n';
      col = 0;
    }
  }
  for (std::size_t l = 0; l < spec.layers.size(); ++l) {
    out << grid.glyph(l) << ' ' << spec.layers[l].name << '\n';
  }
  if (spec.layers.size() > 1) out << kOverlapGlyph << " overlap\n";
  return out.str();
}

std::string render_svg(const StripGrid& grid) {
  constexpr Int cell = 36;
  const auto& spec = grid.spec();
  const Int width = grid.columns() * cell;
  const Int height = grid.rows() * cell;
  const bool numbers = grid.columns() * grid.rows() <= kSvgNumberLimit;

  // One gradient per distinct overlap combination, in order of first use.
  std::map<std::vector<std::size_t>, std::string> gradients;
  std::ostringstream defs;
  for (const auto& c : grid.cells()) {
    if (c.layers.size() < 2 || gradients.count(c.layers)) continue;
    const std::string id = "overlap" + std::to_string(gradients.size());
    gradients.emplace(c.layers, id);
    defs << "<linearGradient id=\"" << id << "\" x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\">";
    const double step = 100.0 / static_cast<double>(c.layers.size());
    for (std::size_t k = 0; k < c.layers.size(); ++k) {
      const std::string color = escape_xml(grid.color(c.layers[k]));
      defs << "<stop offset=\"" << step * static_cast<double>(k) << "%\" stop-color=\"" << color
           << "\"/><stop offset=\"" << step * static_cast<double>(k + 1) << "%\" stop-color=\"" << color
           << "\"/>";
    }
    defs << "</linearGradient>";
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!gradients.empty()) out << "<defs>" << defs.str() << "</defs>\n";
  for (const auto& c : grid.cells()) {
    const Int px = c.x * cell;
    const Int py = (spec.row_hi - c.y) * cell;
    std::string fill = "#ffffff";
    if (c.layers.size() == 1) fill = escape_xml(grid.color(c.layers.front()));
    if (c.layers.size() > 1) fill = "url(#" + gradients.at(c.layers) + ")";
    out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"" << fill << "\" stroke=\"#999999\"/>";
    if (numbers) {
      out << "<text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2 + 4
          << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << c.value << "</text>";
    }
    out << '\n';
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sgp
