#include "lehmer/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace lehmer {

namespace {

bool on_or_above(int n, int col, int row) { return row >= n - col + 1; }

struct SvgWriter {
  std::ostringstream out;

  SvgWriter(double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  }

  void line(double x1, double y1, double x2, double y2, const char* stroke, double width,
            const char* extra = "") {
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
  }

  void circle(double cx, double cy, double r, const char* fill) {
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(double x, double y, const std::string& body, double size, const char* anchor = "middle") {
    out << "  <text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size
        << "\" text-anchor=\"" << anchor << "\">" << body << "</text>\n";
  }

  std::string finish() {
    out << "</svg>\n";
    return out.str();
  }
};

// Slot strings and second-row labels for the two-row paren layout.
std::string paren_ascii(const SpacedParen& sp, const std::vector<int>* choices, bool show_depth) {
  const auto d = depths(sp);
  std::string top;
  std::string bottom;
  for (int i = 1; i <= sp.size(); ++i) {
    std::string slot;
    if (sp.opens_at(i)) slot += '(';
    const int g = choices ? (*choices)[static_cast<std::size_t>(i - 1)] : 0;
    slot += g == 0 ? std::string("_") : std::to_string(g);
    if (sp.closes_at(i)) slot += ')';

    std::string label = sp.opens_at(i) ? " " : "";
    label += std::to_string(show_depth ? d[static_cast<std::size_t>(i - 1)] : i);

    const auto width = std::max(slot.size(), label.size());
    if (i > 1) {
      top += ' ';
      bottom += ' ';
    }
    top += slot + std::string(width - slot.size(), ' ');
    bottom += label + std::string(width - label.size(), ' ');
  }
  auto rstrip = [](std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
  };
  rstrip(top);
  rstrip(bottom);
  return top + "\n" + bottom + "\n";
}

std::string paren_svg(const SpacedParen& sp, const std::vector<int>* choices) {
  const double step = 36;
  const double margin = 20;
  const int n = sp.size();
  SvgWriter svg(2 * margin + step * std::max(n, 1), 2 * margin + 50);
  for (int i = 1; i <= n; ++i) {
    const double cx = margin + step * (i - 0.5);
    const double top = margin + 18;
    const int g = choices ? (*choices)[static_cast<std::size_t>(i - 1)] : 0;
    if (sp.opens_at(i)) svg.text(cx - 12, top, "(", 18);
    if (g == 0) {
      svg.line(cx - 7, top + 2, cx + 7, top + 2, "black", 1.5);
    } else {
      svg.text(cx, top, std::to_string(g), 16);
    }
    if (sp.closes_at(i)) svg.text(cx + 12, top, ")", 18);
    svg.text(cx, top + 24, std::to_string(i), 12);
  }
  return svg.finish();
}

}  // namespace

std::string render_armleg_svg(const Permutation& p, const ArmLegSvgOptions& options) {
  const int n = p.size();
  const double c = options.cell;
  const double margin = c;
  const double size = 2 * margin + c * n;
  SvgWriter svg(size, size);
  auto x_of = [&](double col) { return margin + (col - 0.5) * c; };
  auto y_of = [&](double row) { return margin + (n - row + 0.5) * c; };

  svg.out << "  <title>arm-leg diagram of " << [&] {
    std::string w;
    for (int i = 1; i <= n; ++i) w += (i > 1 ? "," : "") + std::to_string(p.at(i));
    return w;
  }() << "</title>\n";
  for (int k = 0; k <= n; ++k) {
    svg.line(margin + k * c, margin, margin + k * c, margin + n * c, "#cccccc", 1);
    svg.line(margin, margin + k * c, margin + n * c, margin + k * c, "#cccccc", 1);
  }
  if (n > 0) {
    svg.line(x_of(0.5), y_of(n + 0.5), x_of(n + 0.5), y_of(0.5), "#888888", 1.5, " stroke-dasharray=\"4 3\"");
  }
  const double ext = options.extend ? options.overhang : 0.0;
  for (int i = 1; i <= n; ++i) {
    const int r = p.at(i);
    if (!on_or_above(n, i, r)) continue;
    // Arm runs left to the antidiagonal cell of row r, leg runs down to the
    // antidiagonal cell of column i.
    svg.line(x_of(i), y_of(r), x_of(n - r + 1 - ext), y_of(r), "#1f4e9c", 2.5);
    svg.line(x_of(i), y_of(r), x_of(i), y_of(n - i + 1 - ext), "#1f4e9c", 2.5);
  }
  for (int i = 1; i <= n; ++i) {
    const int r = p.at(i);
    svg.circle(x_of(i), y_of(r), c * 0.18, on_or_above(n, i, r) ? "#1f4e9c" : "black");
  }
  for (int k = 1; k <= n; ++k) {
    svg.text(x_of(k), margin + n * c + c * 0.6, std::to_string(k), c * 0.35);
    svg.text(margin - c * 0.3, y_of(k) + c * 0.12, std::to_string(k), c * 0.35, "end");
  }
  return svg.finish();
}

std::string render_armleg_ascii(const Permutation& p) {
  const int n = p.size();
  // grid[row][col], 1-based.
  std::vector<std::vector<char>> grid(static_cast<std::size_t>(n) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, '.'));
  auto cell = [&](int col, int row) -> char& {
    return grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  };
  for (int col = 1; col <= n; ++col) cell(col, n - col + 1) = '\\';
  // An arm and a leg that both end on the same antidiagonal cell meet there.
  std::vector<int> ends(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int r = p.at(i);
    if (!on_or_above(n, i, r)) continue;
    if (r > n - i + 1) {
      ++ends[static_cast<std::size_t>(n - r + 1)];
      ++ends[static_cast<std::size_t>(i)];
    }
    for (int x = n - r + 2; x < i; ++x) cell(x, r) = cell(x, r) == '|' ? '+' : '-';
    for (int y = n - i + 2; y < r; ++y) cell(i, y) = cell(i, y) == '-' ? '+' : '|';
  }
  for (int col = 1; col <= n; ++col) {
    if (ends[static_cast<std::size_t>(col)] > 1) cell(col, n - col + 1) = '+';
  }
  for (int i = 1; i <= n; ++i) cell(i, p.at(i)) = on_or_above(n, i, p.at(i)) ? '@' : '*';

  std::string out;
  for (int row = n; row >= 1; --row) {
    for (int col = 1; col <= n; ++col) {
      if (col > 1) out += ' ';
      out += cell(col, row);
    }
    out += '\n';
  }
  return out;
}

std::string render_paren_ascii(const SpacedParen& sp, bool show_depth) {
  return paren_ascii(sp, nullptr, show_depth);
}

std::string render_paren_ascii(const GBsp& gb, bool show_depth) {
  const std::vector<int> choices(gb.choices().begin(), gb.choices().end());
  return paren_ascii(gb.base(), &choices, show_depth);
}

std::string render_paren_svg(const SpacedParen& sp) { return paren_svg(sp, nullptr); }

std::string render_paren_svg(const GBsp& gb) {
  const std::vector<int> choices(gb.choices().begin(), gb.choices().end());
  return paren_svg(gb.base(), &choices);
}

}  // namespace lehmer
