// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "brownlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace brownlab {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 40.0;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string scatter_svg(std::span<const Complex> points, const std::string& title) {
  double extent = 1.2;
  for (const Complex& z : points) extent = std::max({extent, 1.05 * std::abs(z.real()), 1.05 * std::abs(z.imag())});
  const double scale = (kSize / 2.0 - kMargin) / extent;
  const double c = kSize / 2.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << c << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(title) << "</text>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << c << "\" x2=\"" << kSize - kMargin << "\" y2=\"" << c
     << "\" stroke=\"#bbb\"/>\n"
     << "<line x1=\"" << c << "\" y1=\"" << kMargin << "\" x2=\"" << c << "\" y2=\"" << kSize - kMargin
     << "\" stroke=\"#bbb\"/>\n"
     << "<circle cx=\"" << c << "\" cy=\"" << c << "\" r=\"" << scale
     << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  for (const Complex& z : points)
    os << "<circle cx=\"" << c + scale * z.real() << "\" cy=\"" << c - scale * z.imag()
       << "\" r=\"1.5\" fill=\"#1f4e9c\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string line_chart_svg(std::span<const std::pair<double, double>> xy, const std::string& title,
                           const std::string& x_label, const std::string& y_label) {
  double y_max = 0.0;
  for (const auto& [_, y] : xy)
    if (std::isfinite(y)) y_max = std::max(y_max, y);
  if (y_max <= 0.0) y_max = 1.0;
  const double w = kSize - 2 * kMargin;
  const std::size_t n = xy.size();
  auto px = [&](std::size_t i) { return kMargin + (n > 1 ? w * static_cast<double>(i) / static_cast<double>(n - 1) : w / 2); };
  auto py = [&](double y) { return kSize - kMargin - w * std::clamp(y / y_max, 0.0, 1.0); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << kSize / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
     << escape(title) << "</text>\n"
     << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 8 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << escape(x_label) << "</text>\n"
     << "<text x=\"12\" y=\"" << kSize / 2 << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 12 "
     << kSize / 2 << ")\">" << escape(y_label) << "</text>\n"
     << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < n; ++i) os << px(i) << ',' << py(xy[i].second) << ' ';
  os << "\"/>\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "<text x=\"" << px(i) << "\" y=\"" << kSize - kMargin + 14 << "\" text-anchor=\"middle\" font-size=\"10\">"
       << xy[i].first << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace brownlab
