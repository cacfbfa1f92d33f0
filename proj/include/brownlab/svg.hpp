// Copyright The brownlab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brownlab/matcore.hpp"

namespace brownlab {

// Self-contained SVG scatter of points in the complex plane with a unit-circle guide.
std::string scatter_svg(std::span<const Complex> points, const std::string& title);

// Polyline chart of y against grid position; x values label the ticks.
std::string line_chart_svg(std::span<const std::pair<double, double>> xy, const std::string& title,
                           const std::string& x_label, const std::string& y_label);

}  // namespace brownlab
