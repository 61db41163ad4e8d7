// SPDX-License-Identifier: Apache-2.0
//
// nearsec - secure beam focusing for near-field hybrid MIMO transmitters
// Copyright (C) 2026 The nearsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <string>
#include <utility>
#include <vector>

// Minimal static SVG plots for result files.
namespace nearsec::svg {

struct Series {
    std::string name;
    std::vector<double> y;
};

std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<double>& x,
                      const std::vector<Series>& series);

// values is row-major with ys.size() rows and xs.size() columns; colors map
// linearly from min to max.
std::string heatmap(const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::vector<double>& values);

}  // namespace nearsec::svg
