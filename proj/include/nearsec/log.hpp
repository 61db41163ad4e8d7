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

#include <functional>
#include <string>

namespace nearsec {

using WarningHandler = std::function<void(const std::string&)>;

// Warnings go to stderr unless a handler is installed. Passing an empty
// handler silences them. Safe to call from concurrent trials.
void warn(const std::string& message);
void set_warning_handler(WarningHandler handler);
void reset_warning_handler();

}  // namespace nearsec
