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

#include "nearsec/log.hpp"

#include <iostream>
#include <mutex>

namespace nearsec {

namespace {

std::mutex& handler_mutex() {
    static std::mutex m;
    return m;
}

struct HandlerSlot {
    bool custom = false;
    WarningHandler handler;
};

HandlerSlot& slot() {
    static HandlerSlot s;
    return s;
}

}  // namespace

void warn(const std::string& message) {
    std::lock_guard lock(handler_mutex());
    auto& s = slot();
    if (!s.custom) {
        std::cerr << "warning: " << message << '\n';
    } else if (s.handler) {
        s.handler(message);
    }
}

void set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex());
    slot() = {true, std::move(handler)};
}

void reset_warning_handler() {
    std::lock_guard lock(handler_mutex());
    slot() = {};
}

}  // namespace nearsec
