/*
 * Copyright 2026 The cbsim Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace cbsim {

/// Bad scenario or distribution parameters. The message carries the key path
/// when the error originates from a configuration file.
class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mismatched vector lengths and similar caller mistakes.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested SNR cannot be reached under the power constraints, or the
/// allocation has nothing left to scale (every normalized weight is zero).
class InfeasibleAllocation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cbsim
