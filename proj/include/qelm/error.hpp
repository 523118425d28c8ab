// Copyright 2026 The qelm-elevator Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qelm {

/// Invalid or out-of-range configuration (qubit counts, specs, config files).
class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Qubit index outside the register.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Dimension mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data violates a precondition (non-finite, empty, unsorted...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Statistic undefined for the given sample (zero variance, all ties).
class DegenerateInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qelm
