// Copyright 2026 The eitsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eitsim/errors.hpp"

namespace eitsim {

ConfigError::ConfigError(std::string key, const std::string& reason)
    : Error(key + ": " + reason), key_(std::move(key)) {}

UnknownPreset::UnknownPreset(const std::string& name)
    : ConfigError("preset", "unknown preset '" + name + "'") {}

}  // namespace eitsim
