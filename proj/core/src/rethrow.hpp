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

#pragma once

#include <exception>
#include <string>

#include "eitsim/errors.hpp"

namespace eitsim::detail {

/// Rethrows `error` as the same library exception type with `context`
/// appended to its message. Unknown types propagate unchanged.
[[noreturn]] inline void rethrow_with_context(std::exception_ptr error,
                                              const std::string& context) {
  try {
    std::rethrow_exception(error);
  } catch (const DegenerateSteadyState& e) {
    throw DegenerateSteadyState(std::string(e.what()) + " " + context);
  } catch (const StepTooLarge& e) {
    throw StepTooLarge(std::string(e.what()) + " " + context);
  } catch (const ZeroProbe& e) {
    throw ZeroProbe(std::string(e.what()) + " " + context);
  } catch (const SolverFailure& e) {
    throw SolverFailure(std::string(e.what()) + " " + context);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " " + context);
  }
}

}  // namespace eitsim::detail
