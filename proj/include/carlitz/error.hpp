// Copyright 2026 The carlitz Authors
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

#include <stdexcept>
#include <string>

namespace carlitz {

/// Base of every error raised by the library. Carries the originating module
/// (e.g. "field-tower") and a short kebab-case code (e.g. "no-decomposition").
class Error : public std::runtime_error {
public:
    Error(std::string module, std::string code, const std::string& what)
        : std::runtime_error(module + "." + code + ": " + what),
          module_(std::move(module)),
          code_(std::move(code)) {}

    const std::string& module() const noexcept { return module_; }
    const std::string& code() const noexcept { return code_; }
    std::string name() const { return module_ + "." + code_; }

private:
    std::string module_;
    std::string code_;
};

/// A mathematical precondition failed: bad input domain, lost precision,
/// non-convergence.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A size guard was exceeded (enumeration, index or matrix bounds).
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace carlitz
