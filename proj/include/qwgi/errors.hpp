// Copyright 2026 The qwgi Authors
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

namespace qwgi {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed an argument that violates a precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A configured resource guard refused the request.
class ResourceError : public Error {
public:
    using Error::Error;
};

// The exact isomorphism search was asked to handle a graph above its node limit.
class OracleOutOfRange : public ResourceError {
public:
    using ResourceError::ResourceError;
};

// An iterative numerical method failed to reach its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// A structural property that should hold by construction did not.
class StructuralError : public Error {
public:
    using Error::Error;
};

}  // namespace qwgi
