/*
   Copyright 2026 The p3d7 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace p3d7 {

// Exception hierarchy. Every error raised by the library derives from Error so
// callers (notably the CLI) can map families of failures onto exit codes.

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operation applied outside its domain (zero denominator, division by zero).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// exact_divide found a nonzero remainder.
class DivisibilityError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Evaluation hit a zero of the denominator.
class PoleError : public DomainError {
   public:
    PoleError(const std::string& what, std::complex<double> location)
        : DomainError(what), location_(location) {}
    std::complex<double> location() const noexcept { return location_; }

   private:
    std::complex<double> location_;
};

/// Point lies on (or within the rejection distance of) a branch cut.
class BranchError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Configured size limit exceeded, e.g. |n| above the lattice maximum.
class BudgetError : public Error {
   public:
    using Error::Error;
};

/// Iterative numerics failed to converge or bracket.
class NumericalError : public Error {
   public:
    using Error::Error;
};

/// Root finder ran out of iterations; carries the best approximations found.
class RootConvergenceError : public NumericalError {
   public:
    RootConvergenceError(const std::string& what, std::vector<std::complex<double>> partial)
        : NumericalError(what), partial_(std::move(partial)) {}
    const std::vector<std::complex<double>>& partial() const noexcept { return partial_; }

   private:
    std::vector<std::complex<double>> partial_;
};

}  // namespace p3d7
