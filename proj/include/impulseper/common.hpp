// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace impulseper {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the domain of an operation (e.g. evaluation point
/// outside the grid interval).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Grids that were required to share nodes (or to contain mandatory
/// breakpoints) do not.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// An iterative method was asked to run outside its guaranteed regime
/// (e.g. the neutral-operator solve when the contraction bound fails).
class ContractionError : public Error {
public:
    using Error::Error;
};

/// Invalid problem data or configuration.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Which one-sided value to take when an evaluation lands exactly on a
/// jump node. Regulated functions store the left value at a node; the
/// right limit lives in a sparse side table.
enum class Side { Left, Right };

/// Shortest round-trip decimal form of a double (used by the CSV writer
/// and the expression printer).
std::string format_double(double v);

} // namespace impulseper
