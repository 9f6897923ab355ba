#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammaring {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "too big" catch GammaError and CapExceeded.
class GammaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModulusOutOfRange : public GammaError {
public:
    ModulusOutOfRange(std::size_t position, std::int64_t value);
    std::size_t position() const noexcept { return position_; }
    std::int64_t value() const noexcept { return value_; }

private:
    std::size_t position_;
    std::int64_t value_;
};

class ShapeMismatch : public GammaError {
public:
    using GammaError::GammaError;
};

class TensorShapeMismatch : public GammaError {
public:
    using GammaError::GammaError;
};

/// A generator image (or tensor entry) whose order does not divide the
/// order of the cyclic factor it comes from.
class NotWellDefined : public GammaError {
public:
    explicit NotWellDefined(std::size_t generator);
    NotWellDefined(std::size_t i, std::size_t j, std::size_t k);

    /// Offending generator index for maps; first tensor index otherwise.
    std::size_t index() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    std::size_t k() const noexcept { return k_; }
    bool is_tensor_entry() const noexcept { return tensor_; }

private:
    std::size_t i_, j_ = 0, k_ = 0;
    bool tensor_ = false;
};

/// An exhaustive loop, enumeration, or backtracking search would exceed its
/// configured limit. `count` is the size that was refused; for backtracking
/// aborts `depth` and `surviving` describe the frontier at the abort.
class CapExceeded : public GammaError {
public:
    CapExceeded(std::string what, std::uint64_t count, std::uint64_t limit);
    CapExceeded(std::string what, std::uint64_t count, std::uint64_t limit,
                std::size_t depth, std::uint64_t surviving);

    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t limit() const noexcept { return limit_; }
    std::size_t depth() const noexcept { return depth_; }
    std::uint64_t surviving() const noexcept { return surviving_; }

private:
    std::uint64_t count_, limit_;
    std::size_t depth_ = 0;
    std::uint64_t surviving_ = 0;
};

class NotValidated : public GammaError {
public:
    using GammaError::GammaError;
};

class NotLeftDerivation : public GammaError {
public:
    using GammaError::GammaError;
};

class ParseError : public GammaError {
public:
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

} // namespace gammaring
