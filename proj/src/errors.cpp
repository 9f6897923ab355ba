#include "gammaring/errors.hpp"

namespace gammaring {

ModulusOutOfRange::ModulusOutOfRange(std::size_t position, std::int64_t value)
    : GammaError("modulus " + std::to_string(value) + " at position " +
                 std::to_string(position) + " is below 2"),
      position_(position), value_(value) {}

NotWellDefined::NotWellDefined(std::size_t generator)
    : GammaError("image of generator " + std::to_string(generator) +
                 " is not annihilated by the generator's order"),
      i_(generator) {}

NotWellDefined::NotWellDefined(std::size_t i, std::size_t j, std::size_t k)
    : GammaError("tensor entry (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ") has order not dividing gcd of its factor orders"),
      i_(i), j_(j), k_(k), tensor_(true) {}

CapExceeded::CapExceeded(std::string what, std::uint64_t count, std::uint64_t limit)
    : GammaError(what + ": " + std::to_string(count) + " exceeds cap " + std::to_string(limit)),
      count_(count), limit_(limit) {}

CapExceeded::CapExceeded(std::string what, std::uint64_t count, std::uint64_t limit,
                         std::size_t depth, std::uint64_t surviving)
    : GammaError(what + ": " + std::to_string(count) + " nodes exceeds budget " +
                 std::to_string(limit) + " (" + std::to_string(surviving) +
                 " surviving partial assignments at depth " + std::to_string(depth) + ")"),
      count_(count), limit_(limit), depth_(depth), surviving_(surviving) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : GammaError("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

} // namespace gammaring
