#pragma once

#include <string>
#include <string_view>

#include "gammaring/gamma_ring.hpp"

namespace gammaring {

/// Text form of an instance:
///
///   gammaring v1
///   # name: rect(1,2;2)
///   M: 2 2
///   G: 2 2
///   T 0 0 0 : 1 0
///
/// T lines list the nonzero entries e_i f_j e_k; omitted entries are zero.
/// Blank lines and `#` comments are ignored except for the `# name:` line.
/// Throws ParseError(line, reason), also for well-definedness failures and,
/// unless `skip_assoc`, for a generator associativity failure.
GammaRing parse_instance_file(std::string_view text, bool skip_assoc = false);

/// Canonical text: header, name comment (if named), M, G, then T lines in
/// (i, j, k) order. parse_instance_file(emit_instance_file(r)) == r.
std::string emit_instance_file(const GammaRing& ring);

/// FNV-1a 64 of the canonical text without the name line, as 16 hex digits.
std::string instance_hash(const GammaRing& ring);

} // namespace gammaring
