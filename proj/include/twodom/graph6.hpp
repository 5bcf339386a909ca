#pragma once

#include <string>

#include "twodom/tree.hpp"

namespace twodom {

/// Bit-exact graph6: order byte(s), then the upper-triangle bitvector in
/// column order, 6 bits per character, offset 63.
std::string graph6_encode(const Tree& t);

/// Throws MalformedGraph6 on a bad encoding, NotATree when the decoded
/// graph is not a tree.
Tree graph6_decode(const std::string& text);

}  // namespace twodom
