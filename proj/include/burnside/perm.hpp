#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burnside {

// A permutation of {0, ..., deg-1}, stored as its image vector.
using Perm = std::vector<uint16_t>;

Perm perm_identity(unsigned deg);

// (a * b)(x) = a[b[x]]: apply b first.
Perm perm_compose(const Perm& a, const Perm& b);

Perm perm_inverse(const Perm& a);

bool is_permutation(const Perm& a);

// Parses 1-based cycle notation, e.g. "(1 2)(3 4)". The degree is the
// largest point mentioned; pad_to can raise it.
Perm parse_cycles(const std::string& text, unsigned pad_to = 0);

std::string perm_to_cycles(const Perm& a);

} // namespace burnside
