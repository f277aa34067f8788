#pragma once

#include <gmpxx.h>
#include <string>

namespace micz {

// Exact rational numbers.  mpq_class keeps values reduced with a positive
// denominator, which is exactly the canonical form we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or "-p/q".  Throws std::invalid_argument on junk.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);

// True iff q == root^2 for a rational root >= 0 (root is set on success).
bool rational_sqrt(const Rat& q, Rat& root);

// 2q integral, i.e. q is in (1/2)Z.
bool is_half_integer(const Rat& q);

bool is_integer(const Rat& q);

long to_long(const Rat& q);

} // namespace micz
