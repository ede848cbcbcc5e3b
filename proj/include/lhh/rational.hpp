#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lhh {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" into a canonical rational; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Reduced "p/q" form, always with an explicit denominator ("3/1", "-1/2").
std::string to_string(const Rational& value);

/// FNV-1a, used for cache keys and report hashes that must be stable across runs.
std::uint64_t stable_hash(std::string_view bytes, std::uint64_t seed = 1469598103934665603ULL);
std::string hex64(std::uint64_t value);

}  // namespace lhh
