#pragma once

#include <string>
#include <vector>

#include "radixecon/bigint.hpp"

namespace radixecon {

/// A signed integer written positionally in an arbitrary integer radix >= 2.
///
/// Digits are stored most-significant first, each in [0, radix-1], with no
/// leading zero except for the single-digit numeral [0]. Zero always carries
/// sign +1. Negative values use sign-magnitude: the digit sequence encodes
/// the magnitude and `sign` is -1.
struct Numeral {
    int sign = 1;                // +1 or -1
    BigInt radix = 10;           // >= 2
    std::vector<BigInt> digits;  // most significant first
};

/// A signed integer in balanced ternary: base 3 with digits {-1, 0, +1},
/// most-significant first. There is no sign field; the sign of the value is
/// the sign of the leading digit. The leading digit is nonzero except for
/// the single-digit numeral [0].
struct BalancedTernaryNumeral {
    std::vector<int> digits;
};

/// Encode a value in the given radix by repeated exact division.
/// Throws std::domain_error if radix < 2.
Numeral encode(const BigInt& value, const BigInt& radix);

/// Evaluate a numeral back to its integer value (exact).
/// Throws std::domain_error if the numeral violates its invariants.
BigInt decode(const Numeral& n);

/// Largest value representable with width+1 digits in the given radix,
/// i.e. radix^(width+1) - 1. Throws std::domain_error if radix < 2.
BigInt max_value(const BigInt& radix, unsigned width);

/// Number of digits needed to write `value` in the given radix: the smallest
/// k >= 1 with value <= radix^k - 1. Zero occupies one digit. Computed by
/// exact repeated division, never by floating-point logarithm.
unsigned width_for(const BigInt& value, const BigInt& radix);

/// Encode any signed integer in balanced ternary. Remainder 2 maps to
/// digit -1 with a carry into the next position.
BalancedTernaryNumeral encode_balanced_ternary(const BigInt& value);

/// Evaluate a balanced-ternary numeral (exact).
/// Throws std::domain_error if the numeral violates its invariants.
BigInt decode_balanced_ternary(const BalancedTernaryNumeral& n);

/// Text form of a numeral. For radix <= 36 digits map to 0-9 then A-Z and
/// the radix is appended after an underscore ("FF_16"); for larger radices
/// digits are rendered as dot-separated decimal integers ("12.40.7_61").
/// A negative value gets a leading '-'.
std::string render(const Numeral& n);

/// Text form of a balanced-ternary numeral: '1' for +1, '0' for 0, 'T'
/// for -1 ("1TT" is five).
std::string render(const BalancedTernaryNumeral& n);

}  // namespace radixecon
