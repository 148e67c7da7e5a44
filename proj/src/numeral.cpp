#include "radixecon/numeral.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace radixecon {

namespace {

void require_radix(const BigInt& radix) {
    if (radix < 2)
        throw std::domain_error("radix must be at least 2");
}

}  // namespace

Numeral encode(const BigInt& value, const BigInt& radix) {
    require_radix(radix);
    Numeral n;
    n.radix = radix;
    n.sign = value < 0 ? -1 : 1;
    BigInt rest = abs(value);
    do {
        n.digits.push_back(rest % radix);
        rest /= radix;
    } while (rest != 0);
    std::reverse(n.digits.begin(), n.digits.end());
    return n;
}

BigInt decode(const Numeral& n) {
    require_radix(n.radix);
    if (n.sign != 1 && n.sign != -1)
        throw std::domain_error("sign must be +1 or -1");
    if (n.digits.empty())
        throw std::domain_error("digit sequence must not be empty");
    if (n.digits.size() > 1 && n.digits.front() == 0)
        throw std::domain_error("leading digit must not be zero");
    BigInt value = 0;
    for (const BigInt& digit : n.digits) {
        if (digit < 0 || digit >= n.radix)
            throw std::domain_error("digit out of range [0, radix-1]");
        value = value * n.radix + digit;
    }
    if (value == 0 && n.sign != 1)
        throw std::domain_error("zero must carry sign +1");
    return n.sign < 0 ? BigInt(-value) : value;
}

BigInt max_value(const BigInt& radix, unsigned width) {
    require_radix(radix);
    if (width == std::numeric_limits<unsigned>::max())
        throw std::domain_error("width is too large");  // width + 1 would wrap
    return BigInt(pow(radix, width + 1) - 1);
}

unsigned width_for(const BigInt& value, const BigInt& radix) {
    require_radix(radix);
    if (value < 0)
        throw std::domain_error("value must be non-negative");
    unsigned digits = 0;
    BigInt rest = value;
    do {
        rest /= radix;
        ++digits;
    } while (rest != 0);
    return digits;
}

BalancedTernaryNumeral encode_balanced_ternary(const BigInt& value) {
    BalancedTernaryNumeral n;
    BigInt rest = value;
    do {
        int rem = static_cast<int>(rest % 3);  // truncated, so in [-2, 2]
        if (rem < 0)
            rem += 3;
        int digit = rem == 2 ? -1 : rem;
        n.digits.push_back(digit);
        rest = (rest - digit) / 3;
    } while (rest != 0);
    std::reverse(n.digits.begin(), n.digits.end());
    return n;
}

BigInt decode_balanced_ternary(const BalancedTernaryNumeral& n) {
    if (n.digits.empty())
        throw std::domain_error("digit sequence must not be empty");
    if (n.digits.size() > 1 && n.digits.front() == 0)
        throw std::domain_error("leading digit must not be zero");
    BigInt value = 0;
    for (int digit : n.digits) {
        if (digit < -1 || digit > 1)
            throw std::domain_error("balanced-ternary digit must be -1, 0 or +1");
        value = value * 3 + digit;
    }
    return value;
}

std::string render(const Numeral& n) {
    std::string text;
    if (n.sign < 0)
        text += '-';
    if (n.radix <= 36) {
        for (const BigInt& digit : n.digits) {
            int d = static_cast<int>(digit);
            text += static_cast<char>(d < 10 ? '0' + d : 'A' + (d - 10));
        }
    } else {
        for (std::size_t i = 0; i < n.digits.size(); ++i) {
            if (i > 0)
                text += '.';
            text += n.digits[i].str();
        }
    }
    text += '_';
    text += n.radix.str();
    return text;
}

std::string render(const BalancedTernaryNumeral& n) {
    std::string text;
    for (int digit : n.digits)
        text += digit < 0 ? 'T' : static_cast<char>('0' + digit);
    return text;
}

}  // namespace radixecon
