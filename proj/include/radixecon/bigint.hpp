#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace radixecon {

/// Arbitrary-precision signed integer used throughout the library.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace radixecon
