#pragma once

#include "radixecon/bigint.hpp"

namespace radixecon {

/// A complete m-ary tree filled to a given depth.
struct TreeSpec {
    BigInt node_size;   // items per node, >= 2
    unsigned depth = 0;
};

/// Number of items in a packed tree: sum of node_size^k for k = 1..depth,
/// plus one more for the root item when include_root is set. The with-root
/// total equals (m^(d+1) - 1) / (m - 1) exactly.
BigInt capacity(const TreeSpec& spec, bool include_root);

/// Smallest depth d such that a packed tree of the given node size holds at
/// least total_with_root items, root included. Exact integer iteration.
/// Throws std::domain_error if total_with_root < 1 or node_size < 2.
unsigned depth_for(const BigInt& total_with_root, const BigInt& node_size);

}  // namespace radixecon
