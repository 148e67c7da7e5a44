#include "radixecon/tree.hpp"

#include <limits>
#include <stdexcept>

namespace radixecon {

namespace {

void require_node_size(const BigInt& node_size) {
    if (node_size < 2)
        throw std::domain_error("node size must be at least 2");
}

}  // namespace

BigInt capacity(const TreeSpec& spec, bool include_root) {
    require_node_size(spec.node_size);
    if (spec.depth == std::numeric_limits<unsigned>::max())
        throw std::domain_error("depth is too large");  // depth + 1 would wrap
    // Geometric-series closed form; (m - 1) divides m^(d+1) - 1 exactly.
    BigInt with_root = (pow(spec.node_size, spec.depth + 1) - 1) / (spec.node_size - 1);
    return include_root ? with_root : BigInt(with_root - 1);
}

unsigned depth_for(const BigInt& total_with_root, const BigInt& node_size) {
    require_node_size(node_size);
    if (total_with_root < 1)
        throw std::domain_error("total must be at least 1");
    unsigned depth = 0;
    BigInt filled = 1;  // root only
    BigInt level = 1;
    while (filled < total_with_root) {
        level *= node_size;
        filled += level;
        ++depth;
    }
    return depth;
}

}  // namespace radixecon
