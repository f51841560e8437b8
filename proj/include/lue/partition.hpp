#pragma once
// Integer partitions (as weakly decreasing part lists) and the set-partition
// enumeration used by the moment <-> cumulant conversions.

#include "lue/rational.hpp"

#include <vector>

namespace lue {

struct Partition {
    std::vector<int> parts; // weakly decreasing, all > 0

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;            // |mu|
    int length() const { return (int)parts.size(); }
    Int z() const;               // prod_i i^{m_i} m_i!
};

// sorted-descending copy; throws on nonpositive parts
std::vector<int> sorted_parts(std::vector<int> p);

Int zmu(const std::vector<int>& parts);

// all partitions of d (descending parts, lexicographic order)
std::vector<std::vector<int>> partitions_of(int d);
// partitions of d with exactly s parts
std::vector<std::vector<int>> partitions_of_length(int d, int s);

// all set partitions of {0..n-1}; blocks ascending, blocks ordered by their
// smallest element
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

} // namespace lue
