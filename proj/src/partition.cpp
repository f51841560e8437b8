#include "lue/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace lue {

std::vector<int> sorted_parts(std::vector<int> p) {
    for (int x : p)
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

Partition::Partition(std::vector<int> p) : parts(sorted_parts(std::move(p))) {}

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

Int Partition::z() const { return zmu(parts); }

Int zmu(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int x : parts) mult[x]++;
    Int z = 1;
    for (auto [i, m] : mult) {
        for (int t = 0; t < m; ++t) z *= i;
        z *= factorial((unsigned long)m);
    }
    return z;
}

std::vector<std::vector<int>> partitions_of(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0) rec(d, d);
    return out;
}

std::vector<std::vector<int>> partitions_of_length(int d, int s) {
    std::vector<std::vector<int>> out;
    for (auto& p : partitions_of(d))
        if ((int)p.size() == s) out.push_back(p);
    return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(blocks);
            return;
        }
        // index-based: rec() grows and shrinks blocks, which may reallocate
        for (size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(i);
            rec(i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

} // namespace lue
