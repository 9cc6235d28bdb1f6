#include "polyhodge/combinat/set_partition.hpp"

#include "polyhodge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyhodge::combinat {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), labels_(n, -1) {
    for (auto& b : blocks) {
        if (b.empty()) throw DomainError("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int e : blocks[i]) {
            if (e < 1 || e > n) throw DomainError("SetPartition: element out of range");
            if (labels_[e - 1] != -1) throw DomainError("SetPartition: blocks overlap");
            labels_[e - 1] = static_cast<int>(i);
        }
    for (int label : labels_)
        if (label == -1) throw DomainError("SetPartition: blocks do not cover {1..n}");
    blocks_ = std::move(blocks);
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    const int count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<int>> blocks(count);
    for (std::size_t i = 0; i < labels.size(); ++i) blocks.at(labels[i]).push_back(static_cast<int>(i) + 1);
    return SetPartition(static_cast<int>(labels.size()), std::move(blocks));
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (coarser.n_ != n_) return false;
    for (const auto& block : blocks_) {
        const int target = coarser.block_of(block.front());
        for (int e : block)
            if (coarser.block_of(e) != target) return false;
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        out << (i ? "|" : "");
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) out << (j ? "," : "") << blocks_[i][j];
    }
    return out.str();
}

std::vector<SetPartition> partitions_of(int n) {
    if (n < 1 || n > kMaxPartitionSize) throw DomainError("partitions_of: need 1 <= n <= 9");
    std::vector<SetPartition> out;
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(n, 0);
    std::vector<int> prefix_max(n, 0);
    for (;;) {
        out.push_back(SetPartition::from_labels(a));
        int i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

unsigned long long bell_number(int n) {
    if (n < 0) throw DomainError("bell_number: negative n");
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace polyhodge::combinat
