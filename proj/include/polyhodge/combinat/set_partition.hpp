#pragma once

#include <string>
#include <vector>

namespace polyhodge::combinat {

inline constexpr int kMaxPartitionSize = 9;

// Partition of {1, ..., n} into blocks, each block sorted and the blocks
// ordered by their minimum.
class SetPartition {
public:
    SetPartition(int n, std::vector<std::vector<int>> blocks);
    // From a restricted growth string: labels[i] is the block of element i+1.
    static SetPartition from_labels(const std::vector<int>& labels);

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    // Block index of element i (1-based element).
    int block_of(int element) const { return labels_[element - 1]; }
    const std::vector<int>& labels() const { return labels_; }

    // True when every block of *this lies inside a block of `coarser`.
    bool refines(const SetPartition& coarser) const;

    std::string to_string() const;
    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> labels_;
};

// All set partitions of {1..n} in restricted-growth-string order; 1 <= n <= 9.
std::vector<SetPartition> partitions_of(int n);

// Bell numbers by the Bell triangle.
unsigned long long bell_number(int n);

}  // namespace polyhodge::combinat
