#ifndef INTERCLUST_PARTITION_HPP
#define INTERCLUST_PARTITION_HPP

#include <span>
#include <string>
#include <vector>

namespace interclust {

/// Set partition of {0,...,n-1} in canonical form: blocks are numbered by
/// order of first appearance, so entity 0 is always in block 0 and two equal
/// partitions have identical label vectors. Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes the given block labels (arbitrary ints accepted).
    explicit Partition(std::vector<int> labels);

    static Partition single_block(int n);
    static Partition singletons(int n);

    /// Parses the text format "0,0,1,0"; non-canonical input is normalized.
    static Partition parse(const std::string& text);

    int size() const { return static_cast<int>(labels_.size()); }
    int num_blocks() const { return num_blocks_; }
    int block_of(int i) const { return labels_[i]; }
    bool same_block(int i, int j) const { return labels_[i] == labels_[j]; }
    const std::vector<int>& labels() const { return labels_; }

    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    /// Induced partition on the kept entities (in the order given), re-canonicalized.
    Partition restrict_to(std::span<const int> keep) const;

    /// Partition of the relabeled entities: entity perm[i] gets i's block.
    Partition permuted(std::span<const int> perm) const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> labels_;
    int num_blocks_ = 0;
};

/// Every partition of {0,...,n-1} with at most max_blocks blocks, each exactly
/// once in canonical form. Guarded to n <= 12; intended as an exactness oracle.
std::vector<Partition> enumerate_partitions(int n, int max_blocks);

}  // namespace interclust

#endif
