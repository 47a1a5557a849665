#include "interclust/partition.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "interclust/errors.hpp"

namespace interclust {

namespace {

// Relabel by order of first appearance; returns the block count.
int canonicalize(std::vector<int>& labels) {
    std::unordered_map<int, int> remap;
    remap.reserve(labels.size());
    int next = 0;
    for (int& l : labels) {
        auto [it, inserted] = remap.emplace(l, next);
        if (inserted) ++next;
        l = it->second;
    }
    return next;
}

}  // namespace

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
    num_blocks_ = canonicalize(labels_);
}

Partition Partition::single_block(int n) {
    return Partition(std::vector<int>(n, 0));
}

Partition Partition::singletons(int n) {
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i) l[i] = i;
    return Partition(std::move(l));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> labels;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t\r\n"));
        tok.erase(tok.find_last_not_of(" \t\r\n") + 1);
        if (tok.empty()) throw data_error("empty block index in partition text");
        try {
            labels.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw data_error("bad block index '" + tok + "' in partition text");
        }
    }
    if (labels.empty()) throw data_error("empty partition text");
    return Partition(std::move(labels));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(num_blocks_);
    for (int i = 0; i < size(); ++i) out[labels_[i]].push_back(i);
    return out;
}

std::vector<int> Partition::block_sizes() const {
    std::vector<int> sz(num_blocks_, 0);
    for (int l : labels_) ++sz[l];
    return sz;
}

Partition Partition::restrict_to(std::span<const int> keep) const {
    if (keep.empty()) throw data_error("restriction to an empty entity set");
    std::vector<int> l;
    l.reserve(keep.size());
    for (int i : keep) {
        if (i < 0 || i >= size()) throw data_error("restriction index out of range");
        l.push_back(labels_[i]);
    }
    return Partition(std::move(l));
}

Partition Partition::permuted(std::span<const int> perm) const {
    std::vector<int> l(size());
    for (int i = 0; i < size(); ++i) l[perm[i]] = labels_[i];
    return Partition(std::move(l));
}

std::string Partition::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ',';
        out += std::to_string(labels_[i]);
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int max_blocks) {
    if (n < 1) throw data_error("enumerate_partitions requires n >= 1");
    if (n > 12) throw data_error("enumerate_partitions limited to n <= 12");
    if (max_blocks < 1) throw data_error("enumerate_partitions requires max_blocks >= 1");

    std::vector<Partition> out;
    std::vector<int> labels(n, 0);
    // restricted growth strings bounded by max_blocks
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            out.emplace_back(labels);
            return;
        }
        for (int b = 0; b < used; ++b) {
            labels[pos] = b;
            self(self, pos + 1, used);
        }
        if (used < max_blocks) {
            labels[pos] = used;
            self(self, pos + 1, used + 1);
        }
    };
    rec(rec, 1, 1);
    return out;
}

}  // namespace interclust
