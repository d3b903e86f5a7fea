#include "altmin/partition.hpp"

#include "altmin/errors.hpp"

#include <string>

namespace altmin {

bool all_finite(const Vector& x) noexcept { return x.allFinite(); }

BlockPartition::BlockPartition(std::vector<std::vector<int>> blocks, int total_dim)
    : blocks_(std::move(blocks)), total_dim_(total_dim) {
    if (total_dim_ <= 0) raise(ErrorCode::InvalidArgument, "partition dimension must be positive");
    std::vector<char> seen(static_cast<std::size_t>(total_dim_), 0);
    int covered = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) raise(ErrorCode::InvalidArgument, "block " + std::to_string(b) + " is empty");
        for (int idx : blocks_[b]) {
            if (idx < 0 || idx >= total_dim_)
                raise(ErrorCode::InvalidArgument, "index " + std::to_string(idx) + " out of range");
            if (seen[static_cast<std::size_t>(idx)])
                raise(ErrorCode::InvalidArgument, "index " + std::to_string(idx) + " appears twice");
            seen[static_cast<std::size_t>(idx)] = 1;
            ++covered;
        }
    }
    if (covered != total_dim_) raise(ErrorCode::InvalidArgument, "blocks do not cover every coordinate");
}

BlockPartition BlockPartition::contiguous(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int s : sizes) {
        if (s <= 0) raise(ErrorCode::InvalidArgument, "block sizes must be positive");
        std::vector<int> block(static_cast<std::size_t>(s));
        for (int& idx : block) idx = next++;
        blocks.push_back(std::move(block));
    }
    return BlockPartition(std::move(blocks), next);
}

BlockPartition BlockPartition::single(int total_dim) { return contiguous({total_dim}); }

double BlockPartition::block_norm_sq(const Vector& g, std::size_t i) const {
    double s = 0.0;
    for (int idx : blocks_.at(i)) s += g[idx] * g[idx];
    return s;
}

}  // namespace altmin
