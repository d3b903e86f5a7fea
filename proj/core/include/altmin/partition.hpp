#pragma once

#include "altmin/types.hpp"

#include <cstddef>
#include <vector>

namespace altmin {

/// Disjoint, nonempty index blocks covering {0, ..., m-1}.
class BlockPartition {
public:
    /// Validates the cover; throws Error(InvalidArgument) on overlap, gaps
    /// or empty blocks.
    BlockPartition(std::vector<std::vector<int>> blocks, int total_dim);

    /// Consecutive blocks of the given sizes.
    static BlockPartition contiguous(const std::vector<int>& sizes);
    static BlockPartition single(int total_dim);

    std::size_t size() const noexcept { return blocks_.size(); }
    int total_dim() const noexcept { return total_dim_; }
    const std::vector<int>& block(std::size_t i) const { return blocks_.at(i); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    double block_norm_sq(const Vector& g, std::size_t i) const;

private:
    std::vector<std::vector<int>> blocks_;
    int total_dim_;
};

}  // namespace altmin
