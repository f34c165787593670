#ifndef ILPQ_RMQ_HPP
#define ILPQ_RMQ_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ilpq/binary_io.hpp"

namespace ilpq {

enum class RmqBackend : std::uint32_t {
    sparse = 0,  // sparse table over all positions, O(m log m) words
    block = 1,   // block decomposition + Cartesian-tree-typed in-block tables, O(m) words
};

std::string_view to_string(RmqBackend backend) noexcept;
// Throws std::invalid_argument for anything but "sparse" or "block".
RmqBackend parse_rmq_backend(std::string_view name);

/*
 * Range maximum queries in constant time. query(i, j) returns the smallest
 * index k in [i, j] with A[k] = max A[i..j].
 *
 * The block backend splits A into blocks of b = ceil(log2(m) / 4) elements
 * (capped at 8). Blocks with the same Cartesian tree share one b x b answer
 * table; a sparse table over the block maxima covers whole blocks. The tree
 * is built with the leftmost maximum at the root, so ties resolve leftmost.
 */
class RmqIndex {
public:
    RmqIndex() = default;

    // block_size == 0 picks the default. Throws BuildError for an empty array.
    static RmqIndex build(std::vector<std::uint32_t> values,
                          RmqBackend backend = RmqBackend::block, std::size_t block_size = 0);

    std::size_t size() const noexcept { return values_.size(); }
    RmqBackend backend() const noexcept { return backend_; }
    std::size_t block_size() const noexcept { return block_; }
    std::size_t block_type_count() const noexcept;

    std::span<const std::uint32_t> values() const noexcept { return values_; }
    // 1-based, unchecked.
    std::uint32_t value(std::size_t k) const noexcept { return values_[k - 1]; }

    // 1-based inclusive. Throws RangeError unless 1 <= i <= j <= size().
    std::size_t query(std::size_t i, std::size_t j) const;

    // 0-based inclusive, unchecked.
    std::size_t argmax(std::size_t lo, std::size_t hi) const noexcept {
        return backend_ == RmqBackend::block ? block_argmax(lo, hi) : sparse_argmax(lo, hi);
    }

    void save(io::ByteWriter& out) const;
    static RmqIndex load(io::ByteReader& in);

    friend bool operator==(const RmqIndex&, const RmqIndex&) = default;

private:
    // Leftmost-maximum of two positions, a < b.
    std::size_t better(std::size_t a, std::size_t b) const noexcept {
        return values_[b] > values_[a] ? b : a;
    }
    std::size_t sparse_argmax(std::size_t lo, std::size_t hi) const noexcept;
    std::size_t block_argmax(std::size_t lo, std::size_t hi) const noexcept;
    std::size_t in_block(std::size_t block, std::size_t x, std::size_t y) const noexcept {
        return block * block_ +
               type_tables_[(static_cast<std::size_t>(block_type_[block]) * block_ + x) * block_ + y];
    }
    // Sparse table over `level0` positions, compared by value.
    void build_levels(std::vector<std::uint32_t> level0);
    // Over level-0 slots [lo, hi].
    std::uint32_t levels_argmax(std::size_t lo, std::size_t hi) const noexcept;
    void build_blocks();

    RmqBackend backend_ = RmqBackend::block;
    std::size_t block_ = 1;
    std::vector<std::uint32_t> values_;
    // levels_[k][x] = position of the leftmost max over level-0 slots [x, x + 2^k).
    std::vector<std::vector<std::uint32_t>> levels_;
    std::vector<std::uint16_t> block_type_;
    std::vector<std::uint8_t> type_tables_;
};

}  // namespace ilpq

#endif  // ILPQ_RMQ_HPP
