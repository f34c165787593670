#include "ilpq/rmq.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "ilpq/error.hpp"

namespace ilpq {

namespace {

constexpr std::size_t kMaxBlock = 8;

std::size_t default_block_size(std::size_t m) {
    auto lg = static_cast<std::size_t>(std::bit_width(m));  // ceil-ish log2
    return std::clamp<std::size_t>((lg + 3) / 4, 1, kMaxBlock);
}

std::size_t floor_log2(std::size_t x) noexcept {
    return static_cast<std::size_t>(std::bit_width(x)) - 1;
}

}  // namespace

std::string_view to_string(RmqBackend backend) noexcept {
    return backend == RmqBackend::sparse ? "sparse" : "block";
}

RmqBackend parse_rmq_backend(std::string_view name) {
    if (name == "sparse") return RmqBackend::sparse;
    if (name == "block") return RmqBackend::block;
    throw std::invalid_argument("unknown RMQ backend '" + std::string(name) + "'");
}

RmqIndex RmqIndex::build(std::vector<std::uint32_t> values, RmqBackend backend,
                         std::size_t block_size) {
    if (values.empty()) {
        throw BuildError("cannot build a range maximum index over an empty array");
    }
    if (values.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw BuildError("array too long for 32-bit positions");
    }
    if (block_size > kMaxBlock) {
        throw BuildError("block size must be at most " + std::to_string(kMaxBlock));
    }
    RmqIndex r;
    r.backend_ = backend;
    r.values_ = std::move(values);
    if (backend == RmqBackend::sparse) {
        r.block_ = 1;
        std::vector<std::uint32_t> all(r.values_.size());
        for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<std::uint32_t>(k);
        r.build_levels(std::move(all));
    } else {
        r.block_ = block_size == 0 ? default_block_size(r.values_.size()) : block_size;
        r.build_blocks();
    }
    return r;
}

void RmqIndex::build_levels(std::vector<std::uint32_t> level0) {
    levels_.clear();
    const std::size_t count = level0.size();
    levels_.push_back(std::move(level0));
    for (std::size_t half = 1; 2 * half <= count; half *= 2) {
        const auto& prev = levels_.back();
        std::vector<std::uint32_t> next(count - 2 * half + 1);
        for (std::size_t x = 0; x < next.size(); ++x) {
            next[x] = static_cast<std::uint32_t>(better(prev[x], prev[x + half]));
        }
        levels_.push_back(std::move(next));
    }
}

std::uint32_t RmqIndex::levels_argmax(std::size_t lo, std::size_t hi) const noexcept {
    std::size_t k = floor_log2(hi - lo + 1);
    const auto& row = levels_[k];
    return static_cast<std::uint32_t>(better(row[lo], row[hi + 1 - (std::size_t{1} << k)]));
}

std::size_t RmqIndex::sparse_argmax(std::size_t lo, std::size_t hi) const noexcept {
    return levels_argmax(lo, hi);
}

void RmqIndex::build_blocks() {
    const std::size_t m = values_.size();
    const std::size_t b = block_;
    const std::size_t blocks = (m + b - 1) / b;

    block_type_.assign(blocks, 0);
    type_tables_.clear();
    std::vector<std::uint32_t> block_max(blocks);
    // Codes have at most 2b+1 bits, so a flat table maps them to type ids.
    constexpr std::uint16_t kUnseen = std::numeric_limits<std::uint16_t>::max();
    std::vector<std::uint16_t> type_of_code(std::size_t{1} << (2 * b + 1), kUnseen);
    std::uint16_t types = 0;

    std::uint32_t stack[kMaxBlock];
    for (std::size_t blk = 0; blk < blocks; ++blk) {
        const std::size_t begin = blk * b;
        const std::size_t len = std::min(b, m - begin);

        // Cartesian tree shape as its push/pop sequence: each element pops
        // every strictly smaller value (0 bits) and is then pushed (1 bit).
        // The leading 1 disambiguates a short final block.
        std::uint32_t code = 1;
        std::size_t top = 0;
        for (std::size_t x = 0; x < len; ++x) {
            while (top > 0 && values_[begin + stack[top - 1]] < values_[begin + x]) {
                --top;
                code <<= 1;
            }
            stack[top++] = static_cast<std::uint32_t>(x);
            code = (code << 1) | 1u;
        }
        // The bottom of the stack is the leftmost block maximum.
        block_max[blk] = static_cast<std::uint32_t>(begin + stack[0]);

        std::uint16_t& type = type_of_code[code];
        if (type != kUnseen) {
            block_type_[blk] = type;
            continue;
        }
        type = types++;
        block_type_[blk] = type;
        // New shape: tabulate all in-block answers from this representative.
        type_tables_.resize(type_tables_.size() + b * b, 0);
        std::uint8_t* table = type_tables_.data() + static_cast<std::size_t>(type) * b * b;
        for (std::size_t x = 0; x < len; ++x) {
            std::size_t best = x;
            for (std::size_t y = x; y < len; ++y) {
                if (values_[begin + y] > values_[begin + best]) best = y;
                table[x * b + y] = static_cast<std::uint8_t>(best);
            }
        }
    }
    build_levels(std::move(block_max));
}

std::size_t RmqIndex::block_argmax(std::size_t lo, std::size_t hi) const noexcept {
    const std::size_t b = block_;
    const std::size_t bl = lo / b;
    const std::size_t bh = hi / b;
    if (bl == bh) {
        return in_block(bl, lo - bl * b, hi - bl * b);
    }
    std::size_t best = in_block(bl, lo - bl * b, b - 1);
    if (bl + 1 < bh) {
        best = better(best, levels_argmax(bl + 1, bh - 1));
    }
    return better(best, in_block(bh, 0, hi - bh * b));
}

std::size_t RmqIndex::block_type_count() const noexcept {
    return backend_ == RmqBackend::block ? type_tables_.size() / (block_ * block_) : 0;
}

std::size_t RmqIndex::query(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j || j > size()) {
        throw RangeError("RMQ range (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") invalid for array of length " + std::to_string(size()));
    }
    return argmax(i - 1, j - 1) + 1;
}

void RmqIndex::save(io::ByteWriter& out) const {
    out.u32(static_cast<std::uint32_t>(backend_));
    out.u32(static_cast<std::uint32_t>(block_));
    out.array(values_);
    out.u64(levels_.size());
    for (const auto& row : levels_) {
        out.array(row);
    }
    out.array(block_type_);
    out.array(type_tables_);
}

RmqIndex RmqIndex::load(io::ByteReader& in) {
    std::uint32_t backend = in.u32();
    std::uint32_t block = in.u32();
    if (backend > static_cast<std::uint32_t>(RmqBackend::block) || block == 0 || block > kMaxBlock) {
        throw FormatError("rmq: bad backend or block size");
    }
    auto values = in.array<std::uint32_t>();
    if (values.empty()) {
        throw FormatError("rmq: empty array");
    }
    // Tables are rebuilt from the values and must match what was stored.
    RmqIndex r = build(std::move(values), static_cast<RmqBackend>(backend),
                       backend == static_cast<std::uint32_t>(RmqBackend::block) ? block : 0);
    std::uint64_t rows = in.u64();
    if (rows != r.levels_.size()) {
        throw FormatError("rmq: level count mismatch");
    }
    for (const auto& row : r.levels_) {
        if (in.array<std::uint32_t>() != row) {
            throw FormatError("rmq: sparse table mismatch");
        }
    }
    if (in.array<std::uint16_t>() != r.block_type_ || in.array<std::uint8_t>() != r.type_tables_) {
        throw FormatError("rmq: block tables mismatch");
    }
    return r;
}

}  // namespace ilpq
