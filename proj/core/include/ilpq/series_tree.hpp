#ifndef ILPQ_SERIES_TREE_HPP
#define ILPQ_SERIES_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ilpq/binary_io.hpp"
#include "ilpq/eertree.hpp"

namespace ilpq {

/*
 * How weighted ancestor queries are answered.
 *
 * chains:      every node stores its full root-ward ancestor chain and a query
 *              binary-searches it. O(log height) per query, O(n * height)
 *              words in total. Since the series tree has height O(log n), a
 *              query costs O(log log n) comparisons (at most 6 for any n that
 *              fits a 64-bit word).
 * parent_walk: no extra storage; a query walks parent pointers, O(height).
 *
 * Neither is the word-packed O(1) structure for trees of height O(w); the
 * chains variant is the default and is within a handful of comparisons of it.
 */
enum class WaqMode : std::uint32_t { chains = 0, parent_walk = 1 };

/*
 * A rooted tree with weights strictly increasing away from the root, plus
 * weighted ancestor queries on it. Built from an eertree, the tree consists
 * of all ordinary nodes with parent(v) = series_link(v), rooted at ε, and
 * weight(v) = |v|. Node ids are shared with the eertree; ⊥ is not part of
 * the tree.
 */
class SeriesTree {
public:
    struct ChainEntry {
        NodeId id;
        std::int32_t weight;
        friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
    };

    SeriesTree() = default;

    static SeriesTree build(const Eertree& tree, WaqMode mode = WaqMode::chains);

    /*
     * Generic construction. parent[v] == kNoNode marks v as absent from the
     * tree unless v == root. Throws BuildError if the parents do not form a
     * tree rooted at `root` or weights do not strictly increase downward.
     */
    static SeriesTree from_parents(std::vector<NodeId> parent, std::vector<std::int32_t> weight,
                                   NodeId root, WaqMode mode = WaqMode::chains);

    std::size_t size() const noexcept { return parent_.size(); }
    NodeId root() const noexcept { return root_; }
    WaqMode mode() const noexcept { return mode_; }

    bool contains(NodeId v) const noexcept {
        return v < parent_.size() && (v == root_ || parent_[v] != kNoNode);
    }
    NodeId parent(NodeId v) const noexcept { return parent_[v]; }
    std::int32_t weight(NodeId v) const noexcept { return weight_[v]; }
    std::uint32_t depth(NodeId v) const noexcept { return depth_[v]; }
    std::uint32_t height() const noexcept { return height_; }

    // Ancestors of v from v itself up to the root; empty in parent_walk mode.
    std::span<const ChainEntry> chain(NodeId v) const noexcept;

    /*
     * Weighted ancestor query: the ancestor u of v (v included) closest to
     * the root with weight(u) > k. Throws PreconditionError when
     * weight(v) <= k or v is not in the tree.
     */
    NodeId waq(NodeId v, std::int64_t k) const;

    // Reference answer by walking parent links; same contract as waq().
    NodeId waq_walk(NodeId v, std::int64_t k) const;

    void save(io::ByteWriter& out) const;
    static SeriesTree load(io::ByteReader& in);

    friend bool operator==(const SeriesTree&, const SeriesTree&) = default;

private:
    void check_query(NodeId v, std::int64_t k) const;
    void finish(WaqMode mode);

    NodeId root_ = kNoNode;
    WaqMode mode_ = WaqMode::chains;
    std::uint32_t height_ = 0;
    std::vector<NodeId> parent_;
    std::vector<std::int32_t> weight_;
    std::vector<std::uint32_t> depth_;
    // chain of v is chain_pool_[chain_offset_[v] .. chain_offset_[v+1])
    std::vector<std::uint32_t> chain_offset_;
    std::vector<ChainEntry> chain_pool_;
};

}  // namespace ilpq

#endif  // ILPQ_SERIES_TREE_HPP
