#include "ilpq/series_tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ilpq/error.hpp"

namespace ilpq {

SeriesTree SeriesTree::build(const Eertree& tree, WaqMode mode) {
    std::vector<NodeId> parent(tree.node_count(), kNoNode);
    std::vector<std::int32_t> weight(tree.node_count());
    for (NodeId v = 0; v < tree.node_count(); ++v) {
        weight[v] = tree.length(v);
        if (v > kEmptyNode) {
            parent[v] = tree.node(v).series_link;
        }
    }
    return from_parents(std::move(parent), std::move(weight), kEmptyNode, mode);
}

SeriesTree SeriesTree::from_parents(std::vector<NodeId> parent, std::vector<std::int32_t> weight,
                                    NodeId root, WaqMode mode) {
    if (parent.size() != weight.size()) {
        throw BuildError("series tree: parent and weight arrays differ in size");
    }
    if (root >= parent.size()) {
        throw BuildError("series tree: root out of range");
    }
    SeriesTree st;
    st.root_ = root;
    st.parent_ = std::move(parent);
    st.weight_ = std::move(weight);
    st.parent_[root] = kNoNode;
    st.finish(mode);
    return st;
}

// Computes depths (and chains) and validates the shape.
void SeriesTree::finish(WaqMode mode) {
    mode_ = mode;
    const std::size_t count = parent_.size();
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    depth_.assign(count, kUnset);
    depth_[root_] = 0;
    height_ = 0;

    // Iterative memoized depth computation; `path` holds the unresolved suffix.
    std::vector<NodeId> path;
    for (NodeId v = 0; v < count; ++v) {
        if (!contains(v) || depth_[v] != kUnset) {
            continue;
        }
        NodeId u = v;
        while (depth_[u] == kUnset) {
            NodeId p = parent_[u];
            if (p >= count || !contains(p)) {
                throw BuildError("series tree: node " + std::to_string(u) + " has an invalid parent");
            }
            if (weight_[p] >= weight_[u]) {
                throw BuildError("series tree: weights must strictly increase away from the root");
            }
            path.push_back(u);
            u = p;
            if (path.size() > count) {
                throw BuildError("series tree: parent links contain a cycle");
            }
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            depth_[*it] = depth_[parent_[*it]] + 1;
            height_ = std::max(height_, depth_[*it]);
        }
        path.clear();
    }

    chain_offset_.clear();
    chain_pool_.clear();
    if (mode_ != WaqMode::chains) {
        return;
    }
    chain_offset_.resize(count + 1);
    std::size_t total = 0;
    for (NodeId v = 0; v < count; ++v) {
        chain_offset_[v] = static_cast<std::uint32_t>(total);
        if (contains(v)) {
            total += depth_[v] + 1;
        }
    }
    if (total > std::numeric_limits<std::uint32_t>::max()) {
        throw BuildError("series tree: ancestor chains too large; use parent_walk mode");
    }
    chain_offset_[count] = static_cast<std::uint32_t>(total);
    chain_pool_.resize(total);
    for (NodeId v = 0; v < count; ++v) {
        if (!contains(v)) {
            continue;
        }
        std::uint32_t at = chain_offset_[v];
        for (NodeId u = v; u != kNoNode; u = parent_[u]) {
            chain_pool_[at++] = {u, weight_[u]};
        }
    }
}

std::span<const SeriesTree::ChainEntry> SeriesTree::chain(NodeId v) const noexcept {
    if (mode_ != WaqMode::chains) {
        return {};
    }
    return std::span<const ChainEntry>(chain_pool_)
        .subspan(chain_offset_[v], chain_offset_[v + 1] - chain_offset_[v]);
}

void SeriesTree::check_query(NodeId v, std::int64_t k) const {
    if (!contains(v)) {
        throw PreconditionError("waq: node " + std::to_string(v) + " is not in the tree");
    }
    if (weight_[v] <= k) {
        throw PreconditionError("waq: weight(" + std::to_string(v) + ") = " +
                                std::to_string(weight_[v]) + " is not greater than k = " +
                                std::to_string(k));
    }
}

NodeId SeriesTree::waq(NodeId v, std::int64_t k) const {
    check_query(v, k);
    if (mode_ == WaqMode::parent_walk) {
        return waq_walk(v, k);
    }
    // Weights decrease along the chain, so entries heavier than k form a prefix.
    auto c = chain(v);
    auto it = std::partition_point(c.begin(), c.end(),
                                   [k](const ChainEntry& e) { return e.weight > k; });
    return std::prev(it)->id;
}

NodeId SeriesTree::waq_walk(NodeId v, std::int64_t k) const {
    check_query(v, k);
    for (NodeId p = parent_[v]; p != kNoNode && weight_[p] > k; p = parent_[p]) {
        v = p;
    }
    return v;
}

void SeriesTree::save(io::ByteWriter& out) const {
    out.u32(root_);
    out.u32(static_cast<std::uint32_t>(mode_));
    out.array(parent_);
    out.array(weight_);
    out.array(depth_);
    out.array(chain_offset_);
    out.u64(chain_pool_.size());
    for (const ChainEntry& e : chain_pool_) {
        out.u32(e.id);
        out.i32(e.weight);
    }
}

SeriesTree SeriesTree::load(io::ByteReader& in) {
    NodeId root = in.u32();
    std::uint32_t mode = in.u32();
    if (mode > static_cast<std::uint32_t>(WaqMode::parent_walk)) {
        throw FormatError("series tree: unknown query mode");
    }
    auto parent = in.array<NodeId>();
    auto weight = in.array<std::int32_t>();
    if (parent.size() != weight.size() || root >= parent.size()) {
        throw FormatError("series tree: inconsistent arrays");
    }
    SeriesTree st;
    try {
        st = from_parents(std::move(parent), std::move(weight), root, static_cast<WaqMode>(mode));
    } catch (const BuildError& e) {
        throw FormatError(e.what());
    }
    // The stored derived arrays must agree with the recomputed ones.
    auto depth = in.array<std::uint32_t>();
    auto offsets = in.array<std::uint32_t>();
    std::uint64_t pool = in.u64();
    if (pool != st.chain_pool_.size() || pool > in.remaining() / 8) {
        throw FormatError("series tree: chain pool size mismatch");
    }
    for (const ChainEntry& e : st.chain_pool_) {
        if (in.u32() != e.id || in.i32() != e.weight) {
            throw FormatError("series tree: chain mismatch");
        }
    }
    if (depth != st.depth_ || offsets != st.chain_offset_) {
        throw FormatError("series tree: depth or chain offsets mismatch");
    }
    return st;
}

}  // namespace ilpq
