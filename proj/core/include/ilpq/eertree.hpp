#ifndef ILPQ_EERTREE_HPP
#define ILPQ_EERTREE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilpq/binary_io.hpp"
#include "ilpq/text.hpp"

namespace ilpq {

using NodeId = std::uint32_t;

inline constexpr NodeId kImaginaryNode = 0;  // ⊥, length -1
inline constexpr NodeId kEmptyNode = 1;      // ε, length 0
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/*
 * Arithmetic progression first, first + diff, ..., first + (count-1)*diff.
 */
struct ArithProg {
    std::uint32_t first = 0;
    std::uint32_t diff = 0;
    std::uint32_t count = 0;

    std::uint32_t last() const noexcept { return first + (count - 1) * diff; }

    // Largest term <= bound. Requires first <= bound.
    std::uint32_t largest_at_most(std::size_t bound) const noexcept {
        if (count == 1 || diff == 0) {
            return first;
        }
        std::size_t steps = (bound - first) / diff;
        if (steps > count - 1) {
            steps = count - 1;
        }
        return first + static_cast<std::uint32_t>(steps) * diff;
    }

    friend bool operator==(const ArithProg&, const ArithProg&) = default;
};

/*
 * One distinct palindrome. For ordinary nodes, `prog` holds the lengths of
 * the palindromic suffixes of this palindrome that are longer than its
 * series-link target.
 */
struct PalNode {
    std::int32_t length = 0;
    NodeId suffix_link = kImaginaryNode;
    NodeId series_link = kNoNode;  // kNoNode for ε and ⊥
    std::uint32_t delta = 0;       // length - length(suffix_link); 0 for ε and ⊥
    ArithProg prog;
    std::uint32_t first_end = 0;   // 1-based end position of the first occurrence

    friend bool operator==(const PalNode&, const PalNode&) = default;
};

/*
 * Palindromic tree (eertree) of a text, built online left to right.
 *
 * Node ids are dense in creation order: ⊥ = 0, ε = 1, then one node per
 * distinct non-empty palindrome. Besides character edges and suffix links,
 * every ordinary node carries its series link (nearest suffix-link ancestor
 * with a different delta) and the progression of its delta-run.
 *
 * Character edges out of ⊥ and ε live in direct 256-slot tables; all other
 * nodes keep a singly linked list of out-edges, which is bounded by the
 * alphabet size.
 */
class Eertree {
public:
    struct Edge {
        unsigned char label;
        NodeId child;
    };

    Eertree() = default;

    // Throws BuildError for an empty or oversized text.
    static Eertree build(const Text& text);

    std::size_t node_count() const noexcept { return nodes_.size(); }
    // Number of distinct non-empty palindromes (node_count() - 2).
    std::size_t palindrome_count() const noexcept { return nodes_.size() - 2; }
    std::size_t text_size() const noexcept { return lsufpal_.size(); }

    const PalNode& node(NodeId v) const noexcept { return nodes_[v]; }
    std::span<const PalNode> nodes() const noexcept { return nodes_; }
    std::int32_t length(NodeId v) const noexcept { return nodes_[v].length; }

    // Node of the longest palindromic suffix of T[1..j]; 1-based, unchecked.
    NodeId lsufpal(std::size_t j) const noexcept { return lsufpal_[j - 1]; }
    std::span<const NodeId> lsufpal() const noexcept { return lsufpal_; }

    // Child c·v·c of v, or kNoNode.
    NodeId child(NodeId v, unsigned char c) const noexcept;
    // Out-edges of v in ascending label order.
    std::vector<Edge> edges(NodeId v) const;
    std::size_t edge_count() const noexcept { return edge_child_.size(); }

    // Node of the palindrome `pal`, or nullopt when it is not a substring
    // palindrome of the text. The empty string maps to ε.
    std::optional<NodeId> find(std::string_view pal) const;

    // The palindrome of node v as a view into `text` (the text this tree was
    // built from). Empty for ε and ⊥.
    std::string_view palindrome(const Text& text, NodeId v) const;

    // Lengths of all palindromic suffixes of v (v included), ascending.
    // Throws DomainError for ε or ⊥.
    std::vector<std::uint32_t> pal_suffix_lengths(NodeId v) const;

    // Stored progression of v. Throws DomainError for ε or ⊥.
    const ArithProg& progression_of(NodeId v) const;

    void save(io::ByteWriter& out) const;
    static Eertree load(io::ByteReader& in);

    friend bool operator==(const Eertree&, const Eertree&) = default;

private:
    void check_ordinary(NodeId v, const char* op) const;
    void add_edge(NodeId parent, unsigned char c, NodeId child);

    std::vector<PalNode> nodes_;
    std::vector<NodeId> lsufpal_;

    // Dense children of ⊥ and ε.
    std::array<std::array<NodeId, 256>, 2> root_children_{};
    // Edge pool in insertion order; first_edge_[v] heads v's linked list.
    std::vector<std::uint32_t> first_edge_;
    std::vector<std::uint32_t> edge_next_;
    std::vector<NodeId> edge_parent_;
    std::vector<NodeId> edge_child_;
    std::vector<unsigned char> edge_label_;
};

}  // namespace ilpq

#endif  // ILPQ_EERTREE_HPP
