#include "ilpq/eertree.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "ilpq/error.hpp"

namespace ilpq {

namespace {

constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

}  // namespace

void Eertree::add_edge(NodeId parent, unsigned char c, NodeId child) {
    auto e = static_cast<std::uint32_t>(edge_child_.size());
    edge_parent_.push_back(parent);
    edge_child_.push_back(child);
    edge_label_.push_back(c);
    edge_next_.push_back(first_edge_[parent]);
    first_edge_[parent] = e;
    if (parent <= kEmptyNode) {
        root_children_[parent][c] = child;
    }
}

NodeId Eertree::child(NodeId v, unsigned char c) const noexcept {
    if (v <= kEmptyNode) {
        return root_children_[v][c];
    }
    for (std::uint32_t e = first_edge_[v]; e != kNoEdge; e = edge_next_[e]) {
        if (edge_label_[e] == c) {
            return edge_child_[e];
        }
    }
    return kNoNode;
}

std::vector<Eertree::Edge> Eertree::edges(NodeId v) const {
    std::vector<Edge> out;
    for (std::uint32_t e = first_edge_[v]; e != kNoEdge; e = edge_next_[e]) {
        out.push_back({edge_label_[e], edge_child_[e]});
    }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
    return out;
}

Eertree Eertree::build(const Text& text) {
    const std::size_t n = text.size();
    if (n == 0) {
        throw BuildError("cannot build a palindromic tree of an empty text");
    }
    if (n > kMaxTextLength) {
        throw BuildError("text too long");
    }
    const std::string_view s = text.view();

    Eertree t;
    t.nodes_.reserve(n + 2);
    t.first_edge_.reserve(n + 2);
    t.edge_next_.reserve(n);
    t.edge_parent_.reserve(n);
    t.edge_child_.reserve(n);
    t.edge_label_.reserve(n);
    for (auto& table : t.root_children_) {
        table.fill(kNoNode);
    }

    PalNode imaginary;
    imaginary.length = -1;
    t.nodes_.push_back(imaginary);
    t.nodes_.push_back(PalNode{});  // ε
    t.first_edge_.assign(2, kNoEdge);
    t.lsufpal_.resize(n);

    // Walk suffix links from v until x·v·x is a suffix of s[0..p] with x = s[p].
    auto extendable = [&](NodeId v, std::size_t p) {
        const auto c = s[p];
        for (;;) {
            auto len = static_cast<std::ptrdiff_t>(t.nodes_[v].length);
            auto before = static_cast<std::ptrdiff_t>(p) - 1 - len;
            if (before >= 0 && s[static_cast<std::size_t>(before)] == c) {
                return v;
            }
            v = t.nodes_[v].suffix_link;
        }
    };

    NodeId last = kEmptyNode;
    for (std::size_t p = 0; p < n; ++p) {
        const auto c = static_cast<unsigned char>(s[p]);
        NodeId parent = extendable(last, p);
        NodeId existing = t.child(parent, c);
        if (existing != kNoNode) {
            last = existing;
            t.lsufpal_[p] = last;
            continue;
        }

        PalNode node;
        node.length = t.nodes_[parent].length + 2;
        node.first_end = static_cast<std::uint32_t>(p + 1);
        if (node.length == 1) {
            node.suffix_link = kEmptyNode;
        } else {
            node.suffix_link = t.child(extendable(t.nodes_[parent].suffix_link, p), c);
        }
        const PalNode& link = t.nodes_[node.suffix_link];
        node.delta = static_cast<std::uint32_t>(node.length - link.length);
        if (node.suffix_link != kEmptyNode && link.delta == node.delta) {
            // Same delta-run as the suffix link: extend its progression by one term.
            node.series_link = link.series_link;
            node.prog = {link.prog.first, node.delta, link.prog.count + 1};
        } else {
            node.series_link = node.suffix_link;
            node.prog = {static_cast<std::uint32_t>(node.length), node.delta, 1};
        }

        auto id = static_cast<NodeId>(t.nodes_.size());
        t.nodes_.push_back(node);
        t.first_edge_.push_back(kNoEdge);
        t.add_edge(parent, c, id);
        last = id;
        t.lsufpal_[p] = last;
    }
    return t;
}

std::optional<NodeId> Eertree::find(std::string_view pal) const {
    const std::size_t len = pal.size();
    if (len == 0) {
        return kEmptyNode;
    }
    if (!std::equal(pal.begin(), pal.begin() + static_cast<std::ptrdiff_t>(len / 2), pal.rbegin())) {
        return std::nullopt;
    }
    // Grow outwards from the center.
    NodeId v = len % 2 == 1 ? kImaginaryNode : kEmptyNode;
    for (std::size_t k = len / 2; k < len; ++k) {
        v = child(v, static_cast<unsigned char>(pal[k]));
        if (v == kNoNode) {
            return std::nullopt;
        }
    }
    return v;
}

std::string_view Eertree::palindrome(const Text& text, NodeId v) const {
    const PalNode& node = nodes_[v];
    if (node.length <= 0) {
        return {};
    }
    auto len = static_cast<std::size_t>(node.length);
    return text.view().substr(node.first_end - len, len);
}

void Eertree::check_ordinary(NodeId v, const char* op) const {
    if (v >= nodes_.size()) {
        throw RangeError(std::string(op) + ": node " + std::to_string(v) + " does not exist");
    }
    if (v <= kEmptyNode) {
        throw DomainError(std::string(op) + " is undefined for the empty and imaginary nodes");
    }
}

std::vector<std::uint32_t> Eertree::pal_suffix_lengths(NodeId v) const {
    check_ordinary(v, "pal_suffix_lengths");
    std::vector<std::uint32_t> out;
    for (; v != kEmptyNode; v = nodes_[v].suffix_link) {
        out.push_back(static_cast<std::uint32_t>(nodes_[v].length));
    }
    std::reverse(out.begin(), out.end());
    return out;
}

const ArithProg& Eertree::progression_of(NodeId v) const {
    check_ordinary(v, "progression_of");
    return nodes_[v].prog;
}

void Eertree::save(io::ByteWriter& out) const {
    out.u64(nodes_.size());
    for (const PalNode& v : nodes_) {
        out.i32(v.length);
        out.u32(v.suffix_link);
        out.u32(v.series_link);
        out.u32(v.delta);
        out.u32(v.prog.first);
        out.u32(v.prog.diff);
        out.u32(v.prog.count);
        out.u32(v.first_end);
    }
    out.u64(edge_child_.size());
    for (std::size_t e = 0; e < edge_child_.size(); ++e) {
        out.u32(edge_parent_[e]);
        out.u32(edge_label_[e]);
        out.u32(edge_child_[e]);
    }
    out.array(lsufpal_);
}

Eertree Eertree::load(io::ByteReader& in) {
    Eertree t;
    std::uint64_t count = in.u64();
    if (count < 2 || count > in.remaining() / 32) {
        throw FormatError("eertree: bad node count");
    }
    t.nodes_.resize(static_cast<std::size_t>(count));
    for (PalNode& v : t.nodes_) {
        v.length = in.i32();
        v.suffix_link = in.u32();
        v.series_link = in.u32();
        v.delta = in.u32();
        v.prog.first = in.u32();
        v.prog.diff = in.u32();
        v.prog.count = in.u32();
        v.first_end = in.u32();
    }
    if (t.nodes_[kImaginaryNode].length != -1 || t.nodes_[kEmptyNode].length != 0) {
        throw FormatError("eertree: bad root nodes");
    }
    for (std::size_t id = 0; id < t.nodes_.size(); ++id) {
        const PalNode& v = t.nodes_[id];
        bool links_ok = v.suffix_link < count &&
                        (id <= kEmptyNode || (v.series_link < count && v.length >= 1 &&
                                              v.suffix_link != kImaginaryNode &&
                                              v.series_link != kImaginaryNode &&
                                              t.nodes_[v.suffix_link].length < v.length &&
                                              t.nodes_[v.series_link].length < v.length &&
                                              v.prog.count >= 1 && v.prog.first >= 1 &&
                                              v.prog.last() == static_cast<std::uint32_t>(v.length)));
        if (!links_ok) {
            throw FormatError("eertree: node " + std::to_string(id) + " is inconsistent");
        }
    }

    for (auto& table : t.root_children_) {
        table.fill(kNoNode);
    }
    t.first_edge_.assign(t.nodes_.size(), kNoEdge);
    std::uint64_t edges = in.u64();
    if (edges > in.remaining() / 12) {
        throw FormatError("eertree: bad edge count");
    }
    for (std::uint64_t e = 0; e < edges; ++e) {
        NodeId parent = in.u32();
        std::uint32_t label = in.u32();
        NodeId child = in.u32();
        if (parent >= count || child >= count || child <= kEmptyNode || label > 0xff) {
            throw FormatError("eertree: bad edge");
        }
        t.add_edge(parent, static_cast<unsigned char>(label), child);
    }

    t.lsufpal_ = in.array<NodeId>();
    for (NodeId v : t.lsufpal_) {
        if (v <= kEmptyNode || v >= count) {
            throw FormatError("eertree: bad LSufPal entry");
        }
    }
    for (const PalNode& v : t.nodes_) {
        if (v.first_end > t.lsufpal_.size() || static_cast<std::int64_t>(v.first_end) < v.length) {
            throw FormatError("eertree: occurrence outside text");
        }
    }
    return t;
}

}  // namespace ilpq
