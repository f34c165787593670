// Index file layout (all integers little-endian):
//
//   magic    "ILPQ"
//   version  u32 = 1
//   n        u64
//   count    u32, then `count` entries of
//            tag (4 bytes), offset (u64, from file start), length (u64)
//   sections, in table order
//
// Sections:
//   TEXT  raw text bytes (length n)
//   MPAR  u64 count (2n-1), then u32 lengths
//   FEER  eertree of T:   u64 nodes, per node i32 length, u32 suffix_link,
//         u32 series_link, u32 delta, u32 prog.first, u32 prog.diff,
//         u32 prog.count, u32 first_end; u64 edges, per edge u32 parent,
//         u32 label, u32 child; u64 n, u32 LSufPal[n]
//   BEER  eertree of reversed T, same layout
//   FSER  series tree of T: u32 root, u32 mode, then u64-prefixed u32 arrays
//         parent, weight, depth, chain_offset; u64 chain entries of
//         (u32 id, i32 weight)
//   BSER  series tree of reversed T, same layout
//   RMQT  u32 backend, u32 block size, u64-prefixed u32 values, u64 levels
//         each a u64-prefixed u32 array, u64-prefixed u32 block types,
//         u64-prefixed u8 in-block tables

#include <array>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>

#include "ilpq/binary_io.hpp"
#include "ilpq/error.hpp"
#include "ilpq/index.hpp"

namespace ilpq {

namespace {

constexpr std::string_view kMagic = "ILPQ";
constexpr std::uint32_t kVersion = 1;
constexpr std::array<std::string_view, 7> kTags = {"TEXT", "MPAR", "FEER", "BEER",
                                                    "FSER", "BSER", "RMQT"};

std::string_view find_section(std::string_view file, std::string_view tag,
                              std::span<const std::array<std::uint64_t, 2>> table,
                              std::span<const std::string> tags) {
    for (std::size_t k = 0; k < tags.size(); ++k) {
        if (tags[k] == tag) {
            return file.substr(static_cast<std::size_t>(table[k][0]),
                               static_cast<std::size_t>(table[k][1]));
        }
    }
    throw FormatError("index file is missing section " + std::string(tag));
}

}  // namespace

void Index::save(std::ostream& out) const {
    std::array<std::string, kTags.size()> sections;
    {
        sections[0] = text_.bytes();
    }
    {
        io::ByteWriter w;
        mp_.save(w);
        sections[1] = w.release();
    }
    {
        io::ByteWriter w;
        forward_.save(w);
        sections[2] = w.release();
    }
    {
        io::ByteWriter w;
        backward_.save(w);
        sections[3] = w.release();
    }
    {
        io::ByteWriter w;
        forward_series_.save(w);
        sections[4] = w.release();
    }
    {
        io::ByteWriter w;
        backward_series_.save(w);
        sections[5] = w.release();
    }
    {
        io::ByteWriter w;
        rmq_.save(w);
        sections[6] = w.release();
    }

    io::ByteWriter header;
    header.bytes(kMagic);
    header.u32(kVersion);
    header.u64(size());
    header.u32(static_cast<std::uint32_t>(kTags.size()));
    std::uint64_t offset = header.size() + kTags.size() * (4 + 8 + 8);
    for (std::size_t k = 0; k < kTags.size(); ++k) {
        header.bytes(kTags[k]);
        header.u64(offset);
        header.u64(sections[k].size());
        offset += sections[k].size();
    }
    out.write(header.buffer().data(), static_cast<std::streamsize>(header.size()));
    for (const auto& section : sections) {
        out.write(section.data(), static_cast<std::streamsize>(section.size()));
    }
    if (!out) {
        throw std::runtime_error("failed to write index");
    }
}

Index Index::load(std::istream& in) {
    const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    io::ByteReader header(file);
    if (header.remaining() < kMagic.size() || header.bytes(kMagic.size()) != kMagic) {
        throw FormatError("not an index file (bad magic)");
    }
    if (std::uint32_t version = header.u32(); version != kVersion) {
        throw FormatError("unsupported index version " + std::to_string(version));
    }
    const std::uint64_t n = header.u64();
    const std::uint32_t count = header.u32();
    if (count > header.remaining() / 20) {
        throw FormatError("bad section count");
    }
    std::vector<std::string> tags(count);
    std::vector<std::array<std::uint64_t, 2>> table(count);
    for (std::uint32_t k = 0; k < count; ++k) {
        tags[k] = std::string(header.bytes(4));
        table[k] = {header.u64(), header.u64()};
        if (table[k][0] > file.size() || table[k][1] > file.size() - table[k][0]) {
            throw FormatError("section " + tags[k] + " lies outside the file");
        }
    }
    auto section = [&](std::string_view tag) { return find_section(file, tag, table, tags); };

    Index idx;
    idx.text_ = Text(std::string(section("TEXT")));
    if (idx.text_.size() != n || n == 0) {
        throw FormatError("text length does not match header");
    }
    auto parse = [&](std::string_view tag, auto&& fn) {
        io::ByteReader r(section(tag));
        fn(r);
        r.expect_end(tag);
    };
    parse("MPAR", [&](io::ByteReader& r) { idx.mp_ = MPArray::load(r); });
    parse("FEER", [&](io::ByteReader& r) { idx.forward_ = Eertree::load(r); });
    parse("BEER", [&](io::ByteReader& r) { idx.backward_ = Eertree::load(r); });
    parse("FSER", [&](io::ByteReader& r) { idx.forward_series_ = SeriesTree::load(r); });
    parse("BSER", [&](io::ByteReader& r) { idx.backward_series_ = SeriesTree::load(r); });
    parse("RMQT", [&](io::ByteReader& r) { idx.rmq_ = RmqIndex::load(r); });

    // Cross-section consistency: everything must describe the same n.
    const bool consistent =
        idx.mp_.text_size() == n && idx.forward_.text_size() == n && idx.backward_.text_size() == n &&
        idx.forward_series_.size() == idx.forward_.node_count() &&
        idx.backward_series_.size() == idx.backward_.node_count() &&
        idx.forward_series_.root() == kEmptyNode && idx.backward_series_.root() == kEmptyNode &&
        idx.forward_series_.mode() == idx.backward_series_.mode() &&
        std::equal(idx.rmq_.values().begin(), idx.rmq_.values().end(), idx.mp_.values().begin(),
                   idx.mp_.values().end());
    if (!consistent) {
        throw FormatError("index sections disagree with each other");
    }
    // A stale or edited section can still be well formed, so the text-derived
    // structures are recomputed and must match exactly.
    if (!(idx.mp_ == compute_mp(idx.text_))) {
        throw FormatError("MP array does not match the text");
    }
    if (!(idx.forward_ == Eertree::build(idx.text_)) || !(idx.backward_ == Eertree::build(idx.text_.reversed()))) {
        throw FormatError("eertree does not match the text");
    }
    for (NodeId v = kEmptyNode + 1; v < idx.forward_.node_count(); ++v) {
        if (idx.forward_series_.parent(v) != idx.forward_.node(v).series_link ||
            idx.forward_series_.weight(v) != idx.forward_.length(v)) {
            throw FormatError("forward series tree disagrees with the eertree");
        }
    }
    for (NodeId v = kEmptyNode + 1; v < idx.backward_.node_count(); ++v) {
        if (idx.backward_series_.parent(v) != idx.backward_.node(v).series_link ||
            idx.backward_series_.weight(v) != idx.backward_.length(v)) {
            throw FormatError("backward series tree disagrees with the eertree");
        }
    }
    return idx;
}

void Index::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    save(out);
}

Index Index::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return load(in);
}

}  // namespace ilpq
