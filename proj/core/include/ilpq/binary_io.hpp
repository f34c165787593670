#ifndef ILPQ_BINARY_IO_HPP
#define ILPQ_BINARY_IO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ilpq/error.hpp"

namespace ilpq::io {

/*
 * Byte-oriented little-endian writer. Output is independent of host
 * endianness.
 */
class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }

    void bytes(std::string_view b) { buf_.append(b); }

    // u64 count followed by the elements as u32 / i32 / u8.
    template <typename T>
    void array(std::span<const T> values) {
        static_assert(std::is_integral_v<T> && sizeof(T) <= 4);
        u64(values.size());
        for (T v : values) {
            if constexpr (sizeof(T) == 1) {
                u8(static_cast<std::uint8_t>(v));
            } else if constexpr (sizeof(T) == 2) {
                u32(static_cast<std::uint16_t>(v));
            } else {
                u32(static_cast<std::uint32_t>(v));
            }
        }
    }
    template <typename T>
    void array(const std::vector<T>& values) {
        array(std::span<const T>(values));
    }

    std::size_t size() const noexcept { return buf_.size(); }
    const std::string& buffer() const noexcept { return buf_; }
    std::string release() { return std::move(buf_); }

private:
    void put(std::uint64_t v, int width) {
        for (int k = 0; k < width; ++k) {
            buf_.push_back(static_cast<char>((v >> (8 * k)) & 0xffu));
        }
    }

    std::string buf_;
};

// Bounds-checked reader over a byte range; throws FormatError on truncation.
class ByteReader {
public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
    std::uint64_t u64() { return get(8); }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }

    std::string_view bytes(std::size_t count) {
        need(count);
        auto out = data_.substr(pos_, count);
        pos_ += count;
        return out;
    }

    template <typename T>
    std::vector<T> array() {
        static_assert(std::is_integral_v<T> && sizeof(T) <= 4);
        std::uint64_t count = u64();
        constexpr std::size_t width = sizeof(T) == 1 ? 1 : 4;
        if (count > remaining() / width) {
            throw FormatError("array length " + std::to_string(count) + " exceeds section size");
        }
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t k = 0; k < count; ++k) {
            if constexpr (sizeof(T) == 1) {
                out.push_back(static_cast<T>(u8()));
            } else {
                std::uint32_t raw = u32();
                if constexpr (sizeof(T) == 2) {
                    if (raw > 0xffffu) throw FormatError("16-bit field out of range");
                }
                out.push_back(static_cast<T>(raw));
            }
        }
        return out;
    }

    std::size_t remaining() const noexcept { return data_.size() - pos_; }
    bool at_end() const noexcept { return pos_ == data_.size(); }

    void expect_end(std::string_view what) const {
        if (!at_end()) {
            throw FormatError(std::string(what) + ": trailing bytes in section");
        }
    }

private:
    void need(std::size_t count) const {
        if (count > remaining()) {
            throw FormatError("unexpected end of data");
        }
    }
    std::uint64_t get(int width) {
        need(static_cast<std::size_t>(width));
        std::uint64_t v = 0;
        for (int k = 0; k < width; ++k) {
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_ + k])) << (8 * k);
        }
        pos_ += static_cast<std::size_t>(width);
        return v;
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

}  // namespace ilpq::io

#endif  // ILPQ_BINARY_IO_HPP
