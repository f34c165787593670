#ifndef ILPQ_TEXT_HPP
#define ILPQ_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ilpq {

// Largest text length accepted by the index builders. Node ids, lengths and
// MP entries are stored as 32-bit integers.
inline constexpr std::size_t kMaxTextLength = (std::size_t{1} << 31) - 2;

/*
 * The indexed byte string. Positions are 1-based at the API boundary:
 * valid positions are 1..size().
 */
class Text {
public:
    Text() = default;
    explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

    static Text read_file(const std::filesystem::path& path);

    std::size_t size() const noexcept { return bytes_.size(); }
    bool empty() const noexcept { return bytes_.empty(); }

    // 1-based, unchecked.
    unsigned char operator[](std::size_t pos) const noexcept {
        return static_cast<unsigned char>(bytes_[pos - 1]);
    }
    // 1-based, throws RangeError.
    unsigned char at(std::size_t pos) const;

    // T[start..end], 1-based inclusive; throws RangeError.
    std::string_view substr(std::size_t start, std::size_t end) const;

    std::string_view view() const noexcept { return bytes_; }
    const std::string& bytes() const noexcept { return bytes_; }

    Text reversed() const;

    friend bool operator==(const Text&, const Text&) = default;

private:
    std::string bytes_;
};

// A 1-based inclusive span [start, end] of the text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const noexcept { return end - start + 1; }
    friend bool operator==(const Span&, const Span&) = default;
};

// Query input: 1 <= i <= j <= n.
struct QueryRange {
    std::size_t i = 0;
    std::size_t j = 0;

    std::size_t length() const noexcept { return j - i + 1; }
    friend bool operator==(const QueryRange&, const QueryRange&) = default;
};

// Throws RangeError unless 1 <= q.i <= q.j <= n.
void check_range(QueryRange q, std::size_t n);

// Render bytes so that any text can be pasted back as a C-style string literal.
std::string escape_bytes(std::string_view bytes);

}  // namespace ilpq

#endif  // ILPQ_TEXT_HPP
