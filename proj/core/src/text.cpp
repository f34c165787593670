#include "ilpq/text.hpp"

#include <fstream>
#include <iterator>

#include "ilpq/error.hpp"

namespace ilpq {

Text Text::read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("error reading " + path.string());
    }
    return Text(std::move(bytes));
}

unsigned char Text::at(std::size_t pos) const {
    if (pos < 1 || pos > size()) {
        throw RangeError("text position " + std::to_string(pos) + " outside 1.." +
                         std::to_string(size()));
    }
    return (*this)[pos];
}

std::string_view Text::substr(std::size_t start, std::size_t end) const {
    check_range({start, end}, size());
    return view().substr(start - 1, end - start + 1);
}

Text Text::reversed() const {
    return Text(std::string(bytes_.rbegin(), bytes_.rend()));
}

void check_range(QueryRange q, std::size_t n) {
    if (q.i < 1 || q.i > q.j || q.j > n) {
        throw RangeError("invalid range (" + std::to_string(q.i) + ", " + std::to_string(q.j) +
                         ") for text of length " + std::to_string(n));
    }
}

std::string escape_bytes(std::string_view bytes) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size());
    for (char ch : bytes) {
        auto c = static_cast<unsigned char>(ch);
        if (c == '\\' || c == '"') {
            out += '\\';
            out += ch;
        } else if (c >= 0x20 && c < 0x7f) {
            out += ch;
        } else {
            out += "\\x";
            out += kHex[c >> 4];
            out += kHex[c & 0xf];
        }
    }
    return out;
}

}  // namespace ilpq
