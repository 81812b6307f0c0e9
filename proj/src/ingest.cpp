#include "momest/ingest.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace momest {

std::vector<Token> read_text_tokens(std::istream& in) {
    std::vector<Token> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(fnv1a64(line));
    }
    return out;
}

std::vector<Token> read_binary_tokens(std::istream& in) {
    std::vector<Token> out;
    std::array<char, 8> buf;
    while (in.read(buf.data(), buf.size())) {
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i)
            v = (v << 8) | static_cast<unsigned char>(buf[i]);
        out.push_back(v);
    }
    if (in.gcount() != 0)
        throw std::invalid_argument("binary input: truncated 8-byte record");
    return out;
}

}  // namespace momest
