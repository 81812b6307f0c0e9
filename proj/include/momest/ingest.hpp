#pragma once

#include <cstdint>
#include <istream>
#include <string_view>
#include <vector>

#include "momest/core.hpp"

namespace momest {

// FNV-1a 64-bit; the fixed hash that makes text and binary ingestion agree
// on the same token sequence. Collisions at desk scale are negligible.
constexpr Token fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Newline-delimited UTF-8 strings, hashed to tokens. A trailing newline
// does not produce an empty token; interior empty lines do.
std::vector<Token> read_text_tokens(std::istream& in);

// Fixed-width 8-byte little-endian records.
std::vector<Token> read_binary_tokens(std::istream& in);

}  // namespace momest
