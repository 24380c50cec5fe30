#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ewaq::utf8 {

// Decodes UTF-8 into codepoints. Returns false on malformed input
// (truncated sequence, overlong encoding, surrogate, out of range).
bool decode(std::string_view in, std::u32string& out);

// Throwing variant used by loaders.
std::u32string decode_or_throw(std::string_view in, const std::string& context);

void append(std::string& out, char32_t cp);
std::string encode(const std::u32string& cps);

} // namespace ewaq::utf8
