#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace romlid::uni {

// Decodes UTF-8; throws ParseError on malformed sequences.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(char32_t cp);

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view cps);
std::string nfc_utf8(std::string_view bytes);

char32_t to_lower(char32_t cp);

bool is_space(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
inline bool is_alnum(char32_t cp) { return is_letter(cp) || is_digit(cp); }

bool is_ascii_digit(char32_t cp);
// Latin-script letters (Basic Latin through Latin Extended-B plus Latin-1 letters).
bool is_latin_letter(char32_t cp);
// Anything that is neither alphanumeric nor whitespace: punctuation, symbols, marks.
inline bool is_punct_like(char32_t cp) { return !is_alnum(cp) && !is_space(cp); }

// Whitespace tokenization over code points; collapses runs, drops empties.
std::vector<std::u32string> split_ws(std::u32string_view text);
std::vector<std::string> split_ws_utf8(std::string_view text);

}  // namespace romlid::uni
