#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corpusforge {

// ---- UTF-8 -----------------------------------------------------------------

// Decodes the codepoint starting at byte `pos` and advances `pos` past it.
// Invalid sequences decode as U+FFFD and advance one byte.
char32_t utf8_decode(std::string_view s, size_t& pos);

void utf8_encode(char32_t cp, std::string& out);

std::vector<char32_t> utf8_codepoints(std::string_view s);

std::string utf8_from_codepoints(const std::vector<char32_t>& cps);

// Number of bytes of the codepoint starting at `pos` (1 for invalid bytes).
size_t utf8_cp_len(std::string_view s, size_t pos);

// ---- Character classes -----------------------------------------------------

bool is_hiragana(char32_t cp);
bool is_katakana(char32_t cp);
bool is_kanji(char32_t cp);
bool is_fullwidth_punct(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_fullwidth_digit(char32_t cp);
bool is_space_cp(char32_t cp);
bool is_punct_cp(char32_t cp);

// Uppercase test for ASCII and Latin-1 letters (the Spanish alphabet).
bool is_upper_letter(char32_t cp);
bool is_lower_letter(char32_t cp);

char32_t to_lower_cp(char32_t cp);

// Lowercases ASCII and Latin-1 letters; other codepoints pass through.
std::string lower(std::string_view s);

// First codepoint uppercase?
bool starts_upper(std::string_view s);

// ---- Normalization ---------------------------------------------------------

// Canonical composition for the ranges this toolkit processes: Latin letters
// with combining acute/grave/diaeresis/tilde/circumflex/cedilla, and kana with
// combining (han)dakuten. Precomposed input passes through unchanged.
std::string nfc(std::string_view s);

// MediaWiki title canonical form: NFC, underscores to spaces, whitespace
// trimmed and collapsed. First-character case is preserved.
std::string normalize_title(std::string_view s);

// ---- Strings ---------------------------------------------------------------

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool starts_with(std::string_view s, std::string_view prefix);

// Collapses every whitespace run to a single ASCII space and trims the ends.
std::string collapse_ws(std::string_view s);

// ---- Files -----------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
std::vector<std::string> read_lines(const std::string& path);

// ---- Hashing ---------------------------------------------------------------

// SHA-256 as a lowercase hex string.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

// ---- Errors ----------------------------------------------------------------

// Data-level failure (bad input file, bad format). The CLI maps these to
// exit status 2.
class DataError : public std::exception {
public:
    explicit DataError(std::string msg) : msg_(std::move(msg)) {}
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

// XML/wikitext parse failure carrying the byte offset in the input.
class ParseError : public DataError {
public:
    ParseError(std::string msg, size_t offset)
        : DataError(std::move(msg)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

}  // namespace corpusforge
