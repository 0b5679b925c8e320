#include "corpusforge/util.h"

#include <array>
#include <cstring>
#include <fstream>
#include <sstream>

namespace corpusforge {

// ---- UTF-8 -----------------------------------------------------------------

char32_t utf8_decode(std::string_view s, size_t& pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    auto cont = [&](size_t i) {
        return pos + i < s.size() &&
               (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
    };
    auto bits = [&](size_t i) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3F);
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | bits(1);
        pos += 2;
        return cp >= 0x80 ? cp : 0xFFFD;
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) | (bits(1) << 6) | bits(2);
        pos += 3;
        return cp >= 0x800 ? cp : 0xFFFD;
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (bits(1) << 12) |
                      (bits(2) << 6) | bits(3);
        pos += 4;
        return (cp >= 0x10000 && cp <= 0x10FFFF) ? cp : 0xFFFD;
    }
    pos += 1;
    return 0xFFFD;
}

void utf8_encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::vector<char32_t> utf8_codepoints(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    size_t pos = 0;
    while (pos < s.size()) cps.push_back(utf8_decode(s, pos));
    return cps;
}

std::string utf8_from_codepoints(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size() * 3);
    for (char32_t cp : cps) utf8_encode(cp, out);
    return out;
}

size_t utf8_cp_len(std::string_view s, size_t pos) {
    size_t p = pos;
    utf8_decode(s, p);
    return p - pos;
}

// ---- Character classes -----------------------------------------------------

bool is_hiragana(char32_t cp) { return cp >= 0x3041 && cp <= 0x3096; }

bool is_katakana(char32_t cp) {
    // Includes the middle dot and the prolonged sound mark, both of which
    // occur inside katakana words and names.
    return (cp >= 0x30A1 && cp <= 0x30FA) || cp == 0x30FB || cp == 0x30FC;
}

bool is_kanji(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
           cp == 0x3005;  // iteration mark, part of words like 人々
}

bool is_fullwidth_punct(char32_t cp) {
    if (cp == 0x3001 || cp == 0x3002) return true;               // 、。
    if (cp >= 0x3008 && cp <= 0x3011) return true;               // 〈〉《》「」『』【】
    if (cp == 0x3014 || cp == 0x3015 || cp == 0x301C) return true;
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;               // ！＂…／
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;               // ：；？＠
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    return false;
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_fullwidth_digit(char32_t cp) { return cp >= 0xFF10 && cp <= 0xFF19; }

bool is_space_cp(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
           cp == 0x00A0 || cp == 0x3000;
}

bool is_punct_cp(char32_t cp) {
    if (cp < 0x80) return std::ispunct(static_cast<int>(cp)) != 0;
    if (cp == 0x00BF || cp == 0x00A1) return true;  // ¿ ¡
    if (cp == 0x00AB || cp == 0x00BB) return true;  // « »
    if (cp >= 0x2010 && cp <= 0x2027) return true;  // dashes, quotes, ellipsis
    return is_fullwidth_punct(cp);
}

bool is_upper_letter(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return true;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;  // Latin-1 À..Þ
    return false;
}

bool is_lower_letter(char32_t cp) {
    if (cp >= 'a' && cp <= 'z') return true;
    if (cp >= 0xDF && cp <= 0xFF && cp != 0xF7) return true;
    return false;
}

char32_t to_lower_cp(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

std::string lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t pos = 0;
    while (pos < s.size()) utf8_encode(to_lower_cp(utf8_decode(s, pos)), out);
    return out;
}

bool starts_upper(std::string_view s) {
    if (s.empty()) return false;
    size_t pos = 0;
    return is_upper_letter(utf8_decode(s, pos));
}

// ---- Normalization ---------------------------------------------------------

namespace {

// Canonical compositions for the Latin combining marks used by Spanish (and
// its loanwords) plus the kana voicing marks. Anything outside these tables
// passes through unchanged.
char32_t compose(char32_t base, char32_t mark) {
    struct Entry {
        char32_t mark;
        const char* bases;
        const char32_t* composed;
    };
    switch (mark) {
        case 0x0300: {  // grave
            static const char* b = "AEIOUaeiou";
            static const char32_t c[] = {0xC0, 0xC8, 0xCC, 0xD2, 0xD9,
                                         0xE0, 0xE8, 0xEC, 0xF2, 0xF9};
            if (const char* p = (base < 0x80) ? std::strchr(b, static_cast<int>(base)) : nullptr)
                return c[p - b];
            return 0;
        }
        case 0x0301: {  // acute
            static const char* b = "AEIOUYaeiouy";
            static const char32_t c[] = {0xC1, 0xC9, 0xCD, 0xD3, 0xDA, 0xDD,
                                         0xE1, 0xE9, 0xED, 0xF3, 0xFA, 0xFD};
            if (const char* p = (base < 0x80) ? std::strchr(b, static_cast<int>(base)) : nullptr)
                return c[p - b];
            return 0;
        }
        case 0x0302: {  // circumflex
            static const char* b = "AEIOUaeiou";
            static const char32_t c[] = {0xC2, 0xCA, 0xCE, 0xD4, 0xDB,
                                         0xE2, 0xEA, 0xEE, 0xF4, 0xFB};
            if (const char* p = (base < 0x80) ? std::strchr(b, static_cast<int>(base)) : nullptr)
                return c[p - b];
            return 0;
        }
        case 0x0303: {  // tilde
            static const char* b = "ANOano";
            static const char32_t c[] = {0xC3, 0xD1, 0xD5, 0xE3, 0xF1, 0xF5};
            if (const char* p = (base < 0x80) ? std::strchr(b, static_cast<int>(base)) : nullptr)
                return c[p - b];
            return 0;
        }
        case 0x0308: {  // diaeresis
            static const char* b = "AEIOUaeiouy";
            static const char32_t c[] = {0xC4, 0xCB, 0xCF, 0xD6, 0xDC,
                                         0xE4, 0xEB, 0xEF, 0xF6, 0xFC, 0xFF};
            if (const char* p = (base < 0x80) ? std::strchr(b, static_cast<int>(base)) : nullptr)
                return c[p - b];
            return 0;
        }
        case 0x0327: {  // cedilla
            if (base == 'C') return 0xC7;
            if (base == 'c') return 0xE7;
            return 0;
        }
        case 0x3099: {  // dakuten
            static const char32_t voiceable_h[] = {
                0x304B, 0x304D, 0x304F, 0x3051, 0x3053,  // かきくけこ
                0x3055, 0x3057, 0x3059, 0x305B, 0x305D,  // さしすせそ
                0x305F, 0x3061, 0x3064, 0x3066, 0x3068,  // たちつてと
                0x306F, 0x3072, 0x3075, 0x3078, 0x307B,  // はひふへほ
            };
            for (char32_t h : voiceable_h) {
                if (base == h) return base + 1;
                if (base == h + 0x60) return base + 1;  // katakana block
            }
            if (base == 0x3046) return 0x3094;  // う → ゔ
            if (base == 0x30A6) return 0x30F4;  // ウ → ヴ
            return 0;
        }
        case 0x309A: {  // handakuten
            static const char32_t row_h[] = {0x306F, 0x3072, 0x3075, 0x3078, 0x307B};
            for (char32_t h : row_h) {
                if (base == h) return base + 2;
                if (base == h + 0x60) return base + 2;
            }
            return 0;
        }
        default:
            return 0;
    }
}

}  // namespace

std::string nfc(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    size_t pos = 0;
    while (pos < s.size()) {
        char32_t cp = utf8_decode(s, pos);
        if (!out.empty()) {
            char32_t composed = compose(out.back(), cp);
            if (composed != 0) {
                out.back() = composed;
                continue;
            }
        }
        out.push_back(cp);
    }
    return utf8_from_codepoints(out);
}

std::string normalize_title(std::string_view s) {
    std::string t = nfc(s);
    for (char& c : t)
        if (c == '_') c = ' ';
    return collapse_ws(t);
}

// ---- Strings ---------------------------------------------------------------

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

std::string collapse_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t pos = 0;
    bool pending_space = false;
    while (pos < s.size()) {
        size_t prev = pos;
        char32_t cp = utf8_decode(s, pos);
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.append(s.substr(prev, pos - prev));
        }
    }
    return out;
}

// ---- Files -----------------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DataError("write failed: " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::string content = read_file(path);
    std::vector<std::string> lines = split(content, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (std::string& line : lines)
        if (!line.empty() && line.back() == '\r') line.pop_back();
    return lines;
}

// ---- SHA-256 ---------------------------------------------------------------

namespace {

struct Sha256 {
    uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                     0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    uint64_t total = 0;
    std::array<unsigned char, 64> buf{};
    size_t buf_len = 0;

    static uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void block(const unsigned char* p) {
        static const uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (uint32_t(p[i * 4]) << 24) | (uint32_t(p[i * 4 + 1]) << 16) |
                   (uint32_t(p[i * 4 + 2]) << 8) | uint32_t(p[i * 4 + 3]);
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
        uint32_t e = h[4], f = h[5], g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = hh + s1 + ch + k[i] + w[i];
            uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = s0 + maj;
            hh = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const unsigned char* data, size_t len) {
        total += len;
        while (len > 0) {
            size_t n = std::min(len, buf.size() - buf_len);
            std::memcpy(buf.data() + buf_len, data, n);
            buf_len += n;
            data += n;
            len -= n;
            if (buf_len == buf.size()) {
                block(buf.data());
                buf_len = 0;
            }
        }
    }

    std::string final_hex() {
        uint64_t bits = total * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (buf_len != 56) update(&zero, 1);
        unsigned char len_be[8];
        for (int i = 0; i < 8; ++i) len_be[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(len_be, 8);
        static const char* hex = "0123456789abcdef";
        std::string out;
        out.reserve(64);
        for (uint32_t v : h)
            for (int i = 28; i >= 0; i -= 4) out.push_back(hex[(v >> i) & 0xF]);
        return out;
    }
};

}  // namespace

std::string sha256_hex(std::string_view data) {
    Sha256 s;
    s.update(reinterpret_cast<const unsigned char*>(data.data()), data.size());
    return s.final_hex();
}

std::string sha256_file_hex(const std::string& path) {
    return sha256_hex(read_file(path));
}

}  // namespace corpusforge
