#include "corpusforge/util.h"

#include <random>

#include "doctest.h"

using namespace corpusforge;

TEST_CASE("utf8 encode/decode round-trips every valid codepoint shape") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        char32_t cp;
        switch (i % 4) {
            case 0: cp = static_cast<char32_t>(rng() % 0x80); break;
            case 1: cp = static_cast<char32_t>(0x80 + rng() % (0x800 - 0x80)); break;
            case 2:
                do cp = static_cast<char32_t>(0x800 + rng() % (0x10000 - 0x800));
                while (cp >= 0xD800 && cp <= 0xDFFF);
                break;
            default: cp = static_cast<char32_t>(0x10000 + rng() % (0x110000 - 0x10000)); break;
        }
        std::string buf;
        utf8_encode(cp, buf);
        size_t pos = 0;
        CHECK(utf8_decode(buf, pos) == cp);
        CHECK(pos == buf.size());
    }
}

TEST_CASE("utf8 decode replaces invalid bytes and advances one byte") {
    std::string bad = "\x80\xFFok";
    size_t pos = 0;
    CHECK(utf8_decode(bad, pos) == 0xFFFD);
    CHECK(pos == 1);
    CHECK(utf8_decode(bad, pos) == 0xFFFD);
    CHECK(pos == 2);
    CHECK(utf8_decode(bad, pos) == 'o');
}

TEST_CASE("utf8 decode rejects truncated multi-byte sequences") {
    std::string truncated = "\xE3\x81";  // first two bytes of a kana
    size_t pos = 0;
    CHECK(utf8_decode(truncated, pos) == 0xFFFD);
    CHECK(pos == 1);
}

TEST_CASE("character classes cover the scripts the taggers rely on") {
    CHECK(is_hiragana(U'あ'));
    CHECK(!is_hiragana(U'ア'));
    CHECK(is_katakana(U'ア'));
    CHECK(is_katakana(U'ー'));   // prolonged sound mark joins katakana runs
    CHECK(is_katakana(U'・'));   // name separator joins katakana runs
    CHECK(is_kanji(U'水'));
    CHECK(!is_kanji(U'あ'));
    CHECK(is_fullwidth_punct(U'。'));
    CHECK(is_space_cp(U'　'));
    CHECK(is_upper_letter(U'A'));
    CHECK(is_upper_letter(U'É'));
    CHECK(!is_upper_letter(U'×'));  // multiplication sign sits inside Latin-1 uppercase range
    CHECK(is_lower_letter(U'ñ'));
}

TEST_CASE("lower folds ASCII and Latin-1, leaves other scripts alone") {
    CHECK(lower("CASA") == "casa");
    CHECK(lower("Él") == "él");
    CHECK(lower("AÑO") == "año");
    CHECK(lower("東京ABC") == "東京abc");
}

TEST_CASE("nfc composes combining marks and passes precomposed text through") {
    CHECK(nfc("e\xCC\x81") == "é");          // e + combining acute
    CHECK(nfc("n\xCC\x83") == "ñ");          // n + combining tilde
    CHECK(nfc("\xE3\x81\x8B\xE3\x82\x99") == "が");  // か + combining dakuten
    CHECK(nfc("は\xE3\x82\x9A") == "ぱ");            // は + combining handakuten
    CHECK(nfc("Economía") == "Economía");
    CHECK(nfc("音楽") == "音楽");
}

TEST_CASE("normalize_title maps underscores and collapses whitespace") {
    CHECK(normalize_title("Albert_Einstein") == "Albert Einstein");
    CHECK(normalize_title("  A.  Einstein ") == "A. Einstein");
    CHECK(normalize_title("Economi\xCC\x81" "a") == "Economía");
    CHECK(normalize_title("tokio") == "tokio");  // first-letter case preserved
}

TEST_CASE("string helpers") {
    CHECK(trim("  x \t") == "x");
    CHECK(trim("") == "");
    CHECK(split("a\tb\t\tc", '\t') == std::vector<std::string>{"a", "b", "", "c"});
    CHECK(split("", '\t') == std::vector<std::string>{""});
    CHECK(starts_with("alignment", "align"));
    CHECK(!starts_with("al", "align"));
    CHECK(collapse_ws(" a \n b\t\tc ") == "a b c");
}

TEST_CASE("sha256 matches published test vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    // One input crossing several 64-byte blocks.
    CHECK(sha256_hex(std::string(1000000, 'a')) ==
          "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}
