#include "corpusforge/textprep.h"

#include <algorithm>

#include "corpusforge/util.h"

namespace corpusforge {

namespace {

bool is_ja_terminal(char32_t cp) {
    return cp == 0x3002 || cp == 0xFF01 || cp == 0xFF1F || cp == '!' || cp == '?';
}

// Word ending right before byte position `pos`, lowercased.
std::string word_before(const std::string& text, size_t pos) {
    size_t start = pos;
    while (start > 0) {
        size_t prev = start - 1;
        while (prev > 0 && (static_cast<unsigned char>(text[prev]) & 0xC0) == 0x80) --prev;
        size_t tmp = prev;
        char32_t cp = utf8_decode(text, tmp);
        if (is_space_cp(cp) || is_punct_cp(cp)) break;
        start = prev;
    }
    return lower(std::string_view(text).substr(start, pos - start));
}

const std::set<std::string>& es_abbreviations() {
    static const std::set<std::string> abbr = {
        "sr",  "sra", "srta", "dr",  "dra", "prof", "lic", "etc", "núm",
        "num", "pág", "pag",  "art", "av",  "gral", "ud",  "uds", "vol"};
    return abbr;
}

bool is_ascii_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<SentenceSpan> finish_spans(const std::string& text,
                                       const std::vector<std::pair<size_t, size_t>>& raw) {
    std::vector<SentenceSpan> spans;
    for (auto [b, e] : raw) {
        while (b < e && is_ascii_ws(text[b])) ++b;
        while (e > b && is_ascii_ws(text[e - 1])) --e;
        if (b == e) continue;
        spans.push_back({text.substr(b, e - b), b, e});
    }
    return spans;
}

}  // namespace

std::vector<SentenceSpan> split_sentences(const std::string& text, const std::string& lang) {
    std::vector<std::pair<size_t, size_t>> raw;
    size_t begin = 0;
    size_t i = 0;

    if (lang == "ja") {
        while (i < text.size()) {
            char32_t cp = utf8_decode(text, i);
            if (is_ja_terminal(cp)) {
                raw.push_back({begin, i});
                begin = i;
            }
        }
    } else {
        while (i < text.size()) {
            size_t at = i;
            char32_t cp = utf8_decode(text, i);
            if (cp == '!' || cp == '?' || cp == 0x2026) {
                raw.push_back({begin, i});
                begin = i;
                continue;
            }
            if (cp != '.') continue;
            char next = i < text.size() ? text[i] : '\0';
            // Decimal point: digit on both sides.
            if (at > 0 && text[at - 1] >= '0' && text[at - 1] <= '9' && next >= '0' &&
                next <= '9')
                continue;
            std::string before = word_before(text, at);
            if (es_abbreviations().count(before)) continue;
            // Lone capital before the period reads as an initial: "J. García".
            if (utf8_codepoints(before).size() == 1 &&
                starts_upper(std::string_view(text).substr(at - before.size())))
                continue;
            // Split when the next visible character opens a sentence.
            size_t j = i;
            char32_t follow = 0;
            while (j < text.size()) {
                char32_t c2 = utf8_decode(text, j);
                if (!is_space_cp(c2)) {
                    follow = c2;
                    break;
                }
            }
            if (follow == 0 || is_upper_letter(follow) || follow == 0x00BF || follow == 0x00A1 ||
                is_ascii_digit(follow) || follow == 0x00AB) {
                raw.push_back({begin, i});
                begin = i;
            }
        }
    }
    if (begin < text.size()) raw.push_back({begin, text.size()});
    return finish_spans(text, raw);
}

std::vector<SentenceRecord> sentence_records(const CleanArticle& article) {
    std::vector<SentenceSpan> spans = split_sentences(article.text, article.lang);
    std::vector<SentenceRecord> records;
    records.reserve(spans.size());
    for (size_t s = 0; s < spans.size(); ++s) {
        SentenceRecord rec;
        rec.lang = article.lang;
        rec.article = article.title;
        rec.index = s;
        rec.text = spans[s].text;
        for (size_t k = 0; k < article.links.size(); ++k) {
            size_t off = k < article.link_offsets.size() ? article.link_offsets[k] : 0;
            if (off >= spans[s].begin && off < spans[s].end) rec.links.push_back(article.links[k]);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

StopwordList StopwordList::load(const std::string& path) {
    StopwordList list;
    for (const std::string& line : read_lines(path)) {
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        list.words_.insert(lower(body));
    }
    return list;
}

StopwordList StopwordList::builtin_ja() {
    StopwordList list;
    for (const char* w : {"こと", "もの", "ため", "よう", "これ", "それ", "あれ"})
        list.words_.insert(w);
    return list;
}

StopwordList StopwordList::builtin_es() {
    StopwordList list;
    for (const char* w : {"el", "la", "los", "las", "un", "una", "unos", "unas", "de", "del",
                          "al", "a", "en", "y", "o", "que", "es", "son", "se", "su", "por",
                          "con", "para", "como", "más", "no"})
        list.words_.insert(w);
    return list;
}

bool StopwordList::contains(const std::string& surface) const {
    return words_.count(lower(surface)) > 0;
}

}  // namespace corpusforge
