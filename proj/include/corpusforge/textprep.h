#pragma once

#include <set>
#include <string>
#include <vector>

#include "corpusforge/wikidump.h"

namespace corpusforge {

// One sentence cut out of an article, with the hyperlinks whose anchors fall
// inside it.
struct SentenceRecord {
    std::string lang;
    std::string article;
    size_t index = 0;  // position within the article, 0-based
    std::string text;
    std::vector<Hyperlink> links;
};

// Half-open byte range [begin, end) into the article text.
struct SentenceSpan {
    std::string text;
    size_t begin = 0;
    size_t end = 0;
};

// Splits clean article text. Japanese splits after 。！？ unconditionally;
// Spanish guards abbreviations, initials and decimal points.
std::vector<SentenceSpan> split_sentences(const std::string& text, const std::string& lang);

// Sentences of an article with links assigned by anchor offset.
std::vector<SentenceRecord> sentence_records(const CleanArticle& article);

// Surface forms excluded from lexical overlap. Matching is case-insensitive
// for Spanish and exact for Japanese; both go through the same folded lookup.
class StopwordList {
public:
    static StopwordList load(const std::string& path);
    static StopwordList builtin_ja();
    static StopwordList builtin_es();

    bool contains(const std::string& surface) const;
    size_t size() const { return words_.size(); }

private:
    std::set<std::string> words_;  // case-folded
};

}  // namespace corpusforge
