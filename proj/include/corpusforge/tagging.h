#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpusforge/util.h"

namespace corpusforge {

enum class Tag : uint8_t {
    Noun, Propn, Verb, Adj, Adv, Pron, Det, Adp, Num, Part, Aux, Punct,
};

std::string to_string(Tag tag);
Tag tag_from_string(const std::string& s);

// Sparse morphological features, e.g. {gender: f, number: pl, copula: yes}.
using Feats = std::map<std::string, std::string>;

std::string feats_to_string(const Feats& feats);  // "k=v;k=v", keys sorted
Feats feats_from_string(const std::string& s);

struct Token {
    std::string surface;
    Tag tag = Tag::Noun;
    Feats feats;

    bool is(Tag t) const { return tag == t; }
    bool has_feat(const std::string& key, const std::string& value) const {
        auto it = feats.find(key);
        return it != feats.end() && it->second == value;
    }
};

struct TaggedSentence {
    std::string lang;
    std::vector<Token> tokens;

    std::string surface() const;  // ja: concatenated; es: space-joined
};

// Extra vocabulary loaded from TSV rows "surface<TAB>TAG[<TAB>k=v;k=v]".
// Seed rows override the built-in word lists on exact surface match.
class SeedLexicon {
public:
    static SeedLexicon load(const std::string& path);
    void add(const std::string& surface, Tag tag, Feats feats);
    const std::map<std::string, std::pair<Tag, Feats>>& items() const { return items_; }
    std::optional<std::pair<Tag, Feats>> find(const std::string& surface) const;
    size_t max_surface_cps() const { return max_cps_; }

private:
    std::map<std::string, std::pair<Tag, Feats>> items_;
    size_t max_cps_ = 0;
};

// Deterministic longest-match segmenter and tagger for Japanese. The same
// input text always yields the same token sequence.
class JaTagger {
public:
    explicit JaTagger(SeedLexicon seed = {});
    TaggedSentence tag(const std::string& sentence) const;

private:
    SeedLexicon seed_;
};

// Whitespace tokenizer plus closed-class lists, a capitalization rule for
// proper nouns (skipping the sentence-initial token) and -o/-a suffix
// heuristics for gender and number.
class EsTagger {
public:
    explicit EsTagger(SeedLexicon seed = {});
    TaggedSentence tag(const std::string& sentence) const;

private:
    SeedLexicon seed_;
};

// Pre-tagged sentences: token rows "surface<TAB>TAG[<TAB>feats]", sentences
// separated by blank lines. Language is inferred per sentence from the
// script unless `lang` is given.
std::vector<TaggedSentence> import_tagged(const std::string& path,
                                          const std::string& lang = "");

}  // namespace corpusforge
