#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corpusforge/util.h"
#include "corpusforge/wikidump.h"

namespace corpusforge {

// Where a translation pair came from. Interlanguage links outrank an external
// dictionary when both supply the same pair.
enum class LexSource : uint8_t { Link, Dict };

std::string to_string(LexSource src);
LexSource lex_source_from_string(const std::string& s);

// Many-to-many Japanese/Spanish term pairs with per-pair provenance.
// Entries are keyed by (ja, es) so iteration order and the TSV serialization
// are canonical.
class BilingualLexicon {
public:
    using Key = std::pair<std::string, std::string>;

    // Inserts one pair; a Link entry wins over a Dict entry for the same key.
    void add(const std::string& ja, const std::string& es, LexSource src);

    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<Key, LexSource>& entries() const { return entries_; }

    // Spanish terms for a Japanese term, sorted; empty when unknown.
    const std::vector<std::string>& translate_ja(const std::string& ja) const;
    // Japanese terms for a Spanish term; falls back to a case-folded lookup
    // so sentence-initial capitalization still finds lowercase entries.
    const std::vector<std::string>& translate_es(const std::string& es) const;

    bool has_ja(const std::string& ja) const;
    bool has_es(const std::string& es) const;

    // Union of two lexica, Link entries preferred on collisions.
    static BilingualLexicon merge(const BilingualLexicon& a, const BilingualLexicon& b);

    // TSV: "ja<TAB>es<TAB>source" per line, sorted by (ja, es); load(save(x))
    // reproduces the file byte for byte.
    void save_tsv(const std::string& path) const;
    static BilingualLexicon load_tsv(const std::string& path);

private:
    std::map<Key, LexSource> entries_;
    std::map<std::string, std::vector<std::string>> ja_index_;
    std::map<std::string, std::vector<std::string>> es_index_;
    std::map<std::string, std::vector<std::string>> es_lower_index_;
};

// "東京 (映画)" -> "東京"; returns the input when there is no trailing
// parenthesized qualifier.
std::string strip_disambiguator(const std::string& title);

struct LinkLexiconResult {
    BilingualLexicon lexicon;
    // Canonical (ja_title, es_title) pairs after redirect resolution, sorted
    // and deduplicated; input for the article pairing stage.
    std::vector<std::pair<std::string, std::string>> title_pairs;
    size_t skipped = 0;  // langlinks dropped: cycles, empty or self targets
};

// Harvests ja<->es interlanguage links from both sides, resolves targets
// through the opposite side's redirects, and turns title pairs into lexicon
// entries (plus disambiguator-stripped variants).
LinkLexiconResult build_link_lexicon(const std::vector<CleanArticle>& ja_articles,
                                     const std::vector<CleanArticle>& es_articles,
                                     const RedirectMap& ja_redirects,
                                     const RedirectMap& es_redirects);

// External dictionary TSV: "ja<TAB>es" per line, '#' comments and blank lines
// skipped. Throws DataError with a line number on malformed rows.
BilingualLexicon load_dictionary(const std::string& path);

}  // namespace corpusforge
