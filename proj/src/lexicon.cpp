#include "corpusforge/lexicon.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace corpusforge {

std::string to_string(LexSource src) {
    return src == LexSource::Link ? "link" : "dict";
}

LexSource lex_source_from_string(const std::string& s) {
    if (s == "link") return LexSource::Link;
    if (s == "dict") return LexSource::Dict;
    throw DataError("unknown lexicon source '" + s + "'");
}

namespace {

const std::vector<std::string>& no_terms() {
    static const std::vector<std::string> empty;
    return empty;
}

void index_insert(std::map<std::string, std::vector<std::string>>& index,
                  const std::string& key, const std::string& value) {
    auto& v = index[key];
    auto it = std::lower_bound(v.begin(), v.end(), value);
    if (it == v.end() || *it != value) v.insert(it, value);
}

bool validate_term(const std::string& term) {
    return !term.empty() && term.find('\t') == std::string::npos &&
           term.find('\n') == std::string::npos && term.find('\r') == std::string::npos;
}

}  // namespace

void BilingualLexicon::add(const std::string& ja, const std::string& es, LexSource src) {
    if (!validate_term(ja) || !validate_term(es))
        throw DataError("lexicon term must be non-empty and contain no tab or newline");
    auto [it, inserted] = entries_.try_emplace({ja, es}, src);
    if (!inserted) {
        if (src == LexSource::Link) it->second = LexSource::Link;
        return;
    }
    index_insert(ja_index_, ja, es);
    index_insert(es_index_, es, ja);
    index_insert(es_lower_index_, lower(es), ja);
}

const std::vector<std::string>& BilingualLexicon::translate_ja(const std::string& ja) const {
    auto it = ja_index_.find(ja);
    return it != ja_index_.end() ? it->second : no_terms();
}

const std::vector<std::string>& BilingualLexicon::translate_es(const std::string& es) const {
    auto it = es_index_.find(es);
    if (it != es_index_.end()) return it->second;
    auto lt = es_lower_index_.find(lower(es));
    return lt != es_lower_index_.end() ? lt->second : no_terms();
}

bool BilingualLexicon::has_ja(const std::string& ja) const {
    return ja_index_.count(ja) > 0;
}

bool BilingualLexicon::has_es(const std::string& es) const {
    return es_index_.count(es) > 0 || es_lower_index_.count(lower(es)) > 0;
}

BilingualLexicon BilingualLexicon::merge(const BilingualLexicon& a, const BilingualLexicon& b) {
    BilingualLexicon out;
    for (const auto& [key, src] : a.entries_) out.add(key.first, key.second, src);
    for (const auto& [key, src] : b.entries_) out.add(key.first, key.second, src);
    return out;
}

void BilingualLexicon::save_tsv(const std::string& path) const {
    std::string out;
    for (const auto& [key, src] : entries_) {
        out += key.first;
        out += '\t';
        out += key.second;
        out += '\t';
        out += to_string(src);
        out += '\n';
    }
    write_file(path, out);
}

BilingualLexicon BilingualLexicon::load_tsv(const std::string& path) {
    BilingualLexicon lex;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 3)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 3 tab-separated columns, got " +
                            std::to_string(cols.size()));
        try {
            lex.add(cols[0], cols[1], lex_source_from_string(cols[2]));
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return lex;
}

std::string strip_disambiguator(const std::string& title) {
    if (title.size() >= 2 && title.back() == ')') {
        size_t p = title.rfind(" (");
        if (p != std::string::npos && p > 0) return title.substr(0, p);
    }
    // Fullwidth variant, common in Japanese titles.
    if (title.size() >= 3 && title.compare(title.size() - 3, 3, "\xEF\xBC\x89") == 0) {
        size_t p = title.rfind("\xEF\xBC\x88");
        if (p != std::string::npos && p > 0)
            return trim(std::string_view(title).substr(0, p));
    }
    return title;
}

LinkLexiconResult build_link_lexicon(const std::vector<CleanArticle>& ja_articles,
                                     const std::vector<CleanArticle>& es_articles,
                                     const RedirectMap& ja_redirects,
                                     const RedirectMap& es_redirects) {
    LinkLexiconResult result;
    std::set<std::pair<std::string, std::string>> pairs;

    auto harvest = [&](const CleanArticle& art, bool ja_side) {
        const RedirectMap& other = ja_side ? es_redirects : ja_redirects;
        const std::string other_lang = ja_side ? "es" : "ja";
        for (const InterlangLink& ll : art.langlinks) {
            if (ll.dst_lang != other_lang) continue;
            if (other.is_cycle_member(ll.dst_title)) {
                ++result.skipped;
                continue;
            }
            const std::string& dst = other.resolve(ll.dst_title);
            if (dst.empty() || other.is_cycle_member(dst)) {
                ++result.skipped;
                continue;
            }
            if (ja_side)
                pairs.insert({art.title, dst});
            else
                pairs.insert({dst, art.title});
        }
    };
    for (const CleanArticle& a : ja_articles) harvest(a, true);
    for (const CleanArticle& a : es_articles) harvest(a, false);

    for (const auto& [ja, es] : pairs) {
        result.title_pairs.push_back({ja, es});
        std::string ja_bare = strip_disambiguator(ja);
        std::string es_bare = strip_disambiguator(es);
        for (const std::string& j : {ja, ja_bare})
            for (const std::string& e : {es, es_bare})
                if (!j.empty() && !e.empty())
                    result.lexicon.add(j, e, LexSource::Link);
    }
    return result;
}

BilingualLexicon load_dictionary(const std::string& path) {
    BilingualLexicon lex;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 2 tab-separated columns, got " +
                            std::to_string(cols.size()));
        std::string ja = nfc(trim(cols[0]));
        std::string es = nfc(trim(cols[1]));
        if (ja.empty() || es.empty())
            throw DataError(path + ":" + std::to_string(lineno) + ": empty term");
        lex.add(ja, es, LexSource::Dict);
    }
    return lex;
}

}  // namespace corpusforge
