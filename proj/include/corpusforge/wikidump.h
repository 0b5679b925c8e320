#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corpusforge/util.h"

namespace corpusforge {

// A page as it appears in a MediaWiki export, title in canonical form.
struct RawPage {
    std::string lang;   // "ja" or "es"
    std::string title;  // NFC, underscores mapped to spaces
    std::string wikitext;
    std::optional<std::string> redirect_target;

    bool is_redirect() const { return redirect_target.has_value(); }
};

struct Hyperlink {
    std::string target;
    std::string anchor;  // defaults to target
};

struct InterlangLink {
    std::string src_lang;
    std::string src_title;
    std::string dst_lang;
    std::string dst_title;
};

// Plain-text view of a page after wikitext stripping.
struct CleanArticle {
    std::string lang;
    std::string title;
    std::string text;
    std::vector<Hyperlink> links;           // document order
    std::vector<size_t> link_offsets;       // byte offset of each anchor in text
    std::vector<InterlangLink> langlinks;
};

// ---- Dump parsing ----------------------------------------------------------

// Streaming reader for MediaWiki export XML. Holds one page at a time.
// The language comes from the root element's xml:lang attribute, or from
// `default_lang` when the attribute is absent.
class DumpReader {
public:
    explicit DumpReader(std::istream& in, std::string default_lang = "");

    // Next page in document order, or nullopt at end of dump.
    // Throws ParseError (with byte offset) on malformed XML.
    std::optional<RawPage> next();

    // Pages dropped so far because they had no <title>.
    size_t skipped() const { return skipped_; }
    // Self-redirects cleared, bad redirect targets, etc.
    size_t warnings() const { return warnings_; }
    const std::string& lang() const { return lang_; }

private:
    class Scanner;
    std::istream& in_;
    std::string lang_;
    size_t skipped_ = 0;
    size_t warnings_ = 0;
    size_t offset_ = 0;
    bool prolog_done_ = false;
    bool done_ = false;
    std::vector<std::string> stack_;

    int get();
    int peek();
    [[noreturn]] void fail(const std::string& msg) const;
    void read_prolog();
    std::string read_name();
    void skip_ws();
    // Reads attributes up to '>' or '/>'; returns true if self-closing.
    bool read_attrs(std::map<std::string, std::string>& attrs);
    std::string read_text_until_close(const std::string& tag);
    void skip_element(const std::string& tag);
    bool skip_misc();  // comments, PIs, doctype; true if something was skipped
};

// Reads the whole dump into memory. Convenience for desk-scale corpora.
struct DumpResult {
    std::vector<RawPage> pages;
    size_t skipped = 0;
    size_t warnings = 0;
};
DumpResult parse_dump(std::istream& in, const std::string& default_lang = "");

// ---- Redirect resolution ---------------------------------------------------

struct RedirectMap {
    // Non-redirect title for every resolvable title, identity for
    // non-redirect pages. Cycle members are absent.
    std::map<std::string, std::string> mapping;
    // Titles on a redirect cycle (or on a chain deeper than the hop cap).
    std::vector<std::string> cycles;
    // Redirect titles whose chain feeds into a cycle; excluded from mapping.
    std::vector<std::string> dead_ends;

    // Maps through the table; titles not present map to themselves.
    const std::string& resolve(const std::string& title) const;
    bool is_cycle_member(const std::string& title) const;
};

inline constexpr int kRedirectHopCap = 16;

RedirectMap resolve_redirects(const std::vector<RawPage>& pages);

// ---- Interlanguage links ---------------------------------------------------

// Inline [[xx:Title]] links where xx is a 2-3 letter lowercase code.
// Order preserved, duplicates dropped, same-language links dropped.
std::vector<InterlangLink> extract_langlinks(const RawPage& page);

// ---- Wikitext stripping ----------------------------------------------------

struct StripResult {
    std::string text;
    std::vector<Hyperlink> links;
    std::vector<size_t> link_offsets;  // anchor start offsets in text
    size_t warnings = 0;               // unbalanced regions dropped
};

// Removes templates, tables, refs, HTML tags, media/category/interlanguage
// links, headings and emphasis markers, and the noise punctuation ()"«»*.
// Internal links become their anchor text and are recorded in order.
StripResult strip_wikitext(std::string_view wikitext);

// strip + langlink extraction for one page.
CleanArticle clean_page(const RawPage& page);

}  // namespace corpusforge
