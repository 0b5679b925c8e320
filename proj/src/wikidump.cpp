#include "corpusforge/wikidump.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace corpusforge {

// ---- DumpReader ------------------------------------------------------------

DumpReader::DumpReader(std::istream& in, std::string default_lang)
    : in_(in), lang_(std::move(default_lang)) {}

int DumpReader::get() {
    int c = in_.get();
    if (c != EOF) ++offset_;
    return c;
}

int DumpReader::peek() { return in_.peek(); }

void DumpReader::fail(const std::string& msg) const {
    throw ParseError("dump XML: " + msg + " (byte " + std::to_string(offset_) + ")", offset_);
}

void DumpReader::skip_ws() {
    while (true) {
        int c = peek();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            get();
        else
            break;
    }
}

std::string DumpReader::read_name() {
    std::string name;
    int c = peek();
    while (c != EOF && (std::isalnum(c) || c == '_' || c == ':' || c == '-' || c == '.')) {
        name.push_back(static_cast<char>(get()));
        c = peek();
    }
    if (name.empty()) fail("expected element name");
    return name;
}

namespace {

// XML predefined entities plus numeric references. Unknown names are kept
// literally; dumps in the wild occasionally carry stray ampersands.
void append_decoded_entity(const std::string& ent, std::string& out) {
    if (ent == "lt") out.push_back('<');
    else if (ent == "gt") out.push_back('>');
    else if (ent == "amp") out.push_back('&');
    else if (ent == "quot") out.push_back('"');
    else if (ent == "apos") out.push_back('\'');
    else if (!ent.empty() && ent[0] == '#') {
        char32_t cp = 0;
        bool ok = ent.size() > 1;
        if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
            for (size_t i = 2; i < ent.size() && ok; ++i) {
                int c = std::tolower(static_cast<unsigned char>(ent[i]));
                if (c >= '0' && c <= '9') cp = cp * 16 + static_cast<char32_t>(c - '0');
                else if (c >= 'a' && c <= 'f') cp = cp * 16 + static_cast<char32_t>(c - 'a' + 10);
                else ok = false;
            }
        } else {
            for (size_t i = 1; i < ent.size() && ok; ++i) {
                if (ent[i] >= '0' && ent[i] <= '9') cp = cp * 10 + static_cast<char32_t>(ent[i] - '0');
                else ok = false;
            }
        }
        if (ok && cp > 0 && cp <= 0x10FFFF) utf8_encode(cp, out);
        else { out.push_back('&'); out.append(ent); out.push_back(';'); }
    } else {
        out.push_back('&');
        out.append(ent);
        out.push_back(';');
    }
}

}  // namespace

bool DumpReader::read_attrs(std::map<std::string, std::string>& attrs) {
    while (true) {
        skip_ws();
        int c = peek();
        if (c == EOF) fail("EOF inside tag");
        if (c == '>') { get(); return false; }
        if (c == '/') {
            get();
            if (get() != '>') fail("expected '>' after '/'");
            return true;
        }
        std::string name = read_name();
        skip_ws();
        if (get() != '=') fail("expected '=' in attribute " + name);
        skip_ws();
        int quote = get();
        if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
        std::string value;
        while (true) {
            int ch = get();
            if (ch == EOF) fail("EOF inside attribute value");
            if (ch == quote) break;
            if (ch == '&') {
                std::string ent;
                int e;
                while ((e = get()) != EOF && e != ';' && ent.size() < 12)
                    ent.push_back(static_cast<char>(e));
                if (e != ';') fail("unterminated entity in attribute");
                append_decoded_entity(ent, value);
            } else {
                value.push_back(static_cast<char>(ch));
            }
        }
        attrs[name] = value;
    }
}

bool DumpReader::skip_misc() {
    // Assumes we are positioned right after '<'.
    int c = peek();
    if (c == '?') {
        get();
        int prev = 0;
        while (true) {
            int ch = get();
            if (ch == EOF) fail("EOF inside processing instruction");
            if (prev == '?' && ch == '>') return true;
            prev = ch;
        }
    }
    if (c == '!') {
        get();
        if (peek() == '-') {
            get();
            if (get() != '-') fail("malformed comment");
            int p1 = 0, p2 = 0;
            while (true) {
                int ch = get();
                if (ch == EOF) fail("unterminated comment");
                if (p1 == '-' && p2 == '-' && ch == '>') return true;
                p1 = p2;
                p2 = ch;
            }
        }
        // DOCTYPE and friends: skip to the matching '>'.
        int depth = 1;
        while (depth > 0) {
            int ch = get();
            if (ch == EOF) fail("unterminated declaration");
            if (ch == '<') ++depth;
            if (ch == '>') --depth;
        }
        return true;
    }
    return false;
}

std::string DumpReader::read_text_until_close(const std::string& tag) {
    std::string text;
    while (true) {
        int c = get();
        if (c == EOF) fail("EOF inside <" + tag + ">");
        if (c == '&') {
            std::string ent;
            int e;
            while ((e = get()) != EOF && e != ';' && ent.size() < 12)
                ent.push_back(static_cast<char>(e));
            if (e != ';') fail("unterminated entity");
            append_decoded_entity(ent, text);
            continue;
        }
        if (c != '<') {
            text.push_back(static_cast<char>(c));
            continue;
        }
        int n = peek();
        if (n == '!') {
            // CDATA keeps its content; comments vanish.
            get();
            if (peek() == '[') {
                const char* mark = "[CDATA[";
                for (const char* p = mark; *p; ++p)
                    if (get() != *p) fail("malformed CDATA section");
                int p1 = 0, p2 = 0;
                while (true) {
                    int ch = get();
                    if (ch == EOF) fail("unterminated CDATA");
                    if (p1 == ']' && p2 == ']' && ch == '>') {
                        text.pop_back();
                        text.pop_back();
                        break;
                    }
                    p1 = p2;
                    p2 = ch;
                    text.push_back(static_cast<char>(ch));
                }
                continue;
            }
            if (peek() == '-') {
                get();
                if (get() != '-') fail("malformed comment");
                int p1 = 0, p2 = 0;
                while (true) {
                    int ch = get();
                    if (ch == EOF) fail("unterminated comment");
                    if (p1 == '-' && p2 == '-' && ch == '>') break;
                    p1 = p2;
                    p2 = ch;
                }
                continue;
            }
            fail("unexpected '<!' in text content");
        }
        if (n != '/') fail("unexpected element inside <" + tag + ">");
        get();
        std::string name = read_name();
        skip_ws();
        if (get() != '>') fail("expected '>' in closing tag");
        if (name != tag) fail("mismatched closing tag </" + name + ">, expected </" + tag + ">");
        return text;
    }
}

void DumpReader::skip_element(const std::string& tag) {
    // Consumes everything up to and including the matching close tag.
    std::vector<std::string> stack{tag};
    while (!stack.empty()) {
        int c = get();
        if (c == EOF) fail("EOF inside <" + tag + ">");
        if (c != '<') continue;
        if (skip_misc()) continue;
        if (peek() == '/') {
            get();
            std::string name = read_name();
            skip_ws();
            if (get() != '>') fail("expected '>' in closing tag");
            if (name != stack.back()) fail("mismatched closing tag </" + name + ">");
            stack.pop_back();
            continue;
        }
        std::string name = read_name();
        std::map<std::string, std::string> attrs;
        bool self_closing = read_attrs(attrs);
        if (!self_closing) stack.push_back(name);
    }
}

void DumpReader::read_prolog() {
    while (true) {
        skip_ws();
        int c = get();
        if (c == EOF) fail("empty document");
        if (c != '<') fail("expected '<'");
        if (skip_misc()) continue;
        std::string name = read_name();
        if (name != "mediawiki") fail("root element is <" + name + ">, expected <mediawiki>");
        std::map<std::string, std::string> attrs;
        bool self_closing = read_attrs(attrs);
        if (auto it = attrs.find("xml:lang"); it != attrs.end()) lang_ = it->second;
        if (lang_.empty())
            throw DataError("dump has no xml:lang attribute and no language was given");
        if (lang_ != "ja" && lang_ != "es")
            throw DataError("unsupported dump language '" + lang_ + "' (expected ja or es)");
        if (self_closing) done_ = true;
        prolog_done_ = true;
        return;
    }
}

std::optional<RawPage> DumpReader::next() {
    if (!prolog_done_) read_prolog();
    while (!done_) {
        skip_ws();
        int c = get();
        if (c == EOF) fail("EOF before </mediawiki>");
        if (c != '<') fail("unexpected text outside elements");
        if (skip_misc()) continue;
        if (peek() == '/') {
            get();
            std::string name = read_name();
            skip_ws();
            if (get() != '>') fail("expected '>' in closing tag");
            if (name != "mediawiki") fail("mismatched closing tag </" + name + ">");
            done_ = true;
            break;
        }
        std::string name = read_name();
        std::map<std::string, std::string> attrs;
        bool self_closing = read_attrs(attrs);
        if (self_closing) continue;
        if (name != "page") {
            skip_element(name);
            continue;
        }

        // One <page> element.
        std::string title;
        bool has_title = false;
        std::optional<std::string> redirect;
        std::string wikitext;
        bool page_open = true;
        while (page_open) {
            skip_ws();
            int ch = get();
            if (ch == EOF) fail("EOF inside <page>");
            if (ch != '<') fail("unexpected text inside <page>");
            if (skip_misc()) continue;
            if (peek() == '/') {
                get();
                std::string cname = read_name();
                skip_ws();
                if (get() != '>') fail("expected '>' in closing tag");
                if (cname != "page") fail("mismatched closing tag </" + cname + ">");
                page_open = false;
                break;
            }
            std::string child = read_name();
            std::map<std::string, std::string> cattrs;
            bool child_self_closing = read_attrs(cattrs);
            if (child == "title" && !child_self_closing) {
                title = read_text_until_close("title");
                has_title = true;
            } else if (child == "redirect") {
                if (auto it = cattrs.find("title"); it != cattrs.end()) redirect = it->second;
                if (!child_self_closing) skip_element("redirect");
            } else if (child == "revision" && !child_self_closing) {
                // Take the text of the (last) revision; everything else skipped.
                bool rev_open = true;
                while (rev_open) {
                    skip_ws();
                    int rc = get();
                    if (rc == EOF) fail("EOF inside <revision>");
                    if (rc != '<') fail("unexpected text inside <revision>");
                    if (skip_misc()) continue;
                    if (peek() == '/') {
                        get();
                        std::string rname = read_name();
                        skip_ws();
                        if (get() != '>') fail("expected '>' in closing tag");
                        if (rname != "revision") fail("mismatched closing tag </" + rname + ">");
                        rev_open = false;
                        break;
                    }
                    std::string relem = read_name();
                    std::map<std::string, std::string> rattrs;
                    bool rself = read_attrs(rattrs);
                    if (relem == "text") {
                        wikitext = rself ? std::string() : read_text_until_close("text");
                    } else if (!rself) {
                        skip_element(relem);
                    }
                }
            } else if (!child_self_closing) {
                skip_element(child);
            }
        }

        RawPage page;
        page.lang = lang_;
        page.title = normalize_title(title);
        if (!has_title || page.title.empty()) {
            ++skipped_;
            continue;
        }
        page.wikitext = std::move(wikitext);
        if (redirect) {
            std::string target = normalize_title(*redirect);
            if (target.empty() || target == page.title)
                ++warnings_;  // self-redirect or empty target: keep as ordinary page
            else
                page.redirect_target = target;
        }
        return page;
    }
    return std::nullopt;
}

DumpResult parse_dump(std::istream& in, const std::string& default_lang) {
    DumpReader reader(in, default_lang);
    DumpResult result;
    while (auto page = reader.next()) result.pages.push_back(std::move(*page));
    result.skipped = reader.skipped();
    result.warnings = reader.warnings();
    return result;
}

// ---- Redirect resolution ---------------------------------------------------

const std::string& RedirectMap::resolve(const std::string& title) const {
    auto it = mapping.find(title);
    return it != mapping.end() ? it->second : title;
}

bool RedirectMap::is_cycle_member(const std::string& title) const {
    return std::binary_search(cycles.begin(), cycles.end(), title);
}

RedirectMap resolve_redirects(const std::vector<RawPage>& pages) {
    std::unordered_map<std::string, std::string> target_of;
    std::vector<std::string> titles;
    std::unordered_set<std::string> seen;
    for (const RawPage& p : pages) {
        if (!seen.insert(p.title).second) continue;  // first occurrence wins
        titles.push_back(p.title);
        if (p.redirect_target) target_of[p.title] = *p.redirect_target;
    }
    std::sort(titles.begin(), titles.end());

    enum class St : uint8_t { Unseen, OnPath, Ok, OnCycle, Dead };
    struct Node {
        St st = St::Unseen;
        int depth = 0;  // chain hops to a non-redirect title
        std::string final;
    };
    std::unordered_map<std::string, Node> nodes;
    RedirectMap out;
    std::set<std::string> cycle_set, dead_set;

    for (const std::string& start : titles) {
        if (nodes[start].st != St::Unseen) continue;
        std::vector<std::string> path;
        std::string cur = start;
        // Walk to a terminal, a memoized node, or a repeat on the path.
        std::string base_final;
        int base_depth = -1;  // -1 means the walk ended badly
        while (true) {
            auto t = target_of.find(cur);
            if (t == target_of.end()) {
                base_final = cur;
                base_depth = 0;
                break;
            }
            Node& n = nodes[cur];
            if (n.st == St::Ok) {
                base_final = n.final;
                base_depth = n.depth;
                break;
            }
            if (n.st == St::OnCycle || n.st == St::Dead) break;
            if (n.st == St::OnPath) {
                // True cycle: everything from the first occurrence of cur is
                // on it; the lead-in feeds the cycle.
                auto pos = std::find(path.begin(), path.end(), cur);
                for (auto it = pos; it != path.end(); ++it) {
                    nodes[*it].st = St::OnCycle;
                    cycle_set.insert(*it);
                }
                for (auto it = path.begin(); it != pos; ++it) {
                    nodes[*it].st = St::Dead;
                    dead_set.insert(*it);
                }
                path.clear();
                break;
            }
            n.st = St::OnPath;
            path.push_back(cur);
            cur = t->second;
        }
        // Unwind the remaining path, nearest-to-terminal first.
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            Node& n = nodes[*it];
            if (base_depth < 0) {
                n.st = St::Dead;
                dead_set.insert(*it);
                continue;
            }
            ++base_depth;
            if (base_depth > kRedirectHopCap) {
                n.st = St::OnCycle;  // over-deep chains count as cycles
                cycle_set.insert(*it);
                base_depth = -1;
                continue;
            }
            n.st = St::Ok;
            n.final = base_final;
            n.depth = base_depth;
        }
    }

    for (const std::string& t : titles) {
        auto it = nodes.find(t);
        if (it != nodes.end() && it->second.st == St::Ok)
            out.mapping[t] = it->second.final;
        else if (it == nodes.end() || it->second.st == St::Unseen)
            out.mapping[t] = t;  // non-redirect page: identity
    }
    out.cycles.assign(cycle_set.begin(), cycle_set.end());
    out.dead_ends.assign(dead_set.begin(), dead_set.end());
    return out;
}

// ---- Interlanguage links ---------------------------------------------------

namespace {

bool is_lang_code(std::string_view s) {
    if (s.size() < 2 || s.size() > 3) return false;
    for (char c : s)
        if (c < 'a' || c > 'z') return false;
    return true;
}

}  // namespace

std::vector<InterlangLink> extract_langlinks(const RawPage& page) {
    std::vector<InterlangLink> links;
    std::set<std::pair<std::string, std::string>> seen;
    const std::string& w = page.wikitext;
    size_t i = 0;
    while (i + 1 < w.size()) {
        if (w[i] != '[' || w[i + 1] != '[') {
            ++i;
            continue;
        }
        size_t close = w.find("]]", i + 2);
        if (close == std::string::npos) break;
        std::string_view inner(w.data() + i + 2, close - i - 2);
        i = close + 2;
        if (inner.find('|') != std::string_view::npos) continue;  // visible link
        if (!inner.empty() && inner.front() == ':') continue;     // inline form
        size_t colon = inner.find(':');
        if (colon == std::string_view::npos) continue;
        std::string_view code = inner.substr(0, colon);
        if (!is_lang_code(code)) continue;
        std::string dst_title = normalize_title(inner.substr(colon + 1));
        if (dst_title.empty()) continue;
        std::string dst_lang(code);
        if (dst_lang == page.lang) continue;
        if (!seen.insert({dst_lang, dst_title}).second) continue;
        links.push_back({page.lang, page.title, dst_lang, dst_title});
    }
    return links;
}

// ---- Wikitext stripping ----------------------------------------------------

namespace {

const std::set<std::string>& media_namespaces() {
    static const std::set<std::string> ns = {"file",    "image", "archivo", "imagen",
                                             "media",   "ファイル", "画像"};
    return ns;
}

const std::set<std::string>& category_namespaces() {
    static const std::set<std::string> ns = {"category", "categoría", "categoria", "カテゴリ"};
    return ns;
}

// Characters that never survive into clean text. Brackets, braces, angle
// brackets and '=' are markup carriers; removing them everywhere is what
// makes stripping a fixed point.
bool is_noise_cp(char32_t cp) {
    switch (cp) {
        case '(': case ')': case '"': case '*':
        case '<': case '>': case '[': case ']': case '{': case '}': case '=':
        case 0x00AB: case 0x00BB:            // « »
        case 0x201C: case 0x201D:            // “ ”
        case 0xFF08: case 0xFF09:            // （ ）
            return true;
        default:
            return false;
    }
}

struct Emitter {
    std::string text;
    bool pending_space = false;

    void space() {
        if (!text.empty()) pending_space = true;
    }

    void put(char32_t cp) {
        if (is_space_cp(cp)) {
            space();
            return;
        }
        if (is_noise_cp(cp)) return;
        // Never emit '' or ---- ; a second pass would treat them as markup.
        if (cp == '\'' && !pending_space && !text.empty() && text.back() == '\'') return;
        if (cp == '-' && !pending_space && text.size() >= 3 &&
            text.compare(text.size() - 3, 3, "---") == 0)
            return;
        if (pending_space) {
            text.push_back(' ');
            pending_space = false;
        }
        utf8_encode(cp, text);
    }

    void put_str(std::string_view s) {
        size_t p = 0;
        while (p < s.size()) {
            if (s.compare(p, 6, "&nbsp;") == 0 || s.compare(p, 6, "&#160;") == 0) {
                space();
                p += 6;
                continue;
            }
            put(utf8_decode(s, p));
        }
    }
};

// Longest run of `c` starting at i.
size_t run_len(std::string_view s, size_t i, char c) {
    size_t n = 0;
    while (i + n < s.size() && s[i + n] == c) ++n;
    return n;
}

bool has_url_scheme(std::string_view s, size_t i) {
    for (std::string_view scheme : {"http://", "https://", "ftp://", "//"})
        if (s.substr(i).substr(0, scheme.size()) == scheme) return true;
    return false;
}

// The pipe trick: [[Foo (bar)|]] renders as "Foo".
std::string pipe_trick(std::string_view target) {
    std::string t = trim(target);
    size_t paren = t.find(" (");
    if (paren != std::string::npos) t = t.substr(0, paren);
    size_t colon = t.find(':');
    if (colon != std::string::npos) t = t.substr(colon + 1);
    return trim(t);
}

}  // namespace

StripResult strip_wikitext(std::string_view w) {
    StripResult res;
    Emitter out;
    size_t i = 0;
    bool line_start = true;

    auto skip_template = [&](void) {
        // At i pointing at "{{". Consumes the balanced region; on imbalance
        // drops the remainder of the input.
        int depth = 0;
        while (i < w.size()) {
            if (w[i] == '{') {
                size_t n = run_len(w, i, '{');
                depth += static_cast<int>(n / 2);
                i += n;
            } else if (w[i] == '}') {
                size_t n = run_len(w, i, '}');
                int closes = static_cast<int>(n / 2);
                if (closes >= depth) {
                    i += static_cast<size_t>(depth) * 2;
                    depth = 0;
                    return;
                }
                depth -= closes;
                i += n;
            } else {
                ++i;
            }
        }
        ++res.warnings;  // unbalanced: remainder dropped
    };

    auto skip_table = [&](void) {
        // At i pointing at "{|".
        int depth = 0;
        while (i < w.size()) {
            if (i + 1 < w.size() && w[i] == '{' && w[i + 1] == '|') {
                ++depth;
                i += 2;
                continue;
            }
            if (i + 1 < w.size() && w[i] == '|' && w[i + 1] == '}') {
                i += 2;
                if (--depth == 0) return;
                continue;
            }
            ++i;
        }
        ++res.warnings;
    };

    while (i < w.size()) {
        char c = w[i];

        if (line_start) {
            line_start = false;
            // List and indent markers, and horizontal rules.
            if (c == '*' || c == '#' || c == ';' || c == ':') {
                size_t j = i;
                while (j < w.size() && (w[j] == '*' || w[j] == '#' || w[j] == ';' ||
                                        w[j] == ':' || w[j] == ' '))
                    ++j;
                i = j;
                continue;
            }
            if (run_len(w, i, '-') >= 4) {
                i += run_len(w, i, '-');
                continue;
            }
        }

        if (c == '\n') {
            out.space();
            line_start = true;
            ++i;
            continue;
        }

        if (c == '{' && i + 1 < w.size() && w[i + 1] == '{') {
            skip_template();
            continue;
        }
        if (c == '{' && i + 1 < w.size() && w[i + 1] == '|') {
            skip_table();
            continue;
        }

        if (c == '<') {
            if (w.substr(i).substr(0, 4) == "<!--") {
                size_t end = w.find("-->", i + 4);
                if (end == std::string_view::npos) {
                    i = w.size();
                    ++res.warnings;
                } else {
                    i = end + 3;
                }
                continue;
            }
            size_t j = i + 1;
            bool closing = j < w.size() && w[j] == '/';
            if (closing) ++j;
            size_t name_start = j;
            while (j < w.size() && (std::isalnum(static_cast<unsigned char>(w[j])) || w[j] == '-'))
                ++j;
            if (j == name_start) {
                // Bare '<' is noise punctuation, dropped by the emitter.
                out.put('<');
                ++i;
                continue;
            }
            std::string name = lower(w.substr(name_start, j - name_start));
            size_t gt = w.find('>', j);
            if (gt == std::string_view::npos) {
                i = w.size();
                ++res.warnings;
                continue;
            }
            bool self_closing = gt > 0 && w[gt - 1] == '/';
            i = gt + 1;
            if (name == "ref" && !closing && !self_closing) {
                // Citations go away together with their content.
                size_t end = i;
                size_t close_at = std::string_view::npos;
                while (end < w.size()) {
                    size_t lt = w.find("</", end);
                    if (lt == std::string_view::npos) break;
                    size_t k = lt + 2;
                    size_t ns = k;
                    while (k < w.size() && std::isalnum(static_cast<unsigned char>(w[k]))) ++k;
                    if (lower(w.substr(ns, k - ns)) == "ref") {
                        size_t g = w.find('>', k);
                        close_at = (g == std::string_view::npos) ? std::string_view::npos : g + 1;
                        break;
                    }
                    end = lt + 2;
                }
                if (close_at == std::string_view::npos) {
                    i = w.size();
                    ++res.warnings;
                } else {
                    i = close_at;
                }
            }
            // Any other tag: markup dropped, inner text kept.
            continue;
        }

        if (c == '[' && i + 1 < w.size() && w[i + 1] == '[') {
            // Internal link; file captions may nest more links.
            size_t j = i + 2;
            int depth = 1;
            while (j < w.size() && depth > 0) {
                if (j + 1 < w.size() && w[j] == '[' && w[j + 1] == '[') {
                    ++depth;
                    j += 2;
                } else if (j + 1 < w.size() && w[j] == ']' && w[j + 1] == ']') {
                    --depth;
                    j += 2;
                } else {
                    ++j;
                }
            }
            if (depth > 0) {
                ++res.warnings;  // unclosed: marker dropped, content kept
                i += 2;
                continue;
            }
            std::string_view inner = w.substr(i + 2, j - (i + 2) - 2);
            i = j;

            bool leading_colon = !inner.empty() && inner.front() == ':';
            if (leading_colon) inner.remove_prefix(1);
            size_t pipe = inner.find('|');
            std::string_view target_part = pipe == std::string_view::npos ? inner : inner.substr(0, pipe);
            std::string_view after_pipe =
                pipe == std::string_view::npos ? std::string_view() : inner.substr(pipe + 1);

            size_t colon = target_part.find(':');
            std::string prefix =
                colon == std::string_view::npos ? "" : lower(trim(target_part.substr(0, colon)));

            if (!prefix.empty() && media_namespaces().count(prefix)) continue;
            if (!prefix.empty() && category_namespaces().count(prefix)) continue;
            if (!prefix.empty() && is_lang_code(prefix)) {
                if (pipe == std::string_view::npos && !leading_colon) continue;  // langlink
                // Visible interwiki link: text only, not an article link.
                out.put_str(pipe == std::string_view::npos ? target_part : after_pipe);
                continue;
            }

            // Section part never reaches the target title.
            size_t hash = target_part.find('#');
            std::string target = normalize_title(
                hash == std::string_view::npos ? target_part : target_part.substr(0, hash));
            std::string display;
            if (pipe == std::string_view::npos) {
                display = std::string(inner);
                for (char& ch : display)
                    if (ch == '_') ch = ' ';
            } else if (trim(after_pipe).empty()) {
                display = pipe_trick(target_part);
            } else {
                display = std::string(after_pipe);
            }
            if (target.empty()) {  // pure section link: text only
                out.put_str(display);
                continue;
            }
            size_t before_size = out.text.size();
            out.put_str(display);
            if (out.text.size() > before_size) {
                // Growth implies a visible character; a flushed space may
                // precede the anchor itself.
                size_t anchor_start = before_size;
                if (out.text[anchor_start] == ' ') ++anchor_start;
                res.links.push_back({target, out.text.substr(anchor_start)});
                res.link_offsets.push_back(anchor_start);
            }
            continue;
        }

        if (c == '[' && has_url_scheme(w, i + 1)) {
            size_t close = w.find(']', i + 1);
            if (close == std::string_view::npos) {
                ++res.warnings;
                ++i;
                continue;
            }
            std::string_view body = w.substr(i + 1, close - (i + 1));
            size_t sp = body.find(' ');
            if (sp != std::string_view::npos) out.put_str(body.substr(sp + 1));
            i = close + 1;
            continue;
        }

        if (c == '\'' && run_len(w, i, '\'') >= 2) {
            i += run_len(w, i, '\'');
            continue;
        }

        if (c == '&') {
            // Only the space entity is decoded here; the XML layer already
            // handled real escaping, and anything else stays literal text.
            if (w.compare(i, 6, "&nbsp;") == 0 || w.compare(i, 6, "&#160;") == 0) {
                out.space();
                i += 6;
                continue;
            }
        }

        out.put(utf8_decode(w, i));
    }

    res.text = std::move(out.text);
    // Leading list punctuation would read as markup on a second pass.
    size_t cut = 0;
    while (cut < res.text.size() &&
           (res.text[cut] == ':' || res.text[cut] == ';' || res.text[cut] == '#' ||
            res.text[cut] == ' '))
        ++cut;
    if (cut > 0) {
        res.text.erase(0, cut);
        for (size_t k = 0; k < res.link_offsets.size(); ++k)
            res.link_offsets[k] = res.link_offsets[k] >= cut ? res.link_offsets[k] - cut : 0;
    }
    return res;
}

CleanArticle clean_page(const RawPage& page) {
    StripResult stripped = strip_wikitext(page.wikitext);
    CleanArticle art;
    art.lang = page.lang;
    art.title = page.title;
    art.text = std::move(stripped.text);
    art.links = std::move(stripped.links);
    art.link_offsets = std::move(stripped.link_offsets);
    art.langlinks = extract_langlinks(page);
    return art;
}

}  // namespace corpusforge
