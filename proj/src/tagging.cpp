#include "corpusforge/tagging.h"

#include <algorithm>
#include <array>

namespace corpusforge {

namespace {

const std::array<std::pair<Tag, const char*>, 12> kTagNames = {{
    {Tag::Noun, "NOUN"}, {Tag::Propn, "PROPN"}, {Tag::Verb, "VERB"},
    {Tag::Adj, "ADJ"},   {Tag::Adv, "ADV"},     {Tag::Pron, "PRON"},
    {Tag::Det, "DET"},   {Tag::Adp, "ADP"},     {Tag::Num, "NUM"},
    {Tag::Part, "PART"}, {Tag::Aux, "AUX"},     {Tag::Punct, "PUNCT"},
}};

}  // namespace

std::string to_string(Tag tag) {
    for (const auto& [t, name] : kTagNames)
        if (t == tag) return name;
    return "NOUN";
}

Tag tag_from_string(const std::string& s) {
    for (const auto& [t, name] : kTagNames)
        if (s == name) return t;
    throw DataError("unknown tag '" + s + "'");
}

std::string feats_to_string(const Feats& feats) {
    std::string out;
    for (const auto& [k, v] : feats) {
        if (!out.empty()) out += ';';
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

Feats feats_from_string(const std::string& s) {
    Feats feats;
    if (s.empty()) return feats;
    for (const std::string& item : split(s, ';')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= item.size())
            throw DataError("malformed feature '" + item + "' (want key=value)");
        feats[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return feats;
}

std::string TaggedSentence::surface() const {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (lang != "ja" && i > 0) out += ' ';
        out += tokens[i].surface;
    }
    return out;
}

// ---- SeedLexicon -------------------------------------------------------

void SeedLexicon::add(const std::string& surface, Tag tag, Feats feats) {
    if (surface.empty()) throw DataError("seed lexicon surface must be non-empty");
    items_[surface] = {tag, std::move(feats)};
    max_cps_ = std::max(max_cps_, utf8_codepoints(surface).size());
}

std::optional<std::pair<Tag, Feats>> SeedLexicon::find(const std::string& surface) const {
    auto it = items_.find(surface);
    if (it == items_.end()) return std::nullopt;
    return it->second;
}

SeedLexicon SeedLexicon::load(const std::string& path) {
    SeedLexicon seed;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2 && cols.size() != 3)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 2 or 3 tab-separated columns");
        try {
            seed.add(nfc(trim(cols[0])), tag_from_string(trim(cols[1])),
                     cols.size() == 3 ? feats_from_string(trim(cols[2])) : Feats{});
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return seed;
}

// ---- Japanese tagger -----------------------------------------------------

namespace {

struct JaBuiltin {
    std::map<std::string, std::pair<Tag, Feats>> items;
    size_t max_cps = 0;

    void add(const char* surface, Tag tag, Feats feats = {}) {
        items[surface] = {tag, std::move(feats)};
        max_cps = std::max(max_cps, utf8_codepoints(surface).size());
    }
};

const JaBuiltin& ja_builtin() {
    static const JaBuiltin b = [] {
        JaBuiltin b;
        for (const char* p : {"は", "が", "を", "に", "の", "と", "も", "か"})
            b.add(p, Tag::Part);
        Feats cop{{"copula", "yes"}};
        for (const char* c : {"です", "でした", "だ", "だった"}) b.add(c, Tag::Aux, cop);
        for (const char* a : {"ます", "ました"}) b.add(a, Tag::Aux);
        for (const char* p : {"私", "わたし", "僕", "ぼく", "彼", "彼女", "あなた", "これ",
                              "それ", "あれ", "どれ", "ここ", "そこ"})
            b.add(p, Tag::Pron);
        for (const char* a : {"とても", "すぐ", "もっと", "まだ", "よく"}) b.add(a, Tag::Adv);
        return b;
    }();
    return b;
}

bool ends_with_cps(const std::vector<char32_t>& cps, std::u32string_view suffix) {
    if (cps.size() < suffix.size()) return false;
    for (size_t i = 0; i < suffix.size(); ++i)
        if (cps[cps.size() - suffix.size() + i] != suffix[i]) return false;
    return true;
}

}  // namespace

JaTagger::JaTagger(SeedLexicon seed) : seed_(std::move(seed)) {}

TaggedSentence JaTagger::tag(const std::string& sentence) const {
    const JaBuiltin& builtin = ja_builtin();
    std::vector<char32_t> cps = utf8_codepoints(sentence);
    size_t max_len = std::max(builtin.max_cps, seed_.max_surface_cps());

    // Longest dictionary surface starting at position i; 0 when none.
    auto dict_match = [&](size_t i, std::pair<Tag, Feats>* out) -> size_t {
        size_t limit = std::min(max_len, cps.size() - i);
        for (size_t len = limit; len >= 1; --len) {
            std::string cand;
            for (size_t k = 0; k < len; ++k) utf8_encode(cps[i + k], cand);
            if (auto hit = seed_.find(cand)) {
                if (out) *out = *hit;
                return len;
            }
            auto it = builtin.items.find(cand);
            if (it != builtin.items.end()) {
                if (out) *out = it->second;
                return len;
            }
        }
        return 0;
    };

    TaggedSentence result;
    result.lang = "ja";
    size_t i = 0;
    while (i < cps.size()) {
        char32_t cp = cps[i];
        if (is_space_cp(cp)) {
            ++i;
            continue;
        }
        std::pair<Tag, Feats> hit;
        if (size_t len = dict_match(i, &hit); len > 0) {
            std::string surface;
            for (size_t k = 0; k < len; ++k) utf8_encode(cps[i + k], surface);
            result.tokens.push_back({surface, hit.first, hit.second});
            i += len;
            continue;
        }
        if (is_punct_cp(cp) || is_fullwidth_punct(cp)) {
            std::string surface;
            utf8_encode(cp, surface);
            result.tokens.push_back({surface, Tag::Punct, {}});
            ++i;
            continue;
        }

        // Class run; dictionary entries interrupt it.
        auto take_run = [&](auto pred) {
            std::vector<char32_t> run{cps[i]};
            ++i;
            while (i < cps.size() && pred(cps[i]) && dict_match(i, nullptr) == 0) {
                run.push_back(cps[i]);
                ++i;
            }
            return run;
        };

        std::vector<char32_t> run;
        Tag tag = Tag::Noun;
        if (is_ascii_digit(cp) || is_fullwidth_digit(cp)) {
            run = take_run([](char32_t c) { return is_ascii_digit(c) || is_fullwidth_digit(c); });
            tag = Tag::Num;
        } else if (is_katakana(cp)) {
            run = take_run(is_katakana);
            tag = Tag::Propn;
        } else if (is_kanji(cp)) {
            run = take_run(is_kanji);
            tag = Tag::Noun;
        } else if (is_hiragana(cp)) {
            run = take_run(is_hiragana);
            tag = ends_with_cps(run, U"ます") || ends_with_cps(run, U"ました") ? Tag::Verb
                                                                               : Tag::Noun;
        } else if (is_upper_letter(cp) || is_lower_letter(cp)) {
            run = take_run([](char32_t c) { return is_upper_letter(c) || is_lower_letter(c); });
            tag = Tag::Propn;
        } else {
            run = {cp};
            ++i;
        }
        result.tokens.push_back({utf8_from_codepoints(run), tag, {}});
    }
    return result;
}

// ---- Spanish tagger --------------------------------------------------------

namespace {

struct EsBuiltin {
    std::map<std::string, std::pair<Tag, Feats>> items;

    void add(std::initializer_list<const char*> surfaces, Tag tag, Feats feats = {}) {
        for (const char* s : surfaces) items[s] = {tag, feats};
    }
};

const EsBuiltin& es_builtin() {
    static const EsBuiltin b = [] {
        EsBuiltin b;
        b.add({"el"}, Tag::Det, {{"gender", "m"}, {"number", "sg"}});
        b.add({"la"}, Tag::Det, {{"gender", "f"}, {"number", "sg"}});
        b.add({"los"}, Tag::Det, {{"gender", "m"}, {"number", "pl"}});
        b.add({"las"}, Tag::Det, {{"gender", "f"}, {"number", "pl"}});
        b.add({"un", "este", "ese", "aquel"}, Tag::Det, {{"gender", "m"}, {"number", "sg"}});
        b.add({"una", "esta", "esa", "aquella"}, Tag::Det, {{"gender", "f"}, {"number", "sg"}});
        b.add({"unos", "estos", "esos"}, Tag::Det, {{"gender", "m"}, {"number", "pl"}});
        b.add({"unas", "estas", "esas"}, Tag::Det, {{"gender", "f"}, {"number", "pl"}});
        b.add({"mi", "tu", "su", "mis", "tus", "sus", "lo", "cada"}, Tag::Det);
        b.add({"de", "a", "en", "con", "por", "para", "sin", "sobre", "entre", "desde",
               "hasta", "tras", "según", "durante", "contra", "hacia", "al", "del"},
              Tag::Adp);
        b.add({"yo", "tú", "él", "ella", "usted", "ustedes", "nosotros", "nosotras", "ellos",
               "ellas", "esto", "eso", "aquello", "me", "te", "se", "le", "les", "nos",
               "quien", "quienes"},
              Tag::Pron);
        b.add({"y", "e", "o", "u", "pero", "ni", "que", "si", "como", "cuando", "porque",
               "aunque", "pues"},
              Tag::Part);
        Feats cop{{"copula", "yes"}};
        b.add({"es", "son", "era", "eran", "fue", "fueron", "será", "serán", "sea", "sean",
               "ser", "está", "están", "estaba", "estaban", "estar", "estuvo"},
              Tag::Aux, cop);
        b.add({"ha", "han", "he", "hemos", "había", "habían", "haber"}, Tag::Aux);
        b.add({"no", "muy", "más", "menos", "también", "tampoco", "ya", "aquí", "allí",
               "ahí", "hoy", "ayer", "siempre", "nunca", "bien", "mal", "solo", "sólo",
               "casi"},
              Tag::Adv);
        b.add({"cero", "uno", "dos", "tres", "cuatro", "cinco", "seis", "siete", "ocho",
               "nueve", "diez", "once", "doce", "veinte", "cien", "mil"},
              Tag::Num);
        return b;
    }();
    return b;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Gender and number from the word ending, filled only for open-class tags
// and only when the seed did not specify them.
void fill_suffix_feats(const std::string& lower_surface, Feats& feats) {
    auto ends = [&](std::string_view suf) {
        return lower_surface.size() >= suf.size() &&
               lower_surface.compare(lower_surface.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (!feats.count("gender")) {
        if (ends("os") || ends("o")) feats["gender"] = "m";
        else if (ends("as") || ends("a")) feats["gender"] = "f";
    }
    if (!feats.count("number")) {
        if (ends("s")) feats["number"] = "pl";
        else feats["number"] = "sg";
    }
}

bool is_es_punct_cp(char32_t cp) {
    return is_punct_cp(cp) || cp == 0x00BF || cp == 0x00A1 || cp == 0x00AB || cp == 0x00BB ||
           cp == 0x201C || cp == 0x201D;
}

}  // namespace

EsTagger::EsTagger(SeedLexicon seed) : seed_(std::move(seed)) {}

TaggedSentence EsTagger::tag(const std::string& sentence) const {
    const EsBuiltin& builtin = es_builtin();
    TaggedSentence result;
    result.lang = "es";

    // Split into runs of non-space, then peel punctuation off both ends.
    std::vector<std::string> chunks;
    {
        std::string cur;
        size_t i = 0;
        while (i < sentence.size()) {
            char32_t cp = utf8_decode(sentence, i);
            if (is_space_cp(cp)) {
                if (!cur.empty()) chunks.push_back(std::move(cur));
                cur.clear();
            } else {
                utf8_encode(cp, cur);
            }
        }
        if (!cur.empty()) chunks.push_back(std::move(cur));
    }

    struct Piece {
        std::string surface;
        bool punct;
    };
    std::vector<Piece> pieces;
    for (const std::string& chunk : chunks) {
        std::vector<char32_t> cps = utf8_codepoints(chunk);
        size_t b = 0, e = cps.size();
        std::vector<std::string> lead, tail;
        while (b < e && is_es_punct_cp(cps[b])) {
            std::string s;
            utf8_encode(cps[b++], s);
            lead.push_back(s);
        }
        while (e > b && is_es_punct_cp(cps[e - 1])) {
            std::string s;
            utf8_encode(cps[--e], s);
            tail.push_back(s);
        }
        for (const std::string& s : lead) pieces.push_back({s, true});
        if (b < e)
            pieces.push_back(
                {utf8_from_codepoints(std::vector<char32_t>(cps.begin() + b, cps.begin() + e)),
                 false});
        for (auto it = tail.rbegin(); it != tail.rend(); ++it) pieces.push_back({*it, true});
    }

    bool seen_word = false;
    for (const Piece& piece : pieces) {
        if (piece.punct) {
            result.tokens.push_back({piece.surface, Tag::Punct, {}});
            continue;
        }
        std::string lo = lower(piece.surface);
        Token tok;
        tok.surface = piece.surface;
        bool tagged = false;

        if (auto hit = seed_.find(piece.surface)) {
            tok.tag = hit->first;
            tok.feats = hit->second;
            tagged = true;
        } else if (auto hit_lo = seed_.find(lo)) {
            tok.tag = hit_lo->first;
            tok.feats = hit_lo->second;
            tagged = true;
        } else if (auto it = builtin.items.find(lo); it != builtin.items.end()) {
            tok.tag = it->second.first;
            tok.feats = it->second.second;
            tagged = true;
        } else if (all_digits(piece.surface)) {
            tok.tag = Tag::Num;
            tagged = true;
        } else if (seen_word && starts_upper(piece.surface)) {
            tok.tag = Tag::Propn;
            tagged = true;
        }

        if (!tagged) {
            auto ends = [&](std::string_view suf) {
                return lo.size() > suf.size() &&
                       lo.compare(lo.size() - suf.size(), suf.size(), suf) == 0;
            };
            if (ends("mente")) tok.tag = Tag::Adv;
            else if (ends("ar") || ends("er") || ends("ir")) tok.tag = Tag::Verb;
            else if (ends("ó") || ends("aron") || ends("ieron") || ends("aba") || ends("aban"))
                tok.tag = Tag::Verb;
            else tok.tag = Tag::Noun;
        }
        if (tok.tag == Tag::Noun || tok.tag == Tag::Adj || tok.tag == Tag::Det)
            fill_suffix_feats(lo, tok.feats);
        seen_word = true;
        result.tokens.push_back(std::move(tok));
    }
    return result;
}

// ---- Tagged-sentence import ------------------------------------------------

namespace {

std::string detect_lang(const TaggedSentence& sent) {
    for (const Token& tok : sent.tokens) {
        size_t i = 0;
        while (i < tok.surface.size()) {
            char32_t cp = utf8_decode(tok.surface, i);
            if (is_hiragana(cp) || is_katakana(cp) || is_kanji(cp)) return "ja";
        }
    }
    return "es";
}

}  // namespace

std::vector<TaggedSentence> import_tagged(const std::string& path, const std::string& lang) {
    std::vector<TaggedSentence> sentences;
    TaggedSentence cur;
    size_t lineno = 0;
    auto flush = [&] {
        if (cur.tokens.empty()) return;
        cur.lang = lang.empty() ? detect_lang(cur) : lang;
        sentences.push_back(std::move(cur));
        cur = {};
    };
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty()) {
            flush();
            continue;
        }
        if (body.front() == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2 && cols.size() != 3)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 2 or 3 tab-separated columns");
        try {
            Token tok;
            tok.surface = nfc(trim(cols[0]));
            tok.tag = tag_from_string(trim(cols[1]));
            if (cols.size() == 3) tok.feats = feats_from_string(trim(cols[2]));
            if (tok.surface.empty()) throw DataError("empty token surface");
            cur.tokens.push_back(std::move(tok));
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    flush();
    return sentences;
}

}  // namespace corpusforge
