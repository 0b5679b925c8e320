#include "corpusforge/rules.h"

#include <set>

namespace corpusforge {

std::string to_string(RuleId id) {
    switch (id) {
        case RuleId::Cop: return "R_COP";
        case RuleId::Ne: return "R_NE";
        case RuleId::Adj: return "R_ADJ";
        case RuleId::Q: return "R_Q";
        case RuleId::Pron: return "R_PRON";
    }
    return "R_COP";
}

namespace {

bool is_nounish(const Token& tok) { return tok.is(Tag::Noun) || tok.is(Tag::Propn); }

// Index of the last token that is not punctuation, or npos.
size_t last_non_punct(const std::vector<Token>& toks) {
    for (size_t i = toks.size(); i > 0; --i)
        if (!toks[i - 1].is(Tag::Punct)) return i - 1;
    return std::string::npos;
}

}  // namespace

bool ja_is_question(const TaggedSentence& ja) {
    size_t last = last_non_punct(ja.tokens);
    return last != std::string::npos && ja.tokens[last].surface == "か" &&
           ja.tokens[last].is(Tag::Part);
}

bool es_is_question(const TaggedSentence& es) {
    bool has_opening = false;
    for (const Token& tok : es.tokens)
        if (tok.surface == "\xC2\xBF") has_opening = true;
    if (!has_opening) return false;
    for (size_t i = es.tokens.size(); i > 0; --i) {
        const Token& tok = es.tokens[i - 1];
        if (!tok.is(Tag::Punct)) return false;
        if (tok.surface == "?") return true;
    }
    return false;
}

RuleEngine::RuleEngine(const BilingualLexicon* lexicon, RuleConfig config)
    : lexicon_(lexicon), config_(config) {}

RuleOutcome RuleEngine::check_cop(const TaggedSentence& ja, const TaggedSentence& es) const {
    RuleOutcome out{RuleId::Cop, false, false};
    // Japanese side: ... NOUN AUX(copula), ignoring trailing punctuation and
    // a final question particle.
    size_t last = last_non_punct(ja.tokens);
    if (last == std::string::npos) return out;
    if (ja.tokens[last].surface == "か" && ja.tokens[last].is(Tag::Part)) {
        if (last == 0) return out;
        size_t prev = last;
        do { --prev; } while (prev > 0 && ja.tokens[prev].is(Tag::Punct));
        last = prev;
    }
    if (!ja.tokens[last].is(Tag::Aux) || !ja.tokens[last].has_feat("copula", "yes")) return out;
    if (last == 0) return out;
    size_t noun = last;
    do { --noun; } while (noun > 0 && ja.tokens[noun].is(Tag::Punct));
    if (!is_nounish(ja.tokens[noun])) return out;
    out.applicable = true;

    // Spanish side: a copula with a noun within the window.
    const auto& toks = es.tokens;
    for (size_t j = 0; j < toks.size(); ++j) {
        if (!toks[j].is(Tag::Aux) || !toks[j].has_feat("copula", "yes")) continue;
        size_t lo = j >= static_cast<size_t>(config_.cop_window) ? j - config_.cop_window : 0;
        size_t hi = std::min(toks.size(), j + static_cast<size_t>(config_.cop_window) + 1);
        for (size_t k = lo; k < hi; ++k) {
            if (k != j && is_nounish(toks[k])) {
                out.satisfied = true;
                return out;
            }
        }
    }
    return out;
}

RuleOutcome RuleEngine::check_ne(const TaggedSentence& ja, const TaggedSentence& es) const {
    RuleOutcome out{RuleId::Ne, false, false};
    std::vector<std::string> words;
    for (const Token& tok : es.tokens)
        if (!tok.is(Tag::Punct)) words.push_back(tok.surface);
    std::set<std::string> ngrams;
    for (size_t n = 1; n <= static_cast<size_t>(config_.ne_ngram_max); ++n) {
        if (words.size() < n) break;
        for (size_t i = 0; i + n <= words.size(); ++i) {
            std::string g = words[i];
            for (size_t k = 1; k < n; ++k) {
                g += ' ';
                g += words[i + k];
            }
            ngrams.insert(std::move(g));
        }
    }

    bool all_found = true;
    for (const Token& tok : ja.tokens) {
        if (!tok.is(Tag::Propn)) continue;
        const std::vector<std::string>& translations = lexicon_->translate_ja(tok.surface);
        if (translations.empty()) continue;  // untranslatable: no evidence either way
        out.applicable = true;
        bool found = false;
        for (const std::string& t : translations)
            if (ngrams.count(t)) {
                found = true;
                break;
            }
        if (!found) all_found = false;
    }
    out.satisfied = out.applicable && all_found;
    return out;
}

RuleOutcome RuleEngine::check_adj(const TaggedSentence& ja, const TaggedSentence& es) const {
    RuleOutcome out{RuleId::Adj, false, false};
    size_t ja_adj = 0, es_adj = 0;
    for (const Token& tok : ja.tokens)
        if (tok.is(Tag::Adj)) ++ja_adj;
    for (const Token& tok : es.tokens)
        if (tok.is(Tag::Adj)) ++es_adj;
    if (ja_adj == 0 && es_adj == 0) return out;
    out.applicable = true;

    size_t diff = ja_adj > es_adj ? ja_adj - es_adj : es_adj - ja_adj;
    if (diff > 1) return out;

    // Adjacent adjective/noun gender clash; missing gender never violates.
    for (size_t j = 0; j < es.tokens.size(); ++j) {
        if (!es.tokens[j].is(Tag::Adj)) continue;
        auto g = es.tokens[j].feats.find("gender");
        if (g == es.tokens[j].feats.end()) continue;
        for (size_t k : {j - 1, j + 1}) {
            if (k >= es.tokens.size()) continue;  // j-1 wraps for j==0
            if (!is_nounish(es.tokens[k]) && !es.tokens[k].is(Tag::Det)) continue;
            auto h = es.tokens[k].feats.find("gender");
            if (h == es.tokens[k].feats.end()) continue;
            if (g->second != h->second) return out;
        }
    }
    out.satisfied = true;
    return out;
}

RuleOutcome RuleEngine::check_q(const TaggedSentence& ja, const TaggedSentence& es) const {
    RuleOutcome out{RuleId::Q, true, false};
    out.satisfied = ja_is_question(ja) == es_is_question(es);
    return out;
}

std::array<RuleOutcome, 5> RuleEngine::check(const TaggedSentence& ja,
                                             const TaggedSentence& es) const {
    std::array<RuleOutcome, 5> outcomes{{{RuleId::Cop, false, false},
                                         {RuleId::Ne, false, false},
                                         {RuleId::Adj, false, false},
                                         {RuleId::Q, false, false},
                                         {RuleId::Pron, false, false}}};
    if (config_.enable_cop) outcomes[0] = check_cop(ja, es);
    if (config_.enable_ne) outcomes[1] = check_ne(ja, es);
    if (config_.enable_adj) outcomes[2] = check_adj(ja, es);
    if (config_.enable_q) outcomes[3] = check_q(ja, es);
    // Pron stays not applicable by design.
    return outcomes;
}

RuleScore RuleEngine::score(const std::array<RuleOutcome, 5>& outcomes) {
    RuleScore result;
    size_t applicable = 0, satisfied = 0;
    for (const RuleOutcome& o : outcomes) {
        if (o.id == RuleId::Q) {
            if (o.applicable && !o.satisfied) result.hard_reject = true;
            continue;
        }
        if (!o.applicable) continue;
        ++applicable;
        if (o.satisfied) ++satisfied;
    }
    result.score = applicable == 0 ? 0.5 : static_cast<double>(satisfied) / applicable;
    return result;
}

}  // namespace corpusforge
