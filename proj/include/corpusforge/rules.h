#pragma once

#include <array>
#include <string>

#include "corpusforge/lexicon.h"
#include "corpusforge/tagging.h"

namespace corpusforge {

enum class RuleId : uint8_t { Cop, Ne, Adj, Q, Pron };

std::string to_string(RuleId id);

struct RuleOutcome {
    RuleId id = RuleId::Cop;
    bool applicable = false;
    bool satisfied = false;  // meaningful only when applicable
};

struct RuleConfig {
    bool enable_cop = true;
    bool enable_ne = true;
    bool enable_adj = true;
    bool enable_q = true;
    bool enable_pron = true;
    int cop_window = 3;    // max token distance between Spanish copula and noun
    int ne_ngram_max = 4;  // longest Spanish n-gram checked for named entities
};

struct RuleScore {
    double score = 0.5;       // satisfied/applicable over the scoring rules
    bool hard_reject = false; // question-mark gate violated
};

// The five structural agreement checks between a Japanese sentence and a
// Spanish candidate:
//   Cop  - Japanese copula sentence expects a Spanish copula with a noun
//          within cop_window tokens.
//   Ne   - every Japanese proper noun the lexicon can translate must appear
//          in the Spanish text, case-sensitively, as an n-gram.
//   Adj  - adjective counts may differ by at most one and adjacent
//          adjective/noun gender must not clash (unknown gender passes).
//   Q    - question form must match on both sides; a mismatch rejects the
//          pair outright instead of scoring.
//   Pron - placeholder, never applicable: pronoun correspondence needs
//          antecedent information no component here produces.
class RuleEngine {
public:
    RuleEngine(const BilingualLexicon* lexicon, RuleConfig config = {});

    std::array<RuleOutcome, 5> check(const TaggedSentence& ja, const TaggedSentence& es) const;

    // Fraction of satisfied scoring rules (Cop, Ne, Adj, Pron); 0.5 when none
    // applies. Q only drives hard_reject.
    static RuleScore score(const std::array<RuleOutcome, 5>& outcomes);

    const RuleConfig& config() const { return config_; }

private:
    RuleOutcome check_cop(const TaggedSentence& ja, const TaggedSentence& es) const;
    RuleOutcome check_ne(const TaggedSentence& ja, const TaggedSentence& es) const;
    RuleOutcome check_adj(const TaggedSentence& ja, const TaggedSentence& es) const;
    RuleOutcome check_q(const TaggedSentence& ja, const TaggedSentence& es) const;

    const BilingualLexicon* lexicon_;
    RuleConfig config_;
};

// True when the sentence's last non-punctuation token is the particle か.
bool ja_is_question(const TaggedSentence& ja);
// True when the sentence contains ¿ and its last punctuation token is '?'.
bool es_is_question(const TaggedSentence& es);

}  // namespace corpusforge
