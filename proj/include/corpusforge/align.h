#pragma once

#include <string>
#include <vector>

#include "corpusforge/lexicon.h"
#include "corpusforge/rules.h"
#include "corpusforge/tagging.h"
#include "corpusforge/textprep.h"

namespace corpusforge {

struct AlignConfig {
    double alpha = 0.5;               // weight of the rule score vs overlap
    double tau_accept = 0.6;          // minimum total for an aligned pair
    double first_sentence_bonus = 0.1;  // both sentences open their articles
    bool partial_requires_noun = true;  // partial label needs a matched noun
    RuleConfig rules;
};

struct PairScore {
    double rule = 0.5;
    double overlap = 0.0;
    double total = 0.0;
    bool hard_reject = false;
    int matched_nouns = 0;
};

struct Overlap {
    double value = 0.0;
    int matched_nouns = 0;
};

// Jaccard overlap between the translated Japanese content terms and the
// Spanish content terms. Multi-token units participate when the lexicon
// knows them; stopwords are invisible here (and only here).
Overlap lexical_overlap(const TaggedSentence& ja, const TaggedSentence& es,
                        const BilingualLexicon& lexicon, const StopwordList& stop_ja,
                        const StopwordList& stop_es);

PairScore score_pair(const TaggedSentence& ja, const TaggedSentence& es, size_t ja_idx,
                     size_t es_idx, const RuleEngine& engine, const BilingualLexicon& lexicon,
                     const StopwordList& stop_ja, const StopwordList& stop_es,
                     const AlignConfig& cfg);

// Full ja x es score matrix, row-major. The parallel version distributes
// cells over OpenMP threads and produces bit-identical output to the serial
// one; tests and the benchmark hold them against each other.
std::vector<PairScore> score_matrix_serial(const std::vector<TaggedSentence>& ja,
                                           const std::vector<TaggedSentence>& es,
                                           const RuleEngine& engine,
                                           const BilingualLexicon& lexicon,
                                           const StopwordList& stop_ja,
                                           const StopwordList& stop_es, const AlignConfig& cfg);
std::vector<PairScore> score_matrix_parallel(const std::vector<TaggedSentence>& ja,
                                             const std::vector<TaggedSentence>& es,
                                             const RuleEngine& engine,
                                             const BilingualLexicon& lexicon,
                                             const StopwordList& stop_ja,
                                             const StopwordList& stop_es, const AlignConfig& cfg);

enum class AlignLabel : uint8_t { Aligned, Partial, Rejected };

std::string to_string(AlignLabel label);

struct Alignment {
    size_t ja_idx = 0;
    size_t es_idx = 0;
    PairScore score;
    AlignLabel label = AlignLabel::Rejected;
};

// One-to-one greedy selection: candidates at or above tau_accept, visited by
// descending total with (ja_idx, es_idx) as the tie-break, each consuming its
// row and column. Uncovered Japanese sentences fall back to their best
// noun-sharing candidate as a partial match.
std::vector<Alignment> select_alignments(const std::vector<PairScore>& matrix, size_t n_ja,
                                         size_t n_es, const AlignConfig& cfg);

// Hyperlink-overlap baseline score. Link targets arrive redirect-resolved;
// each side additionally counts its own article title as a link (an article
// "links" to itself), which is what makes the score degenerate across
// sentences of one article pair. Sentences with no real links on either side
// score zero outright.
double baseline_score(const std::vector<std::string>& ja_targets,
                      const std::vector<std::string>& es_targets, const std::string& ja_title,
                      const std::string& es_title, const BilingualLexicon& lexicon);

std::vector<PairScore> baseline_matrix(const std::vector<SentenceRecord>& ja,
                                       const std::vector<SentenceRecord>& es,
                                       const RedirectMap& ja_redirects,
                                       const RedirectMap& es_redirects,
                                       const BilingualLexicon& lexicon);

// A row of the alignment output, ready for serialization.
struct AlignmentRecord {
    std::string pair_id;  // ja_article|ja_idx|es_article|es_idx
    std::string ja_article;
    size_t ja_idx = 0;
    std::string es_article;
    size_t es_idx = 0;
    std::string ja_text;
    std::string es_text;
    PairScore score;
    AlignLabel label = AlignLabel::Rejected;
};

std::string make_pair_id(const std::string& ja_article, size_t ja_idx,
                         const std::string& es_article, size_t es_idx);

// TSV with a fixed header; floats as %.6f. Byte-stable for equal input.
void write_alignments_tsv(const std::string& path, const std::vector<AlignmentRecord>& rows);
std::vector<AlignmentRecord> read_alignments_tsv(const std::string& path);

// TMX 1.4 with one <tu> per row; carries no timestamps so reruns are
// byte-identical.
void write_alignments_tmx(const std::string& path, const std::vector<AlignmentRecord>& rows);

}  // namespace corpusforge
