#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corpusforge/align.h"

namespace corpusforge {

enum class Verdict : uint8_t { Correct, Partial, Incorrect };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Judgment {
    std::string pair_id;
    Verdict verdict = Verdict::Incorrect;
};

enum class SampleStrategy : uint8_t { Uniform, TopK };

SampleStrategy sample_strategy_from_string(const std::string& s);

// Picks n rows for human annotation. Uniform shuffles with a fixed-seed
// Fisher-Yates so a given (rows, n, seed) always yields the same sample;
// TopK takes the highest totals. Output keeps the original row order.
std::vector<AlignmentRecord> sample_for_annotation(const std::vector<AlignmentRecord>& rows,
                                                   size_t n, uint64_t seed,
                                                   SampleStrategy strategy);

// Annotation sheet: pair_id, texts, and an empty verdict column to fill in.
void write_annotation_tsv(const std::string& path, const std::vector<AlignmentRecord>& rows);

// Filled-in sheet. Rows with an empty verdict are skipped; an unknown verdict
// or (when valid_ids is given) an unknown pair_id is a data error.
std::vector<Judgment> import_judgments(const std::string& path,
                                       const std::set<std::string>* valid_ids = nullptr);

struct Tabulation {
    size_t correct = 0;
    size_t partial = 0;
    size_t incorrect = 0;
    size_t total() const { return correct + partial + incorrect; }
    // Normalized to judgments per 100, rounded half away from zero.
    int per100_correct = 0;
    int per100_partial = 0;
    int per100_incorrect = 0;
};

Tabulation tabulate(const std::vector<Judgment>& judgments);

struct GoldPair {
    std::string ja_article;
    size_t ja_idx = 0;
    std::string es_article;
    size_t es_idx = 0;

    bool operator<(const GoldPair& o) const;
};

// Gold TSV: ja_article<TAB>ja_idx<TAB>es_article<TAB>es_idx.
std::vector<GoldPair> load_gold(const std::string& path);

struct GoldScore {
    size_t gold_total = 0;
    size_t output_total = 0;  // rows counted against gold (aligned only)
    size_t hits = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

GoldScore score_against_gold(const std::vector<AlignmentRecord>& rows,
                             const std::vector<GoldPair>& gold);

// Plain-text evaluation report comparing judged outputs of the two methods
// side by side; deterministic for equal inputs.
std::string format_comparison(const std::string& left_name, const Tabulation& left,
                              const std::string& right_name, const Tabulation& right);

}  // namespace corpusforge
