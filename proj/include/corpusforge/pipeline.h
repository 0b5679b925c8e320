#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corpusforge/align.h"
#include "corpusforge/config.h"
#include "corpusforge/evalkit.h"

namespace corpusforge {

// Everything a pipeline run needs, resolved from the config file plus
// command-line overrides.
struct PipelineOptions {
    std::string config_path;
    std::string workdir;

    std::string ja_dump;
    std::string es_dump;
    std::string dictionary;  // optional external dictionary TSV

    std::string seed_ja;  // optional tagger seed lexica
    std::string seed_es;
    std::string stopwords_ja;  // optional stopword files (override built-ins)
    std::string stopwords_es;

    AlignConfig align;
    std::string format = "tsv";  // tsv | tmx

    size_t sample_size = 100;
    uint64_t sample_seed = 42;
    SampleStrategy strategy = SampleStrategy::Uniform;
    std::string judgments_rule;      // optional filled annotation sheets
    std::string judgments_baseline;
    std::string gold;  // optional gold alignment TSV

    int jobs = 0;  // 0 = library default
};

PipelineOptions load_pipeline_options(const std::string& config_path);

// Stage entry points. Each writes its artifacts plus a manifest into the
// working directory and fails with a DataError naming the missing artifact
// (and the stage that makes it) when run out of order.
void run_lexicon(const PipelineOptions& opt);
void run_pairs(const PipelineOptions& opt);
void run_align(const PipelineOptions& opt);
void run_baseline(const PipelineOptions& opt);
void run_eval(const PipelineOptions& opt);
void run_all(const PipelineOptions& opt);

// Parses one dump and writes CleanArticles as line-delimited JSON to `out`.
void run_dump_inspect(const std::string& dump_path, const std::string& lang, std::ostream& out);

// Artifact names under the working directory.
namespace artifact {
inline constexpr const char* kLexicon = "lexicon.tsv";
inline constexpr const char* kTitlePairs = "title_pairs.tsv";
inline constexpr const char* kRedirectsJa = "redirects_ja.tsv";
inline constexpr const char* kRedirectsEs = "redirects_es.tsv";
inline constexpr const char* kSentencesJa = "sentences_ja.tsv";
inline constexpr const char* kSentencesEs = "sentences_es.tsv";
inline constexpr const char* kPairs = "pairs.tsv";
inline constexpr const char* kAlignments = "alignments.tsv";
inline constexpr const char* kAlignmentsTmx = "alignments.tmx";
inline constexpr const char* kBaseline = "baseline.tsv";
inline constexpr const char* kAnnotationRule = "annotation_rule.tsv";
inline constexpr const char* kAnnotationBaseline = "annotation_baseline.tsv";
inline constexpr const char* kEvalReport = "eval_report.txt";
}  // namespace artifact

// Serialized sentence records shared by the pairs, align and baseline stages.
void write_sentences_tsv(const std::string& path, const std::vector<SentenceRecord>& records);
std::vector<SentenceRecord> read_sentences_tsv(const std::string& path);

// Redirect mapping as TSV (title<TAB>final).
void write_redirects_tsv(const std::string& path, const RedirectMap& map);
RedirectMap read_redirects_tsv(const std::string& path);

}  // namespace corpusforge
