// Benchmark: serial vs OpenMP scoring of a synthetic sentence cross product.
// Verifies that both kernels produce identical matrices before timing them.
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "corpusforge/align.h"

using namespace corpusforge;

namespace {

// Small parallel vocabularies; sentence i on each side is built from the
// same draws so a share of pairs genuinely overlaps.
const char* kJaNouns[] = {"犬", "水", "本", "音楽", "歴史", "科学", "都市", "大学"};
const char* kEsNouns[] = {"perro", "agua", "libro", "música", "historia", "ciencia",
                          "ciudad", "universidad"};

BilingualLexicon make_lexicon() {
    BilingualLexicon lex;
    for (size_t i = 0; i < std::size(kJaNouns); ++i)
        lex.add(kJaNouns[i], kEsNouns[i], LexSource::Dict);
    return lex;
}

TaggedSentence make_ja(std::mt19937_64& rng, size_t words) {
    TaggedSentence s;
    s.lang = "ja";
    for (size_t i = 0; i < words; ++i) {
        s.tokens.push_back({kJaNouns[rng() % std::size(kJaNouns)], Tag::Noun, {}});
        s.tokens.push_back({"は", Tag::Part, {}});
    }
    s.tokens.push_back({"です", Tag::Aux, {{"copula", "yes"}}});
    s.tokens.push_back({"。", Tag::Punct, {}});
    return s;
}

TaggedSentence make_es(std::mt19937_64& rng, size_t words) {
    TaggedSentence s;
    s.lang = "es";
    s.tokens.push_back({"es", Tag::Aux, {{"copula", "yes"}}});
    for (size_t i = 0; i < words; ++i)
        s.tokens.push_back({kEsNouns[rng() % std::size(kEsNouns)], Tag::Noun, {}});
    s.tokens.push_back({".", Tag::Punct, {}});
    return s;
}

bool same(const std::vector<PairScore>& a, const std::vector<PairScore>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].rule != b[i].rule || a[i].overlap != b[i].overlap ||
            a[i].total != b[i].total || a[i].hard_reject != b[i].hard_reject ||
            a[i].matched_nouns != b[i].matched_nouns)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare serial and OpenMP alignment scoring kernels"};
    size_t n_ja = 400, n_es = 400, words = 6;
    int threads = 0, repeats = 3;
    uint64_t seed = 7;
    app.add_option("--ja", n_ja, "synthetic Japanese sentences");
    app.add_option("--es", n_es, "synthetic Spanish sentences");
    app.add_option("--words", words, "content words per sentence");
    app.add_option("--threads", threads, "OpenMP threads (0 = default)");
    app.add_option("--repeats", repeats, "timing repetitions");
    app.add_option("--seed", seed, "sentence generator seed");
    CLI11_PARSE(app, argc, argv);

    if (threads > 0) omp_set_num_threads(threads);

    std::mt19937_64 rng(seed);
    std::vector<TaggedSentence> ja, es;
    for (size_t i = 0; i < n_ja; ++i) ja.push_back(make_ja(rng, words));
    for (size_t i = 0; i < n_es; ++i) es.push_back(make_es(rng, words));

    BilingualLexicon lexicon = make_lexicon();
    StopwordList stop_ja = StopwordList::builtin_ja();
    StopwordList stop_es = StopwordList::builtin_es();
    AlignConfig cfg;
    RuleEngine engine(&lexicon, cfg.rules);

    std::vector<PairScore> serial = score_matrix_serial(ja, es, engine, lexicon, stop_ja,
                                                        stop_es, cfg);
    std::vector<PairScore> parallel = score_matrix_parallel(ja, es, engine, lexicon, stop_ja,
                                                            stop_es, cfg);
    if (!same(serial, parallel)) {
        std::fprintf(stderr, "kernel mismatch: serial and parallel matrices differ\n");
        return 1;
    }

    double best_serial = 1e300, best_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        double t0 = omp_get_wtime();
        volatile size_t sink =
            score_matrix_serial(ja, es, engine, lexicon, stop_ja, stop_es, cfg).size();
        double t1 = omp_get_wtime();
        sink = score_matrix_parallel(ja, es, engine, lexicon, stop_ja, stop_es, cfg).size();
        double t2 = omp_get_wtime();
        (void)sink;
        best_serial = std::min(best_serial, t1 - t0);
        best_parallel = std::min(best_parallel, t2 - t1);
    }

    std::printf("cells            %zu\n", n_ja * n_es);
    std::printf("threads          %d\n", omp_get_max_threads());
    std::printf("serial           %.4f s\n", best_serial);
    std::printf("parallel         %.4f s\n", best_parallel);
    std::printf("speedup          %.2fx\n", best_serial / best_parallel);
    std::printf("matrices match   yes\n");
    return 0;
}
