#include "corpusforge/pipeline.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <omp.h>

#include "json.hpp"

#include "corpusforge/tagging.h"
#include "corpusforge/textprep.h"
#include "corpusforge/wikidump.h"

namespace corpusforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::string fmt3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// Fails with the producing stage's name when an artifact is missing.
std::string need_artifact(const PipelineOptions& opt, const char* name, const char* producer) {
    std::string path = join_path(opt.workdir, name);
    if (!fs::exists(path))
        throw DataError("missing artifact " + path + "; run `corpusforge " +
                        std::string(producer) + "` first");
    return path;
}

std::string need_input(const std::string& path, const std::string& what) {
    if (path.empty()) throw DataError("config does not name a " + what);
    if (!fs::exists(path)) throw DataError(what + " not found: " + path);
    return path;
}

void write_manifest(const PipelineOptions& opt, const std::string& stage,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs,
                    const std::map<std::string, int64_t>& counts) {
    json m;
    m["stage"] = stage;
    json in = json::object();
    for (const std::string& p : inputs)
        if (!p.empty() && fs::exists(p)) in[p] = sha256_file_hex(p);
    m["inputs"] = in;
    json out = json::object();
    for (const std::string& p : outputs)
        if (fs::exists(p)) out[p] = sha256_file_hex(p);
    m["outputs"] = out;
    json c = json::object();
    for (const auto& [k, v] : counts) c[k] = v;
    m["counts"] = c;
    write_file(join_path(opt.workdir, stage + ".manifest.json"), m.dump(2) + "\n");
}

struct ParsedDumps {
    std::vector<RawPage> ja_pages, es_pages;
    RedirectMap ja_redirects, es_redirects;
    std::map<std::string, CleanArticle> ja_articles, es_articles;
    size_t ja_skipped = 0, es_skipped = 0;
};

ParsedDumps parse_both(const PipelineOptions& opt) {
    ParsedDumps d;
    {
        std::ifstream in(need_input(opt.ja_dump, "ja dump"), std::ios::binary);
        DumpResult r = parse_dump(in, "ja");
        d.ja_pages = std::move(r.pages);
        d.ja_skipped = r.skipped;
    }
    {
        std::ifstream in(need_input(opt.es_dump, "es dump"), std::ios::binary);
        DumpResult r = parse_dump(in, "es");
        d.es_pages = std::move(r.pages);
        d.es_skipped = r.skipped;
    }
    d.ja_redirects = resolve_redirects(d.ja_pages);
    d.es_redirects = resolve_redirects(d.es_pages);
    for (const RawPage& p : d.ja_pages)
        if (!p.is_redirect()) d.ja_articles.emplace(p.title, clean_page(p));
    for (const RawPage& p : d.es_pages)
        if (!p.is_redirect()) d.es_articles.emplace(p.title, clean_page(p));
    return d;
}

std::vector<CleanArticle> article_values(const std::map<std::string, CleanArticle>& m) {
    std::vector<CleanArticle> v;
    v.reserve(m.size());
    for (const auto& [_, a] : m) v.push_back(a);
    return v;
}

std::vector<std::pair<std::string, std::string>> read_title_pairs(const std::string& path) {
    std::vector<std::pair<std::string, std::string>> pairs;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
            throw DataError(path + ":" + std::to_string(lineno) + ": expected 2 columns");
        pairs.push_back({cols[0], cols[1]});
    }
    return pairs;
}

void write_title_pairs(const std::string& path,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::string out;
    for (const auto& [ja, es] : pairs) {
        out += ja;
        out += '\t';
        out += es;
        out += '\n';
    }
    write_file(path, out);
}

StopwordList load_stopwords(const std::string& path, const std::string& lang) {
    if (!path.empty()) return StopwordList::load(need_input(path, lang + " stopword list"));
    return lang == "ja" ? StopwordList::builtin_ja() : StopwordList::builtin_es();
}

SeedLexicon load_seed(const std::string& path, const std::string& what) {
    if (path.empty()) return {};
    return SeedLexicon::load(need_input(path, what));
}

std::map<std::string, std::vector<SentenceRecord>> group_sentences(
    const std::vector<SentenceRecord>& records) {
    std::map<std::string, std::vector<SentenceRecord>> grouped;
    for (const SentenceRecord& r : records) grouped[r.article].push_back(r);
    for (auto& [_, v] : grouped)
        std::sort(v.begin(), v.end(),
                  [](const SentenceRecord& a, const SentenceRecord& b) {
                      return a.index < b.index;
                  });
    return grouped;
}

}  // namespace

// ---- Sentence and redirect artifacts -----------------------------------

void write_sentences_tsv(const std::string& path, const std::vector<SentenceRecord>& records) {
    std::string out = "lang\tarticle\tidx\ttext\tlinks\n";
    for (const SentenceRecord& r : records) {
        json links = json::array();
        for (const Hyperlink& l : r.links) {
            json item;
            item["anchor"] = l.anchor;
            item["target"] = l.target;
            links.push_back(item);
        }
        out += r.lang;
        out += '\t';
        out += r.article;
        out += '\t';
        out += std::to_string(r.index);
        out += '\t';
        out += r.text;
        out += '\t';
        out += links.dump();
        out += '\n';
    }
    write_file(path, out);
}

std::vector<SentenceRecord> read_sentences_tsv(const std::string& path) {
    std::vector<SentenceRecord> records;
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || !starts_with(lines[0], "lang\t"))
        throw DataError(path + ": missing sentence TSV header");
    for (size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        std::vector<std::string> cols = split(lines[n], '\t');
        if (cols.size() != 5)
            throw DataError(path + ":" + std::to_string(n + 1) + ": expected 5 columns");
        SentenceRecord r;
        r.lang = cols[0];
        r.article = cols[1];
        r.index = std::stoul(cols[2]);
        r.text = cols[3];
        json links = json::parse(cols[4], nullptr, false);
        if (links.is_discarded() || !links.is_array())
            throw DataError(path + ":" + std::to_string(n + 1) + ": malformed links column");
        for (const json& item : links)
            r.links.push_back({item.at("target").get<std::string>(),
                               item.at("anchor").get<std::string>()});
        records.push_back(std::move(r));
    }
    return records;
}

void write_redirects_tsv(const std::string& path, const RedirectMap& map) {
    std::string out;
    for (const auto& [from, to] : map.mapping) {
        out += from;
        out += '\t';
        out += to;
        out += '\n';
    }
    write_file(path, out);
}

RedirectMap read_redirects_tsv(const std::string& path) {
    RedirectMap map;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 2)
            throw DataError(path + ":" + std::to_string(lineno) + ": expected 2 columns");
        map.mapping[cols[0]] = cols[1];
    }
    return map;
}

// ---- Options -------------------------------------------------------------

PipelineOptions load_pipeline_options(const std::string& config_path) {
    Config cfg = Config::load(config_path);
    PipelineOptions opt;
    opt.config_path = config_path;
    opt.workdir = cfg.get("paths", "workdir");
    opt.ja_dump = cfg.get("paths", "ja_dump");
    opt.es_dump = cfg.get("paths", "es_dump");
    opt.dictionary = cfg.get_or("paths", "dictionary", "");

    opt.seed_ja = cfg.get_or("tagging", "seed_ja", "");
    opt.seed_es = cfg.get_or("tagging", "seed_es", "");
    opt.stopwords_ja = cfg.get_or("stopwords", "ja", "");
    opt.stopwords_es = cfg.get_or("stopwords", "es", "");

    opt.align.alpha = cfg.get_double_or("align", "alpha", 0.5);
    opt.align.tau_accept = cfg.get_double_or("align", "tau_accept", 0.6);
    opt.align.first_sentence_bonus = cfg.get_double_or("align", "first_sentence_bonus", 0.1);
    opt.align.partial_requires_noun = cfg.get_bool_or("align", "partial_requires_noun", true);
    if (opt.align.alpha < 0.0 || opt.align.alpha > 1.0)
        throw DataError(config_path + ": align.alpha must be within [0, 1]");

    opt.align.rules.enable_cop = cfg.get_bool_or("rules", "cop", true);
    opt.align.rules.enable_ne = cfg.get_bool_or("rules", "ne", true);
    opt.align.rules.enable_adj = cfg.get_bool_or("rules", "adj", true);
    opt.align.rules.enable_q = cfg.get_bool_or("rules", "q", true);
    opt.align.rules.enable_pron = cfg.get_bool_or("rules", "pron", true);
    opt.align.rules.cop_window =
        static_cast<int>(cfg.get_long_or("rules", "cop_window", 3));
    opt.align.rules.ne_ngram_max =
        static_cast<int>(cfg.get_long_or("rules", "ne_ngram_max", 4));
    if (opt.align.rules.cop_window < 1)
        throw DataError(config_path + ": rules.cop_window must be at least 1");
    if (opt.align.rules.ne_ngram_max < 1)
        throw DataError(config_path + ": rules.ne_ngram_max must be at least 1");

    opt.format = cfg.get_or("output", "format", "tsv");
    if (opt.format != "tsv" && opt.format != "tmx")
        throw DataError(config_path + ": output.format must be tsv or tmx");

    opt.sample_size = static_cast<size_t>(cfg.get_long_or("eval", "sample_size", 100));
    opt.sample_seed = static_cast<uint64_t>(cfg.get_long_or("eval", "seed", 42));
    opt.strategy = sample_strategy_from_string(cfg.get_or("eval", "strategy", "uniform"));
    opt.judgments_rule = cfg.get_or("eval", "judgments_rule", "");
    opt.judgments_baseline = cfg.get_or("eval", "judgments_baseline", "");
    opt.gold = cfg.get_or("eval", "gold", "");
    return opt;
}

// ---- Stages ----------------------------------------------------------------

void run_lexicon(const PipelineOptions& opt) {
    fs::create_directories(opt.workdir);
    ParsedDumps d = parse_both(opt);

    LinkLexiconResult link = build_link_lexicon(article_values(d.ja_articles),
                                                article_values(d.es_articles), d.ja_redirects,
                                                d.es_redirects);
    BilingualLexicon lexicon = link.lexicon;
    if (!opt.dictionary.empty()) {
        BilingualLexicon dict = load_dictionary(need_input(opt.dictionary, "dictionary"));
        lexicon = BilingualLexicon::merge(lexicon, dict);
    }

    std::string lex_path = join_path(opt.workdir, artifact::kLexicon);
    std::string pairs_path = join_path(opt.workdir, artifact::kTitlePairs);
    std::string red_ja = join_path(opt.workdir, artifact::kRedirectsJa);
    std::string red_es = join_path(opt.workdir, artifact::kRedirectsEs);
    lexicon.save_tsv(lex_path);
    write_title_pairs(pairs_path, link.title_pairs);
    write_redirects_tsv(red_ja, d.ja_redirects);
    write_redirects_tsv(red_es, d.es_redirects);

    write_manifest(opt, "lexicon", {opt.ja_dump, opt.es_dump, opt.dictionary},
                   {lex_path, pairs_path, red_ja, red_es},
                   {{"entries", static_cast<int64_t>(lexicon.size())},
                    {"es_pages", static_cast<int64_t>(d.es_pages.size())},
                    {"ja_pages", static_cast<int64_t>(d.ja_pages.size())},
                    {"skipped_langlinks", static_cast<int64_t>(link.skipped)},
                    {"title_pairs", static_cast<int64_t>(link.title_pairs.size())}});
}

void run_pairs(const PipelineOptions& opt) {
    fs::create_directories(opt.workdir);
    std::string title_pairs_path = need_artifact(opt, artifact::kTitlePairs, "lexicon");
    ParsedDumps d = parse_both(opt);

    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<SentenceRecord> ja_records, es_records;
    std::set<std::string> ja_done, es_done;
    for (const auto& [ja_title, es_title] : read_title_pairs(title_pairs_path)) {
        auto ja_it = d.ja_articles.find(ja_title);
        auto es_it = d.es_articles.find(es_title);
        if (ja_it == d.ja_articles.end() || es_it == d.es_articles.end()) continue;
        std::vector<SentenceRecord> ja_s = sentence_records(ja_it->second);
        std::vector<SentenceRecord> es_s = sentence_records(es_it->second);
        if (ja_s.empty() || es_s.empty()) continue;
        pairs.push_back({ja_title, es_title});
        if (ja_done.insert(ja_title).second)
            ja_records.insert(ja_records.end(), ja_s.begin(), ja_s.end());
        if (es_done.insert(es_title).second)
            es_records.insert(es_records.end(), es_s.begin(), es_s.end());
    }

    std::string pairs_path = join_path(opt.workdir, artifact::kPairs);
    std::string sj_path = join_path(opt.workdir, artifact::kSentencesJa);
    std::string se_path = join_path(opt.workdir, artifact::kSentencesEs);
    write_title_pairs(pairs_path, pairs);
    write_sentences_tsv(sj_path, ja_records);
    write_sentences_tsv(se_path, es_records);

    write_manifest(opt, "pairs", {opt.ja_dump, opt.es_dump, title_pairs_path},
                   {pairs_path, sj_path, se_path},
                   {{"es_sentences", static_cast<int64_t>(es_records.size())},
                    {"ja_sentences", static_cast<int64_t>(ja_records.size())},
                    {"pairs", static_cast<int64_t>(pairs.size())}});
}

namespace {

std::vector<AlignmentRecord> make_records(const std::vector<Alignment>& alignments,
                                          const std::vector<SentenceRecord>& ja,
                                          const std::vector<SentenceRecord>& es) {
    std::vector<AlignmentRecord> rows;
    for (const Alignment& a : alignments) {
        const SentenceRecord& jr = ja[a.ja_idx];
        const SentenceRecord& er = es[a.es_idx];
        AlignmentRecord r;
        r.pair_id = make_pair_id(jr.article, jr.index, er.article, er.index);
        r.ja_article = jr.article;
        r.ja_idx = jr.index;
        r.es_article = er.article;
        r.es_idx = er.index;
        r.ja_text = jr.text;
        r.es_text = er.text;
        r.score = a.score;
        r.label = a.label;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

void run_align(const PipelineOptions& opt) {
    fs::create_directories(opt.workdir);
    std::string lex_path = need_artifact(opt, artifact::kLexicon, "lexicon");
    std::string pairs_path = need_artifact(opt, artifact::kPairs, "pairs");
    std::string sj_path = need_artifact(opt, artifact::kSentencesJa, "pairs");
    std::string se_path = need_artifact(opt, artifact::kSentencesEs, "pairs");

    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);

    BilingualLexicon lexicon = BilingualLexicon::load_tsv(lex_path);
    StopwordList stop_ja = load_stopwords(opt.stopwords_ja, "ja");
    StopwordList stop_es = load_stopwords(opt.stopwords_es, "es");
    JaTagger ja_tagger(load_seed(opt.seed_ja, "ja seed lexicon"));
    EsTagger es_tagger(load_seed(opt.seed_es, "es seed lexicon"));
    RuleEngine engine(&lexicon, opt.align.rules);

    auto ja_groups = group_sentences(read_sentences_tsv(sj_path));
    auto es_groups = group_sentences(read_sentences_tsv(se_path));

    std::vector<AlignmentRecord> rows;
    for (const auto& [ja_title, es_title] : read_title_pairs(pairs_path)) {
        auto ja_it = ja_groups.find(ja_title);
        auto es_it = es_groups.find(es_title);
        if (ja_it == ja_groups.end() || es_it == es_groups.end())
            throw DataError("article pair " + ja_title + " / " + es_title +
                            " has no sentences; rerun `corpusforge pairs`");
        std::vector<TaggedSentence> ja_tagged, es_tagged;
        for (const SentenceRecord& r : ja_it->second) ja_tagged.push_back(ja_tagger.tag(r.text));
        for (const SentenceRecord& r : es_it->second) es_tagged.push_back(es_tagger.tag(r.text));
        std::vector<PairScore> matrix = score_matrix_parallel(
            ja_tagged, es_tagged, engine, lexicon, stop_ja, stop_es, opt.align);
        std::vector<Alignment> selected =
            select_alignments(matrix, ja_tagged.size(), es_tagged.size(), opt.align);
        std::vector<AlignmentRecord> records =
            make_records(selected, ja_it->second, es_it->second);
        rows.insert(rows.end(), records.begin(), records.end());
    }

    std::string out_path = join_path(opt.workdir, artifact::kAlignments);
    write_alignments_tsv(out_path, rows);
    std::vector<std::string> outputs{out_path};
    if (opt.format == "tmx") {
        std::string tmx_path = join_path(opt.workdir, artifact::kAlignmentsTmx);
        write_alignments_tmx(tmx_path, rows);
        outputs.push_back(tmx_path);
    }

    int64_t aligned = 0, partial = 0;
    for (const AlignmentRecord& r : rows) {
        if (r.label == AlignLabel::Aligned) ++aligned;
        if (r.label == AlignLabel::Partial) ++partial;
    }
    write_manifest(opt, "align", {lex_path, pairs_path, sj_path, se_path}, outputs,
                   {{"aligned", aligned}, {"partial", partial}});
}

void run_baseline(const PipelineOptions& opt) {
    fs::create_directories(opt.workdir);
    std::string lex_path = need_artifact(opt, artifact::kLexicon, "lexicon");
    std::string pairs_path = need_artifact(opt, artifact::kPairs, "pairs");
    std::string sj_path = need_artifact(opt, artifact::kSentencesJa, "pairs");
    std::string se_path = need_artifact(opt, artifact::kSentencesEs, "pairs");
    std::string red_ja_path = need_artifact(opt, artifact::kRedirectsJa, "lexicon");
    std::string red_es_path = need_artifact(opt, artifact::kRedirectsEs, "lexicon");

    BilingualLexicon lexicon = BilingualLexicon::load_tsv(lex_path);
    RedirectMap ja_redirects = read_redirects_tsv(red_ja_path);
    RedirectMap es_redirects = read_redirects_tsv(red_es_path);
    auto ja_groups = group_sentences(read_sentences_tsv(sj_path));
    auto es_groups = group_sentences(read_sentences_tsv(se_path));

    AlignConfig cfg = opt.align;
    cfg.partial_requires_noun = true;  // the baseline never yields partials

    std::vector<AlignmentRecord> rows;
    for (const auto& [ja_title, es_title] : read_title_pairs(pairs_path)) {
        auto ja_it = ja_groups.find(ja_title);
        auto es_it = es_groups.find(es_title);
        if (ja_it == ja_groups.end() || es_it == es_groups.end())
            throw DataError("article pair " + ja_title + " / " + es_title +
                            " has no sentences; rerun `corpusforge pairs`");
        std::vector<PairScore> matrix =
            baseline_matrix(ja_it->second, es_it->second, ja_redirects, es_redirects, lexicon);
        std::vector<Alignment> selected =
            select_alignments(matrix, ja_it->second.size(), es_it->second.size(), cfg);
        std::vector<AlignmentRecord> records =
            make_records(selected, ja_it->second, es_it->second);
        rows.insert(rows.end(), records.begin(), records.end());
    }

    std::string out_path = join_path(opt.workdir, artifact::kBaseline);
    write_alignments_tsv(out_path, rows);

    int64_t aligned = 0;
    for (const AlignmentRecord& r : rows)
        if (r.label == AlignLabel::Aligned) ++aligned;
    write_manifest(opt, "baseline",
                   {lex_path, pairs_path, sj_path, se_path, red_ja_path, red_es_path},
                   {out_path}, {{"aligned", aligned}});
}

void run_eval(const PipelineOptions& opt) {
    fs::create_directories(opt.workdir);
    std::string align_path = need_artifact(opt, artifact::kAlignments, "align");
    std::string base_path = need_artifact(opt, artifact::kBaseline, "baseline");

    std::vector<AlignmentRecord> rule_rows = read_alignments_tsv(align_path);
    std::vector<AlignmentRecord> base_rows = read_alignments_tsv(base_path);

    std::string ann_rule = join_path(opt.workdir, artifact::kAnnotationRule);
    std::string ann_base = join_path(opt.workdir, artifact::kAnnotationBaseline);
    write_annotation_tsv(ann_rule, sample_for_annotation(rule_rows, opt.sample_size,
                                                         opt.sample_seed, opt.strategy));
    write_annotation_tsv(ann_base, sample_for_annotation(base_rows, opt.sample_size,
                                                         opt.sample_seed, opt.strategy));

    std::string report;
    std::vector<std::string> inputs{align_path, base_path};

    if (!opt.judgments_rule.empty() && !opt.judgments_baseline.empty()) {
        auto ids_of = [](const std::vector<AlignmentRecord>& rows) {
            std::set<std::string> ids;
            for (const AlignmentRecord& r : rows) ids.insert(r.pair_id);
            return ids;
        };
        std::set<std::string> rule_ids = ids_of(rule_rows);
        std::set<std::string> base_ids = ids_of(base_rows);
        std::vector<Judgment> rule_j =
            import_judgments(need_input(opt.judgments_rule, "rule judgments file"), &rule_ids);
        std::vector<Judgment> base_j = import_judgments(
            need_input(opt.judgments_baseline, "baseline judgments file"), &base_ids);
        report += format_comparison("baseline", tabulate(base_j), "rule-based",
                                    tabulate(rule_j));
        inputs.push_back(opt.judgments_rule);
        inputs.push_back(opt.judgments_baseline);
    } else {
        report += "no judgments configured; annotation sheets written to " +
                  std::string(artifact::kAnnotationRule) + " and " +
                  std::string(artifact::kAnnotationBaseline) + "\n";
    }

    if (!opt.gold.empty()) {
        std::vector<GoldPair> gold = load_gold(need_input(opt.gold, "gold alignments"));
        GoldScore rs = score_against_gold(rule_rows, gold);
        GoldScore bs = score_against_gold(base_rows, gold);
        auto line = [&](const std::string& name, const GoldScore& s) {
            std::string n = name;
            if (n.size() < 12) n.resize(12, ' ');
            return n + " precision " + fmt3(s.precision) + "  recall " + fmt3(s.recall) +
                   "  f1 " + fmt3(s.f1) + "  (hits " + std::to_string(s.hits) + "/" +
                   std::to_string(s.output_total) + ", gold " + std::to_string(s.gold_total) +
                   ")\n";
        };
        report += "gold comparison\n";
        report += line("baseline", bs);
        report += line("rule-based", rs);
        inputs.push_back(opt.gold);
    }

    std::string report_path = join_path(opt.workdir, artifact::kEvalReport);
    write_file(report_path, report);

    write_manifest(opt, "eval", inputs, {ann_rule, ann_base, report_path},
                   {{"baseline_rows", static_cast<int64_t>(base_rows.size())},
                    {"rule_rows", static_cast<int64_t>(rule_rows.size())}});
}

void run_all(const PipelineOptions& opt) {
    run_lexicon(opt);
    run_pairs(opt);
    run_align(opt);
    run_baseline(opt);
    run_eval(opt);
}

void run_dump_inspect(const std::string& dump_path, const std::string& lang, std::ostream& out) {
    std::ifstream in(need_input(dump_path, "dump"), std::ios::binary);
    DumpReader reader(in, lang);
    while (auto page = reader.next()) {
        if (page->is_redirect()) continue;
        CleanArticle art = clean_page(*page);
        json j;
        j["lang"] = art.lang;
        j["title"] = art.title;
        j["text"] = art.text;
        json links = json::array();
        for (const Hyperlink& l : art.links) {
            json item;
            item["anchor"] = l.anchor;
            item["target"] = l.target;
            links.push_back(item);
        }
        j["links"] = links;
        json langlinks = json::array();
        for (const InterlangLink& l : art.langlinks) {
            json item;
            item["lang"] = l.dst_lang;
            item["title"] = l.dst_title;
            langlinks.push_back(item);
        }
        j["langlinks"] = langlinks;
        out << j.dump() << "\n";
    }
}

}  // namespace corpusforge
