#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "corpusforge/pipeline.h"

namespace {

struct CommonArgs {
    std::string config;
    int jobs = 0;
    std::string stopwords_ja, stopwords_es;
    std::string format, strategy;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config, "pipeline configuration file")->required();
    cmd->add_option("--jobs", args.jobs, "worker threads (0 = library default)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--stopwords-ja", args.stopwords_ja, "Japanese stopword file");
    cmd->add_option("--stopwords-es", args.stopwords_es, "Spanish stopword file");
    cmd->add_option("--format", args.format, "alignment output format")
        ->check(CLI::IsMember({"tsv", "tmx"}));
    cmd->add_option("--strategy", args.strategy, "annotation sampling strategy")
        ->check(CLI::IsMember({"uniform", "topk"}));
}

corpusforge::PipelineOptions resolve(const CommonArgs& args) {
    corpusforge::PipelineOptions opt = corpusforge::load_pipeline_options(args.config);
    opt.jobs = args.jobs;
    if (!args.stopwords_ja.empty()) opt.stopwords_ja = args.stopwords_ja;
    if (!args.stopwords_es.empty()) opt.stopwords_es = args.stopwords_es;
    if (!args.format.empty()) opt.format = args.format;
    if (!args.strategy.empty())
        opt.strategy = corpusforge::sample_strategy_from_string(args.strategy);
    return opt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"comparable-corpus mining: lexicon building, sentence alignment, evaluation"};
    app.require_subcommand(1);

    CommonArgs lexicon_args, pairs_args, align_args, baseline_args, eval_args, all_args;
    add_common(app.add_subcommand("lexicon", "build the bilingual lexicon from dumps"),
               lexicon_args);
    add_common(app.add_subcommand("pairs", "pair articles and split sentences"), pairs_args);
    add_common(app.add_subcommand("align", "rule-based sentence alignment"), align_args);
    add_common(app.add_subcommand("baseline", "hyperlink-overlap baseline alignment"),
               baseline_args);
    add_common(app.add_subcommand("eval", "annotation sampling and comparison report"),
               eval_args);
    add_common(app.add_subcommand("all", "run every stage in order"), all_args);

    CLI::App* dump = app.add_subcommand("dump", "dump utilities");
    dump->require_subcommand(1);
    CLI::App* inspect = dump->add_subcommand("inspect", "print clean articles as JSON lines");
    std::string inspect_path, inspect_lang;
    inspect->add_option("file", inspect_path, "MediaWiki export XML file")->required();
    inspect->add_option("--lang", inspect_lang,
                        "dump language when the file carries no xml:lang");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // only --help style exits are a success
    }

    try {
        if (app.got_subcommand("lexicon")) corpusforge::run_lexicon(resolve(lexicon_args));
        else if (app.got_subcommand("pairs")) corpusforge::run_pairs(resolve(pairs_args));
        else if (app.got_subcommand("align")) corpusforge::run_align(resolve(align_args));
        else if (app.got_subcommand("baseline")) corpusforge::run_baseline(resolve(baseline_args));
        else if (app.got_subcommand("eval")) corpusforge::run_eval(resolve(eval_args));
        else if (app.got_subcommand("all")) corpusforge::run_all(resolve(all_args));
        else if (app.got_subcommand("dump"))
            corpusforge::run_dump_inspect(inspect_path, inspect_lang, std::cout);
    } catch (const corpusforge::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
