#include "corpusforge/evalkit.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace corpusforge {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Correct: return "correct";
        case Verdict::Partial: return "partial";
        case Verdict::Incorrect: return "incorrect";
    }
    return "incorrect";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "correct") return Verdict::Correct;
    if (s == "partial") return Verdict::Partial;
    if (s == "incorrect") return Verdict::Incorrect;
    throw DataError("unknown verdict '" + s + "' (want correct|partial|incorrect)");
}

SampleStrategy sample_strategy_from_string(const std::string& s) {
    if (s == "uniform") return SampleStrategy::Uniform;
    if (s == "topk") return SampleStrategy::TopK;
    throw DataError("unknown sampling strategy '" + s + "' (want uniform|topk)");
}

std::vector<AlignmentRecord> sample_for_annotation(const std::vector<AlignmentRecord>& rows,
                                                   size_t n, uint64_t seed,
                                                   SampleStrategy strategy) {
    std::vector<size_t> order(rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;

    if (strategy == SampleStrategy::Uniform) {
        // Hand-rolled Fisher-Yates: std::shuffle's draw sequence is not
        // pinned by the standard, and samples must be reproducible.
        std::mt19937_64 rng(seed);
        for (size_t i = order.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(rng() % i);
            std::swap(order[i - 1], order[j]);
        }
    } else {
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (rows[a].score.total != rows[b].score.total)
                return rows[a].score.total > rows[b].score.total;
            return rows[a].pair_id < rows[b].pair_id;
        });
    }

    if (n < order.size()) order.resize(n);
    std::sort(order.begin(), order.end());
    std::vector<AlignmentRecord> out;
    out.reserve(order.size());
    for (size_t i : order) out.push_back(rows[i]);
    return out;
}

void write_annotation_tsv(const std::string& path, const std::vector<AlignmentRecord>& rows) {
    std::string out = "pair_id\tja_text\tes_text\tverdict\n";
    for (const AlignmentRecord& r : rows) {
        out += r.pair_id;
        out += '\t';
        out += r.ja_text;
        out += '\t';
        out += r.es_text;
        out += "\t\n";
    }
    write_file(path, out);
}

std::vector<Judgment> import_judgments(const std::string& path,
                                       const std::set<std::string>* valid_ids) {
    std::vector<Judgment> out;
    std::vector<std::string> lines = read_lines(path);
    size_t lineno = 0;
    for (const std::string& line : lines) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && starts_with(line, "pair_id\t")) continue;  // header
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() < 2)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected at least pair_id and verdict columns");
        const std::string& id = cols[0];
        std::string verdict = trim(cols.back());
        if (verdict.empty()) continue;  // not yet judged
        if (valid_ids && !valid_ids->count(id))
            throw DataError(path + ":" + std::to_string(lineno) + ": unknown pair_id '" + id +
                            "'");
        try {
            out.push_back({id, verdict_from_string(verdict)});
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

namespace {

int per100(size_t count, size_t total) {
    if (total == 0) return 0;
    double v = static_cast<double>(count) * 100.0 / static_cast<double>(total);
    return static_cast<int>(std::floor(v + 0.5));  // half away from zero
}

}  // namespace

Tabulation tabulate(const std::vector<Judgment>& judgments) {
    Tabulation tab;
    for (const Judgment& j : judgments) {
        switch (j.verdict) {
            case Verdict::Correct: ++tab.correct; break;
            case Verdict::Partial: ++tab.partial; break;
            case Verdict::Incorrect: ++tab.incorrect; break;
        }
    }
    tab.per100_correct = per100(tab.correct, tab.total());
    tab.per100_partial = per100(tab.partial, tab.total());
    tab.per100_incorrect = per100(tab.incorrect, tab.total());
    return tab;
}

bool GoldPair::operator<(const GoldPair& o) const {
    if (ja_article != o.ja_article) return ja_article < o.ja_article;
    if (ja_idx != o.ja_idx) return ja_idx < o.ja_idx;
    if (es_article != o.es_article) return es_article < o.es_article;
    return es_idx < o.es_idx;
}

std::vector<GoldPair> load_gold(const std::string& path) {
    std::vector<GoldPair> gold;
    size_t lineno = 0;
    for (const std::string& line : read_lines(path)) {
        ++lineno;
        std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        if (cols.size() != 4)
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": expected 4 tab-separated columns");
        try {
            gold.push_back({cols[0], std::stoul(cols[1]), cols[2], std::stoul(cols[3])});
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(lineno) + ": malformed sentence index");
        }
    }
    std::sort(gold.begin(), gold.end());
    gold.erase(std::unique(gold.begin(), gold.end(),
                           [](const GoldPair& a, const GoldPair& b) {
                               return !(a < b) && !(b < a);
                           }),
               gold.end());
    return gold;
}

GoldScore score_against_gold(const std::vector<AlignmentRecord>& rows,
                             const std::vector<GoldPair>& gold) {
    std::set<GoldPair> want(gold.begin(), gold.end());
    GoldScore score;
    score.gold_total = want.size();
    for (const AlignmentRecord& r : rows) {
        if (r.label != AlignLabel::Aligned) continue;
        ++score.output_total;
        if (want.count({r.ja_article, r.ja_idx, r.es_article, r.es_idx})) ++score.hits;
    }
    if (score.output_total > 0)
        score.precision = static_cast<double>(score.hits) / score.output_total;
    if (score.gold_total > 0) score.recall = static_cast<double>(score.hits) / score.gold_total;
    if (score.precision + score.recall > 0)
        score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
    return score;
}

std::string format_comparison(const std::string& left_name, const Tabulation& left,
                              const std::string& right_name, const Tabulation& right) {
    auto row = [](const std::string& name, const Tabulation& t) {
        std::string s = name;
        if (s.size() < 12) s.resize(12, ' ');
        s += " correct " + std::to_string(t.per100_correct);
        s += "  partial " + std::to_string(t.per100_partial);
        s += "  incorrect " + std::to_string(t.per100_incorrect);
        s += "  (n=" + std::to_string(t.total()) + ")\n";
        return s;
    };
    std::string out = "judged pairs per 100\n";
    out += row(left_name, left);
    out += row(right_name, right);
    return out;
}

}  // namespace corpusforge
