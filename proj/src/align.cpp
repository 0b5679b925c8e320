#include "corpusforge/align.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include <omp.h>

namespace corpusforge {

namespace {

bool is_content(const Token& tok) {
    switch (tok.tag) {
        case Tag::Noun:
        case Tag::Propn:
        case Tag::Verb:
        case Tag::Adj:
        case Tag::Adv:
        case Tag::Num:
            return true;
        default:
            return false;
    }
}

constexpr size_t kUnitNgramMax = 4;

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

std::string fmt6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

Overlap lexical_overlap(const TaggedSentence& ja, const TaggedSentence& es,
                        const BilingualLexicon& lexicon, const StopwordList& stop_ja,
                        const StopwordList& stop_es) {
    // T: lowercased translations of Japanese units the lexicon knows.
    // An element is "nounish" when any contributing unit is a noun, a proper
    // noun, or a multi-token term.
    std::map<std::string, bool> t_set;
    std::vector<const Token*> ja_words;
    for (const Token& tok : ja.tokens)
        if (!tok.is(Tag::Punct)) ja_words.push_back(&tok);

    for (size_t i = 0; i < ja_words.size(); ++i) {
        const Token& tok = *ja_words[i];
        if (is_content(tok) && !stop_ja.contains(tok.surface)) {
            for (const std::string& t : lexicon.translate_ja(tok.surface)) {
                bool nounish = tok.is(Tag::Noun) || tok.is(Tag::Propn);
                auto [it, inserted] = t_set.try_emplace(lower(t), nounish);
                if (!inserted) it->second = it->second || nounish;
            }
        }
        std::string unit = tok.surface;
        for (size_t n = 2; n <= kUnitNgramMax && i + n <= ja_words.size(); ++n) {
            unit += ja_words[i + n - 1]->surface;
            for (const std::string& t : lexicon.translate_ja(unit)) {
                auto [it, inserted] = t_set.try_emplace(lower(t), true);
                if (!inserted) it->second = true;
            }
        }
    }

    // S: lowercased Spanish content surfaces plus lexicon-known phrases.
    std::set<std::string> s_set;
    std::vector<std::string> es_words;
    for (const Token& tok : es.tokens) {
        if (tok.is(Tag::Punct)) continue;
        es_words.push_back(tok.surface);
        if (is_content(tok) && !stop_es.contains(tok.surface)) s_set.insert(lower(tok.surface));
    }
    for (size_t i = 0; i < es_words.size(); ++i) {
        std::string phrase = es_words[i];
        for (size_t n = 2; n <= kUnitNgramMax && i + n <= es_words.size(); ++n) {
            phrase += ' ';
            phrase += es_words[i + n - 1];
            if (lexicon.has_es(phrase)) s_set.insert(lower(phrase));
        }
    }

    Overlap result;
    if (t_set.empty() && s_set.empty()) return result;
    size_t inter = 0, uni = s_set.size();
    for (const auto& [term, nounish] : t_set) {
        if (s_set.count(term)) {
            ++inter;
            if (nounish) ++result.matched_nouns;
        } else {
            ++uni;
        }
    }
    result.value = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
    return result;
}

PairScore score_pair(const TaggedSentence& ja, const TaggedSentence& es, size_t ja_idx,
                     size_t es_idx, const RuleEngine& engine, const BilingualLexicon& lexicon,
                     const StopwordList& stop_ja, const StopwordList& stop_es,
                     const AlignConfig& cfg) {
    PairScore out;
    RuleScore rs = RuleEngine::score(engine.check(ja, es));
    Overlap ov = lexical_overlap(ja, es, lexicon, stop_ja, stop_es);
    out.rule = rs.score;
    out.overlap = ov.value;
    out.matched_nouns = ov.matched_nouns;
    out.hard_reject = rs.hard_reject;
    if (out.hard_reject) {
        out.total = 0.0;
        return out;
    }
    double bonus = (ja_idx == 0 && es_idx == 0) ? cfg.first_sentence_bonus : 0.0;
    out.total = clamp01(cfg.alpha * out.rule + (1.0 - cfg.alpha) * out.overlap + bonus);
    return out;
}

std::vector<PairScore> score_matrix_serial(const std::vector<TaggedSentence>& ja,
                                           const std::vector<TaggedSentence>& es,
                                           const RuleEngine& engine,
                                           const BilingualLexicon& lexicon,
                                           const StopwordList& stop_ja,
                                           const StopwordList& stop_es, const AlignConfig& cfg) {
    std::vector<PairScore> matrix(ja.size() * es.size());
    for (size_t i = 0; i < ja.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            matrix[i * es.size() + j] =
                score_pair(ja[i], es[j], i, j, engine, lexicon, stop_ja, stop_es, cfg);
    return matrix;
}

std::vector<PairScore> score_matrix_parallel(const std::vector<TaggedSentence>& ja,
                                             const std::vector<TaggedSentence>& es,
                                             const RuleEngine& engine,
                                             const BilingualLexicon& lexicon,
                                             const StopwordList& stop_ja,
                                             const StopwordList& stop_es,
                                             const AlignConfig& cfg) {
    std::vector<PairScore> matrix(ja.size() * es.size());
    const int64_t cells = static_cast<int64_t>(ja.size()) * static_cast<int64_t>(es.size());
    // Each cell is independent and lands in its own slot, so the schedule
    // cannot change the result.
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t c = 0; c < cells; ++c) {
        size_t i = static_cast<size_t>(c) / es.size();
        size_t j = static_cast<size_t>(c) % es.size();
        matrix[c] = score_pair(ja[i], es[j], i, j, engine, lexicon, stop_ja, stop_es, cfg);
    }
    return matrix;
}

std::string to_string(AlignLabel label) {
    switch (label) {
        case AlignLabel::Aligned: return "aligned";
        case AlignLabel::Partial: return "partial";
        case AlignLabel::Rejected: return "rejected";
    }
    return "rejected";
}

std::vector<Alignment> select_alignments(const std::vector<PairScore>& matrix, size_t n_ja,
                                         size_t n_es, const AlignConfig& cfg) {
    struct Cand {
        size_t i, j;
        double total;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < n_ja; ++i)
        for (size_t j = 0; j < n_es; ++j) {
            const PairScore& s = matrix[i * n_es + j];
            if (!s.hard_reject && s.total >= cfg.tau_accept) cands.push_back({i, j, s.total});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.total != b.total) return a.total > b.total;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<bool> ja_used(n_ja, false), es_used(n_es, false);
    std::vector<Alignment> result;
    for (const Cand& c : cands) {
        if (ja_used[c.i] || es_used[c.j]) continue;
        ja_used[c.i] = true;
        es_used[c.j] = true;
        result.push_back({c.i, c.j, matrix[c.i * n_es + c.j], AlignLabel::Aligned});
    }

    // Leftover Japanese sentences: best surviving candidate, partial label.
    for (size_t i = 0; i < n_ja; ++i) {
        if (ja_used[i]) continue;
        size_t best_j = n_es;
        for (size_t j = 0; j < n_es; ++j) {
            const PairScore& s = matrix[i * n_es + j];
            if (s.hard_reject) continue;
            if (cfg.partial_requires_noun && s.matched_nouns < 1) continue;
            if (s.total <= 0.0) continue;
            if (best_j == n_es || s.total > matrix[i * n_es + best_j].total) best_j = j;
        }
        if (best_j < n_es)
            result.push_back({i, best_j, matrix[i * n_es + best_j], AlignLabel::Partial});
    }

    std::sort(result.begin(), result.end(), [](const Alignment& a, const Alignment& b) {
        if (a.ja_idx != b.ja_idx) return a.ja_idx < b.ja_idx;
        return a.es_idx < b.es_idx;
    });
    return result;
}

double baseline_score(const std::vector<std::string>& ja_targets,
                      const std::vector<std::string>& es_targets, const std::string& ja_title,
                      const std::string& es_title, const BilingualLexicon& lexicon) {
    if (ja_targets.empty() && es_targets.empty()) return 0.0;

    std::set<std::string> left;
    auto add_ja = [&](const std::string& title) {
        for (const std::string& t : lexicon.translate_ja(title)) left.insert(lower(t));
    };
    for (const std::string& t : ja_targets) add_ja(t);
    add_ja(ja_title);

    std::set<std::string> right;
    for (const std::string& t : es_targets) right.insert(lower(t));
    right.insert(lower(es_title));

    if (left.empty() && right.empty()) return 0.0;
    size_t inter = 0;
    for (const std::string& t : left)
        if (right.count(t)) ++inter;
    size_t uni = left.size() + right.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<PairScore> baseline_matrix(const std::vector<SentenceRecord>& ja,
                                       const std::vector<SentenceRecord>& es,
                                       const RedirectMap& ja_redirects,
                                       const RedirectMap& es_redirects,
                                       const BilingualLexicon& lexicon) {
    auto targets = [](const SentenceRecord& rec, const RedirectMap& redirects) {
        std::vector<std::string> out;
        for (const Hyperlink& link : rec.links) out.push_back(redirects.resolve(link.target));
        return out;
    };
    std::vector<std::vector<std::string>> ja_targets, es_targets;
    for (const SentenceRecord& r : ja) ja_targets.push_back(targets(r, ja_redirects));
    for (const SentenceRecord& r : es) es_targets.push_back(targets(r, es_redirects));

    std::vector<PairScore> matrix(ja.size() * es.size());
    for (size_t i = 0; i < ja.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            PairScore s;
            s.rule = 0.0;
            s.overlap = baseline_score(ja_targets[i], es_targets[j], ja[i].article,
                                       es[j].article, lexicon);
            s.total = s.overlap;
            matrix[i * es.size() + j] = s;
        }
    return matrix;
}

std::string make_pair_id(const std::string& ja_article, size_t ja_idx,
                         const std::string& es_article, size_t es_idx) {
    return ja_article + "|" + std::to_string(ja_idx) + "|" + es_article + "|" +
           std::to_string(es_idx);
}

namespace {

const char* kTsvHeader =
    "pair_id\tja_article\tja_idx\tes_article\tes_idx\tja_text\tes_text\trule\toverlap\ttotal"
    "\tlabel\n";

AlignLabel label_from_string(const std::string& s) {
    if (s == "aligned") return AlignLabel::Aligned;
    if (s == "partial") return AlignLabel::Partial;
    if (s == "rejected") return AlignLabel::Rejected;
    throw DataError("unknown alignment label '" + s + "'");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

void write_alignments_tsv(const std::string& path, const std::vector<AlignmentRecord>& rows) {
    std::string out = kTsvHeader;
    for (const AlignmentRecord& r : rows) {
        out += r.pair_id;
        out += '\t';
        out += r.ja_article;
        out += '\t';
        out += std::to_string(r.ja_idx);
        out += '\t';
        out += r.es_article;
        out += '\t';
        out += std::to_string(r.es_idx);
        out += '\t';
        out += r.ja_text;
        out += '\t';
        out += r.es_text;
        out += '\t';
        out += fmt6(r.score.rule);
        out += '\t';
        out += fmt6(r.score.overlap);
        out += '\t';
        out += fmt6(r.score.total);
        out += '\t';
        out += to_string(r.label);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<AlignmentRecord> read_alignments_tsv(const std::string& path) {
    std::vector<AlignmentRecord> rows;
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || lines[0] + "\n" != kTsvHeader)
        throw DataError(path + ": missing or unexpected alignment TSV header");
    for (size_t n = 1; n < lines.size(); ++n) {
        if (lines[n].empty()) continue;
        std::vector<std::string> cols = split(lines[n], '\t');
        if (cols.size() != 11)
            throw DataError(path + ":" + std::to_string(n + 1) +
                            ": expected 11 columns, got " + std::to_string(cols.size()));
        AlignmentRecord r;
        r.pair_id = cols[0];
        r.ja_article = cols[1];
        r.ja_idx = std::stoul(cols[2]);
        r.es_article = cols[3];
        r.es_idx = std::stoul(cols[4]);
        r.ja_text = cols[5];
        r.es_text = cols[6];
        r.score.rule = std::stod(cols[7]);
        r.score.overlap = std::stod(cols[8]);
        r.score.total = std::stod(cols[9]);
        r.label = label_from_string(cols[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_alignments_tmx(const std::string& path, const std::vector<AlignmentRecord>& rows) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<tmx version=\"1.4\">\n";
    out += "  <header creationtool=\"corpusforge\" creationtoolversion=\"1.0\" "
           "datatype=\"plaintext\" segtype=\"sentence\" adminlang=\"en\" srclang=\"ja\" "
           "o-tmf=\"corpusforge\"/>\n";
    out += "  <body>\n";
    for (const AlignmentRecord& r : rows) {
        out += "    <tu tuid=\"" + xml_escape(r.pair_id) + "\">\n";
        out += "      <prop type=\"label\">" + to_string(r.label) + "</prop>\n";
        out += "      <prop type=\"total\">" + fmt6(r.score.total) + "</prop>\n";
        out += "      <tuv xml:lang=\"ja\"><seg>" + xml_escape(r.ja_text) + "</seg></tuv>\n";
        out += "      <tuv xml:lang=\"es\"><seg>" + xml_escape(r.es_text) + "</seg></tuv>\n";
        out += "    </tu>\n";
    }
    out += "  </body>\n";
    out += "</tmx>\n";
    write_file(path, out);
}

}  // namespace corpusforge
