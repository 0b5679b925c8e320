#include "corpusforge/textprep.h"

#include <fstream>

#include "doctest.h"
#include "test_support.h"

using namespace corpusforge;
using namespace testsupport;

namespace {

std::vector<std::string> texts(const std::vector<SentenceSpan>& spans) {
    std::vector<std::string> out;
    for (const auto& s : spans) out.push_back(s.text);
    return out;
}

}  // namespace

TEST_CASE("japanese splits after every terminator") {
    auto spans = split_sentences("犬は動物です。水は透明ですか？走れ！最後", "ja");
    CHECK(texts(spans) ==
          std::vector<std::string>{"犬は動物です。", "水は透明ですか？", "走れ！", "最後"});
}

TEST_CASE("japanese full stop inside a sentence still splits") {
    auto spans = split_sentences("一。二。", "ja");
    CHECK(texts(spans) == std::vector<std::string>{"一。", "二。"});
}

TEST_CASE("spanish splits on . ! ? followed by space and capital or opener") {
    auto spans = split_sentences(
        "El perro bebe agua. La casa es vieja. ¿Es esto un libro? Sí.", "es");
    CHECK(texts(spans) == std::vector<std::string>{"El perro bebe agua.", "La casa es vieja.",
                                                   "¿Es esto un libro?", "Sí."});
}

TEST_CASE("spanish guards abbreviations, initials, and decimals") {
    auto spans = split_sentences("El Sr. García vive aquí. A. Einstein nació en 1879. "
                                 "El precio es 3.5 euros. Fin.",
                                 "es");
    CHECK(texts(spans) ==
          std::vector<std::string>{"El Sr. García vive aquí.", "A. Einstein nació en 1879.",
                                   "El precio es 3.5 euros.", "Fin."});
}

TEST_CASE("spanish lowercase continuation does not split") {
    auto spans = split_sentences("La web es example.com y funciona. Fin.", "es");
    CHECK(texts(spans) == std::vector<std::string>{"La web es example.com y funciona.", "Fin."});
}

TEST_CASE("inverted punctuation opens a new sentence") {
    auto spans = split_sentences("Hola. ¡Qué día! ¿Por qué?", "es");
    CHECK(texts(spans) == std::vector<std::string>{"Hola.", "¡Qué día!", "¿Por qué?"});
}

TEST_CASE("spans cover their text in the original string") {
    std::string text = "犬は動物です。水は透明です。";
    for (const auto& span : split_sentences(text, "ja")) {
        CHECK(text.substr(span.begin, span.end - span.begin) == span.text);
        CHECK(span.begin < span.end);
    }
    std::string es = "Uno dos. Tres cuatro.";
    for (const auto& span : split_sentences(es, "es")) {
        CHECK(es.substr(span.begin, span.end - span.begin) == span.text);
    }
}

TEST_CASE("empty and whitespace-only input yields no sentences") {
    CHECK(split_sentences("", "ja").empty());
    CHECK(split_sentences("   \n ", "es").empty());
}

TEST_CASE("sentence_records assigns links to the sentence holding their anchor") {
    CleanArticle art;
    art.lang = "es";
    art.title = "Perro";
    art.text = "El perro bebe agua. El perro es un animal.";
    art.links = {{"agua", "agua"}, {"animal", "animal"}};
    art.link_offsets = {static_cast<size_t>(art.text.find("agua")),
                        static_cast<size_t>(art.text.find("animal"))};
    auto records = sentence_records(art);
    REQUIRE(records.size() == 2);
    CHECK(records[0].article == "Perro");
    CHECK(records[0].index == 0);
    REQUIRE(records[0].links.size() == 1);
    CHECK(records[0].links[0].target == "agua");
    REQUIRE(records[1].links.size() == 1);
    CHECK(records[1].links[0].target == "animal");
}

TEST_CASE("a link on the boundary belongs to the sentence containing its offset") {
    CleanArticle art;
    art.lang = "ja";
    art.title = "犬";
    art.text = "犬は動物です。水を飲みます。";
    art.links = {{"動物", "動物"}, {"水", "水"}};
    art.link_offsets = {static_cast<size_t>(art.text.find("動物")),
                        static_cast<size_t>(art.text.find("水"))};
    auto records = sentence_records(art);
    REQUIRE(records.size() == 2);
    CHECK(records[0].links.size() == 1);
    CHECK(records[1].links.size() == 1);
    CHECK(records[1].links[0].target == "水");
}

TEST_CASE("stopword matching is case-insensitive") {
    auto ja = StopwordList::builtin_ja();
    auto es = StopwordList::builtin_es();
    CHECK(ja.contains("こと"));
    CHECK(!ja.contains("犬"));
    CHECK(es.contains("el"));
    CHECK(es.contains("El"));
    CHECK(es.contains("DE"));
    CHECK(!es.contains("perro"));
}

TEST_CASE("stopword files load with comments skipped") {
    TempDir tmp("stop");
    auto p = tmp.file("s.txt");
    {
        std::ofstream out(p);
        out << "# comment\nuno\nDos\n\n";
    }
    auto list = StopwordList::load(p);
    CHECK(list.size() == 2);
    CHECK(list.contains("uno"));
    CHECK(list.contains("dos"));
    CHECK(list.contains("DOS"));
    CHECK_THROWS_AS(StopwordList::load(tmp.file("absent.txt")), DataError);
}

TEST_CASE("the checked-in stopword files load") {
    auto ja = StopwordList::load(data_file("stopwords_ja.txt"));
    auto es = StopwordList::load(data_file("stopwords_es.txt"));
    CHECK(ja.contains("こと"));
    CHECK(es.contains("del"));
}
