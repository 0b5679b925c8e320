#include "corpusforge/config.h"

#include <fstream>

#include "doctest.h"
#include "test_support.h"

using namespace corpusforge;
using namespace testsupport;

static Config parse(const std::string& text) { return Config::parse(text, "test.cfg"); }

TEST_CASE("config parses sections, comments, and blank lines") {
    Config cfg = parse(
        "# top comment\n"
        "[paths]\n"
        "workdir = work\n"
        "\n"
        "[align]\n"
        "alpha=0.5   # inline comment\n"
        "tau_accept = 0.6  \n");
    CHECK(cfg.get("paths", "workdir") == "work");
    CHECK(cfg.get_double_or("align", "alpha", 0.0) == doctest::Approx(0.5));
    CHECK(cfg.get_double_or("align", "tau_accept", 0.0) == doctest::Approx(0.6));
}

TEST_CASE("missing mandatory key names section.key and the origin") {
    Config cfg = parse("[paths]\nworkdir=w\n");
    CHECK_THROWS_WITH_AS(cfg.get("paths", "dump_ja"), doctest::Contains("paths.dump_ja"),
                         DataError);
    CHECK_THROWS_WITH_AS(cfg.get("paths", "dump_ja"), doctest::Contains("test.cfg"), DataError);
}

TEST_CASE("typed getters validate the full token") {
    Config cfg = parse("[x]\na=12\nb=12.5x\nc=yes\nd=off\ne=1.25\nf=12abc\ng=maybe\n");
    CHECK(cfg.get_long_or("x", "a", 0) == 12);
    CHECK(cfg.get_bool_or("x", "c", false));
    CHECK(!cfg.get_bool_or("x", "d", true));
    CHECK(cfg.get_double_or("x", "e", 0.0) == doctest::Approx(1.25));
    CHECK_THROWS_AS(cfg.get_double_or("x", "b", 0.0), DataError);
    CHECK_THROWS_AS(cfg.get_long_or("x", "f", 0), DataError);
    CHECK_THROWS_AS(cfg.get_bool_or("x", "g", false), DataError);
}

TEST_CASE("fallbacks apply only when the key is absent") {
    Config cfg = parse("[align]\nalpha=0.7\n");
    CHECK(cfg.get_double_or("align", "alpha", 0.5) == doctest::Approx(0.7));
    CHECK(cfg.get_double_or("align", "tau_accept", 0.6) == doctest::Approx(0.6));
    CHECK(cfg.get_or("output", "format", "tsv") == "tsv");
    CHECK(cfg.get_long_or("eval", "sample_size", 100) == 100);
    CHECK(cfg.get_bool_or("rules", "enable_cop", true));
}

TEST_CASE("keys outside any section are rejected") {
    CHECK_THROWS_AS(parse("workdir=w\n[paths]\n"), DataError);
}

TEST_CASE("malformed lines are rejected with their line number") {
    CHECK_THROWS_WITH_AS(parse("[paths]\nnot a key value line\n"), doctest::Contains("test.cfg:2"),
                         DataError);
    CHECK_THROWS_AS(parse("[broken\nk=v\n"), DataError);
}

TEST_CASE("duplicate key keeps the last value") {
    Config cfg = parse("[x]\na=1\na=2\n");
    CHECK(cfg.get_long_or("x", "a", 0) == 2);
}

TEST_CASE("has reports presence without touching values") {
    Config cfg = parse("[x]\na=1\n");
    CHECK(cfg.has("x", "a"));
    CHECK(!cfg.has("x", "b"));
    CHECK(!cfg.has("y", "a"));
}

TEST_CASE("load reads a file and reports missing files") {
    TempDir tmp("cfg");
    auto path = tmp.file("c.cfg");
    {
        std::ofstream out(path);
        out << "[paths]\nworkdir=w\n";
    }
    Config cfg = Config::load(path);
    CHECK(cfg.get("paths", "workdir") == "w");
    CHECK_THROWS_AS(Config::load(tmp.file("absent.cfg")), DataError);
}

TEST_CASE("the checked-in fixture config parses") {
    Config cfg = Config::load(fixture("corpus.cfg"));
    CHECK(cfg.get("paths", "workdir") == "work");
    CHECK(cfg.get_double_or("align", "tau_accept", 0.0) == doctest::Approx(0.6));
    CHECK(cfg.get_or("eval", "strategy", "") == "uniform");
}
