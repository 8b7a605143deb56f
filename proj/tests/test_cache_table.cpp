#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <strata/cache.hpp>
#include <strata/table.hpp>

using namespace strata;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("cache round-trips byte-identically") {
    StrataSequences seq(6);
    const std::string blob = cache_to_string(seq);
    const StrataSequences loaded = load_cache_string(blob);
    CHECK(loaded.g_max() == 6);
    for (long g = 1; g <= 6; ++g) {
        CHECK(loaded.a(g) == seq.a(g));
        CHECK(loaded.d(g) == seq.d(g));
    }
    CHECK(cache_to_string(loaded) == blob);

    const auto path = std::filesystem::temp_directory_path() / "strata_cache_test.json";
    save_cache(seq, path.string());
    const StrataSequences from_disk = load_cache(path.string());
    CHECK(cache_to_string(from_disk) == blob);
    std::filesystem::remove(path);
}

TEST_CASE("corrupt caches are refused with a diagnostic") {
    StrataSequences seq(3);
    const std::string good = cache_to_string(seq);

    CHECK_THROWS_AS(load_cache_string("not json at all"), CacheError);
    CHECK_THROWS_AS(load_cache_string("{}"), CacheError);
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"format_version\": 1", "\"format_version\": 2")),
                    CacheError);
    // non-contiguous rows
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"g\": 2", "\"g\": 5")), CacheError);
    // fraction not in lowest terms
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"a_num\": \"1\",\n      \"a_den\": \"24\"",
                                                   "\"a_num\": \"2\",\n      \"a_den\": \"48\"")),
                    CacheError);
    // negative denominator
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"d_den\": \"2\"", "\"d_den\": \"-2\"")),
                    CacheError);
    // non-canonical integer string
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"a_num\": \"1\"", "\"a_num\": \"01\"")),
                    CacheError);
    // b disagrees with the Bernoulli formula
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"b_num\": \"7\"", "\"b_num\": \"5\"")),
                    CacheError);
    // positivity violated
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"d_num\": \"1\",", "\"d_num\": \"-1\",")),
                    CacheError);
    // number where a string is required
    CHECK_THROWS_AS(load_cache_string(replace_once(good, "\"a_num\": \"1\"", "\"a_num\": 1")),
                    CacheError);
}

TEST_CASE("well-formed but slightly off values load; verification is a separate concern") {
    StrataSequences seq(3);
    // nudge a_3 within the inequality window: still canonical, positive, below the bound
    std::string text = cache_to_string(seq);
    text = replace_once(text, "\"a_num\": \"305\"", "\"a_num\": \"307\"");
    const StrataSequences loaded = load_cache_string(text);
    CHECK(loaded.a(3) == rat(307, 580608));
    CHECK(loaded.a(3) != seq.a(3));
}

TEST_CASE("table rendering is deterministic and carries its parameters") {
    StrataSequences seq(3);
    const auto rows = make_rows(seq, 3, 128);
    const std::string csv = render_table(rows, TableFormat::csv, 128, 3);
    CHECK(csv == render_table(rows, TableFormat::csv, 128, 3));
    CHECK(csv.find("# precision_bits: 128") != std::string::npos);
    CHECK(csv.find("1/3·pi^2") != std::string::npos);
    CHECK(csv.find("61/108864·pi^6") != std::string::npos);
    CHECK(csv.find("5733/1525·pi^-2") != std::string::npos);
    CHECK(csv.find("g,a,d,") != std::string::npos);

    const std::string json = render_table(rows, TableFormat::json, 128, 3);
    const auto j = nlohmann::json::parse(json);
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][2]["vol_exact"] == "61/108864·pi^6");
    CHECK(j["precision_bits"] == 128);
}

TEST_CASE("digit count tracks precision with clamping") {
    CHECK(table_digits(64) == 19);
    CHECK(table_digits(128) == 38);
    CHECK(table_digits(256) == 50);
    CHECK(table_digits(4096) == 50);
}

TEST_CASE("plot data excludes the degenerate row only under the theorem normalization") {
    StrataSequences seq(4);
    const auto rows = make_rows(seq, 4, 128);
    const std::string conj = render_plotdata(rows, Normalization::conjecture, 128);
    const std::string thm = render_plotdata(rows, Normalization::theorem, 128);
    CHECK(conj.find("\n1,") != std::string::npos);
    CHECK(thm.find("\n1,") == std::string::npos);
    CHECK(thm.find("\n2,") != std::string::npos);
    CHECK(conj.find("# normalization: conjecture") != std::string::npos);

    // g=2 row, conjecture normalization: g·|eps1| = 2·0.39119... = 0.78238...
    const auto pos = conj.find("\n2,");
    REQUIRE(pos != std::string::npos);
    CHECK(conj.substr(pos + 3, 7) == "7.82386");
}
