#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "recursion.hpp"

namespace strata {

// Any defect detected while loading (malformed JSON, schema violations,
// non-canonical numbers, failed positivity/inequality validation) is
// corruption; value-level disagreement with a recomputation is not detectable
// at load time and is left to the verification pipeline.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kCacheFormatVersion = 1;

inline std::string cache_to_string(const StrataSequences& seq) {
    nlohmann::ordered_json j;
    j["format_version"] = kCacheFormatVersion;
    j["rows"] = nlohmann::ordered_json::array();
    for (long g = 1; g <= seq.g_max(); ++g) {
        nlohmann::ordered_json row;
        row["g"] = g;
        row["a_num"] = seq.a(g).get_num().get_str();
        row["a_den"] = seq.a(g).get_den().get_str();
        row["d_num"] = seq.d(g).get_num().get_str();
        row["d_den"] = seq.d(g).get_den().get_str();
        row["b_num"] = seq.b(g).get_num().get_str();
        row["b_den"] = seq.b(g).get_den().get_str();
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

namespace detail {

inline Rational parse_cached_fraction(const nlohmann::json& row, const std::string& num_key,
                                      const std::string& den_key) {
    if (!row.contains(num_key) || !row.contains(den_key) || !row[num_key].is_string() ||
        !row[den_key].is_string())
        throw CacheError("cache row missing string field " + num_key + "/" + den_key);
    const std::string ns = row[num_key].get<std::string>();
    const std::string ds = row[den_key].get<std::string>();
    if (!is_canonical_integer_string(ns) || !is_canonical_integer_string(ds))
        throw CacheError("cache field " + num_key + "/" + den_key + " is not a canonical integer");
    const Integer n = parse_integer(ns);
    const Integer d = parse_integer(ds);
    if (d <= 0) throw CacheError("cache field " + den_key + " must be positive");
    Rational q(n, d);
    q.canonicalize();
    if (q.get_num() != n || q.get_den() != d)
        throw CacheError("cache fraction " + num_key + "/" + den_key + " is not in lowest terms");
    return q;
}

}  // namespace detail

inline StrataSequences load_cache_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw CacheError(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != kCacheFormatVersion)
        throw CacheError("cache format_version missing or unsupported");
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw CacheError("cache rows missing or empty");

    std::vector<Rational> a, d;
    long expected_g = 1;
    for (const auto& row : j["rows"]) {
        if (!row.is_object() || !row.contains("g") || !row["g"].is_number_integer())
            throw CacheError("cache row missing integer g");
        if (row["g"].get<long>() != expected_g)
            throw CacheError("cache rows are not contiguous from g = 1");
        a.push_back(detail::parse_cached_fraction(row, "a_num", "a_den"));
        d.push_back(detail::parse_cached_fraction(row, "d_num", "d_den"));
        const Rational b = detail::parse_cached_fraction(row, "b_num", "b_den");
        if (b != b_coeff(expected_g))
            throw CacheError("cache b value disagrees with the Bernoulli formula at g = " +
                             std::to_string(expected_g));
        ++expected_g;
    }
    StrataSequences seq(std::move(a), std::move(d));
    std::string why;
    if (!check_inequalities(seq, seq.g_max(), &why))
        throw CacheError("cache values fail validation: " + why);
    return seq;
}

inline StrataSequences load_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_cache_string(buf.str());
}

inline void save_cache(const StrataSequences& seq, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache file " + path + " for writing");
    out << cache_to_string(seq);
    if (!out) throw CacheError("failed writing cache file " + path);
}

}  // namespace strata
