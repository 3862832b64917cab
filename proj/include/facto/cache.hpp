#pragma once

// File-backed memo for p(alpha). Text format, one entry per line:
//   VPCACHE v1
//   a1,a2,...,ar<TAB>value
// Entries sorted length-lexicographically; duplicates and value conflicts
// are hard errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "facto/bignum.hpp"
#include "facto/errors.hpp"
#include "facto/vector_partitions.hpp"

namespace facto {

struct LengthLex {
    bool operator()(const Alpha& a, const Alpha& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.comps < b.comps;
    }
};

struct CacheFile {
    std::map<Alpha, BigNat, LengthLex> entries;

    bool operator==(const CacheFile&) const = default;
};

inline constexpr const char* kCacheHeader = "VPCACHE v1";

inline CacheFile cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line)) throw parse_error(1, "missing header");
    if (line != kCacheHeader) throw parse_error(1, "bad header (expected '" + std::string(kCacheHeader) + "')");
    CacheFile cf;
    const Alpha* prev = nullptr;
    LengthLex less;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw parse_error(lineno, "missing tab separator");
        std::vector<unsigned> comps;
        std::stringstream key(line.substr(0, tab));
        std::string tok;
        while (std::getline(key, tok, ',')) {
            try {
                const long v = std::stol(tok);
                if (v < 1) throw std::invalid_argument("nonpositive");
                comps.push_back((unsigned)v);
            } catch (const std::exception&) {
                throw parse_error(lineno, "bad component '" + tok + "'");
            }
        }
        if (comps.empty()) throw parse_error(lineno, "empty key");
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i] < comps[i - 1]) throw parse_error(lineno, "key not canonical");
        BigNat value;
        const std::string vstr = line.substr(tab + 1);
        if (vstr.empty() || mpz_set_str(value.get_mpz_t(), vstr.c_str(), 10) != 0 || value < 1)
            throw parse_error(lineno, "bad value '" + vstr + "'");
        Alpha key_alpha{std::move(comps)};
        if (prev && !less(*prev, key_alpha))
            throw parse_error(lineno, "keys out of order or duplicated");
        auto [it, inserted] = cf.entries.emplace(std::move(key_alpha), std::move(value));
        if (!inserted) throw parse_error(lineno, "duplicate key");
        prev = &it->first;
    }
    return cf;
}

// Atomic write: temp file in the same directory, then rename. Output is
// byte-stable for identical content.
inline void cache_store(const CacheFile& cf, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache_store: cannot write " + tmp.string());
        out << kCacheHeader << '\n';
        for (const auto& [key, value] : cf.entries) {
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (i) out << ',';
                out << key.comps[i];
            }
            out << '\t' << value.get_str() << '\n';
        }
        out.flush();
        if (!out) throw std::runtime_error("cache_store: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

inline CacheFile cache_merge(const CacheFile& a, const CacheFile& b) {
    CacheFile out = a;
    for (const auto& [key, value] : b.entries) {
        auto [it, inserted] = out.entries.emplace(key, value);
        if (!inserted && it->second != value) {
            std::string k;
            for (std::size_t i = 0; i < key.size(); ++i)
                k += (i ? "," : "") + std::to_string(key.comps[i]);
            throw conflict_error("cache conflict at key (" + k + "): " + it->second.get_str() +
                                 " vs " + value.get_str());
        }
    }
    return out;
}

// Seed the in-process p(alpha) memo from a loaded cache; conflicting values
// against already-computed entries are fatal.
inline void cache_seed_memo(const CacheFile& cf) {
    auto& memo = detail::AlphaMemo::instance();
    std::lock_guard lock(memo.mu);
    for (const auto& [key, value] : cf.entries) {
        auto [it, inserted] = memo.table.emplace(key, value);
        if (!inserted && it->second != value)
            throw conflict_error("cache value disagrees with computed p(alpha)");
    }
}

inline CacheFile cache_snapshot_memo() {
    auto& memo = detail::AlphaMemo::instance();
    std::lock_guard lock(memo.mu);
    CacheFile cf;
    for (const auto& [key, value] : memo.table) cf.entries.emplace(key, value);
    return cf;
}

} // namespace facto
