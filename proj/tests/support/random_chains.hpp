#pragma once

// Test-only generators and reference counters for property tests.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "keyfactor/model.hpp"

namespace keyfactor::testkit {

struct PoolEntry {
    FactorCategory category;
    std::string name;
};

struct CorpusShape {
    std::size_t min_chains = 0;
    std::size_t max_chains = 100;
    std::size_t min_length = 2;
    std::size_t max_length = 20;
    std::size_t max_pool = 60;
    bool spelling_variants = true;  // random case / spacing of the same factor
    bool exotic_names = false;      // quotes, backslashes, tabs, UTF-8
};

inline std::string respell(const std::string &name, std::mt19937_64 &rng) {
    std::string out;
    if (rng() % 4 == 0) out += "  ";
    for (char c : name) {
        if (c == ' ' && rng() % 3 == 0) {
            out += "   ";
            continue;
        }
        out.push_back(rng() % 2 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
    }
    if (rng() % 4 == 0) out += " ";
    return out;
}

inline std::vector<PoolEntry> make_pool(std::mt19937_64 &rng, const CorpusShape &shape) {
    static const char *const kExotic[] = {"quote \"inside\"", "back\\slash", "tab\there", "Fühler Ω", "a,b", "#hash"};
    const std::size_t size = 6 + rng() % (shape.max_pool - 6);  // 6..max_pool-1, plus one below
    const std::size_t harms = 1 + rng() % 3;
    std::vector<PoolEntry> pool;
    for (std::size_t i = 0; i < size; ++i) {
        const auto category = i < harms ? FactorCategory::Harm : kAllCategories[rng() % 6];
        std::string name = "factor " + std::to_string(i);
        if (shape.exotic_names && rng() % 5 == 0) name += std::string(" ") + kExotic[rng() % 6];
        pool.push_back({category, std::move(name)});
    }
    // Shared names across categories must stay distinct factors; keep a collision on purpose.
    pool.push_back({FactorCategory::Effect, pool[harms].name});
    return pool;
}

inline ChainSet random_chain_set(std::mt19937_64 &rng, const CorpusShape &shape = {}) {
    const auto pool = make_pool(rng, shape);
    std::vector<std::size_t> harms;
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        (pool[i].category == FactorCategory::Harm ? harms : others).push_back(i);
    }

    ChainSet chains(shape.min_chains + rng() % (shape.max_chains - shape.min_chains + 1));
    for (std::size_t c = 0; c < chains.size(); ++c) {
        auto &chain = chains[c];
        chain.source_alert = "A12/" + std::to_string(10000 + rng() % 90000) + "/2" + std::to_string(rng() % 5);
        chain.case_label = "case " + std::to_string(c);
        const std::size_t len = shape.min_length + rng() % (shape.max_length - shape.min_length + 1);
        std::size_t prev = pool.size();
        for (std::size_t t = 0; t + 1 < len; ++t) {
            std::size_t pick = others[rng() % others.size()];
            // Two pool entries may share category and name; compare identities, not indices.
            while (prev < pool.size() && pool[pick].category == pool[prev].category &&
                   pool[pick].name == pool[prev].name) {
                pick = others[rng() % others.size()];
            }
            const auto &e = pool[pick];
            chain.steps.push_back({e.category, shape.spelling_variants ? respell(e.name, rng) : e.name});
            prev = pick;
        }
        const auto &harm = pool[harms[rng() % harms.size()]];
        chain.steps.push_back({harm.category, shape.spelling_variants ? respell(harm.name, rng) : harm.name});
    }
    return chains;
}

/// Reference transition counts keyed by factor identity.
using PairCounts = std::map<std::pair<FactorKey, FactorKey>, std::uint64_t>;

inline PairCounts count_pairs(const ChainSet &chains) {
    PairCounts out;
    for (const auto &chain : chains) {
        for (std::size_t t = 0; t + 1 < chain.steps.size(); ++t) {
            const FactorKey from{chain.steps[t].category, normalize_name(chain.steps[t].name)};
            const FactorKey to{chain.steps[t + 1].category, normalize_name(chain.steps[t + 1].name)};
            ++out[{from, to}];
        }
    }
    return out;
}

inline std::string mutate(std::string doc, std::mt19937_64 &rng) {
    static const std::string kNoise = "\"\\#:-\n\r\t abcXYZ\xC3\xBC\x80\xFF";
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < edits; ++i) {
        const std::size_t pos = doc.empty() ? 0 : rng() % (doc.size() + 1);
        switch (rng() % 5) {
        case 0: doc.insert(doc.begin() + static_cast<std::ptrdiff_t>(pos), kNoise[rng() % kNoise.size()]); break;
        case 1:
            if (!doc.empty() && pos < doc.size()) doc.erase(pos, 1 + rng() % 8);
            break;
        case 2: doc.resize(pos); break;
        case 3: doc.insert(pos, rng() % 2 ? "\n---\n" : "\ngizmo \"x\"\n"); break;
        case 4:
            if (pos < doc.size()) doc[pos] = static_cast<char>(rng() % 256);
            break;
        }
    }
    return doc;
}

}  // namespace keyfactor::testkit
