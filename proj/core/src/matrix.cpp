#include "keyfactor/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace keyfactor {

// Collects factors in first-appearance order, then lays them out by category.
class MatrixAssembler {
public:
    std::size_t intern(FactorCategory category, std::string_view display_name) {
        return intern(make_factor(category, display_name));
    }

    std::size_t intern(const Factor &factor) {
        auto [it, inserted] = index_.try_emplace(factor.key(), seen_.size());
        if (inserted) {
            Factor f = factor;
            f.id = 0;
            seen_.push_back(std::move(f));
        }
        return it->second;
    }

    void add(std::size_t from, std::size_t to, Count n) { edges_[{from, to}] += n; }

    RelationshipMatrix finish() && {
        std::vector<std::size_t> order(seen_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return seen_[a].category < seen_[b].category;
        });
        std::vector<std::size_t> position(seen_.size());
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

        RelationshipMatrix m;
        const std::size_t n = seen_.size();
        m.factors_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.factors_.push_back(std::move(seen_[order[i]]));
            m.factors_.back().id = i + 1;
        }
        m.counts_.assign(n * n, 0);
        for (const auto &[edge, c] : edges_) {
            m.counts_[position[edge.first] * n + position[edge.second]] += c;
        }
        return m;
    }

private:
    std::map<FactorKey, std::size_t> index_;
    std::vector<Factor> seen_;
    std::map<std::pair<std::size_t, std::size_t>, Count> edges_;
};

std::optional<std::size_t> RelationshipMatrix::index_of(const FactorKey &key) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].category == key.category && factors_[i].canonical_key == key.canonical) return i;
    }
    return std::nullopt;
}

Count RelationshipMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

RelationshipMatrix build_matrix(const ChainSet &chains) {
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (auto v = validate_chain(chains[i]); !v.empty()) throw ChainValidationError(i, std::move(v));
    }
    MatrixAssembler assembler;
    for (const auto &chain : chains) {
        std::optional<std::size_t> prev;
        for (const auto &step : chain.steps) {
            const std::size_t cur = assembler.intern(step.category, step.name);
            if (prev) assembler.add(*prev, cur, 1);
            prev = cur;
        }
    }
    return std::move(assembler).finish();
}

RelationshipMatrix merge(const RelationshipMatrix &a, const RelationshipMatrix &b) {
    MatrixAssembler assembler;
    for (const auto *m : {&a, &b}) {
        std::vector<std::size_t> local;
        local.reserve(m->size());
        for (const auto &f : m->factors()) local.push_back(assembler.intern(f));
        for (std::size_t r = 0; r < m->size(); ++r) {
            for (std::size_t c = 0; c < m->size(); ++c) {
                if (const Count n = m->count(r, c); n != 0) assembler.add(local[r], local[c], n);
            }
        }
    }
    return std::move(assembler).finish();
}

SumsTable sums(const RelationshipMatrix &m) {
    SumsTable table;
    table.reserve(m.size());
    for (const auto &f : m.factors()) table.push_back({f, 0, 0});
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            const Count n = m.count(r, c);
            table[r].active += n;
            table[c].passive += n;
        }
    }
    return table;
}

SumsTable brute_force_sums(const ChainSet &chains) {
    struct Entry {
        FactorCategory category;
        std::string key;
        std::string display;
        Count active = 0;
        Count passive = 0;
    };
    std::vector<Entry> flat;
    auto lookup = [&](const ChainStep &step) -> Entry & {
        const std::string key = normalize_name(step.name);
        for (auto &e : flat) {
            if (e.category == step.category && e.key == key) return e;
        }
        flat.push_back({step.category, key, step.name});
        return flat.back();
    };

    for (const auto &chain : chains) {
        // Register every occurrence so isolated factors still get a row.
        for (const auto &step : chain.steps) lookup(step);
        for (std::size_t t = 0; t + 1 < chain.steps.size(); ++t) {
            lookup(chain.steps[t]).active += 1;
            lookup(chain.steps[t + 1]).passive += 1;
        }
    }

    SumsTable out;
    std::size_t id = 0;
    for (const auto category : kAllCategories) {
        for (const auto &e : flat) {
            if (e.category != category) continue;
            out.push_back({Factor{e.category, e.display, e.key, ++id}, e.active, e.passive});
        }
    }
    return out;
}

}  // namespace keyfactor
