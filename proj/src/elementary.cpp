#include "arrpot/elementary.hpp"

#include "arrpot/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrpot {

std::vector<std::size_t> ElementarySubarrangement::type() const {
    std::vector<std::size_t> lambda;
    for (const auto& block : blocks) lambda.push_back(block.size() - 1);
    return lambda;
}

std::vector<std::size_t> ElementarySubarrangement::partial_ranks() const {
    std::vector<std::size_t> ranks;
    std::size_t sum = 0;
    for (const auto& block : blocks) ranks.push_back(sum += block.size() - 1);
    return ranks;
}

IndexTuple ElementarySubarrangement::prefix_union(std::size_t h) const {
    IndexTuple out;
    for (std::size_t i = 0; i < h && i < blocks.size(); ++i) out.insert(out.end(), blocks[i].begin(), blocks[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rank of the prefix equals `expected` and survives removing any one index.
bool prefix_ok(const ArrangementFamily& arr, const IndexTuple& prefix, std::size_t expected) {
    if (subset_rank(arr, prefix) != expected) return false;
    for (std::size_t drop = 0; drop < prefix.size(); ++drop) {
        IndexTuple rest = prefix;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        if (subset_rank(arr, rest) != expected) return false;
    }
    return true;
}

void extend(const ArrangementFamily& arr, std::vector<bool>& used, const IndexTuple& prefix, std::size_t r,
            std::vector<IndexTuple>& blocks, std::vector<ElementarySubarrangement>& out) {
    if (r == arr.k()) {
        out.push_back({blocks});
        return;
    }
    IndexTuple unused;
    for (Index j = 0; j < arr.n(); ++j)
        if (!used[j]) unused.push_back(j);

    for (std::size_t lambda = 1; lambda + r <= arr.k(); ++lambda) {
        for (const auto& pick : combinations(unused.size(), lambda + 1)) {
            IndexTuple block;
            for (auto p : pick) block.push_back(unused[p]);
            IndexTuple candidate = prefix;
            candidate.insert(candidate.end(), block.begin(), block.end());
            std::sort(candidate.begin(), candidate.end());
            if (!prefix_ok(arr, candidate, r + lambda)) continue;

            for (Index j : block) used[j] = true;
            blocks.push_back(block);
            extend(arr, used, candidate, r + lambda, blocks, out);
            blocks.pop_back();
            for (Index j : block) used[j] = false;
        }
    }
}

// Product of the weights of the indices the anchor leaves out of each block.
Rat dropped_weight_product(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                           const IndexTuple& anchor) {
    Rat product = 1;
    for (const auto& block : e.blocks) {
        for (Index j : block)
            if (!contains(anchor, j)) product *= arr.weight(j);
    }
    return product;
}

}  // namespace

bool is_elementary(const ArrangementFamily& arr, const std::vector<IndexTuple>& raw_blocks) {
    std::vector<bool> seen(arr.n(), false);
    std::size_t lambda_sum = 0;
    for (const auto& block : raw_blocks) {
        if (block.size() < 2) throw std::invalid_argument("elementary blocks need at least two indices");
        for (Index j : block) {
            if (j >= arr.n()) throw std::out_of_range("hyperplane index out of range");
            if (seen[j]) throw std::invalid_argument("elementary blocks overlap");
            seen[j] = true;
        }
        lambda_sum += block.size() - 1;
    }
    if (lambda_sum != arr.k()) return false;

    IndexTuple prefix;
    std::size_t r = 0;
    for (const auto& block : raw_blocks) {
        prefix.insert(prefix.end(), block.begin(), block.end());
        std::sort(prefix.begin(), prefix.end());
        r += block.size() - 1;
        if (!prefix_ok(arr, prefix, r)) return false;
    }
    return true;
}

std::vector<ElementarySubarrangement> enumerate_elementary(const ArrangementFamily& arr) {
    std::vector<ElementarySubarrangement> out;
    std::vector<bool> used(arr.n(), false);
    std::vector<IndexTuple> blocks;
    extend(arr, used, {}, 0, blocks, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
        return a.blocks < b.blocks;
    });
    return out;
}

std::vector<IndexTuple> distinguished_elements(const ElementarySubarrangement& e) {
    std::vector<IndexTuple> out{{}};
    for (const auto& block : e.blocks) {
        std::vector<IndexTuple> next;
        for (const auto& partial : out)
            for (std::size_t drop = 0; drop < block.size(); ++drop) {
                IndexTuple t = partial;
                for (std::size_t i = 0; i < block.size(); ++i)
                    if (i != drop) t.push_back(block[i]);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_distinguished(const ElementarySubarrangement& e, const IndexTuple& tuple) {
    std::size_t covered = 0;
    for (const auto& block : e.blocks) {
        std::size_t hits = 0;
        for (Index j : block) hits += contains(tuple, j) ? 1 : 0;
        if (hits + 1 != block.size()) return false;
        covered += hits;
    }
    return covered == tuple.size() && sort_with_sign(tuple).first != 0;
}

FlagVector singular_element(const ArrangementFamily& arr, const ElementarySubarrangement& e) {
    struct Partial {
        IndexTuple tuple;
        Rat coeff;
    };
    std::vector<Partial> partials{{{}, 1}};
    for (const auto& block : e.blocks) {
        std::vector<Partial> next;
        for (const auto& p : partials)
            for (std::size_t i = 0; i < block.size(); ++i) {
                Partial q = p;
                for (std::size_t l = 0; l < block.size(); ++l)
                    if (l != i) q.tuple.push_back(block[l]);
                q.coeff *= i % 2 == 0 ? arr.weight(block[i]) : Rat(-arr.weight(block[i]));
                next.push_back(std::move(q));
            }
        partials = std::move(next);
    }
    FlagVector s;
    for (const auto& p : partials) add_basic(s, arr, p.tuple, p.coeff);
    return s;
}

FlagVector singular_element(const ArrangementFamily& arr, const ElementarySubarrangement& e,
                            const IndexTuple& anchor) {
    if (!is_distinguished(e, anchor)) throw std::invalid_argument("anchor is not a distinguished element");
    FlagVector s = singular_element(arr, e);
    const auto [sign, sorted] = sort_with_sign(anchor);
    const Rat entry = sign * s.coefficient(sorted);
    const Rat target = dropped_weight_product(arr, e, anchor);
    if (entry == -target) s *= -1;
    else if (entry != target) throw std::logic_error("distinguished coefficient mismatch in singular element");
    return s;
}

std::string to_string(const ElementarySubarrangement& e) {
    std::string out = "(";
    for (std::size_t h = 0; h < e.blocks.size(); ++h) {
        if (h > 0) out += ",";
        out += "{" + format_tuple(e.blocks[h]) + "}";
    }
    return out + ")";
}

IndexTuple level_flat(const ArrangementFamily& arr, const ElementarySubarrangement& e, std::size_t h) {
    const IndexTuple prefix = e.prefix_union(h);
    const std::size_t r = subset_rank(arr, prefix);
    IndexTuple flat;
    for (Index i = 0; i < arr.n(); ++i) {
        IndexTuple extended = prefix;
        extended.push_back(i);
        if (subset_rank(arr, extended) == r) flat.push_back(i);
    }
    return flat;
}

SubarrWeight subarr_weight(const ArrangementFamily& arr, const ElementarySubarrangement& e) {
    SubarrWeight w;
    w.total = arr.total_weight();
    for (std::size_t h = 1; h < e.blocks.size(); ++h) {
        const IndexTuple flat = level_flat(arr, e, h);
        Rat level = 0;
        for (Index i = 0; i < arr.n(); ++i)
            if (!contains(flat, i)) level += arr.weight(i);
        w.levels.push_back(level);
        w.total *= level;
    }
    return w;
}

FlagVector project_formula(const ArrangementFamily& arr, const IndexTuple& ordered,
                           const std::vector<ElementarySubarrangement>& elementary) {
    if (ordered.size() != arr.k() || !is_independent(arr, ordered))
        throw std::invalid_argument("projection formula needs an independent k-tuple");
    FlagVector result;
    for (const auto& e : elementary) {
        if (!is_distinguished(e, ordered)) continue;
        const Rat total = subarr_weight(arr, e).total;
        if (sgn(total) == 0) throw BalancedWeightsError("elementary subarrangement has zero weight");
        result += (1 / total) * singular_element(arr, e, ordered);
    }
    return result;
}

FlagVector project_formula(const ArrangementFamily& arr, const IndexTuple& ordered) {
    return project_formula(arr, ordered, enumerate_elementary(arr));
}

}  // namespace arrpot
