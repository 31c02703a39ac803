#include "arrpot/subsets.hpp"

#include "arrpot/errors.hpp"

#include <algorithm>
#include <sstream>

namespace arrpot {

std::pair<int, IndexTuple> sort_with_sign(IndexTuple tuple) {
    int sign = 1;
    // insertion sort counts transpositions directly; tuples are at most a few long
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) sign = 0;
    return {sign, std::move(tuple)};
}

std::vector<IndexTuple> combinations(std::size_t n, std::size_t size) {
    std::vector<IndexTuple> out;
    if (size > n) return out;
    IndexTuple current(size);
    for (std::size_t i = 0; i < size; ++i) current[i] = i;
    while (true) {
        out.push_back(current);
        std::size_t pos = size;
        while (pos > 0 && current[pos - 1] == n - size + pos - 1) --pos;
        if (pos == 0) break;
        ++current[pos - 1];
        for (std::size_t i = pos; i < size; ++i) current[i] = current[i - 1] + 1;
    }
    return out;
}

std::string format_tuple(const IndexTuple& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tuple[i] + 1);
    }
    return out;
}

IndexTuple parse_tuple(const std::string& text) {
    IndexTuple out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            throw InputError("malformed index list '" + text + "'");
        }
        if (used != item.size() || value < 1) throw InputError("malformed index list '" + text + "'");
        out.push_back(static_cast<Index>(value - 1));
    }
    return out;
}

bool contains(const IndexTuple& tuple, Index value) {
    return std::find(tuple.begin(), tuple.end(), value) != tuple.end();
}

}  // namespace arrpot
