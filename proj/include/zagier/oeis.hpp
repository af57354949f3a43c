#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zagier/zagier.hpp"

namespace zagier {

/// First `count` terms of alpha_{2n}/4 (the quarter-denominators of the
/// even-index modified Bernoulli numbers), 1-based.
inline std::vector<Integer> quarter_alpha_even_terms(unsigned count) {
    std::vector<Integer> terms;
    terms.reserve(count);
    for (unsigned n = 1; n <= count; ++n) {
        Integer a = alpha(2 * n);
        if (a % 4 != 0) throw std::logic_error("alpha_{2n} not divisible by 4 at n=" +
                                               std::to_string(n));
        terms.push_back(a / 4);
    }
    return terms;
}

/// b-file line format: "n value", 1-based, no trailing whitespace.
inline std::string format_bfile(const std::vector<Integer>& terms, long first_index = 1) {
    std::string out;
    long idx = first_index;
    for (const auto& t : terms) {
        out += std::to_string(idx++) + " " + t.get_str() + "\n";
    }
    return out;
}

/// Parses b-file content; lines starting with '#' and blank lines are
/// ignored.
inline std::vector<std::pair<long, Integer>> parse_bfile(std::istream& in) {
    std::vector<std::pair<long, Integer>> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long idx;
        std::string value;
        if (!(ls >> idx >> value)) throw std::runtime_error("malformed b-file line: " + line);
        entries.emplace_back(idx, Integer(value));
    }
    return entries;
}

struct OeisMismatch {
    long index;
    Integer computed;
    Integer snapshot;
};

/// Diffs computed alpha_{2n}/4 terms against snapshot entries.
inline std::vector<OeisMismatch> oeis_compare(const std::vector<std::pair<long, Integer>>& snapshot) {
    std::vector<OeisMismatch> mismatches;
    for (const auto& [idx, value] : snapshot) {
        if (idx < 1) throw std::runtime_error("b-file index must be >= 1");
        Integer computed = alpha(2 * static_cast<unsigned>(idx)) / 4;
        if (computed != value) mismatches.push_back({idx, computed, value});
    }
    return mismatches;
}

} // namespace zagier
