#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "config.hpp"
#include "errors.hpp"

namespace polyface {

/**
 * Rank of a matrix over the 2-element field, rows given as Bitsets.
 *
 * Plain dense elimination: each incoming row is reduced against the pivots
 * found so far (XOR is addition over GF(2)); a surviving nonzero row becomes
 * a new pivot at its lowest set bit.  A pivot row's lowest bit is its pivot
 * column, so each XOR strictly raises the reduced row's lowest set bit and
 * the loop terminates.  Dimensions are capped by size_limit() — beyond that
 * the computation aborts with SizeLimit rather than grinding.
 */
inline std::size_t gf2_rank(std::vector<Bitset> rows, std::size_t cols) {
    if (cols > size_limit() || rows.size() > size_limit())
        throw SizeLimit("GF(2) matrix is " + std::to_string(rows.size()) + "x" +
                        std::to_string(cols) + ", exceeding the size limit of " +
                        std::to_string(size_limit()));
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        int c;
        while ((c = rows[r].first()) >= 0 && pivot_of_col[static_cast<std::size_t>(c)] >= 0)
            rows[r] ^= rows[static_cast<std::size_t>(pivot_of_col[static_cast<std::size_t>(c)])];
        if (c < 0) continue;
        pivot_of_col[static_cast<std::size_t>(c)] = static_cast<int>(r);
        ++rank;
    }
    return rank;
}

} // namespace polyface
