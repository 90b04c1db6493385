#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "numbers.hpp"

namespace polyface {

/**
 * Input description of one element for GradedLattice::build_from_covers.
 *
 * `key` is a caller-chosen identifier used only to name cover endpoints; it
 * carries no order information.  `rank` may be given explicitly or left as -1,
 * in which case ranks for the whole poset are inferred as longest-path depth
 * from the bottom.  `label` is a human-readable tag kept for diagnostics and
 * serialization; semantics never depend on it.
 */
struct ProtoElement {
    long long key = 0;
    int rank = -1;
    std::string label;
};

/**
 * The f-vector (f_0, ..., f_{d-1}) of a rank-(d+1) lattice: counts of proper
 * nonempty faces by dimension.  `at` extends it by the standard conventions
 * f_{-1} = 1 (empty face) and f_d = 1 (the improper full face), which is what
 * pyramid/telescoping recursions want.
 */
struct FVector {
    std::vector<long long> counts;

    FVector() = default;
    explicit FVector(std::vector<long long> c) : counts(std::move(c)) {}

    /// Dimension d of the object described (number of stored entries).
    int dim() const { return static_cast<int>(counts.size()); }

    long long at(int k) const {
        if (k == -1 || k == dim()) return 1;
        if (k < -1 || k > dim()) return 0;
        return counts[static_cast<std::size_t>(k)];
    }

    long long euler() const {
        long long e = 0;
        int sign = 1;
        for (long long c : counts) {
            e += sign * c;
            sign = -sign;
        }
        return e;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (i) os << ',';
            os << counts[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/**
 * A finite bounded graded poset stored in explicit form: elements are dense
 * ids 0..n-1, sorted by rank (so id 0 is the bottom and id n-1 the top), with
 * the Hasse diagram plus precomputed order closures as bit matrices.
 *
 * Despite the name, instances are not required to satisfy the lattice axiom;
 * `is_lattice` tests it, and meet/join report failures via nullopt.  That
 * keeps the class usable for the deliberately broken posets the predicates
 * are exercised against.
 *
 * Conventions used throughout: the face lattice of a d-polytope has
 * rank() == d+1; atoms are the rank-1 elements (vertices) and coatoms the
 * rank-(rank()-1) elements (facets).
 */
class GradedLattice {
public:
    /**
     * Validate and index a poset given as elements plus cover relations.
     *
     * Checks performed:
     *  - keys are unique and cover endpoints resolve       (MalformedLattice)
     *  - the cover digraph is acyclic when ranks are inferred (CycleDetected)
     *  - every cover raises rank by exactly one, bottom has rank 0 (NotGraded)
     *  - there is exactly one minimal and one maximal element   (NotBounded)
     *  - the element count respects size_limit()                  (SizeLimit)
     *
     * Ranks are taken as declared when every element carries one; if any
     * element leaves rank at -1, ranks for the whole input are inferred as
     * longest-path depth.  Either way the gradedness check applies.
     */
    static GradedLattice build_from_covers(
        const std::vector<ProtoElement>& elements,
        const std::vector<std::pair<long long, long long>>& covers) {
        if (elements.empty()) throw NotBounded("lattice needs at least one element");
        if (elements.size() > size_limit())
            throw SizeLimit("lattice has " + std::to_string(elements.size()) +
                            " elements, exceeding the size limit of " +
                            std::to_string(size_limit()));

        const int n = static_cast<int>(elements.size());
        std::map<long long, int> by_key;
        for (int i = 0; i < n; ++i)
            if (!by_key.emplace(elements[static_cast<std::size_t>(i)].key, i).second)
                throw MalformedLattice("duplicate element key " +
                                       std::to_string(elements[static_cast<std::size_t>(i)].key));

        std::vector<std::pair<int, int>> cov;
        cov.reserve(covers.size());
        for (const auto& [lo_key, hi_key] : covers) {
            auto lo = by_key.find(lo_key), hi = by_key.find(hi_key);
            if (lo == by_key.end() || hi == by_key.end())
                throw MalformedLattice("cover (" + std::to_string(lo_key) + "," +
                                       std::to_string(hi_key) + ") references an unknown key");
            if (lo->second == hi->second)
                throw CycleDetected("self-cover on key " + std::to_string(lo_key));
            cov.emplace_back(lo->second, hi->second);
        }
        std::sort(cov.begin(), cov.end());
        cov.erase(std::unique(cov.begin(), cov.end()), cov.end());

        std::vector<int> rank(static_cast<std::size_t>(n), -1);
        bool declared = true;
        for (const auto& e : elements) declared = declared && e.rank >= 0;
        if (declared) {
            for (int i = 0; i < n; ++i)
                rank[static_cast<std::size_t>(i)] = elements[static_cast<std::size_t>(i)].rank;
        } else {
            // Longest-path layering via Kahn's algorithm; leftover nodes mean a cycle.
            std::vector<int> indeg(static_cast<std::size_t>(n), 0);
            std::vector<std::vector<int>> above(static_cast<std::size_t>(n));
            for (auto [lo, hi] : cov) {
                ++indeg[static_cast<std::size_t>(hi)];
                above[static_cast<std::size_t>(lo)].push_back(hi);
            }
            std::vector<int> queue;
            for (int i = 0; i < n; ++i)
                if (indeg[static_cast<std::size_t>(i)] == 0) {
                    queue.push_back(i);
                    rank[static_cast<std::size_t>(i)] = 0;
                }
            std::size_t head = 0;
            int seen = static_cast<int>(queue.size());
            while (head < queue.size()) {
                int x = queue[head++];
                for (int y : above[static_cast<std::size_t>(x)]) {
                    auto& ry = rank[static_cast<std::size_t>(y)];
                    ry = std::max(ry, rank[static_cast<std::size_t>(x)] + 1);
                    if (--indeg[static_cast<std::size_t>(y)] == 0) {
                        queue.push_back(y);
                        ++seen;
                    }
                }
            }
            if (seen != n) throw CycleDetected("cover relation contains a directed cycle");
        }

        for (auto [lo, hi] : cov)
            if (rank[static_cast<std::size_t>(hi)] != rank[static_cast<std::size_t>(lo)] + 1)
                throw NotGraded("cover from rank " + std::to_string(rank[static_cast<std::size_t>(lo)]) +
                                " to rank " + std::to_string(rank[static_cast<std::size_t>(hi)]));

        std::vector<char> has_lower(static_cast<std::size_t>(n), 0),
            has_upper(static_cast<std::size_t>(n), 0);
        for (auto [lo, hi] : cov) {
            has_upper[static_cast<std::size_t>(lo)] = 1;
            has_lower[static_cast<std::size_t>(hi)] = 1;
        }
        int minimal = 0, maximal = 0;
        for (int i = 0; i < n; ++i) {
            minimal += !has_lower[static_cast<std::size_t>(i)];
            maximal += !has_upper[static_cast<std::size_t>(i)];
        }
        if (minimal != 1)
            throw NotBounded("expected a unique minimal element, found " + std::to_string(minimal));
        if (maximal != 1)
            throw NotBounded("expected a unique maximal element, found " + std::to_string(maximal));
        for (int i = 0; i < n; ++i)
            if (!has_lower[static_cast<std::size_t>(i)] && rank[static_cast<std::size_t>(i)] != 0)
                throw NotGraded("bottom element has rank " +
                                std::to_string(rank[static_cast<std::size_t>(i)]));

        // Canonical ids: stable sort by rank, preserving construction order within a rank.
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
        });
        std::vector<int> new_id(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) new_id[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

        GradedLattice L;
        L.n_ = n;
        L.height_ = rank[static_cast<std::size_t>(order.back())];
        L.rank_.resize(static_cast<std::size_t>(n));
        L.labels_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int old = order[static_cast<std::size_t>(i)];
            L.rank_[static_cast<std::size_t>(i)] = rank[static_cast<std::size_t>(old)];
            L.labels_[static_cast<std::size_t>(i)] = elements[static_cast<std::size_t>(old)].label;
        }
        L.upper_.assign(static_cast<std::size_t>(n), {});
        L.lower_.assign(static_cast<std::size_t>(n), {});
        for (auto [lo, hi] : cov) {
            int a = new_id[static_cast<std::size_t>(lo)], b = new_id[static_cast<std::size_t>(hi)];
            L.upper_[static_cast<std::size_t>(a)].push_back(b);
            L.lower_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& v : L.upper_) std::sort(v.begin(), v.end());
        for (auto& v : L.lower_) std::sort(v.begin(), v.end());

        L.by_rank_.assign(static_cast<std::size_t>(L.height_) + 1, {});
        L.rank_mask_.assign(static_cast<std::size_t>(L.height_) + 1,
                            Bitset(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            int r = L.rank_[static_cast<std::size_t>(i)];
            L.by_rank_[static_cast<std::size_t>(r)].push_back(i);
            L.rank_mask_[static_cast<std::size_t>(r)].set(static_cast<std::size_t>(i));
        }

        // Order closure by rank sweeps: ids ascend with rank, so one pass each way.
        L.up_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        L.down_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (int x = n - 1; x >= 0; --x) {
            L.up_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(x));
            for (int y : L.upper_[static_cast<std::size_t>(x)])
                L.up_[static_cast<std::size_t>(x)] |= L.up_[static_cast<std::size_t>(y)];
        }
        for (int x = 0; x < n; ++x) {
            L.down_[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(x));
            for (int y : L.lower_[static_cast<std::size_t>(x)])
                L.down_[static_cast<std::size_t>(x)] |= L.down_[static_cast<std::size_t>(y)];
        }
        return L;
    }

    int size() const { return n_; }

    /// Rank of the top element; the face lattice of a d-polytope has rank d+1.
    int rank() const { return height_; }

    int element_rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }

    int bottom() const { return 0; }
    int top() const { return n_ - 1; }

    bool leq(int x, int y) const {
        return up_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y));
    }

    const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }

    const std::vector<int>& elements_of_rank(int r) const {
        static const std::vector<int> empty;
        if (r < 0 || r > height_) return empty;
        return by_rank_[static_cast<std::size_t>(r)];
    }

    const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
    const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }
    const Bitset& rank_mask(int r) const { return rank_mask_[static_cast<std::size_t>(r)]; }

    const std::vector<int>& atoms() const { return elements_of_rank(1); }
    const std::vector<int>& coatoms() const { return elements_of_rank(height_ - 1); }

    std::vector<int> atoms_below(int x) const {
        std::vector<int> out;
        for (int a : atoms())
            if (leq(a, x)) out.push_back(a);
        return out;
    }

    int atom_count_below(int x) const {
        if (height_ < 1) return 0;
        return static_cast<int>(Bitset::and_count(down_[static_cast<std::size_t>(x)], rank_mask(1)));
    }

    /**
     * Greatest lower bound, or nullopt when x and y have none.  The candidate
     * is the common lower bound of maximal rank (== highest id, since ids
     * ascend with rank); it is the meet iff it dominates every common lower
     * bound.
     */
    std::optional<int> meet(int x, int y) const {
        Bitset common = down_[static_cast<std::size_t>(x)];
        common &= down_[static_cast<std::size_t>(y)];
        int z = common.last();
        if (!common.is_subset_of(down_[static_cast<std::size_t>(z)])) return std::nullopt;
        return z;
    }

    /// Least upper bound, or nullopt; mirror image of meet.
    std::optional<int> join(int x, int y) const {
        Bitset common = up_[static_cast<std::size_t>(x)];
        common &= up_[static_cast<std::size_t>(y)];
        int z = common.first();
        if (!common.is_subset_of(up_[static_cast<std::size_t>(z)])) return std::nullopt;
        return z;
    }

    /// Counts of proper elements by rank, reindexed to face dimension k = rank-1.
    FVector f_vector() const {
        std::vector<long long> c;
        for (int r = 1; r < height_; ++r)
            c.push_back(static_cast<long long>(by_rank_[static_cast<std::size_t>(r)].size()));
        return FVector(std::move(c));
    }

    /// All cover pairs (lower, upper) in canonical id order, for serialization.
    std::vector<std::pair<int, int>> cover_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < n_; ++x)
            for (int y : upper_[static_cast<std::size_t>(x)]) out.emplace_back(x, y);
        return out;
    }

private:
    int n_ = 0;
    int height_ = 0;
    std::vector<int> rank_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> upper_, lower_;
    std::vector<std::vector<int>> by_rank_;
    std::vector<Bitset> rank_mask_;
    std::vector<Bitset> up_, down_;
};

/// Pair of element ids pinpointing where a structural predicate failed.
struct PairWitness {
    int a = -1;
    int b = -1;
    std::string what;
};

/**
 * True iff every pair of elements has both a meet and a join.  On failure the
 * witness names the first offending pair and which bound is missing.
 */
inline bool is_lattice(const GradedLattice& L, PairWitness* witness = nullptr) {
    for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y) {
            if (!L.meet(x, y)) {
                if (witness) *witness = {x, y, "meet"};
                return false;
            }
            if (!L.join(x, y)) {
                if (witness) *witness = {x, y, "join"};
                return false;
            }
        }
    return true;
}

/**
 * The diamond property: every interval of length two has exactly four
 * elements, i.e. exactly two elements strictly between its endpoints.  Face
 * lattices of polytopes have it; the witness is an offending interval [a,b].
 */
inline bool is_diamond(const GradedLattice& L, PairWitness* witness = nullptr) {
    for (int x = 0; x < L.size(); ++x) {
        int r = L.element_rank(x) + 2;
        if (r > L.rank()) continue;
        for (int y : L.elements_of_rank(r)) {
            if (!L.leq(x, y)) continue;
            std::size_t mid = Bitset::and3_count(L.up_set(x), L.down_set(y), L.rank_mask(r - 1));
            if (mid != 2) {
                if (witness) *witness = {x, y, "interval has " + std::to_string(mid) +
                                                   " middle elements"};
                return false;
            }
        }
    }
    return true;
}

/**
 * Coatom-distinguishability: for every ordered pair (t, s) of distinct
 * elements of the same rank there is a coatom above t but not above s.
 * Equivalently, no element's coatom set contains another's of equal rank.
 */
inline bool is_coatom_distinguishable(const GradedLattice& L, PairWitness* witness = nullptr) {
    if (L.rank() < 1) return true;
    const auto& co = L.coatoms();
    const int nc = static_cast<int>(co.size());
    // Compress each element's set of coatoms above it to indices 0..nc-1.
    std::vector<Bitset> coat(static_cast<std::size_t>(L.size()),
                             Bitset(static_cast<std::size_t>(nc)));
    for (int j = 0; j < nc; ++j) {
        L.down_set(co[static_cast<std::size_t>(j)]).for_each([&](int x) {
            coat[static_cast<std::size_t>(x)].set(static_cast<std::size_t>(j));
        });
    }
    for (int r = 1; r < L.rank(); ++r) {
        const auto& level = L.elements_of_rank(r);
        for (int t : level)
            for (int s : level) {
                if (t == s) continue;
                if (coat[static_cast<std::size_t>(t)].is_subset_of(coat[static_cast<std::size_t>(s)])) {
                    if (witness) *witness = {t, s, "every coatom above the first is above the second"};
                    return false;
                }
            }
    }
    return true;
}

/**
 * Recognize the Boolean lattice B^n by the atom-support criterion: with n
 * atoms there must be exactly 2^n elements, each element's rank must equal
 * the number of atoms below it, and that atom set must determine the element.
 * For a bounded graded poset these conditions force isomorphism with the
 * subset lattice of the atoms.
 */
inline bool is_boolean(const GradedLattice& L) {
    const auto& as = L.atoms();
    const int na = static_cast<int>(as.size());
    if (na > 62) return false; // cannot have 2^63 elements under the size cap anyway
    if (L.size() != (1LL << na)) return false;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(L.size()) * 2);
    for (int x = 0; x < L.size(); ++x) {
        std::uint64_t support = 0;
        for (int j = 0; j < na; ++j)
            if (L.leq(as[static_cast<std::size_t>(j)], x)) support |= std::uint64_t{1} << j;
        if (std::popcount(support) != L.element_rank(x)) return false;
        if (!seen.insert(support).second) return false;
    }
    return true;
}

/// Witness for a rank count in some upper interval falling short of B^h.
struct IntervalCountWitness {
    int element = -1;  ///< bottom t of the offending interval [t, top]
    int r = -1;        ///< relative rank inside the interval
    long long count = 0;
    Integer bound;
};

/**
 * Check that every upper interval [t, top] has at least as many elements of
 * each relative rank r as the Boolean lattice of the same length, i.e.
 * binomial(rank(top)-rank(t), r).  This is the counting half of the
 * "intervals look at least Boolean" principle the bound machinery leans on.
 */
inline bool check_upper_intervals_atleast_boolean(const GradedLattice& L,
                                                  IntervalCountWitness* witness = nullptr) {
    for (int t = 0; t < L.size(); ++t) {
        int h = L.rank() - L.element_rank(t);
        for (int r = 0; r <= h; ++r) {
            auto cnt = static_cast<long long>(
                Bitset::and_count(L.up_set(t), L.rank_mask(L.element_rank(t) + r)));
            Integer bound = binomial(h, r);
            if (Integer(cnt) < bound) {
                if (witness) *witness = {t, r, cnt, bound};
                return false;
            }
        }
    }
    return true;
}

/**
 * Pyramid over L: the product with B^1, ordered componentwise.  Every face x
 * pairs with its cone (x,1) one rank up, so f_k(Pyr L) = f_k(L) + f_{k-1}(L).
 * The apex (0̂,1) gets a fresh label w{n+1} continuing from the current atom
 * count, keeping labels unique under repeated application.
 */
inline GradedLattice pyramid(const GradedLattice& L) {
    const std::string apex = "w" + std::to_string(L.atoms().size() + 1);
    std::vector<ProtoElement> pe;
    pe.reserve(static_cast<std::size_t>(L.size()) * 2);
    for (int x = 0; x < L.size(); ++x)
        pe.push_back({2LL * x, L.element_rank(x), L.label(x)});
    for (int x = 0; x < L.size(); ++x)
        pe.push_back({2LL * x + 1, L.element_rank(x) + 1,
                      x == L.bottom() ? apex : L.label(x) + "+" + apex});
    std::vector<std::pair<long long, long long>> cov;
    for (auto [lo, hi] : L.cover_pairs()) {
        cov.emplace_back(2LL * lo, 2LL * hi);
        cov.emplace_back(2LL * lo + 1, 2LL * hi + 1);
    }
    for (int x = 0; x < L.size(); ++x) cov.emplace_back(2LL * x, 2LL * x + 1);
    return GradedLattice::build_from_covers(pe, cov);
}

/**
 * Order-theoretic dual: same elements, reversed covers, rank complemented to
 * rank() - rank(x).  Labels travel with their elements.  Applying dual twice
 * reproduces the original element numbering.
 */
inline GradedLattice dual(const GradedLattice& L) {
    std::vector<ProtoElement> pe;
    pe.reserve(static_cast<std::size_t>(L.size()));
    for (int x = 0; x < L.size(); ++x)
        pe.push_back({x, L.rank() - L.element_rank(x), L.label(x)});
    std::vector<std::pair<long long, long long>> cov;
    for (auto [lo, hi] : L.cover_pairs()) cov.emplace_back(hi, lo);
    return GradedLattice::build_from_covers(pe, cov);
}

/// An interval [lo, hi] of a host lattice, re-packaged as a lattice of its own.
struct Interval {
    int lo = -1;
    int hi = -1;
    GradedLattice lattice;
};

/**
 * Extract [x, y] as a standalone GradedLattice (ranks shifted so x sits at
 * rank 0).  Keys of the members are their host ids, so witnesses found inside
 * the interval can be mapped back.  Throws NotComparable unless x <= y.
 */
inline Interval interval(const GradedLattice& L, int x, int y) {
    if (!L.leq(x, y))
        throw NotComparable("interval endpoints " + std::to_string(x) + " and " +
                            std::to_string(y) + " are not comparable");
    Bitset members = L.up_set(x);
    members &= L.down_set(y);
    std::vector<ProtoElement> pe;
    std::vector<std::pair<long long, long long>> cov;
    members.for_each([&](int m) {
        pe.push_back({m, L.element_rank(m) - L.element_rank(x), L.label(m)});
        for (int c : L.upper_covers(m))
            if (members.test(static_cast<std::size_t>(c))) cov.emplace_back(m, c);
    });
    return Interval{x, y, GradedLattice::build_from_covers(pe, cov)};
}

/// Result of the cone test on an interval: hypothesis and conclusion separately.
struct ConeCheck {
    bool hypothesis = false;  ///< every coatom of [x,y] misses exactly one atom of [x,y]
    bool conclusion = false;  ///< [x,y] is Boolean
};

/**
 * For the interval [x, y]: the hypothesis says each coatom of the interval
 * sits above all but exactly one of its atoms (the "cone over one missing
 * vertex" shape); the conclusion is that the interval is Boolean.  Both are
 * reported so callers can test the implication on lattices where it is
 * expected to hold — and see exactly which side breaks when it does not.
 */
inline ConeCheck check_all_cones_boolean(const GradedLattice& L, int x, int y) {
    Interval iv = interval(L, x, y);
    const GradedLattice& M = iv.lattice;
    bool hyp = true;
    const int na = static_cast<int>(M.atoms().size());
    for (int f : M.coatoms())
        if (M.atom_count_below(f) != na - 1) {
            hyp = false;
            break;
        }
    return ConeCheck{hyp, is_boolean(M)};
}

} // namespace polyface
