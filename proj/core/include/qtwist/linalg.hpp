#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

// Sparse vector over Q: (index, coefficient) pairs, sorted by index,
// coefficients nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sv_add(const SparseVec& a, const SparseVec& b);
SparseVec sv_scaled(const SparseVec& a, const Rational& c);
// a + c*b
SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);

/**
 * Incremental exact row-echelon span over Q.
 *
 * Vectors are inserted one at a time; each either extends the span (new
 * pivot) or is expressed as a combination of previously inserted vectors.
 * With `track_combinations` every pivot row remembers its expression in
 * the original insertion ids, which is what membership certificates are
 * made of.
 */
class LinearSpan {
public:
    explicit LinearSpan(bool track_combinations = false) : track_(track_combinations) {}

    // Returns nullopt if v extended the span; otherwise the combination
    // {id -> coefficient} over previously inserted vectors with
    // v = sum coeff * inserted[id] (only when tracking).
    std::optional<std::map<int, Rational>> insert(SparseVec v, int id);

    // Expresses v over the current span without modifying it; nullopt if
    // v is outside the span.
    std::optional<std::map<int, Rational>> express(SparseVec v) const;

    bool contains(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        SparseVec vec;               // normalized: leading coefficient 1
        std::map<int, Rational> rep; // vec = sum rep[id] * inserted[id]
    };

    // Reduces v in place; accumulates the pivot-row combination used.
    void reduce(SparseVec& v, std::map<int, Rational>& used) const;

    bool track_;
    std::map<int, Row> rows_; // keyed by pivot index
};

/**
 * Same elimination over the prime field F_p used as a cheap prescreen
 * before the exact pass (an inconsistent system mod p is flagged early;
 * the rational solve always has the final word).
 */
class LinearSpanModP {
public:
    explicit LinearSpanModP(std::uint64_t p) : p_(p) {}

    void insert(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

    static constexpr std::uint64_t default_prime = 2305843009213693951ull; // 2^61 - 1

private:
    using VecP = std::vector<std::pair<int, std::uint64_t>>;
    VecP to_modp(const SparseVec& v) const;
    void reduce(VecP& v) const;

    std::uint64_t p_;
    std::map<int, VecP> rows_;
};

} // namespace qtwist
