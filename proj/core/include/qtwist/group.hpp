#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qtwist/error.hpp"

namespace qtwist {

/**
 * Group element in one of the two group families the kernel works over:
 *  - free abelian Z^m, stored as an exponent vector (the reduced-datum
 *    groups Z^{2theta} with generators L_1..L_theta, K_1..K_theta, in that
 *    order);
 *  - a finite symmetric group S_n, stored as a permutation of {0..n-1}
 *    with (a*b)(x) = a(b(x)).
 */
class GroupElement {
public:
    using Exponents = std::vector<std::int64_t>;
    using Perm = std::vector<int>;

    static GroupElement abelian_identity(int rank) { return GroupElement(Exponents(rank, 0)); }
    static GroupElement abelian(Exponents e) { return GroupElement(std::move(e)); }
    // Basis generator with a single exponent +1 in slot `index`.
    static GroupElement abelian_generator(int rank, int index, std::int64_t power = 1);

    static GroupElement perm_identity(int n);
    static GroupElement perm(Perm images);
    // Transposition (a b), 0-based.
    static GroupElement transposition(int n, int a, int b);

    bool is_abelian() const { return std::holds_alternative<Exponents>(v_); }
    bool is_identity() const;

    const Exponents& exponents() const { return std::get<Exponents>(v_); }
    const Perm& images() const { return std::get<Perm>(v_); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement pow(long e) const;
    // g * x * g^-1
    GroupElement conjugate(const GroupElement& x) const { return *this * x * inverse(); }

    bool operator==(const GroupElement& o) const { return v_ == o.v_; }
    bool operator!=(const GroupElement& o) const { return v_ != o.v_; }
    bool operator<(const GroupElement& o) const { return v_ < o.v_; }

    // Abelian rank or permutation degree.
    int rank() const;

    // Abelian: "K1^2 L2^-1" style given a naming callback; Perm: cycle
    // notation "(12)(34)", identity prints "e".
    std::string str() const;

private:
    explicit GroupElement(Exponents e) : v_(std::move(e)) {}
    explicit GroupElement(Perm p) : v_(std::move(p)) {}

    std::variant<Exponents, Perm> v_;
};

// Cycle-notation parser for S_n, e.g. "(12)(34)", "(123)", "e". Points are
// the single characters 1..9 (enough for S_5 and below).
GroupElement parse_perm(const std::string& s, int n);

// All n! elements of S_n in a deterministic (lexicographic image) order.
std::vector<GroupElement> symmetric_group(int n);

} // namespace qtwist
