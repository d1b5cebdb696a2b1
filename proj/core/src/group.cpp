#include "qtwist/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtwist {

GroupElement GroupElement::abelian_generator(int rank, int index, std::int64_t power) {
    Exponents e(rank, 0);
    e.at(index) = power;
    return GroupElement(std::move(e));
}

GroupElement GroupElement::perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return GroupElement(std::move(p));
}

GroupElement GroupElement::perm(Perm images) {
    Perm sorted = images;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            fail("BadPermutation", "image list is not a permutation");
    return GroupElement(std::move(images));
}

GroupElement GroupElement::transposition(int n, int a, int b) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p.at(a), p.at(b));
    return GroupElement(std::move(p));
}

bool GroupElement::is_identity() const {
    if (is_abelian()) {
        for (auto e : exponents())
            if (e != 0) return false;
        return true;
    }
    const auto& p = images();
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (is_abelian() != o.is_abelian() || rank() != o.rank())
        fail("ModelMismatch", "product of group elements from different groups");
    if (is_abelian()) {
        Exponents e = exponents();
        const Exponents& f = o.exponents();
        for (size_t i = 0; i < e.size(); ++i) e[i] += f[i];
        return GroupElement(std::move(e));
    }
    const Perm& a = images();
    const Perm& b = o.images();
    Perm r(a.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[b[i]];
    return GroupElement(std::move(r));
}

GroupElement GroupElement::inverse() const {
    if (is_abelian()) {
        Exponents e = exponents();
        for (auto& x : e) x = -x;
        return GroupElement(std::move(e));
    }
    const Perm& p = images();
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return GroupElement(std::move(r));
}

GroupElement GroupElement::pow(long e) const {
    if (is_abelian()) {
        Exponents x = exponents();
        for (auto& v : x) v *= e;
        return GroupElement(std::move(x));
    }
    GroupElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -e : e;
    GroupElement acc = perm_identity(rank());
    while (k--) acc = acc * base;
    return acc;
}

int GroupElement::rank() const {
    if (is_abelian()) return static_cast<int>(exponents().size());
    return static_cast<int>(images().size());
}

std::string GroupElement::str() const {
    if (is_identity()) return "e";
    std::ostringstream os;
    if (is_abelian()) {
        const auto& e = exponents();
        int theta = static_cast<int>(e.size()) / 2;
        bool first = true;
        auto emit = [&](const std::string& name, std::int64_t p) {
            if (p == 0) return;
            if (!first) os << " ";
            first = false;
            os << name;
            if (p != 1) os << "^" << p;
        };
        // K's before L's in display; storage order stays L_1..L_t, K_1..K_t.
        for (int i = 0; i < theta; ++i) emit("K" + std::to_string(i + 1), e[theta + i]);
        for (int i = 0; i < theta; ++i) emit("L" + std::to_string(i + 1), e[i]);
        if (first) {
            // odd rank or display fallback: raw exponents
            os << "g[";
            for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
            os << "]";
        }
        return os.str();
    }
    const Perm& p = images();
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        os << "(";
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            os << (j + 1);
            j = static_cast<size_t>(p[j]);
        }
        os << ")";
    }
    return os.str();
}

GroupElement parse_perm(const std::string& s, int n) {
    if (s == "e" || s.empty()) return GroupElement::perm_identity(n);
    GroupElement::Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    size_t i = 0;
    GroupElement acc = GroupElement::perm_identity(n);
    while (i < s.size()) {
        if (s[i] != '(') fail("ParseError", "bad permutation literal: \"" + s + "\"");
        size_t close = s.find(')', i);
        if (close == std::string::npos || close < i + 3)
            fail("ParseError", "bad permutation literal: \"" + s + "\"");
        std::vector<int> cyc;
        for (size_t k = i + 1; k < close; ++k) {
            if (s[k] < '1' || s[k] > '9') fail("ParseError", "bad cycle point in \"" + s + "\"");
            int pt = s[k] - '1';
            if (pt >= n) fail("ParseError", "cycle point out of range in \"" + s + "\"");
            cyc.push_back(pt);
        }
        GroupElement::Perm c(n);
        std::iota(c.begin(), c.end(), 0);
        for (size_t k = 0; k + 1 < cyc.size(); ++k) c[cyc[k]] = cyc[k + 1];
        c[cyc.back()] = cyc.front();
        acc = acc * GroupElement::perm(std::move(c));
        i = close + 1;
    }
    return acc;
}

std::vector<GroupElement> symmetric_group(int n) {
    GroupElement::Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<GroupElement> out;
    do {
        out.push_back(GroupElement::perm(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace qtwist
