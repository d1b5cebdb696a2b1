#include "qtwist/linalg.hpp"

namespace qtwist {

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rational v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

SparseVec sv_add(const SparseVec& a, const SparseVec& b) { return sv_axpy(a, Rational(1), b); }

SparseVec sv_scaled(const SparseVec& a, const Rational& c) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, c * v);
    return out;
}

void LinearSpan::reduce(SparseVec& v, std::map<int, Rational>& used) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return;
        Rational c = v.front().second;
        v = sv_axpy(v, -c, it->second.vec);
        if (track_)
            for (const auto& [id, r] : it->second.rep) {
                Rational& slot = used[id];
                slot += c * r;
                if (slot.is_zero()) used.erase(id);
            }
    }
}

std::optional<std::map<int, Rational>> LinearSpan::insert(SparseVec v, int id) {
    std::map<int, Rational> used;
    reduce(v, used);
    if (v.empty()) return used;
    Rational lead = v.front().second;
    Row row;
    row.vec = sv_scaled(v, lead.inverse());
    if (track_) {
        for (auto& [rid, c] : used) row.rep[rid] = -c / lead;
        row.rep[id] = lead.inverse();
        // row.rep now satisfies row.vec = sum rep * inserted: v = id-vec - sum used
    }
    rows_.emplace(row.vec.front().first, std::move(row));
    return std::nullopt;
}

std::optional<std::map<int, Rational>> LinearSpan::express(SparseVec v) const {
    std::map<int, Rational> used;
    reduce(v, used);
    if (!v.empty()) return std::nullopt;
    return used;
}

bool LinearSpan::contains(SparseVec v) const {
    std::map<int, Rational> used;
    reduce(v, used);
    return v.empty();
}

LinearSpanModP::VecP LinearSpanModP::to_modp(const SparseVec& v) const {
    VecP out;
    out.reserve(v.size());
    for (const auto& [i, r] : v) {
        std::uint64_t m = r.mod(p_);
        if (m != 0) out.emplace_back(i, m);
    }
    return out;
}

void LinearSpanModP::reduce(VecP& v) const {
    auto mulmod = [this](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    };
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return;
        std::uint64_t c = p_ - v.front().second; // row is normalized to lead 1
        VecP out;
        size_t i = 0, j = 0;
        const VecP& b = it->second;
        while (i < v.size() || j < b.size()) {
            if (j == b.size() || (i < v.size() && v[i].first < b[j].first)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || b[j].first < v[i].first) {
                std::uint64_t x = mulmod(c, b[j].second);
                if (x) out.emplace_back(b[j].first, x);
                ++j;
            } else {
                std::uint64_t x = (v[i].second + mulmod(c, b[j].second)) % p_;
                if (x) out.emplace_back(v[i].first, x);
                ++i, ++j;
            }
        }
        v = std::move(out);
    }
}

void LinearSpanModP::insert(const SparseVec& sv) {
    VecP v = to_modp(sv);
    reduce(v);
    if (v.empty()) return;
    auto mulmod = [this](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    };
    // normalize lead to 1
    std::uint64_t lead = v.front().second, inv = 1, base = lead, e = p_ - 2;
    while (e) {
        if (e & 1) inv = mulmod(inv, base);
        base = mulmod(base, base);
        e >>= 1;
    }
    for (auto& [i, x] : v) x = mulmod(x, inv);
    rows_.emplace(v.front().first, std::move(v));
}

bool LinearSpanModP::contains(const SparseVec& sv) const {
    VecP v = to_modp(sv);
    reduce(v);
    return v.empty();
}

} // namespace qtwist
