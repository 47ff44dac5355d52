#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "mfk/errors.hpp"

namespace mfk {

// Derivation multi-index alpha = (a_1, ..., a_m).  Length is the number of
// independent variables of the ambient problem; indices into it are 1-based
// throughout, matching the usual epsilon_i notation.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int m) : c_(static_cast<size_t>(m), 0) {
        if (m < 0) throw Error("MultiIndex: negative length");
    }
    MultiIndex(std::initializer_list<int> xs) : c_(xs) {
        for (int x : c_)
            if (x < 0) throw Error("MultiIndex: negative component");
    }
    explicit MultiIndex(std::vector<int> xs) : c_(std::move(xs)) {
        for (int x : c_)
            if (x < 0) throw Error("MultiIndex: negative component");
    }
    static MultiIndex unit(int m, int i) {
        MultiIndex e(m);
        e.checked(i) += 1;
        return e;
    }

    int size() const { return static_cast<int>(c_.size()); }
    int operator[](int i) const { return c_.at(static_cast<size_t>(i - 1)); } // 1-based
    int order() const { return std::accumulate(c_.begin(), c_.end(), 0); }
    bool is_zero() const { return order() == 0; }

    MultiIndex plus(int i) const {
        MultiIndex r = *this;
        r.checked(i) += 1;
        return r;
    }
    MultiIndex minus(int i) const {
        MultiIndex r = *this;
        int& x = r.checked(i);
        if (x == 0) throw Error("MultiIndex: subtraction below zero");
        x -= 1;
        return r;
    }
    MultiIndex operator+(const MultiIndex& o) const {
        require_same(o);
        MultiIndex r = *this;
        for (size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
        return r;
    }
    MultiIndex operator-(const MultiIndex& o) const {
        require_same(o);
        MultiIndex r = *this;
        for (size_t k = 0; k < c_.size(); ++k) {
            r.c_[k] -= o.c_[k];
            if (r.c_[k] < 0) throw Error("MultiIndex: subtraction below zero");
        }
        return r;
    }

    // First/last nonzero component; sentinels fs(0) = m+1 and ls(0) = 0 so the
    // monotonicity tests of the rewriting recursion need no special cases.
    int fs() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k) + 1;
        return size() + 1;
    }
    int ls() const {
        for (size_t k = c_.size(); k-- > 0;)
            if (c_[k] != 0) return static_cast<int>(k) + 1;
        return 0;
    }

    struct Split; // {hat, bar}
    // Monotone split beta = hat + bar with |bar| <= s_plus_1 and ls(hat) <= fs(bar).
    // bar keeps the longest tail summing to exactly s_plus_1 (latest possible cut).
    Split split(int s_plus_1) const;

    auto operator<=>(const MultiIndex&) const = default;

    std::string to_string() const {
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(c_[k]);
        }
        return s;
    }

private:
    int& checked(int i) { return c_.at(static_cast<size_t>(i - 1)); }
    void require_same(const MultiIndex& o) const {
        if (o.size() != size()) throw Error("MultiIndex: length mismatch");
    }
    std::vector<int> c_;
};

struct MultiIndex::Split {
    MultiIndex hat;
    MultiIndex bar;
};

inline MultiIndex::Split MultiIndex::split(int s_plus_1) const {
    if (order() <= s_plus_1) return {MultiIndex(size()), *this};
    int m = size();
    int tail = 0;
    int i = m + 1;
    for (int j = m; j >= 1; --j) {
        tail += (*this)[j];
        if (tail >= s_plus_1) {
            i = j;
            break;
        }
    }
    MultiIndex bar(m);
    int after = 0;
    for (int j = i + 1; j <= m; ++j) {
        bar.checked(j) = (*this)[j];
        after += (*this)[j];
    }
    bar.checked(i) = s_plus_1 - after;
    return {*this - bar, bar};
}

// Graded-lex comparison used inside the indeterminate order: first by total
// order, then lexicographically.
inline int graded_lex_cmp(const MultiIndex& a, const MultiIndex& b) {
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    for (int i = 1; i <= a.size() && i <= b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

} // namespace mfk
