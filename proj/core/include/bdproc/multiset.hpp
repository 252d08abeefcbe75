#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "bdproc/errors.hpp"

namespace bdproc {

/// Finite multiset over an ordered element type. Entries are kept in
/// canonical form: a stored multiplicity is always >= 1, absent means 0.
/// All arithmetic is checked 64-bit; overflow throws arithmetic_error.
template <typename T>
class multiset {
public:
    using map_type = std::map<T, std::uint64_t>;

    multiset() = default;

    multiset(std::initializer_list<T> elems) {
        for (const T& x : elems) insert(x);
    }

    static multiset from_counts(std::initializer_list<std::pair<T, std::uint64_t>> counts) {
        multiset m;
        for (const auto& [x, k] : counts) m.insert(x, k);
        return m;
    }

    std::uint64_t count(const T& x) const {
        auto it = entries_.find(x);
        return it == entries_.end() ? 0 : it->second;
    }

    bool contains(const T& x) const { return entries_.count(x) != 0; }
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    void insert(const T& x, std::uint64_t k = 1) {
        if (k == 0) return;
        auto [it, fresh] = entries_.emplace(x, k);
        if (!fresh) it->second = checked_add(it->second, k);
    }

    /// Removes up to k occurrences (monus on a single element).
    void erase(const T& x, std::uint64_t k = 1) {
        auto it = entries_.find(x);
        if (it == entries_.end()) return;
        if (it->second <= k) entries_.erase(it);
        else it->second -= k;
    }

    /// |A|, the sum of all multiplicities.
    std::uint64_t cardinality() const {
        std::uint64_t n = 0;
        for (const auto& [x, k] : entries_) n = checked_add(n, k);
        return n;
    }

    /// Pointwise <=.
    bool subset_of(const multiset& other) const {
        for (const auto& [x, k] : entries_)
            if (k > other.count(x)) return false;
        return true;
    }

    /// Pointwise max.
    multiset set_union(const multiset& other) const {
        multiset r = other;
        for (const auto& [x, k] : entries_) {
            auto& slot = r.entries_[x];
            slot = std::max(slot, k);
        }
        return r;
    }

    /// Pointwise min.
    multiset set_intersection(const multiset& other) const {
        multiset r;
        for (const auto& [x, k] : entries_) {
            std::uint64_t m = std::min(k, other.count(x));
            if (m > 0) r.entries_[x] = m;
        }
        return r;
    }

    /// Pointwise sum.
    multiset plus(const multiset& other) const {
        multiset r = *this;
        for (const auto& [x, k] : other.entries_) r.insert(x, k);
        return r;
    }

    /// Truncated difference: (A - B)(x) = max(A(x) - B(x), 0).
    multiset monus(const multiset& other) const {
        multiset r;
        for (const auto& [x, k] : entries_) {
            std::uint64_t b = other.count(x);
            if (k > b) r.entries_[x] = k - b;
        }
        return r;
    }

    /// k * A.
    multiset scaled(std::uint64_t factor) const {
        multiset r;
        if (factor == 0) return r;
        for (const auto& [x, k] : entries_) r.entries_[x] = checked_mul(k, factor);
        return r;
    }

    /// A restricted to domain Y.
    multiset restricted_to(const std::set<T>& domain) const {
        multiset r;
        for (const auto& [x, k] : entries_)
            if (domain.count(x)) r.entries_[x] = k;
        return r;
    }

    const map_type& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool operator==(const multiset& other) const = default;
    auto operator<=>(const multiset& other) const = default;

    /// "{a, b*2}" — elements sorted, multiplicities > 1 written with '*'.
    std::string str() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (const auto& [x, k] : entries_) {
            if (!first) os << ", ";
            first = false;
            os << x;
            if (k > 1) os << "*" << k;
        }
        os << "}";
        return os.str();
    }

private:
    map_type entries_;
};

}  // namespace bdproc
