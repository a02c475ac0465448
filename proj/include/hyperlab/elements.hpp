#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperlab {

using i64 = std::int64_t;

/// Finite set of carrier elements, kept sorted and duplicate-free so that
/// equal sets compare equal and render identically.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::initializer_list<i64> xs) : elems_(xs) { normalize(); }
    explicit ElementSet(std::vector<i64> xs) : elems_(std::move(xs)) { normalize(); }

    static ElementSet single(i64 x) { return ElementSet{x}; }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    const std::vector<i64>& values() const { return elems_; }

    bool contains(i64 x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }
    bool subset_of(const ElementSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }
    bool intersects(const ElementSet& other) const {
        auto a = elems_.begin();
        auto b = other.elems_.begin();
        while (a != elems_.end() && b != other.elems_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    void insert(i64 x) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || *it != x) elems_.insert(it, x);
    }
    void merge(const ElementSet& other) {
        std::vector<i64> out;
        out.reserve(elems_.size() + other.elems_.size());
        std::set_union(elems_.begin(), elems_.end(),
                       other.elems_.begin(), other.elems_.end(),
                       std::back_inserter(out));
        elems_ = std::move(out);
    }

    ElementSet set_union(const ElementSet& other) const {
        ElementSet out = *this;
        out.merge(other);
        return out;
    }
    ElementSet set_intersection(const ElementSet& other) const {
        std::vector<i64> out;
        std::set_intersection(elems_.begin(), elems_.end(),
                              other.elems_.begin(), other.elems_.end(),
                              std::back_inserter(out));
        return ElementSet(std::move(out));
    }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    bool operator==(const ElementSet& other) const = default;
    bool operator<(const ElementSet& other) const { return elems_ < other.elems_; }

    /// "{0,2,4}" with elements in ascending order.
    std::string render() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(elems_[i]);
        }
        out += "}";
        return out;
    }

private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    std::vector<i64> elems_;
};

}  // namespace hyperlab
