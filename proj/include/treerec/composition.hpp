#pragma once

// Integer compositions (ordered tuples of positive parts). The record
// decomposition of a forest on n vertices induces a composition of n — the
// sizes of its record components in increasing order of their root labels —
// and all the type-level counting formulas are functions of that composition.

#include "treerec/bigmath.hpp"

#include <stdexcept>
#include <vector>

namespace treerec {

class Composition {
  public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
        prefix_.reserve(parts_.size() + 1);
        prefix_.push_back(0);
        for (int p : parts_) prefix_.push_back(prefix_.back() + p);
    }

    int length() const { return static_cast<int>(parts_.size()); }

    // Sum of all parts.
    std::int64_t total() const { return prefix_.empty() ? 0 : prefix_.back(); }

    const std::vector<int>& parts() const { return parts_; }

    int part(int i) const {  // 1-based, matching the usual t_1, ..., t_k notation
        if (i < 1 || i > length()) throw std::out_of_range("Composition::part");
        return parts_[static_cast<std::size_t>(i - 1)];
    }

    // Partial sum t_1 + ... + t_i (prefix_sum(0) = 0).
    std::int64_t prefix_sum(int i) const {
        if (i < 0 || i > length()) throw std::out_of_range("Composition::prefix_sum");
        return prefix_[static_cast<std::size_t>(i)];
    }

    // Product of the first j partial sums: (t_1)(t_1+t_2)...(t_1+...+t_j).
    // With j = length() this is the "prefix-sum factorial" of the composition.
    Integer prefix_sum_product(int j) const {
        if (j < 0 || j > length()) throw std::out_of_range("Composition::prefix_sum_product");
        Integer result = 1;
        for (int i = 1; i <= j; ++i) result *= prefix_sum(i);
        return result;
    }

    Integer prefix_sum_product() const { return prefix_sum_product(length()); }

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }
    bool operator<(const Composition& other) const { return parts_ < other.parts_; }

  private:
    std::vector<int> parts_;
    std::vector<std::int64_t> prefix_;  // prefix_[i] = t_1 + ... + t_i
};

// Streams every composition of n (2^(n-1) of them) in lexicographic order of
// the part tuples. n = 0 yields the empty composition once.
template <class Visitor>
void for_each_composition(int n, Visitor&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_composition: negative n");
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            visit(Composition(parts));
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    recurse(recurse, n);
}

// Streams every composition of n with exactly k parts (binomial(n-1, k-1)).
template <class Visitor>
void for_each_composition_of_length(int n, int k, Visitor&& visit) {
    if (n < 0 || k < 0) throw std::invalid_argument("for_each_composition_of_length: negative argument");
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 0) {
            if (remaining == 0) visit(Composition(parts));
            return;
        }
        for (int p = 1; p + (slots - 1) <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p, slots - 1);
            parts.pop_back();
        }
    };
    recurse(recurse, n, k);
}

}  // namespace treerec
