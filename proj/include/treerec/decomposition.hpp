#pragma once

// The record decomposition and its counting consequences.
//
// Cutting the edge above every record of a 0-rooted tree (rooted forest)
// separates it into *record components*: rooted trees whose root is their own
// unique record, i.e. whose root carries the component's maximum label.
// Listing the components by increasing root label — which is also increasing
// order of their maxima — and remembering where each component after the
// first was attached gives a lossless decomposition:
//
//   forest on 1..n with k records
//     <->  (component sequence B_1, ..., B_k; attachment points a_2, ..., a_k)
//
// where a_i is a vertex of B_1 ∪ ... ∪ B_{i-1} or the auxiliary root 0, and
// reattaching each component's root to its attachment point restores the
// forest. The sizes (|B_1|, ..., |B_k|) form the decomposition's *type*, a
// composition of n, and the label sets of the partial unions form a flag of
// subsets with a growth restriction (see RestrictedFlag below).
//
// The count_* functions below count each factor of the decomposition for a
// fixed type t = (t_1, ..., t_k) of n, writing [t]_i = t_1 + ... + t_i:
//
//   count_restricted_flags(t)      label flags with growth restriction
//   count_bonsai_fillings(t)       component shapes once labels are fixed
//   count_attachments_forest(t)    attachment sequences, forest case
//   count_attachments_tree(t)      attachment sequences, planted case
//   count_trees_of_type(t)         rooted trees on [n] whose record type is t
//   count_forests_of_type(t)       rooted forests on [n] whose record type is t

#include "treerec/bigmath.hpp"
#include "treerec/composition.hpp"
#include "treerec/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treerec {

// A rooted tree is a *record component shape* ("bonsai") exactly when its
// root carries the maximum label, making the root its unique record.
inline bool is_record_component(const RootedTree& t) {
    return !t.circ_rooted() && t.node_count() >= 1 && t.root() == t.labels().back();
}

struct RecordDecomposition {
    // Components in increasing order of root label; each rooted at its max.
    std::vector<RootedTree> bonsais;
    // attachments[i] is where component i+2's root was attached: a label of
    // an earlier component, or 0 for the auxiliary root. Size k-1.
    std::vector<int> attachments;

    int component_count() const { return static_cast<int>(bonsais.size()); }

    Composition type() const {
        std::vector<int> parts;
        parts.reserve(bonsais.size());
        for (const auto& b : bonsais) parts.push_back(b.node_count());
        return Composition(std::move(parts));
    }

    // Structural sanity: components are genuine record components with
    // strictly increasing root labels and disjoint label sets; attachment
    // points exist among the earlier components (or are 0).
    void validate() const {
        if (bonsais.empty()) throw std::invalid_argument("RecordDecomposition: no components");
        if (attachments.size() + 1 != bonsais.size())
            throw std::invalid_argument("RecordDecomposition: need exactly k-1 attachment points");
        std::vector<int> seen;
        for (std::size_t i = 0; i < bonsais.size(); ++i) {
            const RootedTree& b = bonsais[i];
            b.validate();
            if (!is_record_component(b))
                throw std::invalid_argument("RecordDecomposition: component root is not its maximum label");
            if (i > 0 && b.root() <= bonsais[i - 1].root())
                throw std::invalid_argument("RecordDecomposition: component roots must increase");
            if (i > 0) {
                int a = attachments[i - 1];
                if (a != 0 && !std::binary_search(seen.begin(), seen.end(), a))
                    throw std::invalid_argument("RecordDecomposition: attachment point not in earlier components");
            }
            for (int l : b.labels()) {
                auto it = std::lower_bound(seen.begin(), seen.end(), l);
                if (it != seen.end() && *it == l)
                    throw std::invalid_argument("RecordDecomposition: duplicate label across components");
                seen.insert(it, l);
            }
        }
    }
};

// The flag of label sets S_i = labels(B_1 ∪ ... ∪ B_i). Strictly increasing
// chain of subsets ending at the full label set, with the *record growth
// restriction*: the maximum of S_{i+1} does not lie in S_i (each step's new
// maximum is a newly added element — the next record's label).
struct RestrictedFlag {
    std::vector<std::vector<int>> sets;  // each sorted ascending

    int length() const { return static_cast<int>(sets.size()); }

    Composition type() const {
        std::vector<int> parts;
        parts.reserve(sets.size());
        int prev = 0;
        for (const auto& s : sets) {
            parts.push_back(static_cast<int>(s.size()) - prev);
            prev = static_cast<int>(s.size());
        }
        return Composition(std::move(parts));
    }

    void validate() const {
        if (sets.empty()) throw std::invalid_argument("RestrictedFlag: empty chain");
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const auto& s = sets[i];
            if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("RestrictedFlag: sets must be nonempty, sorted, duplicate-free");
            if (i > 0) {
                const auto& prev = sets[i - 1];
                if (!std::includes(s.begin(), s.end(), prev.begin(), prev.end()) || s.size() <= prev.size())
                    throw std::invalid_argument("RestrictedFlag: chain must strictly increase");
                if (std::binary_search(prev.begin(), prev.end(), s.back()))
                    throw std::invalid_argument("RestrictedFlag: new maximum must be a new element");
            }
        }
    }
};

// Splits a 0-rooted tree into its record decomposition. Requires at least one
// labelled vertex.
inline RecordDecomposition decompose(const RootedTree& forest) {
    if (!forest.circ_rooted())
        throw std::invalid_argument("decompose: input must be rooted at the auxiliary vertex 0");
    if (forest.node_count() == 0)
        throw std::invalid_argument("decompose: empty forest has no decomposition");
    std::vector<int> records = forest.records();  // sorted = component order

    // Deepest record on each vertex's root path = its component's root.
    std::map<int, std::vector<std::pair<int, int>>> members;  // record -> (label, parent) pairs
    for (int r : records) members[r];                         // establish order, roots carry no pair
    for (int l : forest.labels()) {
        // Walk up to the nearest record ancestor-or-self.
        int cur = l;
        while (!forest.is_record(cur)) cur = forest.parent_of(cur);
        if (cur != l) members[cur].emplace_back(l, forest.parent_of(l));
    }

    RecordDecomposition d;
    d.bonsais.reserve(records.size());
    for (int r : records) d.bonsais.emplace_back(std::move(members[r]), r);
    d.attachments.reserve(records.size() - 1);
    for (std::size_t i = 1; i < records.size(); ++i)
        d.attachments.push_back(forest.parent_of(records[static_cast<std::size_t>(i)]));
    return d;
}

// Reassembles the 0-rooted tree from its record decomposition (validated).
// The combined labels must form 1..n.
inline RootedTree reconstruct(const RecordDecomposition& d) {
    d.validate();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < d.bonsais.size(); ++i) {
        const RootedTree& b = d.bonsais[i];
        for (int l : b.labels())
            pairs.emplace_back(l, l == b.root() ? (i == 0 ? 0 : d.attachments[i - 1]) : b.parent_of(l));
    }
    RootedTree t(std::move(pairs), 0);
    if (!t.canonical_labels())
        throw std::invalid_argument("reconstruct: combined labels must be exactly 1..n");
    return t;
}

// The label-set flag S_1 ⊆ ... ⊆ S_k induced by the decomposition.
inline RestrictedFlag restricted_flag_of(const RecordDecomposition& d) {
    RestrictedFlag f;
    f.sets.reserve(d.bonsais.size());
    std::vector<int> acc;
    for (const auto& b : d.bonsais) {
        for (int l : b.labels()) acc.insert(std::lower_bound(acc.begin(), acc.end(), l), l);
        f.sets.push_back(acc);
    }
    return f;
}

// Number of restricted flags of type t on 1..n (n = total of t):
//      multinomial(n; t_1, ..., t_k) * (t_1 t_2 ... t_k) / ([t]_1 [t]_2 ... [t]_k).
// The division is exact; computed in rationals and checked.
inline Integer count_restricted_flags(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_restricted_flags: empty type");
    Rational q(multinomial(t.total(), t.parts()));
    for (int i = 1; i <= t.length(); ++i) {
        q *= t.part(i);
        q /= t.prefix_sum(i);
    }
    return require_integer(q, "count_restricted_flags");
}

// Number of ways to give each component of type t a shape once its label set
// is fixed: the i-th component is a tree on t_i vertices rooted at the
// maximum, and rooting at a forced vertex leaves t_i^(t_i - 2) choices.
inline Integer count_bonsai_fillings(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_bonsai_fillings: empty type");
    Integer result = 1;
    for (int i = 1; i <= t.length(); ++i) result *= cayley_unrooted_count(t.part(i));
    return result;
}

// Number of attachment sequences in the forest case: component i+1 may hang
// off any of the [t]_i earlier vertices or the auxiliary root.
inline Integer count_attachments_forest(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_attachments_forest: empty type");
    Integer result = 1;
    for (int i = 1; i < t.length(); ++i) result *= (t.prefix_sum(i) + 1);
    return result;
}

// Number of attachment sequences in the planted case (the auxiliary root has
// exactly one child, so components after the first must attach to labelled
// vertices): the product of the first k-1 partial sums.
inline Integer count_attachments_tree(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_attachments_tree: empty type");
    return t.prefix_sum_product(t.length() - 1);
}

// Number of rooted trees on 1..n whose record type is t. Closed form:
//      multinomial(n; t) * t_1^(t_1-1) ... t_k^(t_k-1) / n.
inline Integer count_trees_of_type(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_trees_of_type: empty type");
    Rational q(1);
    for (int i = 1; i <= t.length(); ++i) q *= Rational(int_pow(t.part(i), t.part(i) - 1));
    q *= Rational(multinomial(t.total(), t.parts()));
    q /= t.total();
    return require_integer(q, "count_trees_of_type");
}

// Number of rooted forests on 1..n (0-rooted trees) whose record type is t:
// the tree count dressed with the looser attachment freedom,
//      count_trees_of_type(t) * prod_{i=1}^{k-1} (1 + 1/[t]_i).
inline Integer count_forests_of_type(const Composition& t) {
    if (t.length() == 0) throw std::invalid_argument("count_forests_of_type: empty type");
    Rational q(count_trees_of_type(t));
    for (int i = 1; i < t.length(); ++i) {
        q *= (t.prefix_sum(i) + 1);
        q /= t.prefix_sum(i);
    }
    return require_integer(q, "count_forests_of_type");
}

}  // namespace treerec
