#pragma once

// Rooted labelled trees with positive integer labels, plus the auxiliary
// root convention: label 0 denotes a special root vertex "o" that carries no
// label of its own, is never a record, and never counts toward the size n.
// A tree rooted at 0 models a rooted forest on its labelled vertices (the
// subtrees hanging off 0 are the forest's components).
//
// A *record* is a vertex whose label is strictly greater than every label on
// the path from the root to it (the auxiliary root, having no label, never
// blocks anything; a tree's own root is always a record when it is labelled).

#include "treerec/bigmath.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treerec {

class RootedTree {
  public:
    RootedTree() = default;

    // Builds a tree from (label, parent) pairs plus the root label. The root
    // itself must not appear as a pair; parents refer to other labels, or to
    // 0 only when the root is 0. Labels are arbitrary distinct positive ints.
    RootedTree(std::vector<std::pair<int, int>> label_parent, int root) : root_(root) {
        std::sort(label_parent.begin(), label_parent.end());
        labels_.reserve(label_parent.size() + (root != 0 ? 1 : 0));
        parents_.reserve(labels_.capacity());
        bool root_inserted = (root == 0);
        for (auto [label, parent] : label_parent) {
            if (!root_inserted && root < label) {
                labels_.push_back(root);
                parents_.push_back(kNoParent);
                root_inserted = true;
            }
            if (!root_inserted && root == label)
                throw std::invalid_argument("RootedTree: root listed with a parent");
            labels_.push_back(label);
            parents_.push_back(parent);
        }
        if (!root_inserted) {
            labels_.push_back(root);
            parents_.push_back(kNoParent);
        }
        validate();
    }

    // Convenience for canonically labelled trees: vertices are exactly
    // 1..n, `parent_of_label[l]` gives the parent of l (entry 0 is ignored);
    // the root's entry must be kNoParent (use -1).
    static RootedTree dense(int n, int root, const std::vector<int>& parent_of_label) {
        if (static_cast<int>(parent_of_label.size()) != n + 1)
            throw std::invalid_argument("RootedTree::dense: parent array must have n+1 entries");
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(n));
        for (int l = 1; l <= n; ++l) {
            if (l == root) continue;
            pairs.emplace_back(l, parent_of_label[static_cast<std::size_t>(l)]);
        }
        return RootedTree(std::move(pairs), root);
    }

    // Fast path for trusted generators (the exhaustive enumeration streams):
    // vertices are exactly 1..n, parents are known-valid, no checks performed.
    // `parent_of_label` is indexed by label; the root's entry is ignored.
    // The assign form reuses existing capacity so enumeration loops do not
    // allocate per item.
    void assign_dense_unchecked(int n, int root, const std::vector<int>& parent_of_label) {
        root_ = root;
        labels_.resize(static_cast<std::size_t>(n));
        parents_.resize(static_cast<std::size_t>(n));
        for (int l = 1; l <= n; ++l) {
            labels_[static_cast<std::size_t>(l - 1)] = l;
            parents_[static_cast<std::size_t>(l - 1)] =
                (l == root) ? kNoParent : parent_of_label[static_cast<std::size_t>(l)];
        }
    }

    static RootedTree dense_unchecked(int n, int root, const std::vector<int>& parent_of_label) {
        RootedTree t;
        t.assign_dense_unchecked(n, root, parent_of_label);
        return t;
    }

    static constexpr int kNoParent = -1;

    // Number of labelled vertices (the auxiliary root, if present, excluded).
    int node_count() const { return static_cast<int>(labels_.size()); }

    int root() const { return root_; }

    // True when rooted at the auxiliary vertex 0 (the forest reading).
    bool circ_rooted() const { return root_ == 0; }

    // True for a 0-rooted tree whose auxiliary root has exactly one child.
    bool planted() const {
        if (!circ_rooted()) return false;
        int children = 0;
        for (int p : parents_)
            if (p == 0) ++children;
        return children == 1;
    }

    // Sorted ascending.
    const std::vector<int>& labels() const { return labels_; }

    // Parent label of `label`; 0 means the auxiliary root. Asking for the
    // parent of the root itself (when the root is labelled) is an error.
    int parent_of(int label) const {
        int p = parents_[index_of(label)];
        if (p == kNoParent) throw std::invalid_argument("parent_of: label is the root");
        return p;
    }

    bool contains(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        return it != labels_.end() && *it == label;
    }

    // Number of edges from the root down to `label` (the root is at depth 0;
    // for a 0-rooted tree the auxiliary root is the depth-0 vertex).
    int depth(int label) const {
        int d = 0;
        int cur = label;
        while (true) {
            int p = parents_[index_of(cur)];
            if (p == kNoParent) return d;
            ++d;
            if (p == 0) return d;  // stepped onto the auxiliary root
            cur = p;
        }
    }

    bool is_record(int label) const {
        int cur = label;
        while (true) {
            int p = parents_[index_of(cur)];
            if (p == kNoParent || p == 0) return true;
            if (p > label) return false;
            cur = p;
        }
    }

    // All records, sorted ascending.
    std::vector<int> records() const {
        std::vector<int> out;
        for (int l : labels_)
            if (is_record(l)) out.push_back(l);
        return out;
    }

    int record_count() const {
        int count = 0;
        for (int l : labels_)
            if (is_record(l)) ++count;
        return count;
    }

    // True when the labels are exactly 1..n.
    bool canonical_labels() const {
        int n = node_count();
        return n == 0 || (labels_.front() == 1 && labels_.back() == n);
    }

    // Structural checks: distinct positive labels, root membership, parents
    // resolve, no cycles. Throws std::invalid_argument on the first problem.
    void validate() const {
        int n = node_count();
        for (int i = 0; i < n; ++i) {
            if (labels_[static_cast<std::size_t>(i)] <= 0)
                throw std::invalid_argument("RootedTree: labels must be positive");
            if (i > 0 && labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(i - 1)])
                throw std::invalid_argument("RootedTree: duplicate label");
        }
        if (root_ < 0) throw std::invalid_argument("RootedTree: negative root");
        if (root_ != 0 && !contains(root_))
            throw std::invalid_argument("RootedTree: root label missing from vertex set");
        if (root_ == 0 && n == 0) return;  // the bare auxiliary root is a valid (empty) forest
        for (int i = 0; i < n; ++i) {
            int label = labels_[static_cast<std::size_t>(i)];
            int p = parents_[static_cast<std::size_t>(i)];
            if (label == root_) {
                if (p != kNoParent) throw std::invalid_argument("RootedTree: root has a parent");
                continue;
            }
            if (p == kNoParent) throw std::invalid_argument("RootedTree: non-root vertex lacks a parent");
            if (p == 0) {
                if (root_ != 0)
                    throw std::invalid_argument("RootedTree: parent 0 is only valid under the auxiliary root");
            } else if (!contains(p)) {
                throw std::invalid_argument("RootedTree: parent label missing from vertex set");
            }
        }
        // Cycle check: every vertex must reach the root in at most n steps.
        for (int l : labels_) {
            int cur = l;
            int steps = 0;
            while (true) {
                int p = parents_[index_of(cur)];
                if (p == kNoParent || p == 0) break;
                cur = p;
                if (++steps > n) throw std::invalid_argument("RootedTree: parent links contain a cycle");
            }
        }
    }

    bool operator==(const RootedTree& other) const {
        return root_ == other.root_ && labels_ == other.labels_ && parents_ == other.parents_;
    }

  private:
    std::size_t index_of(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label)
            throw std::invalid_argument("RootedTree: unknown label " + std::to_string(label));
        return static_cast<std::size_t>(it - labels_.begin());
    }

    std::vector<int> labels_;   // sorted ascending
    std::vector<int> parents_;  // parallel to labels_; kNoParent marks the root entry
    int root_ = 0;
};

}  // namespace treerec
