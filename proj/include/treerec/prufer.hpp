#pragma once

// Prüfer codec on vertex index space {0, ..., m-1} and the exhaustive
// enumeration streams built on it:
//
//   - every rooted tree on labels 1..n  (n * n^(n-2) of them),
//   - every rooted forest on 1..n, modelled as a tree rooted at the
//     auxiliary vertex 0 on vertex set {0, 1, ..., n}  ((n+1)^(n-1) of them).
//
// A Prüfer code of length m-2 over {0..m-1} corresponds bijectively to a
// labelled unrooted tree on m vertices; the streams sweep codes in
// lexicographic order (and, for trees, roots in increasing order within each
// code), so iteration order is deterministic.

#include "treerec/bigmath.hpp"
#include "treerec/tree.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace treerec {

// Decodes a Prüfer code over {0..m-1} (length m-2) into the m-1 edges of the
// corresponding unrooted tree. m must be at least 2.
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& code, int m) {
    if (m < 2) throw std::invalid_argument("prufer_decode: need at least 2 vertices");
    if (static_cast<int>(code.size()) != m - 2)
        throw std::invalid_argument("prufer_decode: code length must be m-2");
    std::vector<int> degree(static_cast<std::size_t>(m), 1);
    for (int c : code) {
        if (c < 0 || c >= m) throw std::invalid_argument("prufer_decode: code entry out of range");
        ++degree[static_cast<std::size_t>(c)];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m - 1));
    // Classic linear scan: `ptr` sweeps vertices in increasing order, `leaf`
    // is the smallest current leaf; each code entry consumes one leaf.
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;  // c just became a leaf smaller than everything unscanned
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, m - 1);
    return edges;
}

// Encodes an unrooted tree on vertices {0..m-1}, given as m-1 edges, into its
// Prüfer code (repeatedly strip the smallest leaf, record its neighbour).
inline std::vector<int> prufer_encode(int m, const std::vector<std::pair<int, int>>& edges) {
    if (m < 2) throw std::invalid_argument("prufer_encode: need at least 2 vertices");
    if (static_cast<int>(edges.size()) != m - 1)
        throw std::invalid_argument("prufer_encode: edge count must be m-1");
    std::vector<int> degree(static_cast<std::size_t>(m), 0);
    // Adjacency via xor-trick is cute but opaque; adjacency lists are clearer
    // and m is always small here.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= m || b < 0 || b >= m || a == b)
            throw std::invalid_argument("prufer_encode: bad edge");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<bool> removed(static_cast<std::size_t>(m), false);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(m - 2));
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int step = 0; step < m - 2; ++step) {
        removed[static_cast<std::size_t>(leaf)] = true;
        int neighbour = -1;
        for (int v : adj[static_cast<std::size_t>(leaf)])
            if (!removed[static_cast<std::size_t>(v)]) neighbour = v;
        if (neighbour < 0) throw std::invalid_argument("prufer_encode: edges do not form a tree");
        code.push_back(neighbour);
        if (--degree[static_cast<std::size_t>(neighbour)] == 1 && neighbour < ptr) {
            leaf = neighbour;
        } else {
            ++ptr;
            while (ptr < m && (removed[static_cast<std::size_t>(ptr)] || degree[static_cast<std::size_t>(ptr)] != 1)) ++ptr;
            if (ptr >= m) throw std::invalid_argument("prufer_encode: edges do not form a tree");
            leaf = ptr;
        }
    }
    return code;
}

namespace detail {

// Orients the edges of an unrooted tree on {0..m-1} away from `root`,
// filling parent[v] for every vertex (parent[root] = -1). Scratch vectors are
// caller-owned so the enumeration loops stay allocation-free.
inline void orient_from_root(int m, const std::vector<std::pair<int, int>>& edges, int root,
                             std::vector<int>& head, std::vector<int>& next_edge,
                             std::vector<int>& to, std::vector<int>& stack,
                             std::vector<int>& parent) {
    head.assign(static_cast<std::size_t>(m), -1);
    next_edge.resize(static_cast<std::size_t>(2 * (m - 1)));
    to.resize(static_cast<std::size_t>(2 * (m - 1)));
    int idx = 0;
    for (auto [a, b] : edges) {
        to[static_cast<std::size_t>(idx)] = b;
        next_edge[static_cast<std::size_t>(idx)] = head[static_cast<std::size_t>(a)];
        head[static_cast<std::size_t>(a)] = idx++;
        to[static_cast<std::size_t>(idx)] = a;
        next_edge[static_cast<std::size_t>(idx)] = head[static_cast<std::size_t>(b)];
        head[static_cast<std::size_t>(b)] = idx++;
    }
    parent.assign(static_cast<std::size_t>(m), -1);
    stack.clear();
    stack.push_back(root);
    parent[static_cast<std::size_t>(root)] = root;  // sentinel so root is "visited"
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = head[static_cast<std::size_t>(v)]; e != -1; e = next_edge[static_cast<std::size_t>(e)]) {
            int w = to[static_cast<std::size_t>(e)];
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
    }
    parent[static_cast<std::size_t>(root)] = -1;
}

// Advances a length-`len` odometer over digits {0..base-1} in lexicographic
// order; returns false after the last code.
inline bool next_code(std::vector<int>& code, int base) {
    for (auto i = static_cast<int>(code.size()) - 1; i >= 0; --i) {
        if (++code[static_cast<std::size_t>(i)] < base) return true;
        code[static_cast<std::size_t>(i)] = 0;
    }
    return false;
}

}  // namespace detail

// Streams every rooted tree on labels 1..n (vertices are the labels; the root
// varies over all n choices). The visitor receives `const RootedTree&` valid
// only during the call. n = 0 yields nothing; n larger than `cap` throws.
template <class Visitor>
void for_each_rooted_tree(int n, Visitor&& visit, int cap = 8) {
    if (n < 0) throw std::invalid_argument("for_each_rooted_tree: negative n");
    if (n > cap) throw CapExceeded("for_each_rooted_tree: n exceeds brute-force cap");
    if (n == 0) return;
    if (n == 1) {
        visit(RootedTree::dense_unchecked(1, 1, {0, -1}));
        return;
    }
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    std::vector<int> head, next_edge, to, stack, parent;
    std::vector<int> parent_of_label(static_cast<std::size_t>(n + 1), -1);
    RootedTree scratch;
    do {
        // Vertex index v corresponds to label v+1.
        auto edges = prufer_decode(code, n);
        for (int root_idx = 0; root_idx < n; ++root_idx) {
            detail::orient_from_root(n, edges, root_idx, head, next_edge, to, stack, parent);
            for (int v = 0; v < n; ++v)
                parent_of_label[static_cast<std::size_t>(v + 1)] =
                    parent[static_cast<std::size_t>(v)] < 0 ? -1 : parent[static_cast<std::size_t>(v)] + 1;
            scratch.assign_dense_unchecked(n, root_idx + 1, parent_of_label);
            visit(static_cast<const RootedTree&>(scratch));
        }
    } while (detail::next_code(code, n));
}

// Streams every rooted forest on labels 1..n as a tree rooted at the
// auxiliary vertex 0 over vertex set {0..n}. n = 0 yields the bare auxiliary
// root once (the empty forest).
template <class Visitor>
void for_each_rooted_forest(int n, Visitor&& visit, int cap = 8) {
    if (n < 0) throw std::invalid_argument("for_each_rooted_forest: negative n");
    if (n > cap) throw CapExceeded("for_each_rooted_forest: n exceeds brute-force cap");
    if (n == 0) {
        visit(RootedTree({}, 0));
        return;
    }
    int m = n + 1;  // vertex index space: 0 = auxiliary root, i = label i
    std::vector<int> code(static_cast<std::size_t>(m - 2), 0);
    std::vector<int> head, next_edge, to, stack, parent;
    std::vector<int> parent_of_label(static_cast<std::size_t>(n + 1), -1);
    RootedTree scratch;
    do {
        auto edges = prufer_decode(code, m);
        detail::orient_from_root(m, edges, 0, head, next_edge, to, stack, parent);
        for (int l = 1; l <= n; ++l)
            parent_of_label[static_cast<std::size_t>(l)] = parent[static_cast<std::size_t>(l)];
        scratch.assign_dense_unchecked(n, 0, parent_of_label);
        visit(static_cast<const RootedTree&>(scratch));
    } while (detail::next_code(code, m));
}

// Stream sizes, for cross-checks: n * n^(n-2) rooted trees, (n+1)^(n-1)
// rooted forests.
inline Integer rooted_tree_stream_size(int n) {
    if (n < 0) throw std::invalid_argument("rooted_tree_stream_size: negative n");
    return n == 0 ? Integer(0) : cayley_rooted_count(n);
}

inline Integer rooted_forest_stream_size(int n) {
    if (n < 0) throw std::invalid_argument("rooted_forest_stream_size: negative n");
    if (n == 0) return 1;
    return int_pow(n + 1, n - 1);
}

}  // namespace treerec
