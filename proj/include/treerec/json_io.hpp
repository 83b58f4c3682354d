#pragma once

// JSON shapes for trees and record decompositions.
//
// Tree:
//   {"n": 14, "root": 0, "parent": {"1": 4, "2": 4, ...}}
// "parent" maps every non-root label to its parent label; parent 0 denotes
// the auxiliary root and is only valid when "root" is 0. "n" is the number of
// labelled vertices and must match the parent map.
//
// Decomposition:
//   {"bonsais": [tree, ...], "attachments": [0, 1, ...], "type": [...], "records": [...]}
// "type" and "records" are written for readability and ignored on input.
//
// Output uses insertion-ordered objects with sorted keys, so serialization is
// byte-deterministic.

#include "treerec/decomposition.hpp"
#include "treerec/tree.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treerec {

using Json = nlohmann::ordered_json;

inline Json tree_to_json(const RootedTree& tree) {
    Json j;
    j["n"] = tree.node_count();
    j["root"] = tree.root();
    Json parent = Json::object();
    for (int label : tree.labels()) {
        if (label == tree.root()) continue;
        parent[std::to_string(label)] = tree.parent_of(label);
    }
    j["parent"] = std::move(parent);
    return j;
}

inline RootedTree tree_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("root") || !j.contains("parent"))
        throw std::invalid_argument("tree JSON: need object with n, root, parent");
    if (!j["n"].is_number_integer() || !j["root"].is_number_integer() || !j["parent"].is_object())
        throw std::invalid_argument("tree JSON: n and root must be integers, parent an object");
    int n = j["n"].get<int>();
    int root = j["root"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(j["parent"].size());
    for (const auto& [key, value] : j["parent"].items()) {
        std::size_t consumed = 0;
        int label = 0;
        try {
            label = std::stoi(key, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("tree JSON: parent key is not a label: " + key);
        }
        if (consumed != key.size() || label <= 0)
            throw std::invalid_argument("tree JSON: parent key is not a positive label: " + key);
        if (!value.is_number_integer())
            throw std::invalid_argument("tree JSON: parent value must be an integer");
        pairs.emplace_back(label, value.get<int>());
    }
    RootedTree tree(std::move(pairs), root);
    if (tree.node_count() != n)
        throw std::invalid_argument("tree JSON: n does not match the parent map");
    return tree;
}

inline Json decomposition_to_json(const RecordDecomposition& d) {
    Json j;
    Json bonsais = Json::array();
    for (const auto& b : d.bonsais) bonsais.push_back(tree_to_json(b));
    j["bonsais"] = std::move(bonsais);
    j["attachments"] = d.attachments;
    j["type"] = d.type().parts();
    Json records = Json::array();
    for (const auto& b : d.bonsais) records.push_back(b.root());
    j["records"] = std::move(records);
    return j;
}

inline RecordDecomposition decomposition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("bonsais") || !j.contains("attachments"))
        throw std::invalid_argument("decomposition JSON: need object with bonsais, attachments");
    if (!j["bonsais"].is_array() || !j["attachments"].is_array())
        throw std::invalid_argument("decomposition JSON: bonsais and attachments must be arrays");
    RecordDecomposition d;
    for (const auto& b : j["bonsais"]) d.bonsais.push_back(tree_from_json(b));
    for (const auto& a : j["attachments"]) {
        if (!a.is_number_integer())
            throw std::invalid_argument("decomposition JSON: attachments must be integers");
        d.attachments.push_back(a.get<int>());
    }
    d.validate();
    return d;
}

}  // namespace treerec
