#pragma once

// Shared test fixture: a 14-vertex 0-rooted tree exercised across the suite.
// Three subtrees hang off the auxiliary root; the records are
// {4, 5, 7, 10, 13, 14}, the decomposition type is (4, 1, 1, 2, 5, 1) and the
// attachment sequence is (0, 1, 4, 0, 11).

#include "treerec/tree.hpp"

namespace fixtures {

inline treerec::RootedTree running_example() {
    return treerec::RootedTree({{1, 4},
                                {2, 4},
                                {3, 1},
                                {4, 0},
                                {5, 0},
                                {6, 13},
                                {7, 1},
                                {8, 11},
                                {9, 10},
                                {10, 4},
                                {11, 13},
                                {12, 11},
                                {13, 0},
                                {14, 11}},
                               0);
}

}  // namespace fixtures
