#pragma once

#include "suitable/table.hpp"

namespace suitable::tests {

// The classic 3-permutation witness that N(4,3) = 3.
inline PermTable example_array_343() {
    return PermTable(4, Role::array, {
        {2, 4, 1, 3},
        {3, 4, 2, 1},
        {1, 4, 2, 3},
    });
}

// A (5,7,3)-suitable array whose rewrite into first-symbol form exercises
// both push stages; its middle block is the 5 x 2 core below.
inline PermTable example_array_573() {
    return PermTable(7, Role::array, {
        {3, 1, 2, 7, 4, 5, 6},
        {4, 1, 2, 7, 3, 5, 6},
        {5, 7, 2, 1, 3, 4, 6},
        {6, 3, 4, 5, 2, 1, 7},
        {6, 7, 2, 1, 3, 4, 5},
    });
}

// The (5,2,3)-core it normalizes to.
inline PermTable example_core_523() {
    return PermTable(2, Role::core, {
        {1, 2},
        {1, 2},
        {2, 1},
        {2, 1},
        {2, 1},
    });
}

} // namespace suitable::tests
