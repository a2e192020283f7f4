#pragma once

#include "ofc/coloring.hpp"

namespace ofc::fixtures {

// The 2-fold 7-colouring of C_7 with 1-based labels {1,2},{3,4},{5,6},{7,1},
// {2,3},{4,5},{6,7}, shifted to the 0-based palette.
inline BFoldColoring figure_one() {
  return BFoldColoring{7, 2,
                       {make_color_set({0, 1}), make_color_set({2, 3}), make_color_set({4, 5}),
                        make_color_set({6, 0}), make_color_set({1, 2}), make_color_set({3, 4}),
                        make_color_set({5, 6})}};
}

}  // namespace ofc::fixtures
