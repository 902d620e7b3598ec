#pragma once

#include <map>
#include <vector>

// Published tree counts for total weight n = 4..7: lower triangles, rows and
// columns over integer partitions in decreasing lexicographic order, rows
// black and columns white.
inline const std::map<unsigned, std::vector<std::vector<int>>>& published_tree_tables() {
  static const std::map<unsigned, std::vector<std::vector<int>>> tables{
      {4,
       {
           {1},
           {1, 1},
           {1, 2, 0},
           {2, 2, 2, 0},
           {6, 0, 0, 0, 0},
       }},
      {5,
       {
           {1},
           {1, 1},
           {1, 2, 1},
           {2, 2, 4, 4},
           {2, 4, 2, 4, 4},
           {6, 6, 6, 0, 0, 0},
           {24, 0, 0, 0, 0, 0, 0},
       }},
      {6,
       {
           {1},
           {1, 1},
           {1, 2, 1},
           {2, 2, 4, 4},
           {1, 2, 2, 6, 0},
           {2, 4, 4, 8, 2, 7},
           {6, 6, 12, 12, 12, 12, 0},
           {2, 6, 0, 12, 6, 6, 12, 0},
           {6, 12, 8, 12, 8, 12, 0, 12, 0},
           {24, 24, 24, 0, 24, 0, 0, 0, 0, 0},
           {120, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       }},
      {7,
       {
           {1},
           {1, 1},
           {1, 2, 1},
           {2, 2, 4, 4},
           {1, 2, 2, 6, 1},
           {2, 4, 4, 8, 4, 11},
           {6, 6, 12, 12, 18, 24, 36},
           {2, 4, 6, 12, 2, 10, 24, 4},
           {2, 6, 2, 16, 4, 8, 36, 12, 4},
           {6, 12, 14, 24, 10, 24, 36, 24, 24, 36},
           {24, 24, 48, 48, 48, 48, 0, 48, 48, 0, 0},
           {6, 18, 6, 36, 12, 24, 36, 24, 12, 36, 0, 36},
           {24, 48, 36, 48, 36, 48, 0, 48, 48, 0, 0, 0, 0},
           {120, 120, 120, 0, 120, 0, 0, 0, 0, 0, 0, 0, 0, 0},
           {720, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       }},
  };
  return tables;
}
