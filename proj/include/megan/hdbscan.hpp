#pragma once

#include <vector>

#include "megan/matrix.hpp"

namespace megan {

constexpr int kNoiseLabel = -1;

// HDBSCAN* on row vectors with Euclidean distance: core distances, mutual
// reachability, single-linkage over the mutual-reachability MST, condensed
// tree, and excess-of-mass cluster extraction. Returns one label per row;
// points in no selected cluster get kNoiseLabel. Labels are numbered in
// order of cluster creation, deterministically for a fixed input order.
std::vector<int> hdbscan(const Matrix& points, int min_cluster_size, int min_samples);

}  // namespace megan
