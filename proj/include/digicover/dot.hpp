#pragma once

#include <string>

#include "digicover/image.hpp"
#include "digicover/map.hpp"

namespace digicover {

/// Undirected graph: one node per point (labelled by coordinates, in point
/// order) and one edge per adjacent pair.
std::string image_to_dot(const DigitalImage& img);

/// Domain and codomain as two clusters plus dashed arrows x -> f(x).
std::string map_to_dot(const DigitalMap& f);

}  // namespace digicover
