#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxsurf/patch.hpp"

namespace maxsurf::app {

/// A sampled grid: vertex (i, j) at index j * nu + i, with the spacelike
/// mask per vertex.
struct MeshOutput {
  Grid grid;
  std::string label;
  std::vector<Vec3R> vertices;
  std::vector<std::uint8_t> spacelike;
};

/// 17 significant digits, locale independent.
std::string format_double(double x);

/// `v x y z` records then quad faces `f a b c d` (1-based, counterclockwise
/// in (u, v)).
void write_obj(std::ostream& out, const MeshOutput& mesh);

/// Header `u,v,x,y,z,spacelike`, one row per vertex.
void write_csv(std::ostream& out, const MeshOutput& mesh);

/// Writes through a temporary file renamed into place. Throws IoError.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace maxsurf::app
