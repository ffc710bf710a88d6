#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octic/geometry.hpp"

namespace octic {

/// Six cube faces plus two planes passing through k cube vertices in total
/// (k = 0..6), otherwise in general position.
std::vector<RationalPlane> cube_plus(int k);

/// The eight face planes of the regular octahedron.
std::vector<RationalPlane> octahedron();

/// Seven faces of two tetrahedra glued along a common face, plus an eighth
/// plane through m of the two apex points (m = 0..2).
std::vector<RationalPlane> glued_tetrahedra(int m);

/// Four general planes, three more through consecutive pairwise intersection
/// lines, and a general eighth plane.
std::vector<RationalPlane> pencil_chain();

/// Four general planes plus one general plane through each of four of their
/// pairwise intersection lines.
std::vector<RationalPlane> four_pencils();

/// n planes osculating the moment curve; any three meet in exactly one point
/// and no four are concurrent. Supported range 2..16.
std::vector<RationalPlane> generic_planes(int n);

struct GeneratorEntry {
  std::string name;
  std::string description;
  std::function<std::vector<RationalPlane>()> build;
};

/// All named plane-list generators, in a fixed order.
const std::vector<GeneratorEntry>& generator_registry();

/// Looks a generator up by name; understands the cube-plus-K / cube+2@K,
/// glued-tetrahedra-M and generic-N families.
std::optional<std::vector<RationalPlane>> build_generator(
    const std::string& name);

}  // namespace octic
