#include "octic/generators.hpp"

namespace octic {

namespace {

RationalPlane plane(long long a, long long b, long long c, long long d) {
  return RationalPlane::from_integers(a, b, c, d);
}

std::vector<RationalPlane> cube_faces() {
  return {
      plane(1, 0, 0, -1), plane(1, 0, 0, 1),  // X = W, X = -W
      plane(0, 1, 0, -1), plane(0, 1, 0, 1),  // Y = W, Y = -W
      plane(0, 0, 1, -1), plane(0, 0, 1, 1),  // Z = W, Z = -W
  };
}

// Extra planes through 0..3 cube vertices. The vertex sets of A and B are
// disjoint, so k vertices of the cube become 4-fold points.
RationalPlane cube_extra_a(int k) {
  switch (k) {
    case 0: return plane(7, 5, 3, -2);
    case 1: return plane(5, 3, 2, -10);   // through (1,1,1)
    case 2: return plane(3, 2, -2, -3);   // through (1,1,1), (1,-1,-1)
    case 3: return plane(1, 1, -1, -1);   // through (1,1,1), (1,-1,-1), (-1,1,-1)
  }
  throw Error("cube_extra_a out of range");
}

RationalPlane cube_extra_b(int k, bool partner_is_three_vertex) {
  switch (k) {
    case 0: return plane(11, 7, 5, -3);
    case 1: return plane(7, 4, 2, 13);    // through (-1,-1,-1)
    case 2: return plane(3, -3, 1, 1);    // through (-1,-1,-1), (1,1,-1)
    case 3:
      // Two three-vertex planes force their intersection line to cross one
      // of the three face-pair lines at infinity; with this choice the
      // crossing lands at (0:1:1:0), which then lies on X=W, X=-W and both
      // extra planes. That engineered 4-fold point brings the total to
      // 3 + 6 = 9 only when the crossing is shared with plane A, so B is
      // pinned to the pencil through (-1,-1,-1), (-1,1,1) whose line meets
      // infinity exactly there.
      if (!partner_is_three_vertex)
        throw Error("three-vertex B requires three-vertex A");
      return plane(5, 2, -2, 5);
  }
  throw Error("cube_extra_b out of range");
}

}  // namespace

std::vector<RationalPlane> cube_plus(int k) {
  if (k < 0 || k > 6) throw Error("cube_plus expects k in 0..6");
  int ka = std::min(k, 3);
  int kb = k - ka;
  std::vector<RationalPlane> planes = cube_faces();
  planes.push_back(cube_extra_a(ka));
  planes.push_back(cube_extra_b(kb, ka == 3));
  return planes;
}

std::vector<RationalPlane> octahedron() {
  std::vector<RationalPlane> planes;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) planes.push_back(plane(sx, sy, sz, -1));
  return planes;
}

std::vector<RationalPlane> glued_tetrahedra(int m) {
  if (m < 0 || m > 2) throw Error("glued_tetrahedra expects m in 0..2");
  // Base triangle (1,0,0), (0,1,0), (-1,-1,0) in the plane Z = 0; apex A at
  // (0,0,1), apex B at (0,0,-1). The three base edges are triple lines.
  std::vector<RationalPlane> planes = {
      plane(0, 0, 1, 0),      // shared face Z = 0
      plane(1, 1, 1, -1),     // upper face through A, P1, P2
      plane(2, -1, -1, 1),    // upper face through A, P2, P3
      plane(1, -2, 1, -1),    // upper face through A, P1, P3
      plane(1, 1, -1, -1),    // lower face through B, P1, P2
      plane(2, -1, 1, 1),     // lower face through B, P2, P3
      plane(1, -2, -1, -1),   // lower face through B, P1, P3
  };
  switch (m) {
    case 0: planes.push_back(plane(7, 5, 3, -2)); break;    // misses both apexes
    case 1: planes.push_back(plane(7, 5, 3, -3)); break;    // through A
    case 2: planes.push_back(plane(2, 3, 0, 0)); break;     // through A and B
  }
  return planes;
}

std::vector<RationalPlane> pencil_chain() {
  return {
      plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
      plane(0, 0, 0, 1),
      plane(1, 2, 0, 0),  // through P1 ^ P2
      plane(0, 1, 3, 0),  // through P2 ^ P3
      plane(0, 0, 1, 5),  // through P3 ^ P4
      plane(2, 3, 5, 7),  // general eighth plane
  };
}

std::vector<RationalPlane> four_pencils() {
  return {
      plane(1, 0, 0, 0), plane(0, 1, 0, 0), plane(0, 0, 1, 0),
      plane(0, 0, 0, 1),
      plane(1, 2, 0, 0),  // through P1 ^ P2
      plane(1, 0, 3, 0),  // through P1 ^ P3
      plane(0, 1, 0, 5),  // through P2 ^ P4
      plane(0, 0, 1, 7),  // through P3 ^ P4
  };
}

std::vector<RationalPlane> generic_planes(int n) {
  if (n < 2 || n > 16) throw Error("generic_planes expects n in 2..16");
  std::vector<RationalPlane> planes;
  for (long long t = 0; t < n; ++t)
    planes.push_back(plane(1, t, t * t, t * t * t));
  return planes;
}

const std::vector<GeneratorEntry>& generator_registry() {
  static const std::vector<GeneratorEntry> kRegistry = [] {
    std::vector<GeneratorEntry> reg;
    for (int k = 0; k <= 6; ++k)
      reg.push_back({"cube-plus-" + std::to_string(k),
                     "cube faces plus two planes through " + std::to_string(k) +
                         " vertices",
                     [k] { return cube_plus(k); }});
    reg.push_back({"octahedron", "the eight octahedron faces", octahedron});
    for (int m = 0; m <= 2; ++m)
      reg.push_back({"glued-tetrahedra-" + std::to_string(m),
                     "two glued tetrahedra plus a plane through " +
                         std::to_string(m) + " apex points",
                     [m] { return glued_tetrahedra(m); }});
    reg.push_back({"pencil-chain",
                   "three pencil planes over a chain of intersection lines",
                   pencil_chain});
    reg.push_back({"four-pencils",
                   "four pencil planes over four intersection lines",
                   four_pencils});
    reg.push_back({"planes-8-generic", "eight planes in general position",
                   [] { return generic_planes(8); }});
    return reg;
  }();
  return kRegistry;
}

std::optional<std::vector<RationalPlane>> build_generator(
    const std::string& name) {
  for (const auto& entry : generator_registry())
    if (entry.name == name) return entry.build();
  // Aliases and parameterized families.
  if (name.rfind("cube+2@", 0) == 0 && name.size() == 8) {
    int k = name[7] - '0';
    if (k >= 0 && k <= 6) return cube_plus(k);
  }
  if (name == "generic-8") return generic_planes(8);
  if (name.rfind("generic-", 0) == 0) {
    try {
      int n = std::stoi(name.substr(8));
      if (n >= 2 && n <= 16) return generic_planes(n);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace octic
