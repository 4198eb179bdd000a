#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "knots/errors.hpp"

namespace knots {

using CrossingId = std::uint32_t;
using ArcId = std::uint32_t;  // arc ids are >= 1; 0 is "no arc"

struct PortRef {
  CrossingId crossing = 0;
  int port = 0;  // 0..3
  auto operator<=>(const PortRef&) const = default;
};

// One crossing of an oriented link diagram. Ports 0..3 go counterclockwise;
// port 0 is the incoming under-strand, so the under-strand runs 0 -> 2.
// over_in is 1 or 3 and records which of the two over-ports is incoming.
// Looking along the incoming under-strand, over_in == 3 means the over-strand
// enters from the left; such a crossing is positive.
struct Crossing {
  std::array<ArcId, 4> arc{0, 0, 0, 0};
  int over_in = 3;
  bool operator==(const Crossing&) const = default;
};

inline int through_port(int p) { return p ^ 2; }  // strands run straight
inline int over_out_port(const Crossing& c) { return 4 - c.over_in; }
inline bool is_in_port(const Crossing& c, int p) { return p == 0 || p == c.over_in; }
inline int sign_of(const Crossing& c) { return c.over_in == 3 ? +1 : -1; }

// A diagram in the 2-sphere: crossings with a rotation system, arcs as a
// perfect matching on ports (each arc label appears at exactly one out-port
// and one in-port), plus a count of crossing-free circles.
struct Diagram {
  std::map<CrossingId, Crossing> crossings;
  int free_loops = 0;
  // id allocators; kept past deletions so ids stay stable across moves
  CrossingId next_crossing = 0;
  ArcId next_arc = 1;

  bool operator==(const Diagram& o) const {
    return crossings == o.crossings && free_loops == o.free_loops;
  }

  std::size_t crossing_count() const { return crossings.size(); }
  bool empty() const { return crossings.empty() && free_loops == 0; }

  const Crossing& at(CrossingId c) const;
  Crossing& at(CrossingId c);
  CrossingId alloc_crossing() { return next_crossing++; }
  ArcId alloc_arc() { return next_arc++; }
  // recompute allocator watermarks from contents (after decode)
  void refresh_watermarks();
};

struct ArcEnds {
  PortRef tail;  // at an out-port
  PortRef head;  // at an in-port
};

// arc id -> endpoints; throws DiagramError if incidence is broken
std::map<ArcId, ArcEnds> arc_table(const Diagram& d);

// all structural violations, as data; empty means valid
std::vector<std::string> validate(const Diagram& d);

// A dart leaves crossing c along the arc at the given port (either flow
// direction). Faces are dart orbits of "arrive, then leave via the next port
// counterclockwise"; the face lies on the right of each of its darts.
struct Dart {
  CrossingId c = 0;
  int port = 0;
  auto operator<=>(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> darts;  // in orbit order
  std::size_t degree() const { return darts.size(); }
};

// arrival port of a dart (the far end of its arc)
PortRef dart_target(const Diagram& d, const std::map<ArcId, ArcEnds>& at, Dart k);

// deterministic order: orbits discovered by scanning (crossing, port) ascending
std::vector<Face> faces(const Diagram& d);

struct ComponentLabeling {
  std::map<ArcId, int> comp_of_arc;
  int count = 0;            // total components including free loops
  int arc_components = 0;   // components that own arcs; free loops take the
                            // indices arc_components..count-1
};

ComponentLabeling components(const Diagram& d);

int crossing_sign(const Diagram& d, CrossingId c);
int writhe(const Diagram& d);

// Oriented smoothing at p: incoming under joins outgoing over and vice versa;
// the crossing disappears. Component count changes by exactly +-1.
Diagram smooth(const Diagram& d, CrossingId p);

// over/under exchanged at one crossing / at every crossing
Diagram crossing_change(const Diagram& d, CrossingId p);
Diagram mirror(const Diagram& d);

// Connected sum joining the component of a1 to the component of a2,
// respecting orientation. d2 is relabeled above d1's id watermarks. If either
// operand has no crossings it must be a lone circle (free_loops == 1, arc id
// passed as 0) and the sum degenerates to the other diagram.
Diagram connected_sum(const Diagram& d1, ArcId a1, const Diagram& d2, ArcId a2);

// both diagrams side by side (d2 relabeled); no strands joined
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

// Delete the planned crossings, rejoining strands: plan[p] gives the port a
// strand entering at in-port p leaves by. Chains of arcs through deleted
// crossings merge into the chain's first arc; chains that close up become
// free loops. merged_into maps each consumed arc to the surviving arc (0 if
// it closed into a free loop).
struct SpliceResult {
  Diagram d;
  std::map<ArcId, ArcId> merged_into;
  int closed_loops = 0;
};
SpliceResult splice_out(const Diagram& d,
                        const std::map<CrossingId, std::array<int, 4>>& plan);

// rename crossings/arcs via partial bijections (missing keys = identity)
Diagram relabel(const Diagram& d, const std::map<CrossingId, CrossingId>& cmap,
                const std::map<ArcId, ArcId>& amap);

// combinatorial-map isomorphism respecting port numbering and free_loops
bool isomorphic(const Diagram& a, const Diagram& b);

}  // namespace knots
