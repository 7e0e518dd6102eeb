#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttk/geometry.hpp"
#include "ttk/knotparams.hpp"

namespace ttk {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One period of a lifted closed curve on the square torus R^2 / Z^2. The
/// segment after the last vertex ends at vertices[0] + closure.
struct PlanarCurve {
  std::vector<Point> vertices;
  IVec closure;

  std::size_t size() const { return vertices.size(); }
  /// Vertex with an extended index: vertex(i + t*N) = vertices[i] + t*closure.
  Point vertex(long index) const;
};

/// A crossing of the lifted alpha curve with an integer-height line (a lift of beta).
struct Crossing {
  long segment = 0;  // index of the segment vertex(segment) -> vertex(segment + 1)
  long height = 0;
  Point at;
  bool upward = false;
};

enum class BasePoint { Z, W };
enum class Turn { Ccw, Cw };
enum class PassSide { Left, Right };

/// Genus-one doubly-pointed diagram: alpha polyline, beta = {y = 0} fixed,
/// base points z and w.
struct GenusOneDiagram {
  PlanarCurve alpha;
  Point z;
  Point w;

  /// Crossings of alpha with the integer-height lines along one period,
  /// ordered along alpha.
  std::vector<Crossing> crossings() const;
  std::size_t intersection_count() const { return crossings().size(); }

  /// Throws DiagramError naming the first violated invariant.
  void validate(bool check_embedding = true) const;
  bool operator==(const GenusOneDiagram& o) const;
};

struct WindingMove {
  BasePoint which = BasePoint::Z;
  Turn direction = Turn::Ccw;
  int meridians = 0;
  PassSide side = PassSide::Left;
};

struct DiagramState {
  GenusOneDiagram diagram;
  std::vector<WindingMove> log;
};

struct BuildOptions {
  /// Diamond half-width used by each drag step is 2^-corridor_exponent times
  /// the clearance to the other base point.
  int corridor_exponent = 2;
  /// Additional exponents tried when a step lands a vertex on a beta lift.
  int max_retries = 6;
  bool reduce = true;
};

/// Homology class of a winding loop with `meridians` meridional turns.
IVec winding_vector(Turn direction, int meridians);

/// Straight vertical alpha with z and w just either side of it.
DiagramState initial_state(const TwistedTorusParams& params);

/// Drags `which` once around the torus (one longitude, `meridians` meridians),
/// passing the other base point on `side`. Every alpha arc met by the moving
/// point is pushed ahead of it, never crossed.
DiagramState wind_base_point(const DiagramState& state, BasePoint which, Turn direction, int meridians,
                             PassSide side, const BuildOptions& options = {});

/// The winding schedule applied by build_diagram.
std::vector<WindingMove> winding_schedule(const TwistedTorusParams& params);

GenusOneDiagram build_diagram(const TwistedTorusParams& params, const BuildOptions& options = {});
/// build_diagram without the final reduction.
DiagramState build_raw_state(const TwistedTorusParams& params, const BuildOptions& options = {});

/// Removes innermost bigons free of base points by isotoping alpha across
/// beta, two intersections at a time, until none remain.
GenusOneDiagram reduce_diagram(const GenusOneDiagram& diagram);
/// Number of removable (base-point-free) bigons between consecutive crossings.
std::size_t count_empty_bigons(const GenusOneDiagram& diagram);

/// Versioned plain-text serialization.
void write_diagram(std::ostream& out, const GenusOneDiagram& diagram);
GenusOneDiagram read_diagram(std::istream& in);

}  // namespace ttk
