#pragma once

#include <vector>

#include "ttk/diagram.hpp"

namespace ttk {

/// A crossing of the fixed lift of alpha with an integer-height line.
struct LiftEvent {
  long index = 0;    // position along alpha within one period
  long height = 0;   // height of the line crossed
  Rational x;        // x coordinate of the crossing
  bool upward = false;
  long segment = 0;  // alpha segment carrying the crossing
};

/// One period of the bi-infinite crossing sequence of a lift of alpha. Event
/// i + t*m is event i translated by t*period.
struct LiftedAlpha {
  PlanarCurve alpha;
  std::vector<LiftEvent> events;
  IVec period;

  long size() const { return static_cast<long>(events.size()); }
  /// Event with an extended index, translated into the right period.
  LiftEvent event(long index) const;
};

enum class BigonSide { Above, Below };

/// Maslov index one bigon between generators (event indices within a period).
struct Bigon {
  int from = 0;
  int to = 0;
  int n_z = 0;
  int n_w = 0;
  BigonSide side = BigonSide::Above;
  bool operator==(const Bigon&) const = default;
};

LiftedAlpha lift_alpha(const GenusOneDiagram& diagram);

/// Bigons cut out by consecutive returns of the lifted alpha to one line,
/// counted once each downstairs.
std::vector<Bigon> enumerate_bigons(const LiftedAlpha& lifted, const Point& z, const Point& w);
std::vector<Bigon> enumerate_bigons(const GenusOneDiagram& diagram);

/// Faces of the four-valent graph alpha u beta on the torus. Vertices are the
/// generators; alpha edge j runs from generator j to j + 1 along alpha, beta
/// edge b runs east from the generator of x-rank b to the next one.
struct Regions {
  int count = 0;
  std::vector<int> corners;      // corners per face
  std::vector<int> alpha_left, alpha_right;
  std::vector<int> beta_left, beta_right;
  std::vector<int> beta_order;   // generator ids sorted by x position on beta
  std::vector<int> beta_rank;    // inverse of beta_order
  int z_face = -1;
  int w_face = -1;

  /// The four faces meeting at a generator.
  std::vector<int> corner_faces(int generator) const;
};

Regions regions(const GenusOneDiagram& diagram);

/// Integer 2-chain on the faces, with the generators it connects.
struct DomainVector {
  int from = 0;
  int to = 0;
  std::vector<long> multiplicities;

  long n_z(const Regions& r) const { return multiplicities[r.z_face]; }
  long n_w(const Regions& r) const { return multiplicities[r.w_face]; }
};

/// A domain from x to y, normalized so its smallest multiplicity is zero.
DomainVector connecting_domain(const GenusOneDiagram& diagram, const Regions& r, int x, int y);
DomainVector connecting_domain(const GenusOneDiagram& diagram, int x, int y);

/// Euler measure plus the point measures at the two corners.
long maslov_index(const Regions& r, const DomainVector& domain);
long maslov_index(const GenusOneDiagram& diagram, const DomainVector& domain);

}  // namespace ttk
