#pragma once

#include <string>
#include <vector>

#include "koszul/ainf.hpp"
#include "koszul/sequences.hpp"

namespace koszul {

// The crossing of curves j and i, j > i: it sits on curve j's plain side and
// on curve i's dagger side.
struct MarkedPoint {
    int j = 0;
    int i = 0;
    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
    friend auto operator<=>(const MarkedPoint&, const MarkedPoint&) = default;
    std::string label() const {
        return "q(" + std::to_string(j) + "," + std::to_string(i) + ")";
    }
};

// Marked points of the curve at p, in the order they appear along the curve:
// the root, then the dagger side (crossings with higher curves: odd dagger
// indices ascending, then even ones descending), then the plain side
// (crossings with lower curves: even plain indices ascending, then odd ones
// descending).
struct MarkedCurve {
    int index = 0;
    std::vector<MarkedPoint> dagger_side;
    std::vector<MarkedPoint> plain_side;

    std::vector<MarkedPoint> all() const {
        std::vector<MarkedPoint> out = dagger_side;
        out.insert(out.end(), plain_side.begin(), plain_side.end());
        return out;
    }
};

MarkedCurve marked_order(const SequenceTable& seqs, int p);
MarkedCurve marked_order(const RelationPattern& pat, int p);

// One edge of a polygon: the interval on `curve` between its crossings with
// curves end_a and end_b.
struct PolygonEdge {
    int curve = 0;
    int end_a = 0;
    int end_b = 0;
};

struct PolygonWord {
    std::vector<PolygonEdge> edges;       // cyclic
    std::vector<MarkedPoint> vertices;    // shared endpoints, one per edge pair
};

// The (t - s + 1)-gon of relation j (1-based): edges on curves s..t, vertices
// q(s+1,s), q(s+2,s+1), ..., q(t,t-1), q(t,s). Validated against the marked
// orders: among crossings with curves inside [s, t], each edge's endpoints
// are adjacent.
PolygonWord relation_polygon(const SequenceTable& seqs, int j);
PolygonWord relation_polygon(const RelationPattern& pat, int j);

// A tuple i_0 < i_1 < ... < i_l with all consecutive homs of the dual
// nonzero, hom(B(i_l), B(i_0)) nonzero, and the mu^l degree equation
// satisfied; `value` is the dual's table entry on the corresponding chain.
struct AdmissibleChain {
    std::vector<int> vertices;
    int arity() const { return static_cast<int>(vertices.size()) - 1; }
    SignedTerm value;
};

std::vector<AdmissibleChain> admissible_chains(const SequenceTable& seqs,
                                               const GradedBasisCategory& dual);

// Layout constants for the schematic rendering; changing them only moves
// pixels, never the diagram combinatorics.
struct DiagramLayout {
    int strand_pitch = 40;  // vertical separation of curve rows
    int point_pitch = 24;   // horizontal separation of points on a row
    int column_pitch = 48;  // horizontal separation of curve home columns
    int margin = 32;
    int point_radius = 3;
};

// Deterministic SVG: one strand per curve through its marked points,
// relation polygons shaded, admissible-chain polygons outlined. Byte-stable
// for a fixed input.
std::string render_svg(const RelationPattern& pat,
                       const DiagramLayout& layout = DiagramLayout{});

}  // namespace koszul
