#pragma once

#include <optional>
#include <string>

#include "cover/lifting.hpp"
#include "cover/voltage.hpp"

namespace cover {

Graph complete_graph(uint32_t n);
Graph cycle_graph(uint32_t n);
Graph generalized_petersen(uint32_t n, uint32_t k);
/// Circulant on n vertices with the given step set (steps taken mod n,
/// normalized; 0 rejected).
Graph circulant(uint32_t n, const std::vector<uint32_t>& steps);

/// K4 with its two arc-transitive vertex groups.
GraphPtr k4();
PermGroup k4_a4();
PermGroup k4_s4();

/// Petersen graph on the 2-subsets of a 5-set (lexicographic order), with
/// the induced actions of A5 and S5.
GraphPtr petersen();
PermGroup petersen_a5();
PermGroup petersen_s5();

PermGroup cycle_dihedral(uint32_t n);  // on cycle_graph(n)

/// A cover fixture bundles the covering data with the lift of a named base
/// group acting on the derived graph.
struct CoverFixture {
  Cover cover;
  LiftedGroup lifted;
};

CoverFixture f8_fixture();        // double cover of K4 by the all-ones assignment; lift of S4
CoverFixture f8_a4_fixture();     // same cover, lift of A4
uint64_t f20a_class_vector();     // the non-parity class over the Petersen graph for A5
CoverFixture f20a_fixture();      // that cover with the lift of A5
CoverFixture f20b_fixture();      // all-ones cover of the Petersen graph, lift of S5
CoverFixture f20b_a5_fixture();   // same cover, lift of A5
CoverFixture f40_fixture();       // all-ones cover of the F20A fixture, lift of its group

/// Cubic circulant with rim voltage 0 and diameter voltage 1, plus the full
/// dihedral vertex group and its cyclic and dihedral halves (n odd).
struct CirculantFixture {
  GraphPtr graph;
  VoltageAssignment zeta;
  PermGroup full;           // dihedral of order 4n
  PermGroup cyclic_half;    // rotations, index 2
  PermGroup dihedral_half;  // vertex-transitive dihedral subgroup of index 2
};
CirculantFixture circulant_fixture(uint32_t n);

/// Prism over a 2n-cycle as a Cayley graph of a dihedral-times-Z2 group in
/// its regular action, with the edge-type voltage assignment (n odd).
struct PrismFixture {
  GraphPtr graph;
  VoltageAssignment zeta;
  PermGroup regular;  // order 4n, acting regularly
};
PrismFixture prism_fixture(uint32_t n);

/// Census graphs by name: F4, F8, F10, F16, F20A, F20B, F40, GP(n,k),
/// C(n;a,b,...).  Derived fixtures use the covering labels.
std::optional<Graph> fixture_graph(const std::string& name);

/// Built-in groups by name: A4, S4 (degree 4), A5, S5 (degree 10), AutF8,
/// AutF20A, AutF20B (lifted actions on the cover fixtures).
std::optional<PermGroup> fixture_group(const std::string& name);

/// Census identification of small cubic symmetric graphs, by isomorphism
/// against the fixtures; empty when unknown.
std::string census_name(const Graph& g);

}  // namespace cover
