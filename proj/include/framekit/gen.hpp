#pragma once

// Deterministic generators for random problem instances: generic-position
// matrices, subspaces, and fusion systems. The demo runner and the test
// suites share these so that a seed fully determines an experiment.

#include "framekit/fusion.hpp"
#include "framekit/rng.hpp"

namespace framekit::gen {

/// Orthonormal columns spanning a random dim-dimensional subspace.
Subspace random_subspace(Rng& rng, std::size_t ambient, std::size_t dim, Field field);

/// d x d operator of the given rank, built as a product of Gaussian
/// tall-thin factors.
Mat random_operator(Rng& rng, std::size_t ambient, std::size_t rank, Field field);

/// Generic weighted family: member dimensions anywhere in [0, ambient],
/// weights in [0.5, 2]. Always Bessel; usually not a fusion frame.
FusionSystem random_system(Rng& rng, std::size_t ambient, Field field);

/// Spanning system: a random unitary's columns split into groups (plus
/// optional overlapping extras), so the lower fusion bound is at least the
/// smallest squared weight.
FusionSystem random_fusion_frame(Rng& rng, std::size_t ambient, Field field);

/// Family of subspaces drawn from one random unitary's columns; all their
/// projections commute with each other and with `v`.
struct CommutingInstance {
    FusionSystem system;
    Subspace v;
    Mat unitary;
};
CommutingInstance random_commuting_instance(Rng& rng, std::size_t ambient, Field field);

/// Same construction, but the members partition all of the unitary's
/// columns (plus extras), so the system is a fusion frame.
CommutingInstance random_commuting_fusion_frame(Rng& rng, std::size_t ambient, Field field);

/// Random partition of {0, ..., count-1} into at most `max_cells` nonempty
/// cells.
std::vector<std::vector<std::size_t>> random_partition(Rng& rng, std::size_t count,
                                                       std::size_t max_cells);

} // namespace framekit::gen
