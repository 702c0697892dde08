#pragma once

#include <set>
#include <span>

#include "relfix/certify.hpp"
#include "relfix/metric.hpp"
#include "relfix/relation.hpp"

namespace relfix::oracle {

// Brute-force cross-checks for the fast paths. Deliberately naive: pair-set
// loops, no matrices, functional values recomputed from their definitions
// with no helpers shared with the main modules.

std::set<int> brute_fixed_points(const FiniteInstance& m);

bool brute_k_transitive(const FiniteRelation& r, int k);

/// Uniform-gap verdict by direct scan plus a margin sweep over an eps grid
/// (attained levels, midpoints, and +/- tolerance perturbations, plus any
/// supplied extra points).
Verdict brute_mk_verdict(const FiniteInstance& m, Functional g,
                         std::span<const double> eps_grid = {});

/// Simulates every progressive orbit with visited-set termination and checks
/// the full conclusion: each reaches a fixed point and related fixed points
/// coincide.
bool brute_picard_conclusion(const FiniteInstance& m);

}  // namespace relfix::oracle
