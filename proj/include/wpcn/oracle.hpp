#ifndef WPCN_ORACLE_HPP
#define WPCN_ORACLE_HPP

// Brute-force grid oracle: exhaustively enumerates the scheme's feasible
// allocations on a uniform duration lattice and returns the maximizing grid
// point. Used to validate the bisection solvers; never call it with a fine
// step on a hot path.

#include "wpcn/solver.hpp"

namespace wpcn {

// Enumerates t1/t2/t3 (and the t4 split where the scheme frees it) on the
// lattice {0, h, 2h, ...}; the last slot takes the exact remainder of the
// block budget 1 - t0, so every evaluated point spends the full budget.
// Ties between maximizers resolve to the lexicographically smallest
// allocation. The result has converged = true and iterations = number of
// feasible grid points, independent of exec.
//
// pre: grid_step in (0, 0.1] and smaller than the block budget; throws
// std::domain_error otherwise.
SolveResult oracle_grid(const Scheme& scheme, const SystemParams& params,
                        const ChannelSet& channels, const CoefficientSet& coeffs,
                        double grid_step, ExecMode exec = ExecMode::Parallel);

} // namespace wpcn

#endif
