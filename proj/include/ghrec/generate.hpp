#ifndef GHREC_GENERATE_HPP
#define GHREC_GENERATE_HPP

#include <cstdint>
#include <optional>

#include "ghrec/hypergraph.hpp"
#include "ghrec/reductions.hpp"

namespace ghrec {

/// Seeded instance generators. Same (kind, parameters, seed) always yields
/// the same instance; all randomness flows through one engine per call.

/// Random tree by uniform attachment (degrees unbounded, so both YES and NO
/// inputs for the tree recognizer occur).
Graph gen_tree(int n, uint64_t seed);

/// Random connected simple 3-regular graph via the pairing model with
/// rejection; n must be even and >= 4. Throws GENERATION_TIMEOUT.
Graph gen_cubic(int n, uint64_t seed);

/// Random 3-CNF: clauses pick 3 distinct variables and random signs.
Formula3CNF gen_cnf3(int variables, int clauses, uint64_t seed);

/// Random 3-uniform labelling over a compact universe (distinct labels).
Labelling gen_random_labelling(int n, uint64_t seed);

/// A labelling whose 2-intersection image is connected, chordal and
/// claw-free: a random walk over clique-tree shapes (positive cliques grown
/// element by element, strong switches into negative cliques, weak switches
/// at free pairs). The image is a guaranteed-YES recognizer instance.
Labelling gen_chordal_clawfree_labelling(int n, uint64_t seed);

/// Convenience wrapper: the image of gen_chordal_clawfree_labelling,
/// re-screened (connected, chordal, claw-free) before returning.
Graph gen_chordal_clawfree(int n, uint64_t seed);

/// Random edge flips of a chordal claw-free YES instance, re-screened to stay
/// connected, chordal and claw-free (mostly NO instances). nullopt when no
/// flip inside the try budget passes the screen.
std::optional<Graph> perturb_chordal_clawfree(const Graph& g, uint64_t seed, int tries = 64);

} // namespace ghrec

#endif
