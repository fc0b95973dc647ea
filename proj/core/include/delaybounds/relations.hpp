#ifndef DELAYBOUNDS_RELATIONS_HPP
#define DELAYBOUNDS_RELATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "delaybounds/two_interval.hpp"

namespace delaybounds {

enum class RelationId { A, B, C, D, E };
enum class SearchKind { B, D };

/// Configuration of the randomized reverse-implication searches.
struct SearchConfig {
  int n = 1;
  int nu = 0;
  /// size of the randomized family of convexifier parameters swept per
  /// candidate; the claim "independently of the choice" is demonstrated
  /// against this family and reported as such, never as an exhaustive
  /// quantification
  int sweep = 50;
  /// required magnitude of both-sign quadratic-form values
  double margin = 1e-6;
  /// near-endpoint offset: alpha = 1 - delta, halved on failure down to
  /// the floor
  double delta0 = 1e-3;
  double delta_floor = 1e-6;
  /// state weight to use; a fresh SPD draw per candidate when absent
  std::optional<Matrix> fixed_w;
};

/// Witness (or exhaustion report) of indefiniteness of a convexifier
/// difference against a swept parameter family.
struct SearchOutcome {
  SearchKind kind = SearchKind::B;
  bool found = false;
  long trials_used = 0;
  uint64_t seed = 0;
  int n = 0;
  int nu = 0;
  int sweep_size = 0;
  double alpha = 0.0;
  /// constructed parameters: V1, V2 for kind B; Y1, Y2 for kind D
  Matrix v1, v2;
  Matrix w;  // the state weight used
  /// witness vectors and their worst-case quadratic-form values across
  /// the sweep (negative side and positive side)
  Vector witness_neg, witness_pos;
  double quad_neg = 0.0;
  double quad_pos = 0.0;
};

SearchOutcome counterexample_search(SearchKind kind, uint64_t seed, long budget,
                                    const SearchConfig& cfg = {});

/// Pass/fail verdict for one of the relation checks between the
/// free-matrix bound family and the convexified projection bounds.
struct RelationReport {
  RelationId id = RelationId::A;
  bool pass = false;
  /// check-specific worst margin: elementwise residual for the identity
  /// checks, minimum eigenvalue of the PSD differences
  double worst = 0.0;
  std::string note;
  std::optional<SearchOutcome> reverse;
};

/// Executable forms of the relations between the bound families:
///   A: the free-matrix form is the V = -h Nhat reparameterization of
///      the first convexifier (exact matrix identity, both directions);
///   B: stacking V1 = [calW; Y2^T], V2 = [Y1; calW] reproduces the
///      simplified extended form; the converse fails (witness search);
///   C: the extended form is dominated by the simplified extended form
///      sharing its Y blocks, with equality at the boundary X choice;
///   D: merged = simplified extended at Y1 = Y2; the converse fails
///      (witness search);
///   E: the classical reciprocally convex form is dominated by the
///      merged form for feasible Y.
/// The params variant must carry the fields the relation consumes:
/// A: FmbParams, B: SercParams, C: ErcParams, D: MercParams, E: RccParams.
RelationReport check_relation(RelationId id, const OmegaParams& params, const SplitGeometry& g,
                              const WeightLadder& wl, long budget = 10000, uint64_t seed = 0);

}  // namespace delaybounds

#endif
