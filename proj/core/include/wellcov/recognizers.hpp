#pragma once

#include "wellcov/graph.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

/// Every maximal independent set is maximum. On failure the certificate is
/// a TwoMaximalSets pair with differing sizes.
Verdict is_well_covered(const Graph& g);

/// Every independent set of size exactly k extends to a maximum independent
/// set. Vacuously true when k exceeds the independence number. On failure
/// the certificate is the first non-extendable set in lexicographic order.
/// Requires k >= 1.
Verdict is_k_extendable(const Graph& g, int k);

/// k-extendable for every k in [1, s]. s = 0 is vacuously true.
Verdict is_Es(const Graph& g, int s);

/// Alias for is_k_extendable(g, 1).
Verdict is_B_graph(const Graph& g);

/// No independent set of G - N[v] dominates N(v). An isolated vertex is not
/// shedding (the empty set dominates the empty neighborhood). On failure the
/// certificate is the dominating witness.
Verdict is_shedding(const Graph& g, int v);

/// Subset-removal characterization of Wk: for every S with |S| <= k-1,
/// G - S is well-covered and has the same independence number as G.
/// Requires k >= 1. Failure certificate: SubsetRemovalFailure.
Verdict is_Wk_staples(const Graph& g, int k);

/// Definitional Wk check: every tuple of k pairwise disjoint independent
/// sets extends to k pairwise disjoint maximum independent sets. Exhaustive;
/// refuses n > cap or k > 3 (InstanceTooLargeError). Failure certificate:
/// PartitionWitness holding the non-completable tuple (A1, ..., Ak).
Verdict is_Wk_definitional(const Graph& g, int k, int cap = 10);

/// Re-check a verdict's certificate against the graph by direct definition
/// checking. Verdicts without certificates re-verify trivially.
bool reverify_certificate(const Graph& g, const ClassQuery& query, const Verdict& verdict);

}  // namespace wellcov
