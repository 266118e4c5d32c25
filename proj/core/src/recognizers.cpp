#include "wellcov/recognizers.hpp"

#include <string>

#include "wellcov/errors.hpp"
#include "wellcov/independent_sets.hpp"

namespace wellcov {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw OutOfRangeVertexError("vertex id " + std::to_string(v) + " out of range");
}

void require_positive(int value, const char* name) {
    if (value < 1) throw Error(std::string(name) + " must be >= 1");
}

/// Well-coveredness of the subgraph induced by `active`, given its
/// independence number `alpha` and a maximum witness. On failure yields the
/// first enumerated maximal set whose size differs from alpha.
bool well_covered_masked(const MaskGraph& g, const DynamicBitset& active, int alpha,
                         std::vector<int>* bad_set) {
    bool ok = true;
    detail::for_each_maximal_independent_set(g, active, [&](const std::vector<int>& members) {
        if (static_cast<int>(members.size()) != alpha) {
            ok = false;
            if (bad_set) *bad_set = members;
            return false;
        }
        return true;
    });
    return ok;
}

/// Subsets of {0..n-1} of the given size in lexicographic order.
template <class F>
bool for_each_subset_of_size(int n, int size, F&& visit) {
    std::vector<int> members;
    members.reserve(size);
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(members.size()) == size)
            return visit(static_cast<const std::vector<int>&>(members));
        if (n - from < size - static_cast<int>(members.size())) return true;
        for (int v = from; v < n; ++v) {
            members.push_back(v);
            if (!self(self, v + 1)) return false;
            members.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace

Verdict is_well_covered(const Graph& g) {
    MaskGraph mg(g);
    DynamicBitset witness(mg.n);
    int alpha = detail::independence_number(mg, mg.all(), &witness);
    std::vector<int> bad;
    if (well_covered_masked(mg, mg.all(), alpha, &bad)) return Verdict::yes();
    return Verdict::no(TwoMaximalSets{VertexSet::from_unsorted(bad), VertexSet::from_bitset(witness)});
}

Verdict is_k_extendable(const Graph& g, int k) {
    require_positive(k, "k");
    MaskGraph mg(g);
    DynamicBitset all = mg.all();
    int alpha = detail::independence_number(mg, all);
    Verdict out = Verdict::yes();
    detail::for_each_independent_set_up_to(mg, all, k, [&](const std::vector<int>& members) {
        if (static_cast<int>(members.size()) != k) return true;
        DynamicBitset rest = all;
        for (int v : members) {
            rest.reset(v);
            rest.subtract(mg.adj[v]);
        }
        if (detail::independence_number(mg, rest) + k != alpha) {
            out = Verdict::no(NonExtendableSet{VertexSet::from_unsorted(members)});
            return false;
        }
        return true;
    });
    return out;
}

Verdict is_Es(const Graph& g, int s) {
    if (s < 0) throw Error("s must be >= 0");
    for (int k = 1; k <= s; ++k) {
        Verdict v = is_k_extendable(g, k);
        if (!v.holds) return v;
    }
    return Verdict::yes();
}

Verdict is_B_graph(const Graph& g) { return is_k_extendable(g, 1); }

Verdict is_shedding(const Graph& g, int v) {
    check_vertex(g, v);
    MaskGraph mg(g);
    DynamicBitset active = mg.all();
    active.reset(v);
    active.subtract(mg.adj[v]);
    const DynamicBitset& targets = mg.adj[v];
    Verdict out = Verdict::yes();
    detail::for_each_maximal_independent_set(mg, active, [&](const std::vector<int>& members) {
        DynamicBitset covered(mg.n);
        for (int u : members) covered |= mg.adj[u];
        if (targets.is_subset_of(covered)) {
            out = Verdict::no(DominatingWitness{VertexSet::from_unsorted(members)});
            return false;
        }
        return true;
    });
    return out;
}

Verdict is_Wk_staples(const Graph& g, int k) {
    require_positive(k, "k");
    MaskGraph mg(g);
    DynamicBitset all = mg.all();
    DynamicBitset g_witness(mg.n);
    int alpha = detail::independence_number(mg, all, &g_witness);
    Verdict out = Verdict::yes();
    for (int size = 0; size < k && out.holds; ++size) {
        for_each_subset_of_size(g.vertex_count(), size, [&](const std::vector<int>& removed) {
            DynamicBitset active = all;
            for (int v : removed) active.reset(v);
            DynamicBitset sub_witness(mg.n);
            int sub_alpha = detail::independence_number(mg, active, &sub_witness);
            if (sub_alpha != alpha) {
                out = Verdict::no(SubsetRemovalFailure{VertexSet::from_unsorted(removed), true,
                                                       VertexSet::from_bitset(g_witness),
                                                       VertexSet::from_bitset(sub_witness)});
                return false;
            }
            std::vector<int> bad;
            if (!well_covered_masked(mg, active, sub_alpha, &bad)) {
                out = Verdict::no(SubsetRemovalFailure{VertexSet::from_unsorted(removed), false,
                                                       VertexSet::from_unsorted(bad),
                                                       VertexSet::from_bitset(sub_witness)});
                return false;
            }
            return true;
        });
    }
    return out;
}

Verdict is_Wk_definitional(const Graph& g, int k, int cap) {
    require_positive(k, "k");
    int n = g.vertex_count();
    if (n > cap)
        throw InstanceTooLargeError("definitional Wk check capped at " + std::to_string(cap) +
                                    " vertices, graph has " + std::to_string(n));
    if (k > 3)
        throw InstanceTooLargeError("definitional Wk check capped at k <= 3");
    MaskGraph mg(g);
    DynamicBitset all = mg.all();
    int alpha = detail::independence_number(mg, all);
    std::vector<DynamicBitset> maximum_sets;
    detail::for_each_maximal_independent_set(mg, all, [&](const std::vector<int>& members) {
        if (static_cast<int>(members.size()) == alpha) {
            DynamicBitset b(mg.n);
            for (int v : members) b.set(v);
            maximum_sets.push_back(std::move(b));
        }
        return true;
    });

    std::vector<DynamicBitset> classes(k + 1, DynamicBitset(mg.n));  // classes[1..k]

    // Can (A_1, ..., A_k) be completed to pairwise disjoint maximum sets?
    auto completable = [&](auto&& self, int i, DynamicBitset used) -> bool {
        if (i > k) return true;
        for (const auto& m : maximum_sets) {
            if (!classes[i].is_subset_of(m) || m.intersects(used)) continue;
            if (self(self, i + 1, used | m)) return true;
        }
        return false;
    };

    Verdict out = Verdict::yes();
    // Assign each vertex to one of the k classes or to none, keeping every
    // class independent; each leaf is one ordered tuple of disjoint sets.
    auto assign = [&](auto&& self, int v) -> bool {
        if (v == n) {
            if (completable(completable, 1, DynamicBitset(mg.n))) return true;
            std::vector<VertexSet> parts;
            for (int i = 1; i <= k; ++i) parts.push_back(VertexSet::from_bitset(classes[i]));
            out = Verdict::no(PartitionWitness{std::move(parts)});
            return false;
        }
        if (!self(self, v + 1)) return false;  // class 0: unused
        for (int i = 1; i <= k; ++i) {
            if (mg.adj[v].intersects(classes[i])) continue;
            classes[i].set(v);
            bool cont = self(self, v + 1);
            classes[i].reset(v);
            if (!cont) return false;
        }
        return true;
    };
    assign(assign, 0);
    return out;
}

namespace {

bool is_maximal_independent(const Graph& g, const MaskGraph& mg, const DynamicBitset& active,
                            const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count() || !active.test(v)) return false;
    DynamicBitset sb = s.to_bitset(g.vertex_count());
    for (int v : s)
        if (mg.adj[v].intersects(sb)) return false;
    // Maximal: every other active vertex has a neighbor in s.
    DynamicBitset covered = sb;
    for (int v : s) covered |= mg.adj[v];
    DynamicBitset uncovered = active;
    uncovered.subtract(covered);
    return uncovered.none();
}

bool parts_partition_vertices(const MaskGraph& mg, const std::vector<VertexSet>& parts) {
    DynamicBitset seen(mg.n);
    for (const auto& part : parts)
        for (int v : part) {
            if (v < 0 || v >= mg.n || seen.test(v)) return false;
            seen.set(v);
        }
    return seen == mg.all();
}

bool is_clique(const MaskGraph& mg, const DynamicBitset& part) {
    bool ok = true;
    part.for_each_set([&](int v) {
        DynamicBitset closed = mg.adj[v];
        closed.set(v);
        if (!part.is_subset_of(closed)) ok = false;
    });
    return ok;
}

/// Checks the SimplexPartition invariants: disjoint cover, each part the
/// closed neighborhood of a simplicial vertex, counts accurate.
bool verify_simplex_partition(const MaskGraph& mg, const SimplexPartition& sp) {
    if (sp.parts.size() != sp.simplicial_counts.size()) return false;
    if (!parts_partition_vertices(mg, sp.parts)) return false;
    for (std::size_t i = 0; i < sp.parts.size(); ++i) {
        DynamicBitset part = sp.parts[i].to_bitset(mg.n);
        if (part.none() || !is_clique(mg, part)) return false;
        int simplicial = 0;
        part.for_each_set([&](int v) {
            DynamicBitset closed = mg.adj[v];
            closed.set(v);
            if (closed == part) ++simplicial;
        });
        if (simplicial == 0 || simplicial != sp.simplicial_counts[i]) return false;
    }
    return true;
}

}  // namespace

bool reverify_certificate(const Graph& g, const ClassQuery& query, const Verdict& verdict) {
    MaskGraph mg(g);
    DynamicBitset all = mg.all();
    if (std::holds_alternative<std::monostate>(verdict.certificate)) return true;

    switch (query.kind) {
        case ClassQuery::Kind::WellCovered: {
            if (const auto* c = std::get_if<TwoMaximalSets>(&verdict.certificate)) {
                if (verdict.holds) return false;
                return is_maximal_independent(g, mg, all, c->set1) &&
                       is_maximal_independent(g, mg, all, c->set2) &&
                       c->set1.size() != c->set2.size();
            }
            if (const auto* c = std::get_if<SimplexPartition>(&verdict.certificate))
                return verdict.holds && verify_simplex_partition(mg, *c);
            return false;
        }
        case ClassQuery::Kind::KExtendable:
        case ClassQuery::Kind::BGraph:
        case ClassQuery::Kind::Es: {
            if (const auto* c = std::get_if<MaximalCliquePartition>(&verdict.certificate)) {
                if (!verdict.holds || query.kind != ClassQuery::Kind::BGraph) return false;
                if (!parts_partition_vertices(mg, c->parts)) return false;
                for (const auto& vs : c->parts) {
                    DynamicBitset part = vs.to_bitset(mg.n);
                    if (part.none() || !is_clique(mg, part)) return false;
                    bool maximal = true;
                    for (int u = 0; u < mg.n && maximal; ++u)
                        if (!part.test(u) && part.is_subset_of(mg.adj[u])) maximal = false;
                    if (!maximal) return false;
                }
                return static_cast<int>(c->parts.size()) == detail::independence_number(mg, all);
            }
            if (const auto* c = std::get_if<CliqueDominationFailure>(&verdict.certificate)) {
                if (verdict.holds || query.kind != ClassQuery::Kind::BGraph) return false;
                int u = c->vertex;
                if (u < 0 || u >= g.vertex_count() || c->part.empty()) return false;
                DynamicBitset part = c->part.to_bitset(mg.n);
                if (part.test(u) || !is_clique(mg, part)) return false;
                return part.is_subset_of(mg.adj[u]);
            }
            const auto* c = std::get_if<NonExtendableSet>(&verdict.certificate);
            if (!c || verdict.holds) return false;
            int k = c->set.size();
            if (query.kind == ClassQuery::Kind::KExtendable && k != query.parameter) return false;
            if (query.kind == ClassQuery::Kind::BGraph && k != 1) return false;
            if (query.kind == ClassQuery::Kind::Es && (k < 1 || k > query.parameter)) return false;
            if (!is_independent(g, c->set)) return false;
            DynamicBitset rest = all;
            for (int v : c->set) {
                rest.reset(v);
                rest.subtract(mg.adj[v]);
            }
            return detail::independence_number(mg, rest) + k !=
                   detail::independence_number(mg, all);
        }
        case ClassQuery::Kind::Shedding: {
            const auto* c = std::get_if<DominatingWitness>(&verdict.certificate);
            if (!c || verdict.holds) return false;
            int v = query.parameter;
            if (v < 0 || v >= g.vertex_count()) return false;
            for (int u : c->set)
                if (u == v || g.has_edge(u, v)) return false;
            if (!is_independent(g, c->set)) return false;
            VertexSet targets;
            for (int u : g.neighbors(v)) targets.insert(u);
            return dominates(g, c->set, targets);
        }
        case ClassQuery::Kind::Wk: {
            if (const auto* c = std::get_if<SimplexPartition>(&verdict.certificate)) {
                if (!verify_simplex_partition(mg, *c)) return false;
                bool all_enough = true;
                for (int count : c->simplicial_counts)
                    if (count < query.parameter) all_enough = false;
                return verdict.holds == all_enough;
            }
            if (const auto* c = std::get_if<SubsetRemovalFailure>(&verdict.certificate)) {
                if (verdict.holds) return false;
                if (c->removed.size() > query.parameter - 1) return false;
                DynamicBitset active = all;
                for (int v : c->removed) {
                    if (v < 0 || v >= g.vertex_count()) return false;
                    active.reset(v);
                }
                if (c->alpha_dropped)
                    return is_maximal_independent(g, mg, all, c->set1) &&
                           is_maximal_independent(g, mg, active, c->set2) &&
                           c->set2.size() < c->set1.size();
                return is_maximal_independent(g, mg, active, c->set1) &&
                       is_maximal_independent(g, mg, active, c->set2) &&
                       c->set1.size() != c->set2.size();
            }
            if (const auto* c = std::get_if<PartitionWitness>(&verdict.certificate)) {
                // Definitional counterexample: the given tuple of disjoint
                // independent sets must not extend to disjoint maximum sets.
                if (verdict.holds) return false;
                int k = query.parameter;
                if (static_cast<int>(c->parts.size()) != k) return false;
                DynamicBitset seen(mg.n);
                std::vector<DynamicBitset> parts;
                for (const auto& part : c->parts) {
                    if (!is_independent(g, part)) return false;
                    DynamicBitset b(mg.n);
                    for (int v : part) {
                        if (seen.test(v)) return false;
                        seen.set(v);
                        b.set(v);
                    }
                    parts.push_back(std::move(b));
                }
                int alpha = detail::independence_number(mg, all);
                std::vector<DynamicBitset> maximum_sets;
                detail::for_each_maximal_independent_set(
                    mg, all, [&](const std::vector<int>& members) {
                        if (static_cast<int>(members.size()) == alpha) {
                            DynamicBitset b(mg.n);
                            for (int v : members) b.set(v);
                            maximum_sets.push_back(std::move(b));
                        }
                        return true;
                    });
                auto completable = [&](auto&& self, int i, DynamicBitset used) -> bool {
                    if (i == k) return true;
                    for (const auto& m : maximum_sets) {
                        if (!parts[i].is_subset_of(m) || m.intersects(used)) continue;
                        if (self(self, i + 1, used | m)) return true;
                    }
                    return false;
                };
                return !completable(completable, 0, DynamicBitset(mg.n));
            }
            return false;
        }
    }
    return false;
}

}  // namespace wellcov
