#include "report.hpp"

#include <charconv>
#include <vector>

#include "wellcov/errors.hpp"

namespace wellcov::cli {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string digest(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t hash = fnv1a64(data);
    std::string out = "fnv1a:";
    for (int shift = 60; shift >= 0; shift -= 4) out += hex[hash >> shift & 0xf];
    return out;
}

ClassQuery parse_property(const std::string& text) {
    if (text == "well-covered") return ClassQuery::well_covered();
    if (text == "b-graph") return ClassQuery::b_graph();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        std::string tail = text.substr(colon + 1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
        if (ec == std::errc{} && ptr == tail.data() + tail.size()) {
            if (head == "wk" && value >= 1) return ClassQuery::wk(value);
            if (head == "extendable" && value >= 1) return ClassQuery::k_extendable(value);
            if (head == "es" && value >= 1) return ClassQuery::es(value);
            if (head == "shedding" && value >= 0) return ClassQuery::shedding(value);
        }
    }
    throw Error("unknown property '" + text +
                "' (expected well-covered, wk:K, extendable:K, es:S, b-graph, shedding:V)");
}

namespace {

nlohmann::ordered_json set_to_json(const VertexSet& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int v : s) out.push_back(v);
    return out;
}

nlohmann::ordered_json parts_to_json(const std::vector<VertexSet>& parts) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& p : parts) out.push_back(set_to_json(p));
    return out;
}

VertexSet set_from_json(const nlohmann::json& j) {
    std::vector<int> ids;
    for (const auto& v : j) ids.push_back(v.get<int>());
    return VertexSet::from_unsorted(std::move(ids));
}

std::vector<VertexSet> parts_from_json(const nlohmann::json& j) {
    std::vector<VertexSet> parts;
    for (const auto& p : j) parts.push_back(set_from_json(p));
    return parts;
}

std::string sets_text(const std::vector<VertexSet>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i].to_string();
    }
    return out;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    using nlohmann::ordered_json;
    return std::visit(
        [](const auto& cert) -> ordered_json {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {{"type", "none"}};
            } else if constexpr (std::is_same_v<T, TwoMaximalSets>) {
                return {{"type", "two-maximal-sets"},
                        {"set1", set_to_json(cert.set1)},
                        {"set2", set_to_json(cert.set2)}};
            } else if constexpr (std::is_same_v<T, NonExtendableSet>) {
                return {{"type", "non-extendable-set"}, {"set", set_to_json(cert.set)}};
            } else if constexpr (std::is_same_v<T, DominatingWitness>) {
                return {{"type", "dominating-witness"}, {"set", set_to_json(cert.set)}};
            } else if constexpr (std::is_same_v<T, PartitionWitness>) {
                return {{"type", "partition-witness"}, {"parts", parts_to_json(cert.parts)}};
            } else if constexpr (std::is_same_v<T, SubsetRemovalFailure>) {
                return {{"type", "subset-removal-failure"},
                        {"removed", set_to_json(cert.removed)},
                        {"alpha_dropped", cert.alpha_dropped},
                        {"set1", set_to_json(cert.set1)},
                        {"set2", set_to_json(cert.set2)}};
            } else if constexpr (std::is_same_v<T, SimplexPartition>) {
                return {{"type", "simplex-partition"},
                        {"parts", parts_to_json(cert.parts)},
                        {"simplicial_counts", cert.simplicial_counts}};
            } else if constexpr (std::is_same_v<T, MaximalCliquePartition>) {
                return {{"type", "maximal-clique-partition"}, {"parts", parts_to_json(cert.parts)}};
            } else {
                return {{"type", "clique-domination-failure"},
                        {"vertex", cert.vertex},
                        {"part", set_to_json(cert.part)}};
            }
        },
        c);
}

Certificate certificate_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "none") return std::monostate{};
    if (type == "two-maximal-sets")
        return TwoMaximalSets{set_from_json(j.at("set1")), set_from_json(j.at("set2"))};
    if (type == "non-extendable-set") return NonExtendableSet{set_from_json(j.at("set"))};
    if (type == "dominating-witness") return DominatingWitness{set_from_json(j.at("set"))};
    if (type == "partition-witness") return PartitionWitness{parts_from_json(j.at("parts"))};
    if (type == "subset-removal-failure")
        return SubsetRemovalFailure{set_from_json(j.at("removed")),
                                    j.at("alpha_dropped").get<bool>(),
                                    set_from_json(j.at("set1")), set_from_json(j.at("set2"))};
    if (type == "simplex-partition")
        return SimplexPartition{parts_from_json(j.at("parts")),
                                j.at("simplicial_counts").get<std::vector<int>>()};
    if (type == "maximal-clique-partition")
        return MaximalCliquePartition{parts_from_json(j.at("parts"))};
    if (type == "clique-domination-failure")
        return CliqueDominationFailure{j.at("vertex").get<int>(), set_from_json(j.at("part"))};
    throw ParseError("unknown certificate type '" + type + "'");
}

std::string describe_certificate(const Certificate& c) {
    return std::visit(
        [](const auto& cert) -> std::string {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "none";
            } else if constexpr (std::is_same_v<T, TwoMaximalSets>) {
                return "maximal independent sets " + cert.set1.to_string() + " and " +
                       cert.set2.to_string() + " have different sizes";
            } else if constexpr (std::is_same_v<T, NonExtendableSet>) {
                return "independent set " + cert.set.to_string() +
                       " is contained in no maximum independent set";
            } else if constexpr (std::is_same_v<T, DominatingWitness>) {
                return "independent set " + cert.set.to_string() +
                       " avoids the closed neighborhood and dominates the open one";
            } else if constexpr (std::is_same_v<T, PartitionWitness>) {
                return "disjoint independent sets " + sets_text(cert.parts) +
                       " cannot be completed to disjoint maximum independent sets";
            } else if constexpr (std::is_same_v<T, SubsetRemovalFailure>) {
                if (cert.alpha_dropped)
                    return "removing " + cert.removed.to_string() +
                           " drops the independence number (" + cert.set1.to_string() + " vs " +
                           cert.set2.to_string() + ")";
                return "after removing " + cert.removed.to_string() + ", maximal sets " +
                       cert.set1.to_string() + " and " + cert.set2.to_string() +
                       " have different sizes";
            } else if constexpr (std::is_same_v<T, SimplexPartition>) {
                std::string out = "simplex partition";
                for (size_t i = 0; i < cert.parts.size(); ++i)
                    out += ' ' + cert.parts[i].to_string() + ":" +
                           std::to_string(cert.simplicial_counts[i]);
                return out;
            } else if constexpr (std::is_same_v<T, MaximalCliquePartition>) {
                return "maximal clique partition " + sets_text(cert.parts);
            } else {
                return "vertex " + std::to_string(cert.vertex) + " is adjacent to all of " +
                       cert.part.to_string();
            }
        },
        c);
}

}  // namespace wellcov::cli
