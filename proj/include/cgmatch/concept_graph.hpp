#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgmatch/error.hpp"
#include "cgmatch/util.hpp"

namespace cgmatch {

enum class NodeKind { Concept, Entity };

inline const char* node_kind_name(NodeKind k) {
    return k == NodeKind::Concept ? "Concept" : "Entity";
}

struct GraphNode {
    std::string id;
    NodeKind kind = NodeKind::Concept;
    std::vector<std::string> surface; // the phrase's words, non-empty
};

// child isA parent (subordinate -> superordinate / entity -> concept)
struct IsAEdge {
    std::string child;
    std::string parent;

    friend bool operator<(const IsAEdge& a, const IsAEdge& b) {
        return a.child < b.child || (a.child == b.child && a.parent < b.parent);
    }
    friend bool operator==(const IsAEdge& a, const IsAEdge& b) {
        return a.child == b.child && a.parent == b.parent;
    }
};

// Ontology of concept/entity nodes linked by isA edges. Immutable after
// finalize(); safe to share read-only across workers.
class ConceptGraph {
public:
    void add_node(GraphNode node) {
        if (node.surface.empty())
            throw ValidationError("node '" + node.id + "' has empty surface");
        auto [it, inserted] = nodes_.emplace(node.id, std::move(node));
        if (!inserted) throw ValidationError("duplicate node id '" + it->first + "'");
    }

    // Repeated edge lines are deduplicated silently.
    void add_edge(const std::string& child, const std::string& parent) {
        IsAEdge e{child, parent};
        if (edge_set_.insert(e).second) edges_.push_back(std::move(e));
    }

    // Validates all invariants and builds adjacency indexes.
    void finalize() {
        for (const auto& e : edges_) {
            if (e.child == e.parent)
                throw ValidationError("self-loop isA edge on '" + e.child + "'");
            if (!nodes_.count(e.child))
                throw ValidationError("edge references unknown node '" + e.child + "'");
            if (!nodes_.count(e.parent))
                throw ValidationError("edge references unknown node '" + e.parent + "'");
            if (nodes_.at(e.parent).kind == NodeKind::Entity)
                throw ValidationError("entity '" + e.parent + "' appears as isA parent");
        }
        std::sort(edges_.begin(), edges_.end());
        parents_.clear();
        children_.clear();
        for (const auto& e : edges_) {
            parents_[e.child].push_back(e.parent);
            children_[e.parent].push_back(e.child);
        }
        finalized_ = true;
    }

    bool has(const std::string& id) const { return nodes_.count(id) != 0; }

    const GraphNode& node(const std::string& id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw NotFoundError("unknown node '" + id + "'");
        return it->second;
    }

    size_t node_count() const { return nodes_.size(); }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<IsAEdge>& edges() const { return edges_; }
    const std::map<std::string, GraphNode>& nodes() const { return nodes_; }

    // Superordinates of id (ids it points to), sorted.
    const std::vector<std::string>& parents(const std::string& id) const {
        static const std::vector<std::string> empty;
        auto it = parents_.find(id);
        return it == parents_.end() ? empty : it->second;
    }

    // Subordinates of id (ids pointing to it), sorted.
    const std::vector<std::string>& children(const std::string& id) const {
        static const std::vector<std::string> empty;
        auto it = children_.find(id);
        return it == children_.end() ? empty : it->second;
    }

    bool finalized() const { return finalized_; }

private:
    std::map<std::string, GraphNode> nodes_;
    std::set<IsAEdge> edge_set_;
    std::vector<IsAEdge> edges_;
    std::map<std::string, std::vector<std::string>> parents_;
    std::map<std::string, std::vector<std::string>> children_;
    bool finalized_ = false;
};

// Loads a concept graph from a tab-separated edge list, optionally with a
// companion node file declaring kinds and surface forms. Without a node
// file, kinds are inferred: ids that never appear as a parent become
// entities, everything else a concept; the surface defaults to the id.
//
// Edge file:  child<TAB>isA<TAB>parent     ('#' lines are comments)
// Node file:  id<TAB>kind<TAB>space-joined-surface-tokens
inline ConceptGraph load_concept_graph(const std::string& edge_path,
                                       const std::string& node_path = "") {
    ConceptGraph g;
    struct RawEdge {
        std::string child, parent;
    };
    std::vector<RawEdge> raw;
    {
        auto lines = read_lines(edge_path);
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string line = lines[i];
            if (line.empty() || line[0] == '#') continue;
            auto fields = split(line, '\t');
            if (fields.size() != 3)
                throw ParseError(edge_path, i + 1, "expected 3 tab-separated fields");
            if (fields[1] != "isA")
                throw ParseError(edge_path, i + 1, "relation must be 'isA', got '" + fields[1] + "'");
            if (trim(fields[0]).empty() || trim(fields[2]).empty())
                throw ParseError(edge_path, i + 1, "empty node id");
            raw.push_back({trim(fields[0]), trim(fields[2])});
        }
    }

    if (!node_path.empty()) {
        auto lines = read_lines(node_path);
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string line = lines[i];
            if (line.empty() || line[0] == '#') continue;
            auto fields = split(line, '\t');
            if (fields.size() != 3)
                throw ParseError(node_path, i + 1, "expected 3 tab-separated fields");
            GraphNode n;
            n.id = trim(fields[0]);
            if (fields[1] == "Concept")
                n.kind = NodeKind::Concept;
            else if (fields[1] == "Entity")
                n.kind = NodeKind::Entity;
            else
                throw ParseError(node_path, i + 1, "kind must be Concept or Entity");
            n.surface = split_ws(fields[2]);
            if (n.surface.empty()) throw ParseError(node_path, i + 1, "empty surface");
            g.add_node(std::move(n));
        }
    } else {
        std::set<std::string> ids, parents;
        for (const auto& e : raw) {
            ids.insert(e.child);
            ids.insert(e.parent);
            parents.insert(e.parent);
        }
        for (const auto& id : ids) {
            GraphNode n;
            n.id = id;
            n.kind = parents.count(id) ? NodeKind::Concept : NodeKind::Entity;
            n.surface = {id};
            g.add_node(std::move(n));
        }
    }

    for (const auto& e : raw) g.add_edge(e.child, e.parent);
    g.finalize();
    return g;
}

inline void save_concept_graph(const ConceptGraph& g, const std::string& edge_path,
                               const std::string& node_path) {
    std::string edges;
    for (const auto& e : g.edges()) edges += e.child + "\tisA\t" + e.parent + "\n";
    write_file(edge_path, edges);
    std::string nodes;
    for (const auto& [id, n] : g.nodes())
        nodes += id + "\t" + node_kind_name(n.kind) + "\t" + join(n.surface, " ") + "\n";
    write_file(node_path, nodes);
}

// All entity nodes with a direct isA edge to the given concept.
inline std::set<std::string> entities_of(const ConceptGraph& g, const std::string& concept_id) {
    const GraphNode& n = g.node(concept_id);
    if (n.kind != NodeKind::Concept)
        throw NotFoundError("'" + concept_id + "' is not a concept");
    std::set<std::string> out;
    for (const auto& child : g.children(concept_id))
        if (g.node(child).kind == NodeKind::Entity) out.insert(child);
    return out;
}

// Local context around a target concept: every node within `hops`
// undirected isA steps of the target, plus the shared entities and the
// concepts adjacent to them, with all isA edges among the included nodes.
inline ConceptGraph context_subgraph(const ConceptGraph& g, const std::string& target,
                                     const std::set<std::string>& shared_entities, int hops) {
    const GraphNode& t = g.node(target);
    if (t.kind != NodeKind::Concept)
        throw NotFoundError("'" + target + "' is not a concept");
    if (hops < 1) throw ArgumentError("hops must be >= 1");

    std::set<std::string> keep;
    keep.insert(target);
    std::vector<std::string> frontier{target};
    for (int step = 0; step < hops; ++step) {
        std::vector<std::string> next;
        for (const auto& id : frontier) {
            for (const auto& nb : g.parents(id))
                if (keep.insert(nb).second) next.push_back(nb);
            for (const auto& nb : g.children(id))
                if (keep.insert(nb).second) next.push_back(nb);
        }
        frontier = std::move(next);
    }

    for (const auto& e : shared_entities) {
        if (!g.has(e) || g.node(e).kind != NodeKind::Entity) continue;
        keep.insert(e);
        for (const auto& c : g.parents(e))
            if (g.node(c).kind == NodeKind::Concept) keep.insert(c);
    }

    ConceptGraph sub;
    for (const auto& id : keep) sub.add_node(g.node(id));
    for (const auto& e : g.edges())
        if (keep.count(e.child) && keep.count(e.parent)) sub.add_edge(e.child, e.parent);
    sub.finalize();
    return sub;
}

} // namespace cgmatch
