#pragma once

#include <cstddef>
#include <vector>

namespace cgmatch {

// (source, relation, destination). Messages flow source -> destination.
struct TypedEdge {
    size_t src = 0;
    size_t rel = 0;
    size_t dst = 0;

    friend bool operator<(const TypedEdge& a, const TypedEdge& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.rel != b.rel) return a.rel < b.rel;
        return a.dst < b.dst;
    }
    friend bool operator==(const TypedEdge& a, const TypedEdge& b) {
        return a.src == b.src && a.rel == b.rel && a.dst == b.dst;
    }
};

// Non-owning structural view of a typed multigraph, the only graph shape
// the numeric core needs to know about.
struct GraphView {
    size_t num_nodes = 0;
    size_t num_relations = 0;
    const std::vector<TypedEdge>* edges = nullptr;

    const std::vector<TypedEdge>& edge_list() const {
        static const std::vector<TypedEdge> empty;
        return edges ? *edges : empty;
    }
};

} // namespace cgmatch
