#include "weakdeg/graph.hpp"

#include <algorithm>
#include <queue>

namespace weakdeg {

namespace {
void insert_sorted(std::vector<VertexId>& vec, VertexId v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it == vec.end() || *it != v) vec.insert(it, v);
}

void erase_sorted(std::vector<VertexId>& vec, VertexId v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it != vec.end() && *it == v) vec.erase(it);
}
}  // namespace

void Graph::add_vertex(VertexId v) { adj_.try_emplace(v); }

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

void Graph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    for (VertexId w : it->second) erase_sorted(adj_[w], v);
    adj_.erase(it);
}

void Graph::remove_edge(VertexId u, VertexId v) {
    if (!has_edge(u, v)) throw std::invalid_argument("no such edge");
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [v, nbrs] : adj_)
        for (VertexId w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& [_, nbrs] : adj_) twice += nbrs.size();
    return twice / 2;
}

Graph Graph::induced(const std::set<VertexId>& keep) const {
    Graph out;
    for (VertexId v : keep) {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : neighbors(v))
            if (v < w && keep.count(w)) out.add_edge(v, w);
    return out;
}

Graph Graph::minus(const std::set<VertexId>& drop) const {
    std::set<VertexId> keep;
    for (const auto& [v, _] : adj_)
        if (!drop.count(v)) keep.insert(v);
    return induced(keep);
}

Graph Graph::without_edges(const std::vector<std::pair<VertexId, VertexId>>& drop) const {
    Graph out = *this;
    for (auto [u, v] : drop)
        if (out.has_edge(u, v)) out.remove_edge(u, v);
    return out;
}

bool Graph::is_connected() const {
    return components().size() <= 1;
}

std::vector<std::set<VertexId>> Graph::components() const {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen;
    for (const auto& [start, _] : adj_) {
        if (seen.count(start)) continue;
        std::set<VertexId> comp;
        std::queue<VertexId> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.insert(v);
            for (VertexId w : neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexId> Graph::cut_vertices() const {
    // Tarjan lowpoint over each component.
    std::map<VertexId, int> disc, low;
    std::set<VertexId> cut;
    int timer = 0;

    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next_nbr;
        int child_count;
    };
    for (const auto& [root, _] : adj_) {
        if (disc.count(root)) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0, 0});
        int root_children = 0;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nbrs = neighbors(fr.v);
            if (fr.next_nbr < nbrs.size()) {
                VertexId w = nbrs[fr.next_nbr++];
                if (w == fr.parent) continue;
                if (disc.count(w)) {
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                } else {
                    disc[w] = low[w] = timer++;
                    if (fr.v == root) root_children++;
                    stack.push_back({w, fr.v, 0, 0});
                }
            } else {
                VertexId v = fr.v;
                VertexId parent = fr.parent;
                stack.pop_back();
                if (!stack.empty()) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (parent != root && low[v] >= disc[parent]) cut.insert(parent);
                }
            }
        }
        if (root_children >= 2) cut.insert(root);
    }
    return {cut.begin(), cut.end()};
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [_, nbrs] : adj_) d = std::max<int>(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::girth() const {
    // BFS from every vertex; first repeated reach gives the shortest cycle
    // through the root.
    int best = -1;
    for (const auto& [root, _] : adj_) {
        std::map<VertexId, int> dist;
        std::map<VertexId, VertexId> parent;
        std::queue<VertexId> q;
        dist[root] = 0;
        parent[root] = -1;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : neighbors(v)) {
                if (w == parent[v]) continue;
                auto it = dist.find(w);
                if (it == dist.end()) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else {
                    int len = dist[v] + it->second + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

Graph graph_from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges,
                       const std::vector<VertexId>& isolated) {
    Graph g;
    for (VertexId v : isolated) g.add_vertex(v);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Potential Potential::constant(const Graph& g, int value) {
    std::map<VertexId, int> vals;
    for (VertexId v : g.vertices()) vals[v] = value;
    return Potential(std::move(vals));
}

int Potential::get(VertexId v) const {
    auto it = values_.find(v);
    if (it == values_.end()) throw std::invalid_argument("potential undefined at vertex " + std::to_string(v));
    return it->second;
}

bool Potential::domain_matches(const Graph& g) const {
    if (values_.size() != g.num_vertices()) return false;
    for (const auto& [v, _] : values_)
        if (!g.has_vertex(v)) return false;
    return true;
}

bool Potential::all_nonnegative() const {
    for (const auto& [_, f] : values_)
        if (f < 0) return false;
    return true;
}

Potential Potential::restrict(const std::set<VertexId>& keep) const {
    std::map<VertexId, int> vals;
    for (const auto& [v, f] : values_)
        if (keep.count(v)) vals[v] = f;
    return Potential(std::move(vals));
}

}  // namespace weakdeg
