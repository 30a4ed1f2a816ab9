#include "enlattice/rootsys.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace enlattice {

namespace {

// Dynkin graph of one connected component: nodes 0..k-1, adjacency lists.
std::string classify_component(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
    const int k = static_cast<int>(nodes.size());
    std::unordered_map<int, int> local;
    for (int i = 0; i < k; ++i) local[nodes[static_cast<std::size_t>(i)]] = i;
    std::vector<int> deg(static_cast<std::size_t>(k), 0);
    int edges = 0;
    for (int i = 0; i < k; ++i)
        for (int g : adj[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)])]) {
            ++deg[static_cast<std::size_t>(i)];
            if (local[g] > i) ++edges;
        }
    if (edges != k - 1) return "unknown"; // a cycle; not a Dynkin diagram
    int forks = 0, fork = -1;
    for (int i = 0; i < k; ++i) {
        if (deg[static_cast<std::size_t>(i)] > 3) return "unknown";
        if (deg[static_cast<std::size_t>(i)] == 3) {
            ++forks;
            fork = i;
        }
    }
    if (forks == 0) return "A" + std::to_string(k);
    if (forks > 1) return "unknown";
    // Three arms from the fork; walk each to its end.
    std::vector<int> arms;
    for (int g : adj[static_cast<std::size_t>(nodes[static_cast<std::size_t>(fork)])]) {
        int len = 0, prev = nodes[static_cast<std::size_t>(fork)], cur = g;
        while (true) {
            ++len;
            int next = -1;
            for (int h : adj[static_cast<std::size_t>(cur)])
                if (h != prev) next = h;
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(arms[2] + 3);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return "E" + std::to_string(arms[2] + 4);
    return "unknown";
}

int type_rank(const std::string& t) {
    return t == "none" || t == "unknown" ? 0 : std::stoi(t.substr(1));
}

} // namespace

CartanMatrix cartan_matrix_of(const std::vector<DivisorClass>& simple_roots) {
    const int k = static_cast<int>(simple_roots.size());
    CartanMatrix cm;
    cm.entries.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            cm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 2
                       : static_cast<int>(-intersect(simple_roots[static_cast<std::size_t>(i)],
                                                     simple_roots[static_cast<std::size_t>(j)]));
    return cm;
}

std::string cartan_type_of(const CartanMatrix& cartan) {
    const int k = cartan.rank();
    if (k == 0) return "none";
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            int a = cartan.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (a == -1)
                adj[static_cast<std::size_t>(i)].push_back(j);
            else if (a != 0)
                return "unknown"; // not simply laced
        }
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) {
        if (comp[static_cast<std::size_t>(i)] != -1) continue;
        std::vector<int> nodes;
        std::queue<int> q;
        q.push(i);
        comp[static_cast<std::size_t>(i)] = i;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            nodes.push_back(v);
            for (int w : adj[static_cast<std::size_t>(v)])
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = i;
                    q.push(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        names.push_back(classify_component(adj, nodes));
    }
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        if (type_rank(a) != type_rank(b)) return type_rank(a) > type_rank(b);
        return a < b;
    });
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += "x";
        out += names[i];
    }
    return out;
}

RootSystem build_root_system(const PicardLattice& lat) {
    if (lat.n > 8)
        throw std::invalid_argument("build_root_system: finite type requires n <= 8, got n=" +
                                    std::to_string(lat.n));
    RootSystem sys;
    sys.lattice = lat;
    sys.roots = enumerate_roots(lat);
    if (lat.n >= 3) sys.simple_roots.push_back(class_H(lat.n) - class_L(lat.n, 1) - class_L(lat.n, 2) - class_L(lat.n, 3));
    for (int i = 1; i < lat.n; ++i)
        sys.simple_roots.push_back(class_L(lat.n, i) - class_L(lat.n, i + 1));
    sys.cartan = cartan_matrix_of(sys.simple_roots);
    sys.cartan_type = cartan_type_of(sys.cartan);
    return sys;
}

DivisorClass reflect(const DivisorClass& D, const DivisorClass& root) {
    if (intersect(root, root) != -2)
        throw std::domain_error("reflect: " + root.str() + " has self-intersection != -2");
    return D + intersect(D, root) * root;
}

std::vector<DivisorClass> weyl_orbit(const DivisorClass& seed, const RootSystem& sys, int64_t cap) {
    std::unordered_set<DivisorClass, DivisorClassHash> seen;
    std::queue<DivisorClass> frontier;
    seen.insert(seed);
    frontier.push(seed);
    while (!frontier.empty()) {
        DivisorClass v = frontier.front();
        frontier.pop();
        for (const auto& a : sys.simple_roots) {
            DivisorClass w = reflect(v, a);
            if (seen.insert(w).second) {
                if (static_cast<int64_t>(seen.size()) > cap)
                    throw SearchTruncated("weyl_orbit: orbit exceeds cap " + std::to_string(cap));
                frontier.push(w);
            }
        }
    }
    std::vector<DivisorClass> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<DivisorClass>> weyl_path(const RootSystem& sys, const DivisorClass& from,
                                                   const DivisorClass& to, int64_t cap) {
    // BFS with parent pointers: parent[v] = (predecessor, index of the simple
    // root whose reflection produced v).
    std::unordered_map<DivisorClass, std::pair<DivisorClass, int>, DivisorClassHash> parent;
    std::queue<DivisorClass> frontier;
    parent.emplace(from, std::make_pair(from, -1));
    frontier.push(from);
    while (!frontier.empty() && !parent.count(to)) {
        DivisorClass v = frontier.front();
        frontier.pop();
        for (std::size_t i = 0; i < sys.simple_roots.size(); ++i) {
            DivisorClass w = reflect(v, sys.simple_roots[i]);
            if (parent.emplace(w, std::make_pair(v, static_cast<int>(i))).second) {
                if (static_cast<int64_t>(parent.size()) > cap)
                    throw SearchTruncated("weyl_path: orbit exceeds cap " + std::to_string(cap));
                frontier.push(w);
            }
        }
    }
    auto it = parent.find(to);
    if (it == parent.end()) return std::nullopt;
    std::vector<DivisorClass> word;
    for (DivisorClass v = to; v != from;) {
        const auto& [pred, gen] = parent.at(v);
        word.push_back(sys.simple_roots[static_cast<std::size_t>(gen)]);
        v = pred;
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int64_t weyl_group_order(const RootSystem& sys) {
    if (sys.lattice.n > 6)
        throw std::invalid_argument("weyl_group_order: capped at n <= 6; the n=7,8 groups are too "
                                    "large for permutation closure here");
    const auto& roots = sys.roots;
    if (roots.empty()) return 1;
    const int m = static_cast<int>(roots.size());
    std::unordered_map<DivisorClass, int, DivisorClassHash> index;
    for (int i = 0; i < m; ++i) index[roots[static_cast<std::size_t>(i)]] = i;

    using Perm = std::vector<uint16_t>;
    std::vector<Perm> gens;
    for (const auto& a : sys.simple_roots) {
        Perm p(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            auto it = index.find(reflect(roots[static_cast<std::size_t>(i)], a));
            if (it == index.end()) throw std::logic_error("weyl_group_order: reflection left root set");
            p[static_cast<std::size_t>(i)] = static_cast<uint16_t>(it->second);
        }
        gens.push_back(std::move(p));
    }
    auto key = [](const Perm& p) {
        return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(uint16_t));
    };
    Perm id(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) id[static_cast<std::size_t>(i)] = static_cast<uint16_t>(i);
    std::unordered_set<std::string> seen{key(id)};
    std::queue<Perm> frontier;
    frontier.push(id);
    while (!frontier.empty()) {
        Perm p = frontier.front();
        frontier.pop();
        for (const auto& g : gens) {
            Perm q(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) q[static_cast<std::size_t>(i)] = g[p[static_cast<std::size_t>(i)]];
            if (seen.insert(key(q)).second) frontier.push(q);
        }
    }
    return static_cast<int64_t>(seen.size());
}

std::vector<DivisorClass> simple_roots_of(const PicardLattice& lat,
                                          const std::vector<DivisorClass>& roots) {
    if (roots.empty()) return {};
    // Generic functional: weights growing fast enough that no root vanishes.
    // If a root still evaluates to zero, nudge the weights and retry.
    const int rank = lat.n + 1;
    std::vector<int64_t> wts(static_cast<std::size_t>(rank));
    for (int offset = 0;; ++offset) {
        int64_t w = 1;
        for (int i = 0; i < rank; ++i) {
            wts[static_cast<std::size_t>(i)] = w + offset * (i + 1);
            w *= 37;
        }
        bool ok = true;
        for (const auto& r : roots) {
            int64_t v = 0;
            for (int i = 0; i < rank; ++i) v += wts[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
            if (v == 0) {
                ok = false;
                break;
            }
        }
        if (ok) break;
    }
    auto eval = [&](const DivisorClass& r) {
        int64_t v = 0;
        for (int i = 0; i < rank; ++i) v += wts[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
        return v;
    };
    std::vector<DivisorClass> positive;
    std::unordered_set<DivisorClass, DivisorClassHash> pos_set;
    for (const auto& r : roots)
        if (eval(r) > 0) {
            positive.push_back(r);
            pos_set.insert(r);
        }
    std::vector<DivisorClass> simple;
    for (const auto& r : positive) {
        bool decomposable = false;
        for (const auto& p : positive) {
            if (p == r) continue;
            if (pos_set.count(r - p)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end());
    return simple;
}

} // namespace enlattice
