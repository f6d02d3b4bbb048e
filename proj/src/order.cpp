#include "follres/order.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace follres {

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::Leq: return "leq";
    case Relation::Lt: return "lt";
    case Relation::Eq: return "eq";
    case Relation::Geq: return "geq";
    case Relation::Gt: return "gt";
    case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

int OrderStore::node(const Term& t) {
    auto it = index_.find(t);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(terms_.size());
    terms_.push_back(t);
    parent_.push_back(id);
    index_.emplace(t, id);
    return id;
}

int OrderStore::find(int x) const {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

Term OrderStore::representative(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return t;
    int root = find(it->second);
    // show the rigid member when there is one, else the oldest
    const Term* best = nullptr;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (find(static_cast<int>(i)) != root) continue;
        if (!best) best = &terms_[i];
        if (terms_[i].rigid()) return terms_[i];
    }
    return best ? *best : t;
}

bool OrderStore::unite(int a, int b, Result& r) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    const Term* rigid_a = nullptr;
    const Term* rigid_b = nullptr;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!terms_[i].rigid()) continue;
        int root = find(static_cast<int>(i));
        if (root == ra && !rigid_a) rigid_a = &terms_[i];
        if (root == rb && !rigid_b) rigid_b = &terms_[i];
    }
    if (rigid_a && rigid_b && *rigid_a != *rigid_b) {
        r.consistent = false;
        r.witness = rigid_a->str() + " = " + rigid_b->str();
        return false;
    }
    r.equalities.emplace_back(terms_[ra], terms_[rb]);
    parent_[rb] = ra;
    return true;
}

std::vector<OrderStore::Edge> OrderStore::class_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size() + terms_.size());
    for (const auto& e : edges_) out.push_back({find(e.from), find(e.to), e.strict});
    std::vector<std::pair<int, int>> pos;  // value, root
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].is_pos()) pos.emplace_back(terms_[i].value, find(static_cast<int>(i)));
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 1; i < pos.size(); ++i)
        if (pos[i - 1].first != pos[i].first) out.push_back({pos[i - 1].second, pos[i].second, true});
    return out;
}

OrderStore::Result OrderStore::normalize() {
    Result r;
    for (;;) {
        auto edges = class_edges();
        int n = static_cast<int>(terms_.size());
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : edges) {
            if (e.from == e.to) {
                if (e.strict) {
                    r.consistent = false;
                    r.witness = terms_[e.from].str() + " < " + terms_[e.from].str();
                    ok_ = false;
                    return r;
                }
                continue;
            }
            adj[e.from].push_back(e.to);
        }
        // Tarjan over class roots
        std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
        std::vector<bool> on(n, false);
        int counter = 0, ncomp = 0;
        std::function<void(int)> dfs = [&](int v) {
            idx[v] = low[v] = counter++;
            stack.push_back(v);
            on[v] = true;
            for (int w : adj[v]) {
                if (idx[w] < 0) {
                    dfs(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on[w]) {
                    low[v] = std::min(low[v], idx[w]);
                }
            }
            if (low[v] == idx[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on[w] = false;
                    comp[w] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
        };
        for (int v = 0; v < n; ++v)
            if (find(v) == v && idx[v] < 0) dfs(v);

        std::vector<std::vector<int>> members(ncomp);
        for (int v = 0; v < n; ++v)
            if (find(v) == v) members[comp[v]].push_back(v);
        bool changed = false;
        for (const auto& e : edges) {
            if (e.from != e.to && comp[e.from] == comp[e.to] && e.strict) {
                r.consistent = false;
                r.witness = "cycle through " + terms_[e.from].str() + " < " + terms_[e.to].str();
                ok_ = false;
                return r;
            }
        }
        for (const auto& m : members) {
            for (std::size_t i = 1; i < m.size(); ++i) {
                if (!unite(m[0], m[i], r)) {
                    ok_ = false;
                    return r;
                }
                changed = true;
            }
        }
        if (!changed) return r;
    }
}

OrderStore::Result OrderStore::assert_order(const Term& a, const Term& b, bool strict) {
    Result r;
    if (!ok_) {
        r.consistent = false;
        r.witness = "store already inconsistent";
        return r;
    }
    int x = node(a), y = node(b);
    if (find(x) == find(y) && !strict) return r;
    edges_.push_back({x, y, strict});
    return normalize();
}

OrderStore::Result OrderStore::merge(const Term& a, const Term& b) {
    Result r;
    if (!ok_) {
        r.consistent = false;
        r.witness = "store already inconsistent";
        return r;
    }
    int x = node(a), y = node(b);
    if (find(x) == find(y)) return r;
    if (!unite(x, y, r)) {
        ok_ = false;
        return r;
    }
    r.equalities.clear();  // the caller asked for this one
    Result more = normalize();
    more.equalities.insert(more.equalities.begin(), r.equalities.begin(), r.equalities.end());
    return more;
}

int OrderStore::reach(int a, int b) const {
    auto edges = class_edges();
    int n = static_cast<int>(terms_.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(n);
    for (const auto& e : edges) adj[e.from].emplace_back(e.to, e.strict);
    // state: node * 2 + (strict edge seen)
    std::vector<bool> seen(2 * n, false);
    std::vector<int> work{a * 2};
    seen[a * 2] = true;
    int best = 0;
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        int v = s / 2;
        bool st = s % 2;
        for (auto [w, es] : adj[v]) {
            int ns = w * 2 + ((st || es) ? 1 : 0);
            if (seen[ns]) continue;
            seen[ns] = true;
            if (w == b) best = std::max(best, (st || es) ? 2 : 1);
            work.push_back(ns);
        }
    }
    return best;
}

Relation OrderStore::entails(const Term& a, const Term& b) const {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) {
        if (a == b) return Relation::Eq;
        if (a.is_pos() && b.is_pos())
            return a.value < b.value ? Relation::Lt : a.value > b.value ? Relation::Gt : Relation::Eq;
        // one side is unknown: a Pos can still be compared with the known side's Pos bounds,
        // but that is outside what the store records
        return Relation::Incomparable;
    }
    int x = find(ia->second), y = find(ib->second);
    if (x == y) return Relation::Eq;
    int fw = reach(x, y);
    if (fw == 2) return Relation::Lt;
    if (fw == 1) return Relation::Leq;
    int bw = reach(y, x);
    if (bw == 2) return Relation::Gt;
    if (bw == 1) return Relation::Geq;
    return Relation::Incomparable;
}

std::vector<std::pair<Term, Term>> OrderStore::hasse() const {
    std::vector<int> roots;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
    std::map<std::pair<int, int>, bool> below;
    for (int x : roots)
        for (int y : roots)
            if (x != y && reach(x, y)) below[{x, y}] = true;
    std::vector<std::pair<Term, Term>> out;
    for (int x : roots) {
        for (int y : roots) {
            if (!below.count({x, y})) continue;
            bool covered = true;
            for (int z : roots)
                if (z != x && z != y && below.count({x, z}) && below.count({z, y})) covered = false;
            if (covered) out.emplace_back(representative(terms_[x]), representative(terms_[y]));
        }
    }
    return out;
}

std::string OrderStore::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, b] : hasse()) {
        if (!first) out << ", ";
        first = false;
        out << a.str() << (entails(a, b) == Relation::Lt ? "<" : "<=") << b.str();
    }
    return out.str();
}

}  // namespace follres
