#include "follres/proofnet.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace follres {

const char* link_name(LinkKind k) {
    switch (k) {
    case LinkKind::Tensor: return "tensor";
    case LinkKind::Par: return "par";
    case LinkKind::Universal: return "universal";
    case LinkKind::Existential: return "existential";
    }
    return "?";
}

int AbstractProofStructure::vertex_count() const {
    return static_cast<int>(std::count(alive.begin(), alive.end(), true));
}

// ---- unfolding

namespace {

struct Unfolder {
    ProofStructure ps;
    NameSupply names;

    int add(Formula f, Polarity p) {
        int id = static_cast<int>(ps.occ.size());
        ps.occ.push_back({id, std::move(f), p});
        ps.premiss_of.push_back(-1);
        ps.conclusion_of.push_back(-1);
        return id;
    }

    void link(LinkKind k, int main, std::vector<int> actives, std::vector<int> prem, std::vector<int> concl,
              Term var = {}) {
        int li = static_cast<int>(ps.links.size());
        for (int p : prem) ps.premiss_of[p] = li;
        for (int c : concl) ps.conclusion_of[c] = li;
        ps.links.push_back({k, main, std::move(actives), std::move(prem), std::move(concl), std::move(var)});
    }

    void expand(int id) {
        const Formula f = ps.occ[id].f;
        const bool neg = ps.occ[id].pol == Polarity::Negative;
        const Polarity same = ps.occ[id].pol;
        const Polarity flip = neg ? Polarity::Positive : Polarity::Negative;
        switch (f->op) {
        case Op::Atom:
            (neg ? ps.neg_atoms : ps.pos_atoms).push_back(id);
            return;
        case Op::Tensor: {
            int a = add(f->left, same), b = add(f->right, same);
            if (neg) link(LinkKind::Par, id, {a, b}, {id}, {a, b});
            else link(LinkKind::Tensor, id, {a, b}, {a, b}, {id});
            expand(a);
            expand(b);
            return;
        }
        case Op::Limp: {
            int a = add(f->left, flip), b = add(f->right, same);
            if (neg) link(LinkKind::Tensor, id, {a, b}, {id, a}, {b});
            else link(LinkKind::Par, id, {a, b}, {b}, {a, id});
            expand(a);
            expand(b);
            return;
        }
        case Op::Forall:
        case Op::Exists: {
            // negative forall and positive exists are instantiated by unification
            bool existential = (f->op == Op::Forall) == neg;
            Term v = existential ? names.fresh_meta(f->var) : names.fresh_eigen(f->var);
            int a = add(instantiate(f->left, f->var, v), same);
            LinkKind k = existential ? LinkKind::Existential : LinkKind::Universal;
            if (neg) link(k, id, {a}, {id}, {a}, v);
            else link(k, id, {a}, {a}, {id}, v);
            expand(a);
            return;
        }
        }
    }
};

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

std::set<std::string> eigens_of(const Formula& f, const Substitution& s) {
    std::vector<Term> ts;
    collect_terms(f, ts);
    std::set<std::string> out;
    for (const auto& t : ts) {
        Term v = s.apply(t);
        if (v.is_eigen()) out.insert(v.name);
    }
    return out;
}

}  // namespace

ProofStructure unfold(const Sequent& seq) {
    Unfolder u;
    for (const auto& f : seq.antecedent) u.ps.roots.push_back(u.add(f, Polarity::Negative));
    u.ps.roots.push_back(u.add(seq.succedent, Polarity::Positive));
    for (int r : u.ps.roots) u.expand(r);
    // atoms in textual order
    std::sort(u.ps.pos_atoms.begin(), u.ps.pos_atoms.end());
    std::sort(u.ps.neg_atoms.begin(), u.ps.neg_atoms.end());
    return std::move(u.ps);
}

std::set<int> existential_frontier(const ProofStructure& ps, const Substitution& s, const std::string& x) {
    std::set<int> out;
    for (const auto& l : ps.links) {
        if (l.kind != LinkKind::Existential) continue;
        if (eigens_of(ps.occ[l.actives[0]].f, s).count(x) && !eigens_of(ps.occ[l.main].f, s).count(x))
            out.insert(l.main);
    }
    return out;
}

AbstractProofStructure abstract(const ProofStructure& ps, const std::vector<std::pair<int, int>>& pairs,
                                const Substitution& s) {
    const std::size_t n = ps.occ.size();
    UnionFind uf(n);
    for (auto [p, q] : pairs) uf.unite(p, q);
    std::vector<int> vid(n, -1);
    AbstractProofStructure aps;
    for (std::size_t i = 0; i < n; ++i) {
        int r = uf.find(static_cast<int>(i));
        if (vid[r] < 0) {
            vid[r] = static_cast<int>(aps.labels.size());
            aps.labels.emplace_back();
            aps.names.push_back(to_string(substitute(ps.occ[i].f, s)));
            aps.alive.push_back(true);
        }
        vid[i] = vid[r];
        auto e = eigens_of(ps.occ[i].f, s);
        aps.labels[vid[i]].insert(e.begin(), e.end());
    }
    for (std::size_t li = 0; li < ps.links.size(); ++li) {
        const Link& l = ps.links[li];
        int m = vid[l.main];
        int lk = static_cast<int>(li);
        switch (l.kind) {
        case LinkKind::Tensor:
            for (int a : l.actives) aps.edges.push_back({AbstractEdge::Solid, m, vid[a], -1, {}, lk});
            break;
        case LinkKind::Existential:
            aps.edges.push_back({AbstractEdge::Solid, m, vid[l.actives[0]], -1, {}, lk});
            break;
        case LinkKind::Par:
            aps.edges.push_back({AbstractEdge::Par, m, vid[l.actives[0]], vid[l.actives[1]], {}, lk});
            break;
        case LinkKind::Universal: {
            const std::string& x = l.var.name;
            aps.edges.push_back({AbstractEdge::Universal, vid[l.actives[0]], m, -1, x, lk});
            for (int f : existential_frontier(ps, s, x)) aps.labels[vid[f]].insert(x);
            break;
        }
        }
    }
    return aps;
}

ContractionResult contract(AbstractProofStructure aps, std::mt19937* rng) {
    ContractionResult res;
    auto merge = [&](int from, int into) {
        aps.labels[into].insert(aps.labels[from].begin(), aps.labels[from].end());
        aps.labels[from].clear();
        aps.alive[from] = false;
        for (auto& e : aps.edges) {
            if (e.a == from) e.a = into;
            if (e.b == from) e.b = into;
            if (e.c == from) e.c = into;
        }
    };
    for (;;) {
        std::vector<std::size_t> redex;
        for (std::size_t i = 0; i < aps.edges.size(); ++i) {
            const auto& e = aps.edges[i];
            switch (e.kind) {
            case AbstractEdge::Solid:
                if (e.a != e.b) redex.push_back(i);
                break;
            case AbstractEdge::Par:
                if (e.b == e.c && e.b != e.a) redex.push_back(i);
                break;
            case AbstractEdge::Universal: {
                if (e.a == e.b) break;
                bool only_here = true;
                for (std::size_t v = 0; v < aps.labels.size(); ++v)
                    if (aps.alive[v] && static_cast<int>(v) != e.a && aps.labels[v].count(e.x)) only_here = false;
                if (only_here) redex.push_back(i);
                break;
            }
            }
        }
        if (redex.empty()) break;
        std::size_t pick = redex.front();
        if (rng) pick = redex[std::uniform_int_distribution<std::size_t>(0, redex.size() - 1)(*rng)];
        AbstractEdge e = aps.edges[pick];
        aps.edges.erase(aps.edges.begin() + static_cast<long>(pick));
        switch (e.kind) {
        case AbstractEdge::Solid:
            res.trace.push_back({'c', e.b, e.a, {}});
            merge(e.b, e.a);
            break;
        case AbstractEdge::Par:
            res.trace.push_back({'p', e.b, e.a, {}});
            merge(e.b, e.a);
            break;
        case AbstractEdge::Universal:
            res.trace.push_back({'u', e.a, e.b, e.x});
            merge(e.a, e.b);
            aps.labels[e.b].erase(e.x);
            break;
        }
    }
    res.success = aps.edges.empty() && aps.vertex_count() == 1;
    res.residual = std::move(aps);
    return res;
}

std::vector<Component> components(const ProofStructure& ps, const Matching& m) {
    const std::size_t n = ps.occ.size();
    UnionFind uf(n);
    for (auto [p, q] : m.pairs) uf.unite(p, q);
    std::vector<int> atom_mate(n, -1);
    for (auto [p, q] : m.pairs) {
        atom_mate[p] = q;
        atom_mate[q] = p;
    }
    auto solid = [&](int li) {
        return li >= 0 && (ps.links[li].kind == LinkKind::Tensor || ps.links[li].kind == LinkKind::Existential);
    };
    for (std::size_t li = 0; li < ps.links.size(); ++li) {
        if (!solid(static_cast<int>(li))) continue;
        const Link& l = ps.links[li];
        for (int a : l.actives) uf.unite(l.main, a);
    }
    std::map<int, Component> pieces;
    for (std::size_t i = 0; i < n; ++i) pieces[uf.find(static_cast<int>(i))].occurrences.push_back(static_cast<int>(i));

    const Substitution& s = m.state.subst;
    auto close = [&](const Formula& f) {
        // eigenvariables lose their link in a piece: freeze them as constants
        return map_terms(substitute(f, s), [](const Term& t) {
            return t.is_eigen() ? Term::constant("c_" + t.name) : t;
        });
    };
    std::vector<Component> out;
    for (auto& [root, c] : pieces) {
        std::set<int> seen;
        for (int i : c.occurrences) {
            if (seen.count(i)) continue;
            seen.insert(i);
            bool concl = solid(ps.conclusion_of[i]);
            bool prem = solid(ps.premiss_of[i]);
            int mate = atom_mate[i];
            if (mate >= 0) {
                seen.insert(mate);
                concl = concl || solid(ps.conclusion_of[mate]);
                prem = prem || solid(ps.premiss_of[mate]);
            }
            if (!concl) c.hypotheses.push_back(close(ps.occ[i].f));
            if (!prem) c.conclusions.push_back(close(ps.occ[i].f));
        }
        out.push_back(std::move(c));
    }
    return out;
}

// ---- matching search

namespace {

// sound early rejection on a partial matching: after contracting every solid
// edge, nothing may sit on a loop, no par or universal link may have collapsed
// onto itself, and no eigenvariable may be present at the conclusion of its link
bool partial_ok(const ProofStructure& ps, const std::vector<std::pair<int, int>>& pairs, const Substitution& s) {
    AbstractProofStructure aps = abstract(ps, pairs, s);
    UnionFind uf(aps.labels.size());
    for (const auto& e : aps.edges)
        if (e.kind == AbstractEdge::Solid && !uf.unite(e.a, e.b)) return false;
    std::vector<std::set<std::string>> lab(aps.labels.size());
    for (std::size_t v = 0; v < aps.labels.size(); ++v) {
        auto& l = lab[uf.find(static_cast<int>(v))];
        l.insert(aps.labels[v].begin(), aps.labels[v].end());
    }
    for (const auto& e : aps.edges) {
        if (e.kind == AbstractEdge::Par) {
            int m = uf.find(e.a);
            if (m == uf.find(e.b) || m == uf.find(e.c)) return false;
        } else if (e.kind == AbstractEdge::Universal) {
            int m = uf.find(e.b);
            if (m == uf.find(e.a) || lab[m].count(e.x)) return false;
        }
    }
    return true;
}

struct State {
    Constraints c;
    std::vector<int> mate;   // per positive index: negative occurrence id or -1
    std::vector<bool> used;  // per negative index
    std::vector<std::pair<int, int>> pairs;
    std::size_t open = 0;
};

struct Cand {
    int ni;  // index into neg_atoms
    Constraints c;
};

class NetSearch {
public:
    NetSearch(const ProofStructure& ps, const NetOptions& opt) : ps_(ps), opt_(opt) {}

    State initial(const Constraints& start) const {
        State st;
        st.c = start;
        st.mate.assign(ps_.pos_atoms.size(), -1);
        st.used.assign(ps_.neg_atoms.size(), false);
        st.open = ps_.pos_atoms.size();
        return st;
    }

    int probe_depth() const { return opt_.lookahead ? opt_.probe_depth : 0; }

    bool compatible(int p, int n) const {
        const Formula& a = ps_.occ[p].f;
        const Formula& b = ps_.occ[n].f;
        return a->pred == b->pred && a->args.size() == b->args.size();
    }

    std::vector<Cand> candidates(const State& st, std::size_t pi, int depth) const {
        std::vector<Cand> out;
        const int p = ps_.pos_atoms[pi];
        for (std::size_t ni = 0; ni < ps_.neg_atoms.size(); ++ni) {
            if (st.used[ni]) continue;
            const int n = ps_.neg_atoms[ni];
            if (!compatible(p, n)) continue;
            Constraints c = st.c;
            if (opt_.filter_unify) {
                if (opt_.filter_order) {
                    if (!c.unify_atoms(ps_.occ[p].f, ps_.occ[n].f)) continue;
                } else {
                    auto r = unify_atoms(ps_.occ[p].f, ps_.occ[n].f, c.subst);
                    if (!r) continue;
                    c.subst = std::move(*r);
                }
                if (opt_.filter_eigen) {
                    auto pairs = st.pairs;
                    pairs.emplace_back(p, n);
                    if (!partial_ok(ps_, pairs, c.subst)) continue;
                }
            }
            out.push_back({static_cast<int>(ni), std::move(c)});
        }
        if (depth > 0 && opt_.filter_unify) {
            std::vector<Cand> kept;
            for (auto& cand : out) {
                State s2 = commit(st, pi, cand);
                if (propagate(s2, depth - 1)) kept.push_back(std::move(cand));
            }
            out = std::move(kept);
        }
        return out;
    }

    State commit(const State& st, std::size_t pi, const Cand& cand) const {
        State s2 = st;
        s2.c = cand.c;
        s2.mate[pi] = ps_.neg_atoms[cand.ni];
        s2.used[cand.ni] = true;
        s2.pairs.emplace_back(ps_.pos_atoms[pi], ps_.neg_atoms[cand.ni]);
        --s2.open;
        return s2;
    }

    // forced moves only; false when some positive atom runs out of partners
    bool propagate(State& st, int depth) const {
        for (;;) {
            if (st.open == 0) return complete_ok(st);
            bool progress = false;
            for (std::size_t pi = 0; pi < ps_.pos_atoms.size(); ++pi) {
                if (st.mate[pi] >= 0) continue;
                auto cs = candidates(st, pi, depth);
                if (cs.empty()) return false;
                if (cs.size() == 1) {
                    st = commit(st, pi, cs.front());
                    progress = true;
                    break;
                }
            }
            if (!progress) return true;
        }
    }

    // a probe that runs to the end is judged by the full correctness check
    bool complete_ok(State st) const {
        if (!finish(st)) return false;
        Matching m{st.pairs, st.c};
        return is_proof_net(ps_, m) && eigenvariables_strict(ps_, m);
    }

    // the checks a filter may have postponed, applied to a complete matching
    bool finish(State& st) const {
        if (!opt_.filter_unify || !opt_.filter_order) {
            Constraints c = opt_.filter_unify ? st.c : Constraints{};
            if (!opt_.filter_unify) c = start_;
            for (auto [p, n] : st.pairs)
                if (!c.unify_atoms(ps_.occ[p].f, ps_.occ[n].f)) return false;
            if (opt_.filter_unify && !opt_.filter_order) {
                // re-run with the store engaged
                Constraints full = start_;
                for (auto [p, n] : st.pairs)
                    if (!full.unify_atoms(ps_.occ[p].f, ps_.occ[n].f)) return false;
                c = std::move(full);
            }
            st.c = std::move(c);
        }
        return true;
    }

    void dfs(State st) {
        if (stop_) return;
        for (;;) {
            if (st.open == 0) {
                ++stats_.matchings_explored;
                if (!finish(st)) {
                    ++stats_.backtracks;
                } else {
                    std::sort(st.pairs.begin(), st.pairs.end());
                    Matching m{st.pairs, st.c};
                    if ((*on_complete_)(m)) stop_ = true;
                }
                if (stats_.matchings_explored >= opt_.max_complete) stop_ = true;
                return;
            }
            std::size_t best = SIZE_MAX;
            std::vector<Cand> best_c;
            for (std::size_t pi = 0; pi < ps_.pos_atoms.size(); ++pi) {
                if (st.mate[pi] >= 0) continue;
                auto cs = candidates(st, pi, probe_depth());
                if (cs.empty()) {
                    ++stats_.backtracks;
                    return;
                }
                if (best == SIZE_MAX || cs.size() < best_c.size()) {
                    best = pi;
                    best_c = std::move(cs);
                }
                if (!opt_.unit_propagation) break;
            }
            if (opt_.unit_propagation && best_c.size() == 1) {
                ++stats_.forced;
                st = commit(st, best, best_c.front());
                continue;
            }
            if (best_c.size() > 1) ++stats_.branches;
            for (const auto& c : best_c) {
                dfs(commit(st, best, c));
                if (stop_) return;
            }
            return;
        }
    }

    NetStats run(const Constraints& start, const std::function<bool(const Matching&)>& cb) {
        start_ = start;
        on_complete_ = &cb;
        if (balanced()) dfs(initial(start));
        return stats_;
    }

    bool balanced() const {
        std::map<std::pair<std::string, std::size_t>, int> count;
        for (int p : ps_.pos_atoms) ++count[{ps_.occ[p].f->pred, ps_.occ[p].f->args.size()}];
        for (int n : ps_.neg_atoms) --count[{ps_.occ[n].f->pred, ps_.occ[n].f->args.size()}];
        for (const auto& [k, v] : count)
            if (v) return false;
        return true;
    }

private:
    const ProofStructure& ps_;
    NetOptions opt_;
    Constraints start_;
    NetStats stats_;
    const std::function<bool(const Matching&)>* on_complete_ = nullptr;
    bool stop_ = false;
};

}  // namespace

CandidateTable candidate_table(const ProofStructure& ps, const Constraints& start,
                               const std::vector<std::pair<int, int>>& fixed, const NetOptions& opt) {
    NetSearch ns(ps, opt);
    State st = ns.initial(start);
    CandidateTable out;
    for (auto [p, n] : fixed) {
        auto pi = std::find(ps.pos_atoms.begin(), ps.pos_atoms.end(), p) - ps.pos_atoms.begin();
        auto ni = std::find(ps.neg_atoms.begin(), ps.neg_atoms.end(), n) - ps.neg_atoms.begin();
        if (pi >= static_cast<long>(ps.pos_atoms.size()) || ni >= static_cast<long>(ps.neg_atoms.size()))
            return out;
        Constraints c = st.c;
        if (!c.unify_atoms(ps.occ[p].f, ps.occ[n].f)) return out;  // fixed pairs must be compatible
        st = ns.commit(st, static_cast<std::size_t>(pi), Cand{static_cast<int>(ni), c});
    }
    for (std::size_t pi = 0; pi < ps.pos_atoms.size(); ++pi) {
        if (st.mate[pi] >= 0) continue;
        auto& row = out[ps.pos_atoms[pi]];
        for (const auto& c : ns.candidates(st, pi, ns.probe_depth())) row.push_back(ps.neg_atoms[c.ni]);
    }
    return out;
}

NetStats enumerate_matchings(const ProofStructure& ps, const Constraints& start, const NetOptions& opt,
                             const std::function<bool(const Matching&)>& on_complete) {
    NetSearch ns(ps, opt);
    return ns.run(start, on_complete);
}

bool is_proof_net(const ProofStructure& ps, const Matching& m) {
    return contract(abstract(ps, m.pairs, m.state.subst)).success;
}

bool eigenvariables_strict(const ProofStructure& ps, const Matching& m) {
    // Axiom links equate argument positions. An occurrence of x is pinned to
    // its link exactly when the metavariable carrying it is equated, through
    // axioms, with an occurrence that came from the link itself; otherwise those
    // occurrences could be swapped for c_x without breaking anything.
    std::map<std::string, std::string> parent;
    auto key = [](const Term& t) { return std::to_string(static_cast<int>(t.kind)) + ":" + t.str(); };
    std::function<std::string(const std::string&)> find = [&](const std::string& k) -> std::string {
        auto it = parent.find(k);
        if (it == parent.end() || it->second == k) return k;
        return it->second = find(it->second);
    };
    for (auto [p, n] : m.pairs) {
        const auto& a = ps.occ[p].f->args;
        const auto& b = ps.occ[n].f->args;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            std::string x = find(key(a[i])), y = find(key(b[i]));
            if (x != y) parent[x] = y;
        }
    }
    for (const auto& [name, meta] : m.state.subst.metas()) {
        Term v = m.state.subst.apply(meta);
        if (v.is_eigen() && find(key(meta)) != find(key(v))) return false;
    }
    return true;
}

NetResult prove_net(const Sequent& seq, const Constraints& start, const NetOptions& opt) {
    NetResult res;
    res.structure = unfold(seq);
    const ProofStructure& ps = res.structure;
    std::size_t failed = 0;
    res.stats = enumerate_matchings(ps, start, opt, [&](const Matching& m) {
        if (is_proof_net(ps, m) && eigenvariables_strict(ps, m)) {
            res.nets.push_back(m);
            return res.nets.size() >= opt.max_nets;
        }
        ++failed;
        return false;
    });
    res.stats.backtracks += failed;
    return res;
}

std::uint64_t unpruned_matchings(const ProofStructure& ps) {
    std::map<std::pair<std::string, std::size_t>, std::pair<int, int>> count;
    for (int p : ps.pos_atoms) ++count[{ps.occ[p].f->pred, ps.occ[p].f->args.size()}].first;
    for (int n : ps.neg_atoms) ++count[{ps.occ[n].f->pred, ps.occ[n].f->args.size()}].second;
    std::uint64_t total = 1;
    for (const auto& [k, v] : count) {
        if (v.first != v.second) return 0;
        for (int i = 2; i <= v.first; ++i) total *= static_cast<std::uint64_t>(i);
    }
    return total;
}

// ---- DOT

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const ProofStructure& ps, const Matching* m) {
    std::ostringstream out;
    out << "digraph structure {\n  node [shape=plaintext];\n  edge [dir=none];\n";
    for (const auto& o : ps.occ) {
        Formula f = m ? substitute(o.f, m->state.subst) : o.f;
        out << "  n" << o.id << " [label=" << quote(to_string(f)) << "];\n";
    }
    for (const auto& l : ps.links) {
        for (int p : l.premisses)
            for (int c : l.conclusions) {
                out << "  n" << p << " -> n" << c;
                switch (l.kind) {
                case LinkKind::Tensor:
                case LinkKind::Existential: break;
                case LinkKind::Par: out << " [style=dashed]"; break;
                case LinkKind::Universal:
                    out << " [style=dashed, dir=forward, label=" << quote(l.var.name) << "]";
                    break;
                }
                out << ";\n";
            }
    }
    if (m)
        for (auto [p, n] : m->pairs) out << "  n" << n << " -> n" << p << " [color=gray];\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const AbstractProofStructure& aps) {
    std::ostringstream out;
    out << "digraph abstract {\n  node [shape=ellipse];\n  edge [dir=none];\n";
    for (std::size_t v = 0; v < aps.labels.size(); ++v) {
        if (!aps.alive[v]) continue;
        std::string l = "{";
        bool first = true;
        for (const auto& x : aps.labels[v]) {
            if (!first) l += ",";
            first = false;
            l += x;
        }
        l += "}";
        out << "  v" << v << " [label=" << quote(l) << ", tooltip=" << quote(aps.names[v]) << "];\n";
    }
    for (const auto& e : aps.edges) {
        switch (e.kind) {
        case AbstractEdge::Solid: out << "  v" << e.a << " -> v" << e.b << ";\n"; break;
        case AbstractEdge::Par:
            out << "  v" << e.a << " -> v" << e.b << " [style=dashed];\n";
            out << "  v" << e.a << " -> v" << e.c << " [style=dashed];\n";
            break;
        case AbstractEdge::Universal:
            out << "  v" << e.a << " -> v" << e.b << " [style=dashed, dir=forward, label=" << quote(e.x) << "];\n";
            break;
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace follres
