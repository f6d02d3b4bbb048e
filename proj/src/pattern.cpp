#include "follres/pattern.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace follres {

namespace {

struct Fsa {
    int states;
    std::vector<bool> accepting;
    // delta[state][symbol] with symbol index a=0, b=1, 1=2; -1 means no edge
    std::vector<std::array<int, 3>> delta;
};

int sym_index(char c) {
    switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case '1': return 2;
    }
    return -1;
}

constexpr char kSymbols[3] = {'a', 'b', '1'};  // also the canonical order

const Fsa& full_fsa() {
    static const Fsa fsa = [] {
        Fsa f{6, std::vector<bool>(6, false), std::vector<std::array<int, 3>>(6, {-1, -1, -1})};
        auto edge = [&](int from, char s, int to) { f.delta[from][sym_index(s)] = to; };
        edge(0, 'a', 1);
        edge(1, '1', 2);
        edge(2, 'a', 1);
        edge(1, 'b', 3);
        edge(2, 'b', 3);
        edge(3, 'a', 4);
        edge(4, 'b', 3);
        edge(3, '1', 5);
        edge(5, 'b', 3);
        edge(5, 'a', 4);
        edge(4, '1', 5);
        f.accepting[3] = f.accepting[4] = true;
        return f;
    }();
    return fsa;
}

// once a b has been followed by an a, no further b is allowed
const Fsa& nested_fsa() {
    static const Fsa fsa = [] {
        Fsa f{7, std::vector<bool>(7, false), std::vector<std::array<int, 3>>(7, {-1, -1, -1})};
        auto edge = [&](int from, char s, int to) { f.delta[from][sym_index(s)] = to; };
        edge(0, 'a', 1);
        edge(1, '1', 2);
        edge(2, 'a', 1);
        edge(1, 'b', 3);
        edge(2, 'b', 3);
        edge(3, 'a', 4);
        edge(5, 'a', 4);
        edge(5, 'b', 3);
        edge(3, '1', 5);
        edge(6, 'a', 4);
        edge(4, '1', 6);
        f.accepting[3] = f.accepting[4] = true;
        return f;
    }();
    return fsa;
}

bool accepts(const Fsa& f, const Pattern& p) {
    int q = 0;
    for (char c : p) {
        int s = sym_index(c);
        if (s < 0) return false;
        q = f.delta[q][s];
        if (q < 0) return false;
    }
    return f.accepting[q];
}

void walk(const Fsa& f, int q, int left, Pattern& cur, std::vector<Pattern>& out) {
    if (left == 0) {
        if (f.accepting[q]) out.push_back(cur);
        return;
    }
    for (int s = 0; s < 3; ++s) {
        int nq = f.delta[q][s];
        if (nq < 0) continue;
        cur.push_back(kSymbols[s]);
        walk(f, nq, left - 1, cur, out);
        cur.pop_back();
    }
}

std::uint64_t count_paths(const Fsa& f, int k) {
    std::vector<std::uint64_t> n(f.states, 0);
    n[0] = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next(f.states, 0);
        for (int q = 0; q < f.states; ++q)
            for (int s = 0; s < 3; ++s)
                if (f.delta[q][s] >= 0) next[f.delta[q][s]] += n[q];
        n = std::move(next);
    }
    std::uint64_t total = 0;
    for (int q = 0; q < f.states; ++q)
        if (f.accepting[q]) total += n[q];
    return total;
}

std::vector<int> segment_bounds(const Pattern& p, char which) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (p[i] == which) {
            out.push_back(i);
            out.push_back(i + 1);
        }
    }
    return out;
}

std::vector<int> run_bounds(const Pattern& p) {
    std::vector<int> out;
    int n = static_cast<int>(p.size());
    int i = 0;
    while (i < n) {
        if (p[i] == '1') { ++i; continue; }
        int j = i;
        while (j < n && p[j] != '1') ++j;
        out.push_back(i);
        out.push_back(j);
        i = j;
    }
    return out;
}

std::vector<int> intersect(const std::vector<int>& x, const std::vector<int>& y) {
    std::set<int> sx(x.begin(), x.end()), sy(y.begin(), y.end());
    std::vector<int> out;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(out));
    return out;
}

void add_chain(const std::vector<int>& t, std::vector<IndexFact>& out) {
    for (std::size_t i = 1; i < t.size(); ++i) out.push_back({t[i - 1], t[i]});
}

// reflexive-transitive closure over n indices
std::vector<std::vector<bool>> closure(int n, const std::vector<IndexFact>& facts) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (const auto& f : facts) r[f.lo][f.hi] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[i][k])
                for (int j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

}  // namespace

bool validate_pattern(const Pattern& p) {
    if (p.empty() || p.front() != 'a' || p.back() == '1') return false;
    bool has_b = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sym_index(p[i]) < 0) return false;
        if (i && p[i] == p[i - 1]) return false;
        if (p[i] == 'b') has_b = true;
    }
    return has_b;
}

bool is_well_nested(const Pattern& p) { return accepts(nested_fsa(), p); }

Pattern mirror(const Pattern& p) {
    Pattern out(p.rbegin(), p.rend());
    for (char& c : out) {
        if (c == 'a') c = 'b';
        else if (c == 'b') c = 'a';
    }
    return out;
}

std::vector<Pattern> enumerate_patterns(int k, bool well_nested_only) {
    std::vector<Pattern> out;
    if (k < 1) return out;
    Pattern cur;
    walk(well_nested_only ? nested_fsa() : full_fsa(), 0, k, cur, out);
    return out;
}

std::string pattern_label(int k, std::size_t index) {
    std::string label = std::to_string(k);
    // past z the labels just keep counting
    if (index < 26) label += static_cast<char>('a' + index);
    else label += "_" + std::to_string(index);
    return label;
}

std::uint64_t count_patterns_fsa(int k) { return k < 1 ? 0 : count_paths(full_fsa(), k); }

std::uint64_t count_patterns_recurrence(int k) {
    if (k < 1) return 0;
    std::uint64_t p = 0;  // p(1)
    for (int i = 2; i <= k; ++i) p = (i % 2 == 0) ? 2 * p + 1 : 2 * p;
    return p;
}

std::uint64_t count_patterns_closed(int k) {
    if (k < 1) return 0;
    // ceil(2(2^(k-1) - 1) / 3) = ceil((2^k - 2) / 3) = floor(2^k / 3)
    return (std::uint64_t{1} << k) / 3;
}

std::uint64_t count_wellnested_fsa(int k) { return k < 1 ? 0 : count_paths(nested_fsa(), k); }

std::uint64_t count_wellnested_closed(int k) {
    if (k < 1) return 0;
    std::uint64_t h = static_cast<std::uint64_t>(k) / 2;
    return h * (static_cast<std::uint64_t>(k) - h);
}

const char* role_name(Role r) {
    switch (r) {
    case Role::Product: return "product";
    case Role::Under: return "under";
    case Role::Over: return "over";
    }
    return "?";
}

std::uint64_t count_linear_extensions(int n, const std::vector<IndexFact>& facts, std::uint64_t cap) {
    // subset DP over placed prefixes; n stays small (patterns of a dozen symbols at most)
    if (n > 24) throw std::invalid_argument("too many positions for linear extension count");
    std::vector<std::uint32_t> pred(n, 0);
    for (const auto& f : facts)
        if (f.lo != f.hi) pred[f.hi] |= 1u << f.lo;
    std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
    ways[0] = 1;
    for (std::uint32_t s = 0; s < ways.size(); ++s) {
        if (!ways[s]) continue;
        for (int v = 0; v < n; ++v) {
            if (s & (1u << v)) continue;
            if ((pred[v] & s) != pred[v]) continue;
            auto& w = ways[s | (1u << v)];
            w = std::min(cap, w + ways[s]);
        }
    }
    return ways.back();
}

std::vector<IndexFact> required_facts(const Pattern& p, Role role) {
    if (!validate_pattern(p)) throw std::invalid_argument("invalid pattern: " + p);
    int n = static_cast<int>(p.size()) + 1;
    std::vector<int> tA = segment_bounds(p, 'a'), tB = segment_bounds(p, 'b'), tC = run_bounds(p);
    std::vector<IndexFact> base;
    switch (role) {
    case Role::Product: add_chain(tA, base); add_chain(tB, base); break;
    case Role::Under: add_chain(tA, base); add_chain(tC, base); break;
    case Role::Over: add_chain(tB, base); add_chain(tC, base); break;
    }
    // the first and last index delimit the whole configuration
    for (int i = 1; i < n; ++i) base.push_back({0, i});
    for (int i = 0; i + 1 < n; ++i) base.push_back({i, n - 1});

    // a partial order on 0..n-1 extends uniquely to 0<1<..<n-1 iff every
    // adjacent pair is comparable; the missing adjacent pairs are therefore
    // exactly the facts that have to be stated
    auto r = closure(n, base);
    std::vector<IndexFact> out;
    for (int i = 0; i + 1 < n; ++i)
        if (!r[i][i + 1]) out.push_back({i, i + 1});

    std::vector<IndexFact> all = base;
    all.insert(all.end(), out.begin(), out.end());
    if (count_linear_extensions(n, all, 2) != 1)
        throw std::logic_error("required_facts: order not total for " + p);
    return out;
}

ConnectiveSchema schema(const Pattern& p) {
    if (!validate_pattern(p)) throw std::invalid_argument("invalid pattern: " + p);
    ConnectiveSchema s;
    s.pattern = p;
    s.n_positions = static_cast<int>(p.size()) + 1;
    s.tuple_A = segment_bounds(p, 'a');
    s.tuple_B = segment_bounds(p, 'b');
    s.tuple_C = run_bounds(p);
    s.exist_vars = intersect(s.tuple_A, s.tuple_B);
    s.under_vars = intersect(s.tuple_A, s.tuple_C);
    s.over_vars = intersect(s.tuple_B, s.tuple_C);
    for (Role r : {Role::Product, Role::Under, Role::Over}) s.required_facts[r] = required_facts(p, r);
    return s;
}

Pattern default_pattern(int m, int n) {
    Pattern p;
    for (int i = 1; i < m; ++i) p += "a1";
    p += "ab";
    for (int i = 1; i < n; ++i) p += "1b";
    return p;
}

}  // namespace follres
