#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace follres {

// A pattern is a string over 'a', 'b' and '1'. Position i sits before symbol i,
// so a pattern of length k has positions 0..k.
using Pattern = std::string;

bool validate_pattern(const Pattern& p);
bool is_well_nested(const Pattern& p);
Pattern mirror(const Pattern& p);  // swap a/b and reverse, for the b-first family

std::vector<Pattern> enumerate_patterns(int k, bool well_nested_only = false);
std::string pattern_label(int k, std::size_t index);  // 4a, 4b, ...

std::uint64_t count_patterns_fsa(int k);
std::uint64_t count_patterns_recurrence(int k);
std::uint64_t count_patterns_closed(int k);
std::uint64_t count_wellnested_fsa(int k);
std::uint64_t count_wellnested_closed(int k);

enum class Role { Product, Under, Over };
const char* role_name(Role r);

struct IndexFact {
    int lo, hi;  // x_lo <= x_hi
    bool operator==(const IndexFact& o) const { return lo == o.lo && hi == o.hi; }
};

struct ConnectiveSchema {
    Pattern pattern;
    int n_positions = 0;
    std::vector<int> tuple_A, tuple_B, tuple_C;
    std::vector<int> exist_vars, under_vars, over_vars;
    std::map<Role, std::vector<IndexFact>> required_facts;

    int dim_a() const { return static_cast<int>(tuple_A.size() / 2); }
    int dim_b() const { return static_cast<int>(tuple_B.size() / 2); }
    int dim_c() const { return static_cast<int>(tuple_C.size() / 2); }
};

ConnectiveSchema schema(const Pattern& p);
std::vector<IndexFact> required_facts(const Pattern& p, Role role);

// number of linear extensions of the index poset 0..n-1 under the given facts, capped
std::uint64_t count_linear_extensions(int n, const std::vector<IndexFact>& facts,
                                      std::uint64_t cap = UINT64_MAX);

// pattern for a plain connective whose operands have m and n segments:
// (a1)^(m-1) a b (1b)^(n-1)
Pattern default_pattern(int m, int n);

}  // namespace follres
