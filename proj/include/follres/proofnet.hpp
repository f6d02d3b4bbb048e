#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "follres/constraints.hpp"
#include "follres/formula.hpp"

namespace follres {

enum class Polarity { Negative, Positive };  // negative = hypothesis side
enum class LinkKind { Tensor, Par, Universal, Existential };
const char* link_name(LinkKind k);

struct Occurrence {
    int id;
    Formula f;
    Polarity pol;
};

struct Link {
    LinkKind kind;
    int main;
    std::vector<int> actives;
    std::vector<int> premisses, conclusions;
    Term var;  // eigenvariable (universal) or metavariable (existential)
};

struct ProofStructure {
    std::vector<Occurrence> occ;
    std::vector<Link> links;
    std::vector<int> roots;  // antecedent formulas in order, then the succedent
    std::vector<int> pos_atoms, neg_atoms;
    std::vector<int> premiss_of, conclusion_of;  // link index per occurrence, -1 if none

    std::string text(int id) const { return to_string(occ[id].f); }
};

ProofStructure unfold(const Sequent& seq);

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // positive atom -> negative atom
    Constraints state;
};

struct AbstractEdge {
    enum Kind { Solid, Par, Universal } kind;
    int a, b, c;    // solid a-b; par main a with actives b, c; universal active a -> main b
    std::string x;  // universal only
    int link = -1;  // originating link
};

struct AbstractProofStructure {
    std::vector<std::set<std::string>> labels;
    std::vector<std::string> names;  // formulas at each vertex, for display
    std::vector<AbstractEdge> edges;
    std::vector<bool> alive;
    int vertex_count() const;
};

// matched atoms share a vertex; pairs may be partial
AbstractProofStructure abstract(const ProofStructure& ps, const std::vector<std::pair<int, int>>& pairs,
                                const Substitution& s);

std::set<int> existential_frontier(const ProofStructure& ps, const Substitution& s, const std::string& x);

struct ContractionStep {
    char kind;  // 'c', 'p' or 'u'
    int from, into;
    std::string x;
};

struct ContractionResult {
    bool success = false;
    std::vector<ContractionStep> trace;
    AbstractProofStructure residual;
};

// rng == nullptr: always take the first redex
ContractionResult contract(AbstractProofStructure aps, std::mt19937* rng = nullptr);

struct Component {
    std::vector<int> occurrences;
    std::vector<Formula> hypotheses, conclusions;
    bool is_sequent() const { return conclusions.size() == 1; }
    Sequent sequent() const { return {hypotheses, conclusions.front()}; }
};

std::vector<Component> components(const ProofStructure& ps, const Matching& m);

struct NetOptions {
    bool filter_unify = true;
    bool filter_order = true;
    bool filter_eigen = true;
    bool lookahead = true;      // reject candidates whose forced consequences dead-end or complete to a non-net
    int probe_depth = 2;        // probes propagate with probed candidates this many levels down
    bool unit_propagation = true;
    std::size_t max_nets = SIZE_MAX;
    std::size_t max_complete = SIZE_MAX;  // stop after this many complete matchings
};

struct NetStats {
    std::size_t matchings_explored = 0;  // complete matchings checked by contraction
    std::size_t branches = 0;            // choice points with more than one candidate
    std::size_t backtracks = 0;          // dead ends and failed complete matchings
    std::size_t forced = 0;              // unit propagations
};

using CandidateTable = std::map<int, std::vector<int>>;

CandidateTable candidate_table(const ProofStructure& ps, const Constraints& start,
                               const std::vector<std::pair<int, int>>& fixed = {}, const NetOptions& opt = {});

// calls on_complete for every complete matching that passes the filters;
// return true from the callback to stop
NetStats enumerate_matchings(const ProofStructure& ps, const Constraints& start, const NetOptions& opt,
                             const std::function<bool(const Matching&)>& on_complete);

struct NetResult {
    ProofStructure structure;
    std::vector<Matching> nets;
    NetStats stats;
};

bool is_proof_net(const ProofStructure& ps, const Matching& m);
// no occurrence of an eigenvariable could be replaced by a constant: every
// metavariable bound to one is tied to it through the axiom links
bool eigenvariables_strict(const ProofStructure& ps, const Matching& m);

NetResult prove_net(const Sequent& seq, const Constraints& start = {}, const NetOptions& opt = {});

// number of bijections between positive and negative atoms of equal predicate
std::uint64_t unpruned_matchings(const ProofStructure& ps);

std::string to_dot(const ProofStructure& ps, const Matching* m = nullptr);
std::string to_dot(const AbstractProofStructure& aps);

}  // namespace follres
