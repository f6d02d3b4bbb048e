#include "follres/sentence.hpp"

namespace follres {

SentenceParse parse_sentence(const Lexicon& lex, const std::vector<std::string>& words, const std::string& goal,
                             const NetOptions& opt) {
    SentenceParse out;
    for (auto& inst : instantiate_sentence(lex, words, goal)) {
        auto c = seed_constraints(inst.sequent, inst.facts);
        if (!c) continue;
        NetResult res = prove_net(inst.sequent, *c, opt);
        Reading r{std::move(inst), std::move(res)};
        out.parses += r.result.nets.size();
        out.stats.matchings_explored += r.result.stats.matchings_explored;
        out.stats.branches += r.result.stats.branches;
        out.stats.backtracks += r.result.stats.backtracks;
        out.stats.forced += r.result.stats.forced;
        out.readings.push_back(std::move(r));
    }
    return out;
}

}  // namespace follres
