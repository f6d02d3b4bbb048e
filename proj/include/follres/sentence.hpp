#pragma once

#include <string>
#include <vector>

#include "follres/proofnet.hpp"
#include "follres/translate.hpp"

namespace follres {

struct Reading {
    SentenceInstance instance;
    NetResult result;  // empty nets: this choice of lexical entries has no parse
};

struct SentenceParse {
    std::vector<Reading> readings;
    std::size_t parses = 0;  // nets over all readings
    NetStats stats;          // summed
};

// every lexical choice is searched in turn; a choice whose facts clash is skipped
SentenceParse parse_sentence(const Lexicon& lex, const std::vector<std::string>& words, const std::string& goal,
                             const NetOptions& opt = {});

}  // namespace follres
