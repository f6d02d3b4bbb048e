#pragma once

// sequents and stores shared by the unit tests and the acceptance runner

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline const char* kDemoLexicon = FOLLRES_DATA_DIR "/demo.lex";

// "John left before Mary did" with the letter names used in the worked example
inline const std::vector<std::string> kDidFormulas = {
    "np(0,1)",
    "forall A.[np(A,1) -o s(A,2)]",
    "forall B.[s(3,B) -o forall D.[forall x0.[np(x0,D) -o s(x0,2)] -o forall C.[np(C,D) -o s(C,B)]]]",
    "np(3,4)",
    "forall F I J.[ forall x1.[ forall G.[np(G,4) -o s(G,x1)] -o [ forall H.[np(H,I) -o s(H,J)] -o "
    "forall x2.[np(x2,F) -o s(x2,x1)] ] ] -o [ forall x3.[np(x3,I) -o s(x3,J)] -o forall E.[np(E,F) -o s(E,5)] ] ]",
};
inline const char* kDidGoal = "s(0,5)";

inline std::string did_sequent() {
    std::string s;
    for (const auto& f : kDidFormulas) s += (s.empty() ? "" : ", ") + f;
    return s + " |- " + kDidGoal;
}

// sentence chain plus the covering relation drawn for this sentence
inline const char* kDidFacts =
    "0<1,1<2,2<3,3<4,4<5,"
    "A<=1,D<=2,C<=D,x0<=D,3<=B,J<=4,I<=J,F<=I,E<=F,x2<=F,x3<=I,H<=I,G<=4,4<=x1";

inline const std::vector<std::pair<std::string, std::string>> kDidHasse = {
    {"A", "1"}, {"D", "2"}, {"C", "D"}, {"x0", "D"}, {"3", "B"}, {"J", "4"},  {"I", "J"},
    {"F", "I"}, {"E", "F"}, {"x2", "F"}, {"x3", "I"}, {"H", "I"}, {"G", "4"}, {"4", "x1"},
    {"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"},
};

// the ten axiom links of the unique net, positive atom first
inline const std::vector<std::pair<std::string, std::string>> kDidLinks = {
    {"s(x2,x1)", "s(C,B)"},   {"np(C,D)", "np(x2,F)"}, {"s(0,5)", "s(E,5)"},   {"np(E,F)", "np(0,1)"},
    {"s(x3,J)", "s(A,2)"},    {"s(x0,2)", "s(H,J)"},   {"s(3,B)", "s(G,x1)"},  {"np(G,4)", "np(3,4)"},
    {"np(A,1)", "np(x3,I)"},  {"np(H,I)", "np(x0,D)"},
};

// binder names of the translated sentence against the names above
inline const std::vector<std::pair<std::string, std::string>> kDidRenaming = {
    {"x0", "A"},  {"x1", "B"},  {"x2", "D"},   {"x3", "x0"},  {"x4", "C"},  {"x5", "F"},  {"x6", "I"},
    {"x7", "J"},  {"x8", "x1"}, {"x9", "G"},   {"x10", "H"},  {"x11", "x2"}, {"x12", "x3"}, {"x13", "E"},
};

inline const char* kNotNet = "forall y.[a * b(y)] |- a * forall x. b(x)";
inline const std::vector<std::string> kComponentSequents = {
    "forall y.[a * b(y)] |- a * b(c_x)",
    "a, forall x. b(x) |- a * forall x. b(x)",
    "b(c_x) |- b(c_x)",
};
// (C/B) B -> C and A (A\C) -> C, with the arguments as separate hypotheses and as a product
inline const std::vector<std::string> kCancellation = {
    "forall z.[b(1,z) -o c(0,z)], b(1,2) |- c(0,2)",
    "a(0,1), forall x.[a(x,1) -o c(x,2)] |- c(0,2)",
    "exists y.[forall z.[b(y,z) -o c(0,z)] * b(y,2)] |- c(0,2)",
    "exists y.[a(0,y) * forall x.[a(x,y) -o c(x,2)]] |- c(0,2)",
};

}  // namespace fixtures
