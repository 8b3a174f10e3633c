#pragma once

#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace tg {

// The sharpness family: K_m joined to (2m+1 cliques K_{2l+1}) u K_{(2l+1)(2m+1)}
// where the A-to-B perfect matching is subdivided by the vertices of T.
// Toughness 2 - (m+3)/((2l+1)(2m+1)+1), no 2-factor, 2P5-free.
struct FamilyWitness {
    Graph graph;
    int l = 0, m = 0;

    VertexSet S;                    // the K_m apex clique
    std::vector<VertexSet> blocks;  // A_1..A_{2m+1}
    VertexSet A;                    // union of the blocks
    VertexSet T;                    // subdividing vertices
    VertexSet B;                    // the big clique

    VertexSet tutteS, tutteT;       // the pair with eta = -2
    VertexSet W;                    // cut set attaining the toughness formula
    Rational formulaToughness;

    std::vector<int> blockRepresentative;  // a_i = first vertex of each block
    int chosenA = -1;                      // a = a_1
    int chosenSubdivider = -1;             // x, the T vertex adjacent to a
    int chosenB = -1;                      // b, the B endpoint behind x
};

// Deterministic labeling: S first, then the A blocks, then T, then B, with
// the i-th A vertex matched through t_i to b_i. Requires l >= 1, m >= 2.
FamilyWitness buildFamily(int l, int m);

// cut_ratio(graph, W); verifies omega(G-W) = (2l+1)(2m+1)+1 and equality
// with the closed-form toughness before returning.
Rational familyWitnessRatio(const FamilyWitness& fw);

struct FamilyLimitReport {
    int m = 0;
    std::vector<std::pair<int, Rational>> ratios;  // (l, witness ratio)
    bool strictlyIncreasing = false;
    bool allBelowTwo = false;
};

// Witness ratios for l = lFrom..lTo at fixed m; they increase strictly in l
// and stay below 2.
FamilyLimitReport familyLimitCheck(int m, int lFrom, int lTo);

}  // namespace tg
