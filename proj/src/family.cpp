#include "family.hpp"

#include "toughness.hpp"

namespace tg {

FamilyWitness buildFamily(int l, int m) {
    if (l < 1) throw InvalidArgument("family parameter l must be at least 1");
    if (m < 2) throw InvalidArgument("family parameter m must be at least 2");

    const int blockSize = 2 * l + 1;
    const int blockCount = 2 * m + 1;
    const int side = blockSize * blockCount;  // |A| = |T| = |B|
    const int n = m + 3 * side;

    FamilyWitness fw;
    fw.l = l;
    fw.m = m;
    fw.graph = Graph(n);
    Graph& g = fw.graph;

    const int aBase = m, tBase = m + side, bBase = m + 2 * side;

    fw.S = VertexSet(n);
    fw.A = VertexSet(n);
    fw.T = VertexSet(n);
    fw.B = VertexSet(n);
    for (int v = 0; v < m; ++v) fw.S.add(v);
    for (int j = 0; j < side; ++j) {
        fw.A.add(aBase + j);
        fw.T.add(tBase + j);
        fw.B.add(bBase + j);
    }

    // S is a clique joined to everything else.
    for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) g.addEdgeUnchecked(u, v);
        for (int w = m; w < n; ++w) g.addEdgeUnchecked(u, w);
    }
    // A blocks: 2m+1 cliques of size 2l+1.
    for (int i = 0; i < blockCount; ++i) {
        VertexSet block(n);
        for (int p = 0; p < blockSize; ++p) {
            int v = aBase + i * blockSize + p;
            block.add(v);
            for (int q = p + 1; q < blockSize; ++q)
                g.addEdgeUnchecked(v, aBase + i * blockSize + q);
        }
        fw.blocks.push_back(block);
        fw.blockRepresentative.push_back(aBase + i * blockSize);
    }
    // B is one clique.
    for (int p = 0; p < side; ++p)
        for (int q = p + 1; q < side; ++q) g.addEdgeUnchecked(bBase + p, bBase + q);
    // The subdivided perfect matching a_j - t_j - b_j.
    for (int j = 0; j < side; ++j) {
        g.addEdgeUnchecked(aBase + j, tBase + j);
        g.addEdgeUnchecked(tBase + j, bBase + j);
    }

    fw.tutteS = fw.S;
    fw.tutteT = fw.T;

    // W = S u (A minus the block representatives) u (B minus b) u {x},
    // with a = a_1, x its subdivider, b the B endpoint behind x.
    fw.chosenA = fw.blockRepresentative[0];
    fw.chosenSubdivider = tBase + (fw.chosenA - aBase);
    fw.chosenB = bBase + (fw.chosenA - aBase);
    fw.W = fw.A;
    for (int rep : fw.blockRepresentative) fw.W.remove(rep);
    fw.W |= fw.S;
    fw.W |= fw.B;
    fw.W.remove(fw.chosenB);
    fw.W.add(fw.chosenSubdivider);

    fw.formulaToughness = Rational(2, 1) - Rational(m + 3, side + 1);
    return fw;
}

Rational familyWitnessRatio(const FamilyWitness& fw) {
    auto ratio = cutRatio(fw.graph, fw.W);
    if (!ratio) throw InternalError("family witness set does not disconnect the graph");
    const int expectedOmega = (2 * fw.l + 1) * (2 * fw.m + 1) + 1;
    if (fw.graph.componentCount(fw.W) != expectedOmega)
        throw InternalError("family witness component count mismatch");
    if (!(*ratio == fw.formulaToughness))
        throw InternalError("family witness ratio differs from the closed form");
    return *ratio;
}

FamilyLimitReport familyLimitCheck(int m, int lFrom, int lTo) {
    if (lFrom < 1 || lTo < lFrom) throw InvalidArgument("need 1 <= lFrom <= lTo");
    FamilyLimitReport report;
    report.m = m;
    report.strictlyIncreasing = true;
    report.allBelowTwo = true;
    for (int l = lFrom; l <= lTo; ++l) {
        FamilyWitness fw = buildFamily(l, m);
        Rational r = familyWitnessRatio(fw);
        if (!report.ratios.empty() && !(report.ratios.back().second < r))
            report.strictlyIncreasing = false;
        if (!(r < Rational(2, 1))) report.allBelowTwo = false;
        report.ratios.emplace_back(l, r);
    }
    return report;
}

}  // namespace tg
