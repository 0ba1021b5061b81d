#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/independence.hpp"
#include "wellcov/verdict.hpp"

namespace wellcov {

struct ClassMembership {
    bool konig = false;
    bool no_3_5_cycles = false;
    bool no_3_5_7_cycles = false;
    bool bipartite = false;
    bool girth_ge_6 = false;
    bool girth_ge_11 = false;
    bool unicyclic = false;
    bool tree = false;
    bool whisker = false;
    bool sqc = false;
};

ClassMembership classify(const Graph& g);

struct CmReport {
    Verdict<Unit> cm;
    Verdict<Unit> seq_cm;
    std::string cm_rationale;      // theorem or implication that decided cm
    std::string seq_cm_rationale;
};

/// Well-coveredness for graphs with no 3-, 5- or 7-cycles, decided through
/// the perfect-König-matching exchange criterion applied to G minus its
/// isolated vertices (an all-isolated graph passes vacuously).
Verdict<PerfectKonigMatching> theorem24(const Graph& g);

struct Relabeling {
    // pairs[i] = (x_{i+1}, y_{i+1}); X = first components is a minimum cover
    std::vector<std::pair<int, int>> pairs;
};

struct Prop2Result {
    Verdict<Unit> unmixed_vd;                   // (i)
    Verdict<Unit> pure_shellable;               // (ii)
    Verdict<Unit> cohen_macaulay;               // (iii), identified with (ii)
    Verdict<Unit> konig_matching_no_squares;    // (iv)
    Verdict<Unit> ordered_relabeling;           // (v)
    std::optional<Relabeling> relabeling;       // witness for (v)
};

/// The five equivalent conditions for König graphs, each evaluated
/// independently.
Prop2Result prop2_equivalences(const Graph& g);

/// Cohen-Macaulayness for graphs with no 3- and 5-cycles: unmixed and
/// every non-trivial component has a perfect König matching with no
/// square using two matching edges.
CmReport theoremP1(const Graph& g);

/// Connected graphs of girth >= 6: seven equivalent conditions, cross
/// checked; throws InternalInconsistency if they disagree.
CmReport girth6_corollary(const Graph& g);

/// Structural well-coveredness cases for connected unicyclic graphs;
/// the witness is the case tag 'a'..'d'.
Verdict<char> unicyclic_wellcovered(const Graph& g);

/// VD = shellable = sequentially CM for unicyclic graphs, decided by the
/// cycle length or a free vertex next to the cycle.
Verdict<Unit> unicyclic_ssd(const Graph& g);

/// CM for unicyclic graphs: unmixed and not C4 or C7.
CmReport unicyclic_cm(const Graph& g);

/// CM trichotomy: necessary condition (well-covered), sufficient condition
/// (pure shellable), class characterizations in between, Unknown otherwise.
CmReport cm_oracle(const Graph& g);

struct Lemma6Witness {
    std::vector<int> path;  // (w1, w2) or (w1, w2, w3), see below
};

/// Structural consequence of CM with a square-free perfect König matching:
/// from any z, a short path reaching a pendant matching edge.
Lemma6Witness lemma6_structure(const Graph& g, const PerfectKonigMatching& m, int z);

}  // namespace wellcov
