#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgg/gain_graph.hpp"

namespace qgg {

/// Rank of a gain path P_n: n-1 when n is odd, n when n is even. Gains are
/// irrelevant because every gain tree is switching equivalent to its
/// underlying graph.
int predicted_path_rank(int n);

enum class CycleGainClass {
    EvenMatchingSign,     // n even, phi(C) = (-1)^{n/2}: rank n-2
    EvenOther,            // n even, phi(C) != (-1)^{n/2}: rank n
    OddRealPartNonzero,   // n odd, Re(phi(C)) != 0: rank n
    OddRealPartZero,      // n odd, Re(phi(C)) = 0: rank n-1
};

struct CycleRankCase {
    int n = 0;
    CycleGainClass gain_class = CycleGainClass::EvenOther;
    int predicted_rank = 0;
};

/// The four-case rank table for a gain n-cycle, keyed by the parity of n and
/// the cycle gain. Every branch condition is invariant under the choice of
/// starting point and direction: for even n the test compares against the
/// central value (-1)^{n/2}, for odd n only Re(phi(C)) is consulted.
CycleRankCase predicted_cycle_rank(int n, const UnitQuaternion& cycle_gain);

/// Path 0-1-...-k with the given gains on the oriented edges (t, t+1).
GainGraph make_gain_path(const std::vector<UnitQuaternion>& gains);

/// Cycle 0-1-...-(n-1)-0 with gains.size() = n gains on the oriented edges
/// (t, t+1 mod n) in walk order.
GainGraph make_gain_cycle(const std::vector<UnitQuaternion>& gains);

/// The normalized cycle C_n(h): every edge gain 1 except the closing edge,
/// whose oriented gain (n-1, 0) is h. The closed walk 0 -> 1 -> ... -> 0
/// therefore has gain exactly h.
GainGraph make_normalized_cycle(int n, const UnitQuaternion& h);

/// n-cycle on vertices 0..n-1 plus a pendant vertex n attached to vertex 0.
/// gains holds n cycle gains in walk order followed by the pendant gain
/// (oriented 0 -> n).
GainGraph make_pendant_cycle(int n, const std::vector<UnitQuaternion>& gains);

/// Checks rank(C_n(h)) = 2 + rank(C_{n-2}(-h)) by computing both sides with
/// exact elimination. Requires n >= 5.
bool verify_cycle_recursion(int n, const UnitQuaternion& h);

/// Builds the pendant-cycle graph under the given gains and checks
/// rank = 2 + rank(P_{n-1}) >= n exactly. Requires n >= 3 and n+1 gains.
bool verify_pendant_cycle(int n, const std::vector<UnitQuaternion>& gains);

/// The extremal g-cycle: C_g(h) with h = (-1)^{g/2}. Requires even g >= 4.
GainGraph generate_extremal_cycle(int g);

/// K_{p,q} with gain(x_i, y_j) = u_i * v_j. Every 4-cycle then has gain 1
/// and the bipartite block has rank 1, so the adjacency rank is 2. Requires
/// p, q >= 2 and matching unit list lengths.
GainGraph generate_extremal_complete_bipartite(int p, int q,
                                               const std::vector<UnitQuaternion>& row_units,
                                               const std::vector<UnitQuaternion>& col_units);

/// For a connected bipartite gain graph, independently computes both sides
/// of the rank-2 characterization -- rank_exact(A) = 2 on one side, complete
/// bipartite with every 4-cycle of gain 1 on the other -- and returns whether
/// the biconditional holds. Also cross-checks the 4-cycle condition against
/// the row-multiple algebra c1 = phi(x1 y1) phi(x2 y1)*, c2 = phi(x1 y2)
/// phi(x2 y2)*, cycle gain = c1 c2*.
bool verify_bipartite_rank2_characterization(const GainGraph& g);

enum class EqualityCase { None, ExtremalCycle, CompleteBipartiteAllFourCyclesOne, Both };

std::string to_string(EqualityCase c);

struct TheoremReport {
    int girth = 0;
    int rank = 0;
    bool bound_holds = false;  // g <= r + 2
    bool equality = false;     // g == r + 2
    EqualityCase equality_case = EqualityCase::None;

    /// Single-line key-value rendering, e.g.
    /// "g=6 r=4 bound_holds=1 equality=1 case=cycle".
    std::string to_kv() const;
};

/// Computes girth and exact rank, checks the bound g <= r+2, and when
/// equality holds classifies the instance: ExtremalCycle iff the underlying
/// graph is a single cycle whose gain equals (-1)^{g/2} as an exact
/// quaternion, CompleteBipartiteAllFourCyclesOne iff the graph is complete
/// bipartite with both parts of order >= 2 and every 4-cycle has gain
/// exactly 1, Both when both descriptions apply. Throws std::invalid_argument
/// on disconnected input and std::domain_error when the graph is a tree
/// (girth undefined).
TheoremReport check_theorem(const GainGraph& g);

enum class GainMode { Q8Exhaustive, Q8Sampled, RationalUnitSampled };

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    int min_n = 1;
    int max_n = 5;
    GainMode mode = GainMode::Q8Exhaustive;
    /// A graph is enumerated exhaustively only while 8^|E| stays within this
    /// budget; beyond it the graph is sampled instead (or, with
    /// allow_downgrade = false, a BudgetError is thrown).
    std::uint64_t exhaustive_budget = 10'000'000;
    int samples = 50;  // per graph, for the sampled modes and the downgrade
    std::uint64_t seed = 0;
    bool allow_downgrade = true;
    int threads = 0;  // 0 = hardware concurrency
};

struct EnumerationRecord {
    std::string instance;  // encode_instance form, decodable
    TheoremReport report;
};

struct EnumerationSummary {
    std::uint64_t graphs_seen = 0;
    std::uint64_t instances_checked = 0;
    /// Bound failures plus equality instances that no case verifier accepts;
    /// must be empty if the theorem holds.
    std::vector<EnumerationRecord> violations;
    std::vector<EnumerationRecord> equality_instances;

    /// One record per line: a summary line, then violation/equality lines as
    /// "<kind> <instance> <kv>". equality_limit = 0 emits every instance.
    std::vector<std::string> to_kv_lines(std::size_t equality_limit) const;
};

/// Iterates all labeled simple graphs on min_n <= n <= max_n vertices (every
/// edge subset of K_n), keeps the connected non-trees, assigns gains per the
/// mode, and runs the theorem check on each instance. Sampled gains depend
/// only on (seed, n, edge mask), never on scheduling, and the record lists
/// are canonicalized by instance encoding, so the output is deterministic for
/// any thread count. Requires max_n <= 7.
EnumerationSummary enumerate_and_check(const EnumerationOptions& options);

/// Canonical single-token instance encoding,
/// "n=4;e=0-1:1,0,0,0;e=1-2:0,1,0,0;...". Round-trips through
/// decode_instance.
std::string encode_instance(const GainGraph& g);
GainGraph decode_instance(const std::string& text);

}  // namespace qgg
