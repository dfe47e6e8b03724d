#include "qgg/theorem.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <cstring>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qgg/graph_metrics.hpp"
#include "qgg/rng.hpp"
#include "rank_engine.hpp"

namespace qgg {

int predicted_path_rank(int n) {
    if (n < 1) throw std::invalid_argument("predicted_path_rank: n >= 1 required");
    return n % 2 == 1 ? n - 1 : n;
}

CycleRankCase predicted_cycle_rank(int n, const UnitQuaternion& cycle_gain) {
    if (n < 3) throw std::invalid_argument("predicted_cycle_rank: n >= 3 required");
    CycleRankCase out;
    out.n = n;
    if (n % 2 == 0) {
        Quaternion target(Rational((n / 2) % 2 == 0 ? 1 : -1));
        if (cycle_gain.value() == target) {
            out.gain_class = CycleGainClass::EvenMatchingSign;
            out.predicted_rank = n - 2;
        } else {
            out.gain_class = CycleGainClass::EvenOther;
            out.predicted_rank = n;
        }
    } else if (cycle_gain.value().real_part().is_zero()) {
        out.gain_class = CycleGainClass::OddRealPartZero;
        out.predicted_rank = n - 1;
    } else {
        out.gain_class = CycleGainClass::OddRealPartNonzero;
        out.predicted_rank = n;
    }
    return out;
}

GainGraph make_gain_path(const std::vector<UnitQuaternion>& gains) {
    std::vector<GainGraph::OrientedGain> edges;
    edges.reserve(gains.size());
    for (int t = 0; t < static_cast<int>(gains.size()); ++t)
        edges.push_back({t, t + 1, gains[t]});
    return GainGraph(static_cast<int>(gains.size()) + 1, edges);
}

GainGraph make_gain_cycle(const std::vector<UnitQuaternion>& gains) {
    const int n = static_cast<int>(gains.size());
    if (n < 3) throw std::invalid_argument("make_gain_cycle: need at least 3 edges");
    std::vector<GainGraph::OrientedGain> edges;
    edges.reserve(n);
    for (int t = 0; t + 1 < n; ++t) edges.push_back({t, t + 1, gains[t]});
    edges.push_back({n - 1, 0, gains[n - 1]});
    return GainGraph(n, edges);
}

GainGraph make_normalized_cycle(int n, const UnitQuaternion& h) {
    if (n < 3) throw std::invalid_argument("make_normalized_cycle: n >= 3 required");
    std::vector<UnitQuaternion> gains(n, UnitQuaternion::one());
    gains[n - 1] = h;
    return make_gain_cycle(gains);
}

GainGraph make_pendant_cycle(int n, const std::vector<UnitQuaternion>& gains) {
    if (n < 3) throw std::invalid_argument("make_pendant_cycle: n >= 3 required");
    if (static_cast<int>(gains.size()) != n + 1)
        throw std::invalid_argument("make_pendant_cycle: need n+1 gains");
    std::vector<GainGraph::OrientedGain> edges;
    edges.reserve(n + 1);
    for (int t = 0; t + 1 < n; ++t) edges.push_back({t, t + 1, gains[t]});
    edges.push_back({n - 1, 0, gains[n - 1]});
    edges.push_back({0, n, gains[n]});
    return GainGraph(n + 1, edges);
}

bool verify_cycle_recursion(int n, const UnitQuaternion& h) {
    if (n < 5) throw std::invalid_argument("verify_cycle_recursion: n >= 5 required");
    int lhs = rank_exact(make_normalized_cycle(n, h).adjacency_matrix()).rank;
    int rhs = rank_exact(make_normalized_cycle(n - 2, -h).adjacency_matrix()).rank;
    return lhs == 2 + rhs;
}

bool verify_pendant_cycle(int n, const std::vector<UnitQuaternion>& gains) {
    GainGraph g = make_pendant_cycle(n, gains);
    int rank = rank_exact(g.adjacency_matrix()).rank;
    return rank == 2 + predicted_path_rank(n - 1) && rank >= n;
}

GainGraph generate_extremal_cycle(int g) {
    if (g < 4 || g % 2 != 0)
        throw std::invalid_argument("generate_extremal_cycle: girth must be even and >= 4");
    Rational sign((g / 2) % 2 == 0 ? 1 : -1);
    return make_normalized_cycle(g, UnitQuaternion::unchecked(Quaternion(sign)));
}

GainGraph generate_extremal_complete_bipartite(int p, int q,
                                               const std::vector<UnitQuaternion>& row_units,
                                               const std::vector<UnitQuaternion>& col_units) {
    if (p < 2 || q < 2)
        throw std::invalid_argument(
            "generate_extremal_complete_bipartite: both parts need order >= 2");
    if (static_cast<int>(row_units.size()) != p || static_cast<int>(col_units.size()) != q)
        throw std::invalid_argument(
            "generate_extremal_complete_bipartite: unit list sizes must match p and q");
    std::vector<GainGraph::OrientedGain> edges;
    edges.reserve(static_cast<std::size_t>(p) * q);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b)
            edges.push_back({a, p + b, row_units[a] * col_units[b]});
    return GainGraph(p + q, edges);
}

namespace {

UnitQuaternion closed_cycle_gain(const GainGraph& g, const std::vector<int>& cycle) {
    Walk w;
    w.vertices = cycle;
    w.vertices.push_back(cycle.front());
    return walk_gain(g, w);
}

// Vertex order of the unique cycle when every degree is 2 and the graph is
// connected; starts at 0 towards its smaller neighbor.
std::vector<int> hamiltonian_cycle_order(const Graph& topo) {
    std::vector<int> cyc;
    cyc.reserve(topo.vertex_count());
    int prev = -1, cur = 0;
    do {
        cyc.push_back(cur);
        const auto& nbs = topo.neighbors(cur);
        int nxt = nbs[0].first == prev ? nbs[1].first : nbs[0].first;
        prev = cur;
        cur = nxt;
    } while (cur != 0);
    return cyc;
}

bool all_four_cycles_gain_one(const GainGraph& g) {
    for (const auto& cyc : all_cycles_up_to(g.underlying(), 4))
        if (cyc.size() == 4 &&
            closed_cycle_gain(g, cyc) != UnitQuaternion::one())
            return false;
    return true;
}

EqualityCase classify_equality(const GainGraph& g, int girth_value) {
    bool cycle_case = false;
    bool bipartite_case = false;
    if (girth_value % 2 == 0) {
        const Graph& topo = g.underlying();
        bool all_deg2 = true;
        for (int v = 0; v < topo.vertex_count(); ++v)
            if (topo.degree(v) != 2) {
                all_deg2 = false;
                break;
            }
        if (all_deg2) {
            UnitQuaternion phi = closed_cycle_gain(g, hamiltonian_cycle_order(topo));
            Quaternion target(Rational((girth_value / 2) % 2 == 0 ? 1 : -1));
            cycle_case = phi.value() == target;
        }
        CompleteBipartiteReport cb = is_complete_bipartite(topo);
        if (cb.is_complete_bipartite && cb.parts[0].size() >= 2 &&
            cb.parts[1].size() >= 2)
            bipartite_case = all_four_cycles_gain_one(g);
    }
    if (cycle_case && bipartite_case) return EqualityCase::Both;
    if (cycle_case) return EqualityCase::ExtremalCycle;
    if (bipartite_case) return EqualityCase::CompleteBipartiteAllFourCyclesOne;
    return EqualityCase::None;
}

}  // namespace

bool verify_bipartite_rank2_characterization(const GainGraph& g) {
    const Graph& topo = g.underlying();
    if (!is_connected(topo))
        throw std::invalid_argument(
            "verify_bipartite_rank2_characterization: graph must be connected");
    BipartitionReport bp = bipartition(topo);
    if (!bp.is_bipartite)
        throw std::invalid_argument(
            "verify_bipartite_rank2_characterization: graph must be bipartite");

    bool rank_is_2 = rank_exact(g.adjacency_matrix()).rank == 2;
    CompleteBipartiteReport cb = is_complete_bipartite(topo);
    bool rhs = cb.is_complete_bipartite && all_four_cycles_gain_one(g);

    // The proof's row-multiple algebra: on K_{p,q} the 4-cycle through
    // x1 y1 x2 y2 has gain c1 c2* and equals 1 exactly when c1 = c2.
    if (cb.is_complete_bipartite && cb.parts[0].size() >= 2 && cb.parts[1].size() >= 2) {
        const auto& xs = cb.parts[0];
        const auto& ys = cb.parts[1];
        for (std::size_t i1 = 0; i1 < xs.size(); ++i1)
            for (std::size_t i2 = i1 + 1; i2 < xs.size(); ++i2)
                for (std::size_t j1 = 0; j1 < ys.size(); ++j1)
                    for (std::size_t j2 = j1 + 1; j2 < ys.size(); ++j2) {
                        UnitQuaternion c1 =
                            g.gain_of(xs[i1], ys[j1]) * g.gain_of(xs[i2], ys[j1]).conjugate();
                        UnitQuaternion c2 =
                            g.gain_of(xs[i1], ys[j2]) * g.gain_of(xs[i2], ys[j2]).conjugate();
                        UnitQuaternion cyc = closed_cycle_gain(
                            g, {xs[i1], ys[j1], xs[i2], ys[j2]});
                        if (cyc != c1 * c2.conjugate()) return false;
                        if ((cyc == UnitQuaternion::one()) != (c1 == c2)) return false;
                    }
    }
    return rank_is_2 == rhs;
}

std::string to_string(EqualityCase c) {
    switch (c) {
        case EqualityCase::None: return "none";
        case EqualityCase::ExtremalCycle: return "cycle";
        case EqualityCase::CompleteBipartiteAllFourCyclesOne: return "complete_bipartite";
        case EqualityCase::Both: return "both";
    }
    return "none";
}

std::string TheoremReport::to_kv() const {
    std::ostringstream os;
    os << "g=" << girth << " r=" << rank << " bound_holds=" << (bound_holds ? 1 : 0)
       << " equality=" << (equality ? 1 : 0) << " case=" << to_string(equality_case);
    return os.str();
}

TheoremReport check_theorem(const GainGraph& g) {
    if (!is_connected(g.underlying()))
        throw std::invalid_argument("check_theorem: graph must be connected");
    GirthReport gr = girth(g.underlying());
    if (gr.is_acyclic())
        throw std::domain_error("check_theorem: girth undefined, underlying graph is a tree");

    TheoremReport report;
    report.girth = *gr.girth;
    report.rank = rank_exact(g.adjacency_matrix()).rank;
    report.bound_holds = report.girth <= report.rank + 2;
    report.equality = report.girth == report.rank + 2;
    if (report.equality) report.equality_case = classify_equality(g, report.girth);
    return report;
}

std::string encode_instance(const GainGraph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count();
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e = g.underlying().edges()[idx];
        const Quaternion& q = g.canonical_gain(idx).value();
        os << ";e=" << e.u << "-" << e.v << ":" << q.a0().str() << "," << q.a1().str()
           << "," << q.a2().str() << "," << q.a3().str();
    }
    return os.str();
}

GainGraph decode_instance(const std::string& text) {
    std::vector<std::string> tokens;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) tokens.push_back(tok);
    if (tokens.empty() || tokens[0].rfind("n=", 0) != 0)
        throw std::invalid_argument("decode_instance: missing vertex count");
    int n = std::stoi(tokens[0].substr(2));

    std::vector<GainGraph::OrientedGain> edges;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& s = tokens[t];
        if (s.rfind("e=", 0) != 0)
            throw std::invalid_argument("decode_instance: malformed edge token");
        auto dash = s.find('-', 2);
        auto colon = s.find(':', dash);
        if (dash == std::string::npos || colon == std::string::npos)
            throw std::invalid_argument("decode_instance: malformed edge token");
        int u = std::stoi(s.substr(2, dash - 2));
        int v = std::stoi(s.substr(dash + 1, colon - dash - 1));
        std::array<Rational, 4> coef;
        std::size_t pos = colon + 1;
        for (int k = 0; k < 4; ++k) {
            auto comma = k == 3 ? s.size() : s.find(',', pos);
            if (comma == std::string::npos)
                throw std::invalid_argument("decode_instance: malformed gain");
            auto r = Rational::parse(s.substr(pos, comma - pos));
            if (!r) throw std::invalid_argument("decode_instance: malformed coefficient");
            coef[k] = *r;
            pos = comma + 1;
        }
        edges.push_back({u, v, UnitQuaternion(Quaternion(coef[0], coef[1], coef[2], coef[3]))});
    }
    return GainGraph(n, edges);
}

std::vector<std::string> EnumerationSummary::to_kv_lines(std::size_t equality_limit) const {
    std::vector<std::string> lines;
    std::ostringstream head;
    head << "summary graphs=" << graphs_seen << " instances=" << instances_checked
         << " violations=" << violations.size() << " equality=" << equality_instances.size();
    lines.push_back(head.str());
    for (const auto& rec : violations)
        lines.push_back("violation " + rec.instance + " " + rec.report.to_kv());
    std::size_t count = 0;
    for (const auto& rec : equality_instances) {
        if (equality_limit != 0 && count++ >= equality_limit) break;
        lines.push_back("equality " + rec.instance + " " + rec.report.to_kv());
    }
    return lines;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr int kMaxEnumN = 7;

struct EdgeListKn {
    int m = 0;
    std::array<std::array<int, 2>, 21> e{};
};

EdgeListKn complete_graph_edges(int n) {
    EdgeListKn out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.e[out.m++] = {u, v};
    return out;
}

bool connected_bits(int n, const std::array<std::uint8_t, 8>& adj) {
    std::uint8_t reach = 1, prev = 0;
    while (reach != prev) {
        prev = reach;
        for (int v = 0; v < n; ++v)
            if (reach & (1u << v)) reach |= adj[v];
    }
    return reach == static_cast<std::uint8_t>((1u << n) - 1);
}

// Exact girth for tiny graphs on bitmask adjacency; INT_MAX when acyclic.
int girth_bits(int n, const std::array<std::uint8_t, 8>& adj) {
    int best = INT_MAX;
    std::array<int, 8> dist{}, parent{}, queue{};
    for (int root = 0; root < n; ++root) {
        dist.fill(-1);
        int qh = 0, qt = 0;
        queue[qt++] = root;
        dist[root] = 0;
        parent[root] = -1;
        while (qh < qt) {
            int u = queue[qh++];
            std::uint8_t nb = adj[u];
            while (nb) {
                int v = __builtin_ctz(nb);
                nb &= static_cast<std::uint8_t>(nb - 1);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue[qt++] = v;
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

// Q8 codes, indexed as q8_units(): 1, -1, i, -i, j, -j, k, -k.
constexpr std::array<detail::IQuat, 8> kQ8Int = {{{1, 0, 0, 0},
                                                  {-1, 0, 0, 0},
                                                  {0, 1, 0, 0},
                                                  {0, -1, 0, 0},
                                                  {0, 0, 1, 0},
                                                  {0, 0, -1, 0},
                                                  {0, 0, 0, 1},
                                                  {0, 0, 0, -1}}};
constexpr std::array<int, 8> kQ8Conj = {0, 1, 3, 2, 5, 4, 7, 6};

struct GraphContext {
    int n = 0;
    int m = 0;
    std::array<std::array<int, 2>, 21> edge{};  // present edges, canonical order
    int girth_value = 0;
};

void fill_matrix(const GraphContext& ctx, const int* codes, detail::IQuatMat& mat) {
    mat.rows = ctx.n;
    mat.cols = ctx.n;
    std::memset(mat.e.data(), 0,
                sizeof(detail::IQuat) * static_cast<std::size_t>(ctx.n) * ctx.n);
    for (int t = 0; t < ctx.m; ++t) {
        int u = ctx.edge[t][0];
        int v = ctx.edge[t][1];
        mat.at(u, v) = kQ8Int[codes[t]];
        mat.at(v, u) = kQ8Int[kQ8Conj[codes[t]]];
    }
}

GainGraph build_gain_graph(const GraphContext& ctx, const int* codes) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<UnitQuaternion> gains;
    pairs.reserve(ctx.m);
    gains.reserve(ctx.m);
    for (int t = 0; t < ctx.m; ++t) {
        pairs.emplace_back(ctx.edge[t][0], ctx.edge[t][1]);
        gains.push_back(q8_units()[codes[t]]);
    }
    return GainGraph(Graph(ctx.n, std::move(pairs)), std::move(gains));
}

struct Workspace {
    detail::IQuatMat mat;
    std::array<int, 21> codes{};
    EnumerationSummary summary;
};

// Vertex-pair bitset identifying the graph; with n it keys the per-graph
// sample generator, so samples never depend on iteration order.
std::uint64_t graph_key(const GraphContext& ctx) {
    std::uint64_t key = 0;
    for (int t = 0; t < ctx.m; ++t)
        key |= std::uint64_t(1) << (ctx.edge[t][0] * 8 + ctx.edge[t][1]);
    return key;
}

void record_candidate(const GainGraph& gg, int fast_girth, int fast_rank,
                      EnumerationSummary& sum) {
    TheoremReport rep = check_theorem(gg);
    if (fast_rank >= 0 && (rep.girth != fast_girth || rep.rank != fast_rank))
        throw std::logic_error("enumerate_and_check: rank engines disagree on " +
                               encode_instance(gg));
    bool violation =
        !rep.bound_holds || (rep.equality && rep.equality_case == EqualityCase::None);
    if (violation)
        sum.violations.push_back({encode_instance(gg), rep});
    else if (rep.equality)
        sum.equality_instances.push_back({encode_instance(gg), rep});
}

// One Q8 instance through the thresholded integer engine: stopping at
// girth-1 pivots proves rank >= g-1, i.e. the bound holds strictly and the
// instance needs no record. Anything else is rare and goes through the full
// public check.
void run_q8_instance(const GraphContext& ctx, Workspace& ws) {
    ++ws.summary.instances_checked;
    fill_matrix(ctx, ws.codes.data(), ws.mat);
    detail::IntElimResult res =
        detail::eliminate_int64(ws.mat, ctx.girth_value - 1, false);
    if (res.ok && res.stopped_early) return;
    GainGraph gg = build_gain_graph(ctx, ws.codes.data());
    record_candidate(gg, ctx.girth_value, res.ok ? res.pivot_count : -1, ws.summary);
}

void process_graph(const GraphContext& ctx, const EnumerationOptions& opt,
                   Workspace& ws) {
    ++ws.summary.graphs_seen;

    GainMode mode = opt.mode;
    if (mode == GainMode::Q8Exhaustive) {
        unsigned __int128 total = static_cast<unsigned __int128>(1) << (3 * ctx.m);
        if (total > opt.exhaustive_budget) {
            if (!opt.allow_downgrade || opt.samples <= 0)
                throw BudgetError("enumerate_and_check: 8^" + std::to_string(ctx.m) +
                                  " gain assignments exceed the exhaustive budget");
            mode = GainMode::Q8Sampled;
        }
    }

    switch (mode) {
        case GainMode::Q8Exhaustive: {
            const std::uint64_t limit = std::uint64_t(1) << (3 * ctx.m);
            for (std::uint64_t a = 0; a < limit; ++a) {
                for (int t = 0; t < ctx.m; ++t)
                    ws.codes[t] = static_cast<int>((a >> (3 * t)) & 7);
                run_q8_instance(ctx, ws);
            }
            break;
        }
        case GainMode::Q8Sampled: {
            Rng rng(Rng::mix(opt.seed, static_cast<std::uint64_t>(ctx.n), graph_key(ctx)));
            for (int s = 0; s < opt.samples; ++s) {
                for (int t = 0; t < ctx.m; ++t)
                    ws.codes[t] = static_cast<int>(rng.below(8));
                run_q8_instance(ctx, ws);
            }
            break;
        }
        case GainMode::RationalUnitSampled: {
            Rng rng(Rng::mix(opt.seed, static_cast<std::uint64_t>(ctx.n), graph_key(ctx)));
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(ctx.m);
            for (int t = 0; t < ctx.m; ++t)
                pairs.emplace_back(ctx.edge[t][0], ctx.edge[t][1]);
            Graph topo(ctx.n, std::move(pairs));
            for (int s = 0; s < opt.samples; ++s) {
                std::vector<UnitQuaternion> gains;
                gains.reserve(ctx.m);
                for (int t = 0; t < ctx.m; ++t) gains.push_back(rng.rational_unit());
                GainGraph gg(topo, std::move(gains));
                ++ws.summary.instances_checked;
                record_candidate(gg, -1, -1, ws.summary);
            }
            break;
        }
    }
}

void merge_into(EnumerationSummary& total, EnumerationSummary&& part) {
    total.graphs_seen += part.graphs_seen;
    total.instances_checked += part.instances_checked;
    std::move(part.violations.begin(), part.violations.end(),
              std::back_inserter(total.violations));
    std::move(part.equality_instances.begin(), part.equality_instances.end(),
              std::back_inserter(total.equality_instances));
}

}  // namespace

EnumerationSummary enumerate_and_check(const EnumerationOptions& options) {
    if (options.min_n < 1 || options.max_n < options.min_n)
        throw std::invalid_argument("enumerate_and_check: bad vertex range");
    if (options.max_n > kMaxEnumN)
        throw std::invalid_argument(
            "enumerate_and_check: max_n <= 7 required for full graph enumeration");
    if (options.samples < 0)
        throw std::invalid_argument("enumerate_and_check: samples must be >= 0");

    int threads = options.threads > 0
                      ? options.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    EnumerationSummary total;
    for (int n = options.min_n; n <= options.max_n; ++n) {
        const EdgeListKn kn = complete_graph_edges(n);
        const std::uint64_t mask_count = std::uint64_t(1) << kn.m;

        auto handle_mask = [&](std::uint64_t mask, Workspace& ws) {
            if (static_cast<int>(__builtin_popcountll(mask)) < n) return;
            GraphContext ctx;
            ctx.n = n;
            std::array<std::uint8_t, 8> adj{};
            for (int t = 0; t < kn.m; ++t) {
                if (!(mask >> t & 1)) continue;
                auto [u, v] = kn.e[t];
                ctx.edge[ctx.m][0] = u;
                ctx.edge[ctx.m][1] = v;
                ++ctx.m;
                adj[u] |= static_cast<std::uint8_t>(1u << v);
                adj[v] |= static_cast<std::uint8_t>(1u << u);
            }
            if (!connected_bits(n, adj)) return;
            ctx.girth_value = girth_bits(n, adj);
            process_graph(ctx, options, ws);
        };

        if (threads == 1) {
            Workspace ws;
            for (std::uint64_t mask = 0; mask < mask_count; ++mask) handle_mask(mask, ws);
            merge_into(total, std::move(ws.summary));
        } else {
            std::atomic<std::uint64_t> next{0};
            std::mutex merge_mutex;
            std::exception_ptr first_error;
            constexpr std::uint64_t kChunk = 512;
            auto worker = [&]() {
                Workspace ws;
                try {
                    for (;;) {
                        std::uint64_t begin = next.fetch_add(kChunk);
                        if (begin >= mask_count) break;
                        std::uint64_t end = std::min(begin + kChunk, mask_count);
                        for (std::uint64_t mask = begin; mask < end; ++mask)
                            handle_mask(mask, ws);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
                std::lock_guard<std::mutex> lock(merge_mutex);
                merge_into(total, std::move(ws.summary));
            };
            std::vector<std::thread> pool;
            pool.reserve(threads);
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (first_error) std::rethrow_exception(first_error);
        }
    }

    auto by_instance = [](const EnumerationRecord& a, const EnumerationRecord& b) {
        return a.instance < b.instance;
    };
    std::sort(total.violations.begin(), total.violations.end(), by_instance);
    std::sort(total.equality_instances.begin(), total.equality_instances.end(), by_instance);
    return total;
}

}  // namespace qgg
