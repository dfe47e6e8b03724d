#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgg/graph_metrics.hpp"
#include "qgg/qgg_format.hpp"
#include "qgg/rng.hpp"
#include "qgg/theorem.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantViolation = 2;

qgg::ParsedQgg load_qgg(const std::string& path, bool lenient) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return qgg::parse_qgg(in, lenient);
}

void require_exact(const qgg::ParsedQgg& parsed, const std::string& what) {
    if (!parsed.exact)
        throw std::runtime_error(what +
                                 " needs exact gains; decimal coefficients only feed "
                                 "the adjoint rank path");
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// The theorem layer reports as "key=value" tokens; convert one such line to
// a JSON object. Keys g and r become integers, bound_holds and equality
// booleans, everything else strings.
json kv_to_json(const std::string& kv) {
    json out = json::object();
    std::istringstream ss(kv);
    std::string tok;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string key = tok.substr(0, eq);
        std::string value = tok.substr(eq + 1);
        if (key == "g" || key == "r")
            out[key] = std::stoi(value);
        else if (key == "bound_holds" || key == "equality")
            out[key] = value == "1";
        else
            out[key] = value;
    }
    return out;
}

json report_to_json(const qgg::TheoremReport& report) {
    json j = kv_to_json(report.to_kv());
    if (!report.equality) j.erase("case");
    return j;
}

int cmd_rank(const std::string& path, const std::string& method, double tol,
             bool lenient) {
    qgg::ParsedQgg parsed = load_qgg(path, lenient);
    qgg::RankResult result;
    if (method == "exact") {
        require_exact(parsed, "--method exact");
        result = qgg::rank_exact(parsed.graph.adjacency_matrix());
    } else {
        result = qgg::rank_adjoint(parsed.graph.adjacency_matrix(), tol);
    }
    emit(json{{"method", method}, {"rank", result.rank}});
    return kExitOk;
}

int cmd_girth(const std::string& path, bool require_cycle, bool lenient) {
    qgg::ParsedQgg parsed = load_qgg(path, lenient);
    qgg::GirthReport report = qgg::girth(parsed.graph.underlying());
    if (report.is_acyclic()) {
        emit(json{{"girth", "acyclic"}});
        return require_cycle ? kExitInputError : kExitOk;
    }
    emit(json{{"girth", *report.girth}, {"witness", report.witness_cycle}});
    return kExitOk;
}

int cmd_check(const std::string& path, bool lenient) {
    qgg::ParsedQgg parsed = load_qgg(path, lenient);
    require_exact(parsed, "check");
    qgg::TheoremReport report = qgg::check_theorem(parsed.graph);
    emit(report_to_json(report));
    bool violation = !report.bound_holds ||
                     (report.equality && report.equality_case == qgg::EqualityCase::None);
    return violation ? kExitInvariantViolation : kExitOk;
}

int cmd_gen_cycle(int g) {
    std::cout << qgg::serialize_qgg(qgg::generate_extremal_cycle(g));
    return kExitOk;
}

int cmd_gen_kpq(int p, int q, std::uint64_t seed) {
    qgg::Rng rng(seed);
    std::vector<qgg::UnitQuaternion> row_units, col_units;
    for (int a = 0; a < p; ++a) row_units.push_back(rng.mixed_unit());
    for (int b = 0; b < q; ++b) col_units.push_back(rng.mixed_unit());
    std::cout << qgg::serialize_qgg(
        qgg::generate_extremal_complete_bipartite(p, q, row_units, col_units));
    return kExitOk;
}

int cmd_enumerate(const qgg::EnumerationOptions& options, std::size_t equality_limit) {
    qgg::EnumerationSummary summary = qgg::enumerate_and_check(options);

    json j = json::object();
    json violation_list = json::array();
    json equality_list = json::array();
    for (const auto& line : summary.to_kv_lines(equality_limit)) {
        std::istringstream ss(line);
        std::string kind;
        ss >> kind;
        if (kind == "summary") {
            std::string tok;
            while (ss >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                j[tok.substr(0, eq)] = std::stoull(tok.substr(eq + 1));
            }
        } else {
            std::string instance;
            ss >> instance;
            std::string kv;
            std::getline(ss, kv);
            json rec = {{"instance", instance}, {"report", kv_to_json(kv)}};
            (kind == "violation" ? violation_list : equality_list).push_back(rec);
        }
    }
    j["violation_instances"] = violation_list;
    j["equality_sample"] = equality_list;
    emit(j);
    return summary.violations.empty() ? kExitOk : kExitInvariantViolation;
}

int cmd_switch(const std::string& path, bool normalize_tree, const std::string& theta_path,
               const std::string& theta_out, bool lenient) {
    qgg::ParsedQgg parsed = load_qgg(path, lenient);
    require_exact(parsed, "switch");

    if (normalize_tree) {
        auto [switched, theta] = qgg::normalize_to_spanning_tree(parsed.graph);
        std::cout << qgg::serialize_qgg(switched);
        if (!theta_out.empty()) {
            std::ofstream out(theta_out);
            if (!out) throw std::runtime_error("cannot write '" + theta_out + "'");
            out << qgg::serialize_theta(theta);
        }
        return kExitOk;
    }

    std::ifstream tin(theta_path);
    if (!tin) throw std::runtime_error("cannot open '" + theta_path + "'");
    qgg::SwitchingFunction theta = qgg::parse_theta(tin, parsed.graph.vertex_count());
    std::cout << qgg::serialize_qgg(parsed.graph.switched(theta));
    if (!theta_out.empty()) {
        std::ofstream out(theta_out);
        if (!out) throw std::runtime_error("cannot write '" + theta_out + "'");
        out << qgg::serialize_theta(theta);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion unit gain graphs: exact rank, girth, switching, and the "
                 "girth-rank bound"};
    app.require_subcommand(1);

    std::string file, theta_file, theta_out, method = "exact", gains = "q8";
    double tol = 1e-9;
    bool lenient = false, require_cycle = false, normalize_tree = false;
    int gen_g = 0, gen_p = 0, gen_q = 0;
    std::uint64_t seed = 0;
    qgg::EnumerationOptions enum_options;
    std::size_t equality_limit = 32;

    auto* rank = app.add_subcommand("rank", "exact or adjoint-oracle matrix rank");
    rank->add_option("file", file)->required();
    rank->add_option("--method", method)->check(CLI::IsMember({"exact", "adjoint"}));
    rank->add_option("--tol", tol, "adjoint pivot threshold, relative");
    rank->add_flag("--lenient", lenient, "accept decimal coefficients");

    auto* girth_cmd = app.add_subcommand("girth", "girth with a shortest-cycle witness");
    girth_cmd->add_option("file", file)->required();
    girth_cmd->add_flag("--require-cycle", require_cycle,
                        "exit nonzero when the graph is acyclic");
    girth_cmd->add_flag("--lenient", lenient);

    auto* check = app.add_subcommand("check", "girth-rank bound report for one instance");
    check->add_option("file", file)->required();
    check->add_flag("--lenient", lenient);

    auto* gen = app.add_subcommand("gen", "generate extremal instances");
    gen->require_subcommand(1);
    auto* gen_cycle = gen->add_subcommand("cycle", "extremal even cycle");
    gen_cycle->add_option("girth", gen_g)->required();
    auto* gen_kpq = gen->add_subcommand("kpq", "complete bipartite, all 4-cycles gain 1");
    gen_kpq->add_option("p", gen_p)->required();
    gen_kpq->add_option("q", gen_q)->required();
    gen_kpq->add_option("--seed", seed);

    auto* enumerate = app.add_subcommand("enumerate",
                                         "check the bound over all small gain graphs");
    enumerate->add_option("--max-n", enum_options.max_n)->required();
    enumerate->add_option("--gains", gains)
        ->check(CLI::IsMember({"q8", "q8-sampled", "unit-sampled"}));
    enumerate->add_option("--samples", enum_options.samples);
    enumerate->add_option("--seed", enum_options.seed);
    enumerate->add_option("--budget", enum_options.exhaustive_budget);
    enumerate->add_option("--threads", enum_options.threads);
    enumerate->add_option("--equality-limit", equality_limit,
                          "equality instances included in the report; 0 = all");

    auto* switch_cmd = app.add_subcommand("switch", "apply or derive a switching function");
    switch_cmd->add_option("file", file)->required();
    auto* nt = switch_cmd->add_flag("--normalize-tree", normalize_tree,
                                    "switch a BFS spanning tree to all-ones gains");
    switch_cmd->add_option("--theta", theta_file, "switching function file")->excludes(nt);
    switch_cmd->add_option("--theta-out", theta_out,
                           "write the applied switching function here");
    switch_cmd->add_flag("--lenient", lenient);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (rank->parsed()) return cmd_rank(file, method, tol, lenient);
        if (girth_cmd->parsed()) return cmd_girth(file, require_cycle, lenient);
        if (check->parsed()) return cmd_check(file, lenient);
        if (gen->parsed()) {
            if (gen_cycle->parsed()) return cmd_gen_cycle(gen_g);
            return cmd_gen_kpq(gen_p, gen_q, seed);
        }
        if (enumerate->parsed()) {
            if (gains == "q8")
                enum_options.mode = qgg::GainMode::Q8Exhaustive;
            else if (gains == "q8-sampled")
                enum_options.mode = qgg::GainMode::Q8Sampled;
            else
                enum_options.mode = qgg::GainMode::RationalUnitSampled;
            return cmd_enumerate(enum_options, equality_limit);
        }
        if (switch_cmd->parsed()) {
            if (!normalize_tree && theta_file.empty())
                throw std::runtime_error("switch needs --normalize-tree or --theta <file>");
            return cmd_switch(file, normalize_tree, theta_file, theta_out, lenient);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
