// fsg — friends-and-strangers graph toolkit CLI.
//
// Exit codes: 0 success/connected, 10 disconnected/unreachable,
// 11 campaign violation, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsg/fsg.hpp"
#include "fsg/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisconnected = 10;
constexpr int kExitViolation = 11;
constexpr int kExitUsage = 2;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument(std::string(what) + ": empty entry in '" + text + "'");
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

// "name:params" family specs: path:5 complete:4 cycle:5 star:4
// lollipop:PATH,CLIQUE dandelion:PATH,STAR spider:L1,L2,...
fsg::Graph graph_from_family_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
    const auto need = [&](std::size_t count) {
        const auto values = parse_int_list(params, "family spec");
        if (values.size() != count)
            throw std::invalid_argument("family '" + name + "' expects " + std::to_string(count) + " parameter(s)");
        return values;
    };
    if (name == "path") return fsg::make_path(need(1)[0]);
    if (name == "complete") return fsg::make_complete(need(1)[0]);
    if (name == "cycle") return fsg::make_cycle(need(1)[0]);
    if (name == "star") return fsg::make_star(need(1)[0]);
    if (name == "lollipop") {
        const auto v = need(2);
        return fsg::make_lollipop(v[0], v[1]);
    }
    if (name == "dandelion") {
        const auto v = need(2);
        return fsg::make_dandelion(v[0], v[1]);
    }
    if (name == "spider") return fsg::make_spider(parse_int_list(params, "family spec"));
    throw std::invalid_argument("unknown family '" + name + "' (expected path, complete, cycle, star, lollipop, dandelion, spider)");
}

// graph6 string or family spec; ':' never occurs in graph6 bytes.
fsg::Graph parse_graph_arg(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.find(':') != std::string::npos) return graph_from_family_spec(text);
    return fsg::parse_graph6(text);
}

int env_cap() {
    if (const char* v = std::getenv("FS_LOLLIPOP_CAP")) {
        const int cap = std::atoi(v);
        if (cap < 1 || cap > fsg::kComponentCapMax)
            throw std::invalid_argument("FS_LOLLIPOP_CAP must be in [1, " + std::to_string(fsg::kComponentCapMax) + "]");
        return cap;
    }
    return fsg::kComponentCapDefault;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << body;
}

struct CommonOpts {
    int cap = fsg::kComponentCapDefault;
    int workers = fsg::default_workers();
    std::string out;
    std::string format = "plain";
    double budget = 0.0;
    bool timing = false;
};

int emit_report(const fsg::Report& report, const CommonOpts& common, double elapsed_s) {
    if (!common.out.empty()) {
        if (common.format == "csv")
            write_text(common.out, report.to_csv());
        else
            write_text(common.out, report.to_json(common.timing).dump(2) + "\n");
    }
    std::cout << report.summary_line() << "\n";
    if (common.timing) std::cout << "elapsed: " << elapsed_s << "s\n";
    if (report.passed()) return kExitOk;
    for (const auto& row : report.counterexamples)
        std::cerr << "reproducer: y=" << row.y6 << " k=" << row.k
                  << (row.note.empty() ? "" : " " + row.note) << "\n";
    return kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"friends-and-strangers graph toolkit: decide FS(Lollipop,Y) connectedness, "
                 "run brute-force oracles, and produce disconnection certificates"};
    app.require_subcommand(1);

    CommonOpts common;
    try {
        common.cap = env_cap();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto add_common = [&common](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--cap", common.cap, "max order for FS component sweeps")->capture_default_str();
        cmd->add_option("--workers", common.workers, "worker threads")->capture_default_str();
        cmd->add_option("--out", common.out, "write report/result to this file");
        if (with_format) cmd->add_option("--format", common.format, "plain|json|csv")->capture_default_str();
        cmd->add_option("--budget", common.budget, "time budget in seconds (campaigns; partial reports are marked)");
        cmd->add_flag("--timing", common.timing, "include timing in output");
    };

    // gen
    auto* gen = app.add_subcommand("gen", "print the graph6 string of a named family");
    std::string gen_spec;
    gen->add_option("family", gen_spec, "family spec, e.g. lollipop:2,3")->required();

    // decide
    auto* decide = app.add_subcommand("decide", "decide FS(Lollipop_{n-k,k}, Y) connectedness via the k-subset rule");
    std::string decide_y;
    int decide_k = 0;
    decide->add_option("Y", decide_y, "graph6 string or family spec")->required();
    decide->add_option("--k", decide_k, "clique part size (2..n)")->required();
    add_common(decide);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force FS component count over all n! bijections");
    std::string oracle_x, oracle_y;
    oracle->add_option("X", oracle_x, "graph6 string or family spec")->required();
    oracle->add_option("Y", oracle_y, "graph6 string or family spec")->required();
    add_common(oracle);

    // certify
    auto* certify = app.add_subcommand("certify", "emit a disconnection certificate (JSON) or 'none'");
    std::string certify_y;
    int certify_k = 0;
    certify->add_option("Y", certify_y, "graph6 string or family spec")->required();
    certify->add_option("--k", certify_k, "clique part size (2..n)")->required();
    add_common(certify);

    // reach
    auto* reach = app.add_subcommand("reach", "shortest swap sequence between two configurations, or 'unreachable'");
    std::string reach_x, reach_y, reach_src, reach_dst;
    reach->add_option("X", reach_x, "graph6 string or family spec")->required();
    reach->add_option("Y", reach_y, "graph6 string or family spec")->required();
    reach->add_option("--src", reach_src, "source bijection, e.g. 0,2,1")->required();
    reach->add_option("--dst", reach_dst, "target bijection")->required();
    add_common(reach);

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive rule-vs-oracle verification at order n");
    int verify_n = 0;
    verify->add_option("n", verify_n, "graph order (2..6)")->required();
    add_common(verify);

    // campaign
    auto* campaign = app.add_subcommand("campaign", "run a named experiment campaign");
    std::string campaign_name;
    int campaign_n = 0, campaign_samples = 0;
    std::uint64_t campaign_seed = 0;
    bool seed_given = false;
    std::vector<std::string> campaign_pairs;
    campaign->add_option("name", campaign_name, "main|corollary|k5bounds|problem1|spider")->required();
    campaign->add_option("--n", campaign_n, "graph order");
    campaign->add_option("--samples", campaign_samples, "sample count (0 = exhaustive where supported)");
    campaign->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { campaign_seed = s; seed_given = true; }, "RNG seed (required for sampled modes)");
    campaign->add_option("--pairs", campaign_pairs, "problem1 (n,k) pairs, e.g. --pairs 4,4 --pairs 5,3");
    add_common(campaign);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        const auto elapsed = [&t0] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        };
        fsg::FsOptions fs_opts{common.cap, common.workers};
        fsg::LabOptions lab_opts{common.cap, common.workers, common.budget};

        if (*gen) {
            std::cout << fsg::write_graph6(graph_from_family_spec(trim(gen_spec))) << "\n";
            return kExitOk;
        }

        if (*decide) {
            const fsg::Graph y = parse_graph_arg(decide_y);
            const bool connected = fsg::decide_lollipop_fs_connected(y, decide_k);
            if (common.format == "json") {
                nlohmann::ordered_json j;
                j["verdict"] = connected ? "connected" : "disconnected";
                if (!connected) j["witness"] = fsg::to_json(*fsg::find_disconnected_k_subset(y, decide_k));
                const std::string body = j.dump(2) + "\n";
                std::cout << body;
                if (!common.out.empty()) write_text(common.out, body);
            } else {
                std::cout << "verdict: " << (connected ? "connected" : "disconnected") << "\n";
                if (!connected)
                    std::cout << "witness: " << fsg::to_json(*fsg::find_disconnected_k_subset(y, decide_k)).dump() << "\n";
            }
            return connected ? kExitOk : kExitDisconnected;
        }

        if (*oracle) {
            const fsg::Graph x = parse_graph_arg(oracle_x);
            const fsg::Graph y = parse_graph_arg(oracle_y);
            const fsg::FsComponents comps = fsg::fs_components(x, y, fs_opts);
            std::cout << "components: " << comps.component_count() << "\n";
            std::cout << "verdict: " << (comps.component_count() == 1 ? "connected" : "disconnected") << "\n";
            if (common.timing) std::cout << "elapsed: " << elapsed() << "s\n";
            return comps.component_count() == 1 ? kExitOk : kExitDisconnected;
        }

        if (*certify) {
            const fsg::Graph y = parse_graph_arg(certify_y);
            const auto witness = fsg::find_disconnected_k_subset(y, certify_k);
            if (!witness.has_value()) {
                std::cout << "none\n";
                return kExitOk;
            }
            const fsg::CertificatePair cert = fsg::build_certificate(y, certify_k, *witness);
            const std::string body = fsg::to_json(cert).dump(2) + "\n";
            std::cout << body;
            if (!common.out.empty()) write_text(common.out, body);
            return kExitDisconnected;
        }

        if (*reach) {
            const fsg::Graph x = parse_graph_arg(reach_x);
            const fsg::Graph y = parse_graph_arg(reach_y);
            const fsg::Bijection src = fsg::Bijection::from_values(parse_int_list(reach_src, "--src"));
            const fsg::Bijection dst = fsg::Bijection::from_values(parse_int_list(reach_dst, "--dst"));
            const auto moves = fsg::fs_reach(x, y, src, dst, fs_opts);
            if (!moves.has_value()) {
                std::cout << "unreachable\n";
                return kExitDisconnected;
            }
            const std::string body = fsg::to_json(*moves).dump(2) + "\n";
            std::cout << body;
            if (!common.out.empty()) write_text(common.out, body);
            return kExitOk;
        }

        if (*verify) {
            const fsg::Report report = fsg::run_main_verification(verify_n, lab_opts);
            return emit_report(report, common, elapsed());
        }

        if (*campaign) {
            const auto need_seed = [&] {
                if (campaign_samples > 0 && !seed_given)
                    throw std::invalid_argument("sampled campaigns require --seed");
            };
            fsg::Report report;
            if (campaign_name == "main") {
                report = fsg::run_main_verification(campaign_n, lab_opts);
            } else if (campaign_name == "corollary") {
                need_seed();
                report = fsg::run_corollary_campaign(campaign_n, campaign_samples, campaign_seed, lab_opts);
            } else if (campaign_name == "k5bounds") {
                need_seed();
                report = fsg::run_k5_bounds_campaign(campaign_n, campaign_samples, campaign_seed, lab_opts);
            } else if (campaign_name == "problem1") {
                std::vector<std::pair<int, int>> pairs;
                for (const auto& p : campaign_pairs) {
                    const auto v = parse_int_list(p, "--pairs");
                    if (v.size() != 2) throw std::invalid_argument("--pairs entries must be n,k");
                    pairs.emplace_back(v[0], v[1]);
                }
                report = fsg::run_problem1_scan(pairs, lab_opts);
            } else if (campaign_name == "spider") {
                need_seed();
                report = fsg::run_spider_subsumption(campaign_n, campaign_samples, campaign_seed, lab_opts);
            } else {
                throw std::invalid_argument("unknown campaign '" + campaign_name +
                                            "' (expected main, corollary, k5bounds, problem1, spider)");
            }
            return emit_report(report, common, elapsed());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
