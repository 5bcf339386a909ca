#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twodom/canonical.hpp"
#include "twodom/construct.hpp"
#include "twodom/enumerate.hpp"
#include "twodom/errors.hpp"
#include "twodom/graph6.hpp"
#include "twodom/recognize.hpp"
#include "twodom/solvers.hpp"
#include "twodom/tree.hpp"

namespace {

using namespace twodom;

struct Options {
    std::string input;
    std::vector<std::string> inline_graphs;
    bool edge_list = false;
    int max_n = 10;
    std::uint64_t seed = 1;
    int steps = 5;
    bool paranoid = false;
    std::string o4_t14 = "on";
    std::string format = "tsv";
    int jobs = 0;
    std::string cert_path;
};

std::vector<Tree> load_inputs(const Options& opt) {
    std::vector<Tree> trees;
    for (const auto& g6 : opt.inline_graphs) trees.push_back(graph6_decode(g6));
    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw std::runtime_error("cannot open " + opt.input);
        if (opt.edge_list) {
            trees.push_back(read_edge_list(in));
        } else {
            std::string line;
            while (std::getline(in, line)) {
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (!line.empty()) trees.push_back(graph6_decode(line));
            }
        }
    }
    if (trees.empty()) throw std::runtime_error("no input trees (pass graph6 or --input)");
    return trees;
}

RecognizeOptions recognize_options(const Options& opt, bool raise) {
    RecognizeOptions r;
    r.o4_includes_t14 = opt.o4_t14 != "off";
    r.paranoid = opt.paranoid;
    r.raise_on_mismatch = raise;
    return r;
}

int resolve_jobs(const Options& opt) {
    if (opt.jobs > 0) return opt.jobs;
    if (const char* env = std::getenv("TWODOM_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

int cmd_compute(const Options& opt) {
    for (const auto& t : load_inputs(opt)) {
        int g = solve_gamma2(t)->value;
        int a = solve_alpha2(t)->value;
        std::string g6 = graph6_encode(t);
        if (opt.format == "json") {
            nlohmann::json j{{"graph6", g6}, {"gamma2", g}, {"alpha2", a}, {"equal", g == a}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << g6 << "\t" << g << "\t" << a << "\t" << (g == a ? "true" : "false")
                      << "\n";
        }
    }
    return 0;
}

int cmd_recognize(const Options& opt) {
    int status = 0;
    std::ofstream cert_out;
    if (!opt.cert_path.empty()) {
        cert_out.open(opt.cert_path);
        if (!cert_out) throw std::runtime_error("cannot open " + opt.cert_path);
    }
    for (const auto& t : load_inputs(opt)) {
        Verdict v = recognize(t, recognize_options(opt, false));
        if (v.accepted != (v.gamma2 == v.alpha2)) status = 2;
        std::string g6 = graph6_encode(t);
        if (opt.format == "json") {
            nlohmann::json j{{"graph6", g6},
                             {"gamma2", v.gamma2},
                             {"alpha2", v.alpha2},
                             {"accepted", v.accepted}};
            j["certificate"] =
                v.certificate ? certificate_to_json(*v.certificate) : nlohmann::json(nullptr);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << g6 << "\t" << v.gamma2 << "\t" << v.alpha2 << "\t"
                      << (v.accepted ? "true" : "false") << "\n";
        }
        if (cert_out.is_open() && v.certificate)
            cert_out << certificate_to_json(*v.certificate).dump() << "\n";
    }
    return status;
}

int cmd_verify_cert(const Options& opt) {
    std::ifstream in(opt.cert_path);
    if (!in) throw std::runtime_error("cannot open " + opt.cert_path);
    nlohmann::json j;
    in >> j;
    Certificate cert = certificate_from_json(j);
    auto trees = load_inputs(opt);
    VerifyResult r = verify_certificate(cert, trees.front());
    if (opt.format == "json") {
        std::cout << nlohmann::json{{"ok", r.ok}, {"reason", r.reason}}.dump() << "\n";
    } else {
        std::cout << (r.ok ? "true" : "false");
        if (!r.ok) std::cout << "\t" << r.reason;
        std::cout << "\n";
    }
    return 0;
}

int cmd_generate(const Options& opt) {
    auto [tree, cert] = random_member(opt.seed, opt.steps);
    std::string g6 = graph6_encode(tree);
    if (opt.format == "json") {
        nlohmann::json j{{"graph6", g6}, {"certificate", certificate_to_json(cert)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << g6 << "\t" << cert.steps.size() << "\n";
    }
    if (!opt.cert_path.empty()) {
        std::ofstream out(opt.cert_path);
        if (!out) throw std::runtime_error("cannot open " + opt.cert_path);
        out << certificate_to_json(cert).dump(2) << "\n";
    }
    return 0;
}

int cmd_sweep(const Options& opt) {
    if (opt.max_n < 1 || opt.max_n > 18) throw std::runtime_error("sweep requires 1 <= max-n <= 18");
    int jobs = resolve_jobs(opt);
    RecognizeOptions ropts = recognize_options(opt, false);
    bool all_ok = true;
    for (int n = 1; n <= opt.max_n; ++n) {
        auto trees = free_trees(n);
        std::atomic<long long> members{0};
        std::atomic<long long> mismatches{0};
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                Verdict v = recognize(trees[i], ropts);
                if (v.accepted) ++members;
                if (v.accepted != (v.gamma2 == v.alpha2)) ++mismatches;
            }
        };
        if (jobs <= 1 || trees.size() < 64) {
            work(0, trees.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (trees.size() + jobs - 1) / jobs;
            for (int j = 0; j < jobs; ++j) {
                std::size_t begin = j * chunk;
                std::size_t end = std::min(trees.size(), begin + chunk);
                if (begin < end) pool.emplace_back(work, begin, end);
            }
            for (auto& th : pool) th.join();
        }
        bool ok = mismatches.load() == 0;
        all_ok = all_ok && ok;
        if (opt.format == "json") {
            nlohmann::json j{{"n", n},
                             {"trees", trees.size()},
                             {"members", members.load()},
                             {"equivalence", ok}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << n << "\t" << trees.size() << "\t" << members.load() << "\t"
                      << (ok ? "true" : "false") << "\n";
        }
    }
    return all_ok ? 0 : 2;
}

int cmd_patterns_selfcheck(const Options& opt) {
    int status = 0;
    std::vector<std::string> discrepant;
    try {
        discrepant = diamond_discrepancies();
    } catch (const SelfCheckFailed& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    for (const auto& p : registry()) {
        int g = brute_gamma2(p.shape);
        int a = brute_alpha2(p.shape);
        bool diamond_gap = p.diamonds.size() != a;
        if (opt.format == "json") {
            nlohmann::json j{{"id", p.id},          {"order", p.shape.order()},
                             {"gamma2", g},         {"squares", p.squares.size()},
                             {"alpha2", a},         {"diamonds", p.diamonds.size()},
                             {"diamond_gap", diamond_gap}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << p.id << "\t" << p.shape.order() << "\t" << g << "\t"
                      << p.squares.size() << "\t" << a << "\t" << p.diamonds.size() << "\t"
                      << (diamond_gap ? "yes" : "no") << "\n";
        }
    }
    std::cout << "diamond discrepancies:";
    for (const auto& id : discrepant) std::cout << " " << id;
    std::cout << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2-domination / 2-independence toolkit for trees"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--o4-t14", opt.o4_t14, "Include T14 among O4 base patterns")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--paranoid", opt.paranoid, "Backtrack over all reductions");
    app.add_option("--jobs", opt.jobs, "Worker threads (or env TWODOM_JOBS)");

    auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("graph6", opt.inline_graphs, "Inline graph6 strings");
        cmd->add_option("--input", opt.input, "File with one graph6 per line");
        cmd->add_flag("--edge-list", opt.edge_list,
                      "Treat --input as edge-list text (first line n, then u v lines)");
    };

    auto* compute = app.add_subcommand("compute", "gamma2 and alpha2 per tree");
    add_inputs(compute);

    auto* recog = app.add_subcommand("recognize", "Family membership with certificates");
    add_inputs(recog);
    recog->add_option("--cert-out", opt.cert_path, "Write certificates (one JSON per line)");

    auto* verify = app.add_subcommand("verify-cert", "Replay a certificate against a tree");
    add_inputs(verify);
    verify->add_option("--cert", opt.cert_path, "Certificate JSON file")->required();

    auto* generate = app.add_subcommand("generate", "Random member with certificate");
    generate->add_option("--seed", opt.seed, "Deterministic seed");
    generate->add_option("--steps", opt.steps, "Number of operations");
    generate->add_option("--cert-out", opt.cert_path, "Write the certificate JSON");

    auto* sweep = app.add_subcommand("sweep", "Theorem check over all trees up to max-n");
    sweep->add_option("--max-n", opt.max_n, "Largest order (<= 18)");

    auto* selfcheck = app.add_subcommand("patterns-selfcheck", "Pattern invariant table");
    (void)selfcheck;

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(opt);
        if (recog->parsed()) return cmd_recognize(opt);
        if (verify->parsed()) return cmd_verify_cert(opt);
        if (generate->parsed()) return cmd_generate(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (selfcheck->parsed()) return cmd_patterns_selfcheck(opt);
    } catch (const SelfCheckFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
