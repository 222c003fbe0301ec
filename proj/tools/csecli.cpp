#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cse/cse.hpp"

namespace fs = std::filesystem;
using namespace cse;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

io::ProblemFile load_problem(const std::string& path) {
    const std::string text = read_file(path);
    const fs::path p(path);
    const std::string ext = p.extension().string();
    const std::string name = p.filename().string();
    if (ext == ".cnf" || ext == ".dimacs") return io::parse_dimacs(text, name);
    if (ext == ".p" || ext == ".tptp") return io::parse_tptp_cnf(text, name);
    return io::parse_problem(text, name);
}

struct ProveOutcome {
    VerdictKind kind = VerdictKind::unknown;
    Proof proof;
    std::vector<Literal> model;
    std::optional<InterpretationSketch> witness;
    std::string mode;
    std::string reason;
};

ProveOutcome run_single(const io::ProblemFile& pf, const std::string& mode,
                        const StrategyConfig& cfg) {
    ProveOutcome out;
    const bool prop =
        mode == "prop" || (mode == "auto" && pf.clauses.is_propositional());
    out.mode = prop ? "prop" : "fol";
    if (prop) {
        const PropVerdict v = saturate(pf.clauses, cfg);
        out.kind = v.kind;
        out.proof = v.proof;
        out.model = v.model;
        out.reason = v.reason;
    } else {
        const FolVerdict v = saturate_fol(pf.clauses, cfg);
        out.kind = v.kind;
        out.proof = v.proof;
        out.witness = v.witness;
        out.reason = v.reason;
    }
    return out;
}

ProveOutcome run_portfolio(const io::ProblemFile& pf, const std::string& mode,
                           const StrategyConfig& base, unsigned workers) {
    std::atomic<bool> stop{false};
    std::mutex mtx;
    std::optional<ProveOutcome> winner;

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) {
        pool.emplace_back([&, i] {
            StrategyConfig cfg = base;
            cfg.seed = base.seed + i;
            cfg.start_rotation = base.start_rotation || i > 0;
            cfg.cancel = &stop;
            ProveOutcome out;
            try {
                out = run_single(pf, mode, cfg);
            } catch (const std::exception& e) {
                out.kind = VerdictKind::unknown;
                out.reason = e.what();
            }
            if (out.kind == VerdictKind::unknown) return;
            std::lock_guard<std::mutex> lock(mtx);
            if (!winner) {
                winner = std::move(out);
                stop.store(true);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (winner) return *winner;
    ProveOutcome out;
    out.reason = "no worker reached a verdict";
    out.mode = mode;
    return out;
}

const char* szs_word(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::unsat: return "Unsatisfiable";
        case VerdictKind::sat: return "Satisfiable";
        default: return "Unknown";
    }
}

std::chrono::milliseconds effective_time_limit(double seconds_flag) {
    if (seconds_flag > 0)
        return std::chrono::milliseconds(static_cast<long>(seconds_flag * 1000.0));
    if (const char* env = std::getenv("CSE_DEFAULT_TIME_LIMIT"))
        return std::chrono::milliseconds(static_cast<long>(std::atof(env) * 1000.0));
    return std::chrono::milliseconds(0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"contradiction-separation theorem prover"};
    app.require_subcommand(1);

    // prove -----------------------------------------------------------------
    std::string prove_file, mode = "auto", strategy = "default";
    std::string emit_proof, emit_model;
    std::size_t max_steps = 20000, max_width = 64, max_term_depth = 8;
    double time_limit_s = 0.0;
    std::uint64_t seed = 0;
    unsigned portfolio = 1;

    CLI::App* prove = app.add_subcommand("prove", "decide a problem file");
    prove->add_option("file", prove_file, "problem file (DIMACS or TPTP cnf)")->required();
    prove->add_option("--mode", mode, "prop|fol|auto")
        ->check(CLI::IsMember({"prop", "fol", "auto"}));
    prove->add_option("--max-steps", max_steps, "extension-step budget");
    prove->add_option("--max-width", max_width, "clauses per contradiction");
    prove->add_option("--max-term-depth", max_term_depth, "term nesting cap (first-order)");
    prove->add_option("--time-limit", time_limit_s,
                      "seconds; CSE_DEFAULT_TIME_LIMIT applies when absent");
    prove->add_option("--strategy", strategy, "default|fixed (fixed pins the start clause)")
        ->check(CLI::IsMember({"default", "fixed"}));
    bool no_fallback = false;
    prove->add_flag("--no-fallback", no_fallback, "disable the two-clause fallback rounds");
    prove->add_option("--seed", seed, "rotation seed");
    prove->add_option("--emit-proof", emit_proof, "write the refutation document here");
    prove->add_option("--emit-model", emit_model, "write the model/witness document here");
    prove->add_option("--portfolio", portfolio, "independent workers, first verdict wins")
        ->check(CLI::PositiveNumber);

    // check -----------------------------------------------------------------
    std::string check_proof_path, check_problem_path;
    CLI::App* check = app.add_subcommand("check", "verify a proof document against a problem");
    check->add_option("proof", check_proof_path, "proof document")->required();
    check->add_option("problem", check_problem_path, "problem file")->required();

    // bench -----------------------------------------------------------------
    std::string bench_dir;
    CLI::App* bench = app.add_subcommand("bench", "run every problem in a directory");
    bench->add_option("dir", bench_dir, "directory of .cnf/.p files")->required();
    bench->add_option("--max-steps", max_steps, "extension-step budget");
    bench->add_option("--time-limit", time_limit_s, "seconds per problem");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (prove->parsed()) {
            const io::ProblemFile pf = load_problem(prove_file);
            for (const std::string& w : pf.warnings) std::cerr << "warning: " << w << "\n";

            StrategyConfig cfg;
            cfg.max_steps = max_steps;
            cfg.max_width = max_width;
            cfg.max_term_depth = max_term_depth;
            cfg.max_contradiction_width = max_width;
            cfg.time_limit = effective_time_limit(time_limit_s);
            cfg.seed = seed;
            cfg.start_rotation = strategy != "fixed";
            cfg.fallback_binary = !no_fallback;

            const ProveOutcome out = portfolio > 1 ? run_portfolio(pf, mode, cfg, portfolio)
                                                   : run_single(pf, mode, cfg);

            std::cout << "SZS status " << szs_word(out.kind) << "\n";
            if (out.kind == VerdictKind::unknown && !out.reason.empty())
                std::cerr << "unknown: " << out.reason << "\n";

            if (!emit_proof.empty() && out.kind == VerdictKind::unsat) {
                write_file(emit_proof, io::proof_to_json(out.proof, pf.name, out.mode));
                std::cout << "proof: " << emit_proof << "\n";
            }
            if (!emit_model.empty() && out.kind == VerdictKind::sat) {
                if (out.mode == "prop")
                    write_file(emit_model, io::model_to_json(out.model, pf.name));
                else
                    write_file(emit_model, io::sketch_to_json(*out.witness, pf.name));
                std::cout << "model: " << emit_model << "\n";
            }
            return out.kind == VerdictKind::unknown ? 1 : 0;
        }

        if (check->parsed()) {
            const io::ProblemFile pf = load_problem(check_problem_path);
            const Proof proof = io::proof_from_json(read_file(check_proof_path));
            const oracle::CheckReport report = oracle::check_proof(proof, pf.clauses);
            if (report.ok) {
                std::cout << "proof valid\n";
                return 0;
            }
            std::cout << "proof invalid at step " << report.failing_step << ": "
                      << report.diagnostic << "\n";
            return 1;
        }

        if (bench->parsed()) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(bench_dir)) {
                const std::string ext = entry.path().extension().string();
                if (ext == ".cnf" || ext == ".dimacs" || ext == ".p" || ext == ".tptp")
                    files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            std::cout << "problem\tstatus\tms\n";
            for (const fs::path& f : files) {
                StrategyConfig cfg;
                cfg.max_steps = max_steps;
                cfg.time_limit = effective_time_limit(time_limit_s);
                const auto t0 = std::chrono::steady_clock::now();
                std::string status;
                try {
                    const io::ProblemFile pf = load_problem(f.string());
                    status = szs_word(run_single(pf, "auto", cfg).kind);
                } catch (const std::exception& e) {
                    status = std::string("error: ") + e.what();
                }
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                std::cout << f.filename().string() << "\t" << status << "\t" << ms << "\n";
            }
            return 0;
        }
    } catch (const io::UnsupportedFeatureError& e) {
        std::cerr << "unsupported feature: " << e.what() << "\n";
        return 2;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
