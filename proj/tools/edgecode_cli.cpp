// Command-line front end: build edge codes from hypergraph files or built-in
// families, compute their parameters, export generator matrices, and run the
// verification suites. Results are JSON on stdout (or --out); errors are
// structured messages on stderr.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage/parse error,
// 3 resource-limit refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edgecode/theorems.hpp"

namespace {

using namespace edgecode;

struct CommonArgs {
    unsigned q = 0;
    std::string hypergraph_file;
    std::string family_name;
    int n = 0, d = 0, d1 = 0, d2 = 0;
    unsigned long long max_points = kDefaultMaxPoints;
    unsigned long long max_messages = 0; // 0 = unset, fall back to env or default
    unsigned workers = 1;
    bool full_enumeration = false;
    std::string out;
    std::string format = "json";
};

void add_input_flags(CLI::App* cmd, CommonArgs& a, bool need_field = true) {
    if (need_field) cmd->add_option("--q", a.q, "field order (prime power)")->required();
    cmd->add_option("--hypergraph", a.hypergraph_file, "hypergraph JSON file");
    cmd->add_option("--family", a.family_name, "built-in family (path|cycle|complete|star|interval|partite_path)");
    cmd->add_option("--n", a.n, "vertex count for --family");
    cmd->add_option("--d", a.d, "uniform degree (partite_path)");
    cmd->add_option("--d1", a.d1, "largest edge size (interval)");
    cmd->add_option("--d2", a.d2, "smallest edge size (interval)");
}

void add_limit_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--max-points", a.max_points, "torus point limit");
    cmd->add_option("--max-messages", a.max_messages, "enumeration candidate limit");
    cmd->add_option("--workers", a.workers, "worker thread count");
    cmd->add_flag("--full-enumeration", a.full_enumeration, "disable projective collapse");
}

void add_output_flags(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--out", a.out, "write result to file instead of stdout");
    cmd->add_option("--format", a.format, "output format (json|csv, export only)")
        ->check(CLI::IsMember({"json", "csv"}));
}

unsigned long long resolve_max_messages(const CommonArgs& a) {
    if (a.max_messages != 0) return a.max_messages;
    if (const char* env = std::getenv("EDGECODE_MAX_MESSAGES")) {
        const auto v = std::strtoull(env, nullptr, 10);
        if (v != 0) return v;
    }
    return kDefaultMaxMessages;
}

Hypergraph load_hypergraph(const CommonArgs& a) {
    const bool from_file = !a.hypergraph_file.empty();
    const bool from_family = !a.family_name.empty();
    if (from_file == from_family)
        throw BadParams("exactly one of --hypergraph and --family is required");
    if (from_file) {
        std::ifstream in(a.hypergraph_file);
        if (!in) throw ParseError("cannot open " + a.hypergraph_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_hypergraph(ss.str());
    }
    return family(a.family_name, a.n, a.d, a.d1, a.d2);
}

void emit(const CommonArgs& a, const std::string& text) {
    if (a.out.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(a.out);
        if (!out) throw Error("cannot write " + a.out);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

void emit(const CommonArgs& a, const nlohmann::json& j) { emit(a, j.dump(2)); }

SearchOptions search_options(const CommonArgs& a) {
    return SearchOptions{resolve_max_messages(a), a.workers, a.full_enumeration};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge codes of hypergraphs on the affine torus"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string suite_name;
    std::vector<unsigned> suite_q;

    auto* params = app.add_subcommand("params", "length, dimension, rank");
    auto* mindist = app.add_subcommand("mindist", "exact minimum distance by enumeration");
    auto* weights = app.add_subcommand("weights", "full weight distribution");
    auto* gram = app.add_subcommand("gram", "Gram matrix and self-orthogonality");
    auto* exp = app.add_subcommand("export", "generator matrix export");
    auto* gen = app.add_subcommand("gen", "print a family's hypergraph JSON");
    auto* verify = app.add_subcommand("verify", "run a verification suite");

    for (auto* cmd : {params, mindist, weights, gram, exp}) {
        add_input_flags(cmd, a);
        add_limit_flags(cmd, a);
        add_output_flags(cmd, a);
    }
    add_input_flags(gen, a, /*need_field=*/false);
    add_output_flags(gen, a);

    verify->add_option("--suite", suite_name,
                       "table1|table2|table3|clutter|interval|tree|selforth|aster|footprint")
        ->required();
    verify->add_option("--q", suite_q, "field order(s)")->required();
    add_limit_flags(verify, a);
    add_output_flags(verify, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            emit(a, nlohmann::json::parse(serialize_hypergraph(load_hypergraph(a))));
        } else if (verify->parsed()) {
            bool all_ok = true;
            nlohmann::json reports = nlohmann::json::array();
            for (unsigned q : suite_q) {
                const Field f(q);
                SuiteOptions opts;
                opts.max_points = a.max_points;
                opts.max_messages = resolve_max_messages(a);
                opts.workers = a.workers;
                opts.full_enumeration = a.full_enumeration;
                opts.on_case = [&](const CaseRecord& c) {
                    std::cerr << "case " << c.id << " done (" << c.elapsed_ms << " ms)\n";
                };
                const auto report = run_suite(suite_name, f, opts);
                all_ok = all_ok && report.all_ok();
                reports.push_back(to_json(report));
            }
            emit(a, reports.size() == 1 ? reports[0] : reports);
            if (!all_ok) return 1;
        } else {
            const Field f(a.q);
            const auto h = load_hypergraph(a);
            if (params->parsed()) {
                const EdgeCode code(f, h, a.max_points);
                emit(a, nlohmann::json{{"q", f.q()},
                                       {"length", code.length()},
                                       {"dimension", code.dimension_bound()},
                                       {"rank", code.rank()}});
            } else if (mindist->parsed()) {
                const EdgeCode code(f, h, a.max_points);
                const auto r = minimum_distance_exhaustive(code, search_options(a));
                emit(a, nlohmann::json{{"q", f.q()},
                                       {"length", code.length()},
                                       {"dimension", code.dimension_bound()},
                                       {"distance", r.distance},
                                       {"witness", r.witness},
                                       {"search_space", r.search_space},
                                       {"elapsed_ms", static_cast<long long>(r.elapsed_sec * 1000)}});
            } else if (weights->parsed()) {
                const EdgeCode code(f, h, a.max_points);
                const auto dist = weight_distribution(code, search_options(a));
                nlohmann::json counts = nlohmann::json::object();
                for (const auto& [w, cnt] : dist.counts) counts[std::to_string(w)] = cnt;
                emit(a, nlohmann::json{{"q", f.q()},
                                       {"length", dist.length},
                                       {"dimension", dist.dimension},
                                       {"minimum_distance", dist.minimum_distance()},
                                       {"weights", counts}});
            } else if (gram->parsed()) {
                const EdgeCode code(f, h, a.max_points);
                emit(a, nlohmann::json{{"q", f.q()},
                                       {"gram", code.gram_matrix()},
                                       {"self_orthogonal", code.is_self_orthogonal()}});
            } else if (exp->parsed()) {
                const EdgeCode code(f, h, a.max_points);
                if (a.format == "csv")
                    emit(a, code.export_csv());
                else
                    emit(a, code.export_json());
            }
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const SearchTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
