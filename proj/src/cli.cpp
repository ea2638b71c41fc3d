#include "teachdim/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "teachdim/bounds.hpp"
#include "teachdim/canonical.hpp"
#include "teachdim/explore.hpp"
#include "teachdim/json_io.hpp"
#include "teachdim/parallel.hpp"

namespace teachdim::cli {

namespace {

void print_kv(std::ostream& out, const std::string& key, const std::string& val) {
    out << std::left << std::setw(22) << key << val << "\n";
}

void print_analysis(std::ostream& out, const AnalysisReport& rep, const ConceptClass& C) {
    print_kv(out, "n", std::to_string(rep.n));
    print_kv(out, "size", std::to_string(rep.size));
    print_kv(out, "vcd", std::to_string(rep.vcd));
    print_kv(out, "td_min", std::to_string(rep.td_min));
    print_kv(out, "td_max", std::to_string(rep.td_max));
    print_kv(out, "rtd", std::to_string(rep.rtd));
    print_kv(out, "maximal", rep.maximal ? "yes" : "no");
    print_kv(out, "intersection_closed", rep.intersection_closed ? "yes" : "no");
    {
        std::ostringstream p;
        for (const auto& [x, m] : rep.profile.max_patterns) p << x << ":" << m << " ";
        print_kv(out, "profile", p.str());
    }
    out << "\nper-concept teaching dimensions\n";
    for (size_t i = 0; i < rep.td.size(); ++i)
        out << "  " << concept_to_string(C.word(i), rep.n) << "  " << rep.td[i] << "\n";
    out << "\nrecursive teaching plan\n";
    for (size_t t = 0; t < rep.plan.levels.size(); ++t) {
        const auto& lvl = rep.plan.levels[t];
        out << "  level " << t << "  td " << lvl.level_td << "  removes";
        for (Concept c : lvl.removed) out << " " << concept_to_string(c, rep.n);
        out << "\n";
    }
}

void print_bound_report(std::ostream& out, const BoundReport& rep) {
    print_kv(out, "d", std::to_string(rep.d));
    print_kv(out, "alpha", std::to_string(rep.alpha));
    print_kv(out, "lambda_star", std::to_string(rep.lambda_star));
    print_kv(out, "x_start", std::to_string(rep.x_start));
    print_kv(out, "rtd_bound", std::to_string(rep.rtd_bound));
    if (rep.ts_size) print_kv(out, "ts_size", std::to_string(*rep.ts_size));
    out << "\nchain (x, y = floor(alpha^x), k, restriction size)\n";
    for (const auto& st : rep.chain) {
        out << "  x " << std::setw(3) << st.x << "  y ";
        if (st.y)
            out << std::setw(20) << *st.y;
        else
            out << std::setw(20) << "-";
        out << "  k " << std::setw(6) << st.k << "  size ";
        if (st.restriction_size)
            out << *st.restriction_size;
        else
            out << "-";
        out << "\n";
    }
}

int cmd_analyze(const std::string& file, bool as_json, int profile_max, std::ostream& out) {
    ConceptClass C = parse_class_file(file);
    AnalysisReport rep = analyze_class(C, profile_max);
    if (as_json)
        out << to_json(rep, C).dump(2) << "\n";
    else
        print_analysis(out, rep, C);
    return 0;
}

int cmd_bounds(int d, double alpha, bool as_json, std::ostream& out) {
    if (d < 1 || d > 16)
        throw parameter_error("d must be in [1, 16]; the chain values floor(alpha^x) leave the "
                              "64-bit range beyond that");
    BoundReport rep;
    rep.d = d;
    rep.alpha = alpha;
    rep.lambda_star = lambda_star(alpha, 1e-9);
    rep.x_start = xy_threshold(d, alpha);
    if (std::pow((long double)alpha, (long double)rep.x_start) >= 0x1p62L)
        throw parameter_error("floor(alpha^x) leaves the 64-bit range along this chain; "
                              "reduce d or use a larger alpha");
    rep.f_bound = f_quadratic_bound(rep.x_start, alpha);
    double ld = rep.lambda_star * d;
    rep.rtd_bound = ld * ld / (4 - 2 * alpha) + (3 - 2 * alpha) / (4 - 2 * alpha) * ld;
    for (uint64_t x = rep.x_start; x >= 2; --x) {
        ChainStep st;
        st.x = x;
        uint64_t y = (uint64_t)std::pow((long double)alpha, (long double)x);
        uint64_t yp = (uint64_t)std::pow((long double)alpha, (long double)(x - 1));
        st.y = y;
        st.k = ladder_increment(x - 1, yp, y);
        rep.chain.push_back(st);
    }
    if (as_json)
        out << to_json(rep).dump(2) << "\n";
    else
        print_bound_report(out, rep);
    return 0;
}

int cmd_construct(const std::string& file, double alpha, bool as_json, std::ostream& out) {
    ConceptClass C = parse_class_file(file);
    ConstructResult res = constructive_teaching_set(C, alpha);
    if (as_json) {
        nlohmann::json j = to_json(res.trace);
        j["concept"] = concept_to_string(res.c, C.n());
        nlohmann::json inst = nlohmann::json::array();
        for (int i : set_indices(res.ts.instances)) inst.push_back(i);
        j["teaching_set"] = inst;
        out << j.dump(2) << "\n";
    } else {
        print_kv(out, "concept", concept_to_string(res.c, C.n()));
        std::ostringstream ts;
        for (int i : set_indices(res.ts.instances)) ts << i << " ";
        print_kv(out, "teaching_set", ts.str());
        print_kv(out, "ts_size", std::to_string(res.ts.size()));
        out << "\n";
        print_bound_report(out, res.trace);
    }
    return 0;
}

int cmd_search(int n, int size, int vcd_cap, double budget, uint64_t seed, bool as_json,
               std::ostream& out) {
    SearchResult sr = extremal_search(n, size, vcd_cap, budget, seed);
    if (as_json) {
        out << to_json(sr).dump(2) << "\n";
    } else {
        print_kv(out, "rtd", std::to_string(sr.rtd));
        print_kv(out, "vcd", std::to_string(sr.vcd));
        print_kv(out, "ratio", std::to_string(sr.ratio));
        print_kv(out, "evaluations", std::to_string(sr.evaluations));
        print_kv(out, "seed", std::to_string(sr.seed));
        out << "\nbest class\n";
        for (Concept c : sr.best_class) out << "  " << concept_to_string(c, sr.n) << "\n";
    }
    return 0;
}

int cmd_random(int n, int size, int trials, uint64_t seed, bool as_json, std::ostream& out) {
    ExperimentStats st = rtd_vcd_experiment(n, size, trials, seed);
    if (as_json) {
        out << to_json(st).dump(2) << "\n";
    } else {
        print_kv(out, "n", std::to_string(st.n));
        print_kv(out, "N", std::to_string(st.N));
        print_kv(out, "trials", std::to_string(st.trials));
        print_kv(out, "seed", std::to_string(st.seed));
        print_kv(out, "frac_rtd_lt_vcd", std::to_string(st.frac_rtd_lt_vcd));
        print_kv(out, "frac_rtd_eq_vcd", std::to_string(st.frac_rtd_eq_vcd));
        print_kv(out, "frac_rtd_gt_vcd", std::to_string(st.frac_rtd_gt_vcd));
        std::ostringstream rh, vh;
        for (const auto& [k, v] : st.rtd_histogram) rh << k << ":" << v << " ";
        for (const auto& [k, v] : st.vcd_histogram) vh << k << ":" << v << " ";
        print_kv(out, "rtd_histogram", rh.str());
        print_kv(out, "vcd_histogram", vh.str());
    }
    return 0;
}

int cmd_product(const std::string& f1, const std::string& f2, const std::string& outfile,
                std::ostream& out) {
    ConceptClass C1 = parse_class_file(f1);
    ConceptClass C2 = parse_class_file(f2);
    ConceptClass P = product(C1, C2);
    write_class_file(outfile, P);
    out << "wrote " << outfile << " (n=" << P.n() << ", size " << P.size() << ")\n";
    return 0;
}

int cmd_verify(const std::string& dir, bool pairs, bool as_json, std::ostream& out) {
    std::vector<ConceptClass> classes;
    std::vector<std::string> names;
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file()) paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        classes.push_back(parse_class_file(p.string()));
        names.push_back(p.filename().string());
    }
    if (classes.empty()) throw input_error("no class files in " + dir);
    CorpusReport rep = verify_corpus(classes, names, pairs);
    if (as_json) {
        out << to_json(rep).dump(2) << "\n";
    } else {
        auto print_item = [&](const CorpusItem& it) {
            if (it.skipped) {
                out << "  " << std::left << std::setw(28) << it.name << "SKIP  " << it.notice
                    << "\n";
                return;
            }
            for (const auto& c : it.checks)
                out << "  " << std::left << std::setw(28) << it.name << (c.pass ? "ok    " : "FAIL  ")
                    << c.what << " (" << c.detail << ")\n";
        };
        out << "classes\n";
        for (const auto& it : rep.items) print_item(it);
        if (!rep.pair_items.empty()) {
            out << "pairs\n";
            for (const auto& it : rep.pair_items) print_item(it);
        }
        out << (rep.all_pass ? "all checks passed\n" : "some checks FAILED\n");
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"teaching-complexity toolkit for finite boolean concept classes"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (default: hardware)");

    std::string file, file2, outfile, dir;
    bool as_json = false;
    int profile_max = 5;
    int d = 1;
    double alpha = default_alpha();
    int n = 0, size = 0, vcd_cap = 1, trials = 0;
    double budget = 10.0;
    uint64_t seed = 0;
    bool pairs = false;

    auto* a = app.add_subcommand("analyze", "measures of one class file");
    a->add_option("file", file)->required();
    a->add_flag("--json", as_json);
    a->add_option("--profile-max", profile_max, "largest projection size in the profile");

    auto* b = app.add_subcommand("bounds", "quadratic bound report for a given VC dimension");
    b->add_option("--d", d, "VC dimension")->required();
    b->add_option("--alpha", alpha, "base of the pattern-cap chain, in (1,2)");
    b->add_flag("--json", as_json);

    auto* c = app.add_subcommand("construct", "descent-built teaching set for one class file");
    c->add_option("file", file)->required();
    c->add_option("--alpha", alpha, "base of the pattern-cap chain, in (1,2)");
    c->add_flag("--json", as_json);

    auto* s = app.add_subcommand("search", "hill-climb for high-RTD classes under a VCD cap");
    s->add_option("--n", n)->required();
    s->add_option("--size", size)->required();
    s->add_option("--vcd-cap", vcd_cap)->required();
    s->add_option("--budget", budget, "wall-clock budget in seconds");
    s->add_option("--seed", seed);
    s->add_flag("--json", as_json);

    auto* r = app.add_subcommand("random", "RTD-vs-VCD statistics over random classes");
    r->add_option("--n", n)->required();
    r->add_option("--size", size)->required();
    r->add_option("--trials", trials)->required();
    r->add_option("--seed", seed);
    r->add_flag("--json", as_json);

    auto* p = app.add_subcommand("product", "write the product of two class files");
    p->add_option("file1", file)->required();
    p->add_option("file2", file2)->required();
    p->add_option("-o,--out", outfile)->required();

    auto* v = app.add_subcommand("verify", "check bound and product laws over a directory");
    v->add_option("dir", dir)->required();
    v->add_flag("--pairs", pairs, "also check product laws on all pairs");
    v->add_flag("--json", as_json);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    parallel::set_max_threads(threads);

    try {
        if (a->parsed()) return cmd_analyze(file, as_json, profile_max, out);
        if (b->parsed()) return cmd_bounds(d, alpha, as_json, out);
        if (c->parsed()) return cmd_construct(file, alpha, as_json, out);
        if (s->parsed()) return cmd_search(n, size, vcd_cap, budget, seed, as_json, out);
        if (r->parsed()) return cmd_random(n, size, trials, seed, as_json, out);
        if (p->parsed()) return cmd_product(file, file2, outfile, out);
        if (v->parsed()) return cmd_verify(dir, pairs, as_json, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace teachdim::cli
