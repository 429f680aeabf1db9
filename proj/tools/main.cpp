// Command-line front end: solvability verdicts, explicit solution search,
// central L-values, batch classification, identity verification, and the
// sieve benchmark.
//
// Exit codes: 0 success / consistent, 1 usage or input error, 2 internal
// inconsistency (identity suite failure).

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "cubefermat/cubefermat.hpp"
#include "cubefermat/io.hpp"

namespace {

using namespace cubefermat;

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_decide(std::int64_t d, bool as_json) {
    Verdict v = decide(d);
    if (as_json) {
        std::cout << to_json(v).dump() << "\n";
    } else {
        std::cout << "d = " << d << ": " << to_string(v.status) << " (case " << to_string(v.case_used);
        if (v.case_used != CriterionCase::Special)
            std::cout << "; counts " << v.left << " " << v.right;
        std::cout << ")\n";
    }
    return 0;
}

int cmd_search(std::int64_t d, std::int64_t height, bool as_json) {
    auto w = burnside_search(d, height);
    if (as_json) {
        json j;
        if (w) {
            j = to_json(*w);
            j["found"] = true;
        } else {
            j = json{{"d", d}, {"found", false}, {"height", height}};
        }
        std::cout << j.dump() << "\n";
    } else if (w) {
        std::cout << "d = " << d << ": " << to_string(w->solution) << "  [k = "
                  << boost::multiprecision::numerator(w->k) << "/"
                  << boost::multiprecision::denominator(w->k) << "]\n";
    } else {
        std::cout << "d = " << d << ": none found at height " << height << "\n";
    }
    return 0;
}

int cmd_lvalue(std::int64_t d, bool as_json) {
    LReport r = central_value(squarefree_part(d));
    if (as_json) {
        std::cout << to_json(r).dump() << "\n";
    } else {
        std::cout << "L(E_" << d << ", 1) = " << std::fixed << std::setprecision(6) << r.value
                  << "  (root number " << (r.root_number > 0 ? "+1" : "-1") << ", conductor "
                  << r.conductor << ", " << r.terms_used << " terms, tail < " << std::scientific
                  << std::setprecision(2) << r.tail_bound << ")\n";
    }
    return 0;
}

int cmd_table(std::int64_t max_d, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    int shards = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (format == "csv") {
        os << csv_header_verdict() << "\n";
        classify_range(
            max_d, [&](const Verdict& v) { os << to_csv(v) << "\n"; }, shards);
    } else {
        os << "[";
        bool first = true;
        classify_range(
            max_d,
            [&](const Verdict& v) {
                os << (first ? "\n" : ",\n") << to_json(v).dump();
                first = false;
            },
            shards);
        os << "\n]\n";
    }
    return 0;
}

int cmd_verify(std::int64_t depth, bool dump, const std::string& out_path) {
    auto checks = run_identity_suite(depth);
    bool all_ok = true;
    for (const auto& c : checks) {
        std::cout << (c.ok ? "pass" : "FAIL") << "  " << c.name << "  [" << c.detail << "]\n";
        all_ok = all_ok && c.ok;
    }
    std::cout << (all_ok ? "all identities verified" : "IDENTITY FAILURES DETECTED") << " (depth "
              << depth << ")\n";
    if (dump) {
        std::ofstream file;
        std::ostream& os = open_out(out_path, file);
        QSeries F = build_F(depth);
        os << "n,coefficient\n";
        for (std::int64_t n = 0; n <= depth; ++n) os << n << "," << F.coeff(n) << "\n";
    }
    return all_ok ? 0 : 2;
}

int cmd_bench(std::int64_t n, int shards) {
    const TernaryForm* forms[4] = {&form_Q1(), &form_Q2(), &form_Q3(), &form_Q4()};
    auto start = std::chrono::steady_clock::now();
    std::uint64_t points = 0;
    for (const auto* f : forms) {
        auto counts = batch_counts(*f, n, shards);
        for (auto c : counts) points += c;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json j{{"N", n},
           {"shards", shards},
           {"forms", 4},
           {"lattice_points", points},
           {"wall_seconds", secs},
           {"points_per_sec", secs > 0 ? static_cast<double>(points) / secs : 0.0}};
    std::cout << j.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvability of x^3 + y^3 = z^3 in quadratic fields Q(sqrt(d))"};
    app.require_subcommand(1);

    std::int64_t d = 0;
    std::int64_t height = 50;
    std::int64_t max_d = 0;
    std::int64_t depth = 1000;
    std::int64_t bench_n = 1'000'000;
    int shards = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string format = "csv";
    std::string out_path;
    bool as_json = false;
    bool dump = false;

    auto* c_decide = app.add_subcommand("decide", "representation-count verdict for Q(sqrt(d))");
    c_decide->add_option("-d", d, "squarefree-normalized integer d")->required();
    c_decide->add_flag("--json", as_json, "emit JSON");

    auto* c_search = app.add_subcommand("search", "search the Burnside parametrization for a witness");
    c_search->add_option("-d", d, "field parameter d")->required();
    c_search->add_option("--height", height, "search height bound")->capture_default_str();
    c_search->add_flag("--json", as_json, "emit JSON");

    auto* c_lvalue = app.add_subcommand("lvalue", "central value L(E_d, 1) with root number and conductor");
    c_lvalue->add_option("-d", d, "twist parameter d")->required();
    c_lvalue->add_flag("--json", as_json, "emit JSON");

    auto* c_table = app.add_subcommand("table", "verdicts for all squarefree 2 <= d <= max-d");
    c_table->add_option("--max-d", max_d, "upper bound for d")->required();
    c_table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    c_table->add_option("--out", out_path, "output path (default stdout)");

    auto* c_verify = app.add_subcommand("verify-identities", "verify the modular-form identity suite");
    c_verify->add_option("--depth", depth, "q-expansion depth")->capture_default_str();
    c_verify->add_flag("--dump", dump, "dump F coefficients as CSV");
    c_verify->add_option("--out", out_path, "dump path (default stdout)");

    auto* c_bench = app.add_subcommand("bench", "sieve throughput over the four forms");
    c_bench->add_option("--depth", bench_n, "histogram bound N")->capture_default_str();
    c_bench->add_option("--shards", shards, "parallel shards")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors are exit 1; --help stays 0
    }

    try {
        if (c_decide->parsed()) return cmd_decide(d, as_json);
        if (c_search->parsed()) return cmd_search(d, height, as_json);
        if (c_lvalue->parsed()) return cmd_lvalue(d, as_json);
        if (c_table->parsed()) return cmd_table(max_d, format, out_path);
        if (c_verify->parsed()) return cmd_verify(depth, dump, out_path);
        if (c_bench->parsed()) return cmd_bench(bench_n, shards);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
