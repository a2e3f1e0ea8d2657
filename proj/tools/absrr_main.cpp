// absrr: exact dimension data for divisors on the compactified arithmetic
// spectrum. Every decision below is made on exact rationals; floats appear
// only in display columns.

#include "absrr/balanced_ternary.hpp"
#include "absrr/divisor.hpp"
#include "absrr/exact_arith.hpp"
#include "absrr/h0.hpp"
#include "absrr/h1.hpp"
#include "absrr/json_io.hpp"
#include "absrr/parallel.hpp"
#include "absrr/rr.hpp"
#include "absrr/sweep.hpp"
#include "absrr/tolerance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

using namespace absrr;
using nlohmann::json;

namespace {

struct OutputOptions {
    std::string format = "table";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool allow_csv = false) {
    std::vector<std::string> formats = {"table", "json"};
    if (allow_csv)
        formats.push_back("csv");
    cmd->add_option("--format", opts.format, "report format for --out")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--out", opts.out_path, "write the machine-readable report to this file");
}

// stdout carries the human table; --out carries the machine report
int emit_report(const OutputOptions& opts, const json& report) {
    if (opts.out_path.empty()) {
        if (opts.format == "json")
            std::cout << report.dump(2) << "\n";
        return 0;
    }
    std::ofstream f(opts.out_path);
    if (!f) {
        std::cerr << "error: cannot open " << opts.out_path << "\n";
        return 2;
    }
    f << report.dump(2) << "\n";
    return 0;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (!part.empty())
            out.push_back(parse_rational(part));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

// ---- bt ------------------------------------------------------------------

int run_bt(const std::string& value, const std::string& decode_text,
           const std::vector<std::string>& add_args, const std::string& truncate_text,
           unsigned long digits, const OutputOptions& opts) {
    json report;
    if (!value.empty()) {
        mpz_class n(value);
        auto b = BalancedTernary::encode(n);
        std::printf("%s = %s (%zu digits)\n", n.get_str().c_str(), b.str().c_str(), b.size());
        report = {{"value", n.get_str()}, {"digits", b.str()}, {"length", b.size()}};
    } else if (!decode_text.empty()) {
        auto b = BalancedTernary::parse(decode_text);
        std::printf("%s = %s\n", b.str().c_str(), b.decode().get_str().c_str());
        report = {{"digits", b.str()}, {"value", b.decode().get_str()}};
    } else if (!add_args.empty()) {
        auto x = BalancedTernary::parse(add_args[0]);
        auto y = BalancedTernary::parse(add_args[1]);
        auto s = x + y;
        std::printf("%s + %s = %s (%s)\n", x.str().c_str(), y.str().c_str(), s.str().c_str(),
                    s.decode().get_str().c_str());
        report = {{"lhs", x.str()}, {"rhs", y.str()}, {"sum", s.str()},
                  {"value", s.decode().get_str()}};
    } else if (!truncate_text.empty()) {
        Rational x = parse_rational(truncate_text);
        Rational t = truncate_expand(x, digits);
        std::printf("trunc_%lu(%s) = %s\n", digits, to_string(x).c_str(), to_string(t).c_str());
        report = {{"x", to_string(x)}, {"digits", digits}, {"result", to_string(t)}};
    } else {
        std::cerr << "bt: nothing to do (give a value, --decode, --add or --truncate)\n";
        return 2;
    }
    return emit_report(opts, report);
}

// ---- dimensions ----------------------------------------------------------

int run_dim_h0(const std::string& spec, const OutputOptions& opts) {
    auto d = ArakelovDivisor::parse(spec);
    auto ed = d.exp_degree();
    mpz_class n = floor_rat(ed);
    long dim = dim_h0(d);
    std::printf("divisor    %s\n", d.render().c_str());
    std::printf("exp_deg    %s (deg = %.6f)\n", ed.str().c_str(), LogValue::of(ed).approx);
    std::printf("n          %s\n", n.get_str().c_str());
    std::printf("dim_h0     %ld\n", dim);
    return emit_report(opts, json{{"divisor", divisor_to_json(d)},
                                  {"exp_deg", ed.str()},
                                  {"n", n.get_str()},
                                  {"dim_h0", dim}});
}

int run_dim_h1(const std::string& spec, const OutputOptions& opts) {
    auto d = ArakelovDivisor::parse(spec);
    auto ed = d.exp_degree();
    long dim = dim_h1(d);
    std::printf("divisor    %s\n", d.render().c_str());
    std::printf("exp_deg    %s (deg = %.6f)\n", ed.str().c_str(), LogValue::of(ed).approx);
    std::printf("dim_h1     %ld\n", dim);
    return emit_report(opts, json{{"divisor", divisor_to_json(d)},
                                  {"exp_deg", ed.str()},
                                  {"dim_h1", dim}});
}

// ---- genset ---------------------------------------------------------------

void print_genset(const GenSetReport& r) {
    std::string gens;
    for (const auto& g : r.generators)
        gens += (gens.empty() ? "" : ", ") + g.get_str();
    std::printf("n            %s\n", r.n.get_str().c_str());
    std::printf("generators   {%s}\n", gens.c_str());
    std::printf("cardinality  %zu\n", r.cardinality);
    std::printf("sum          %s\n", r.sum.get_str().c_str());
    std::printf("case         %s\n", to_string(r.special_case));
    if (r.verified)
        std::printf("verified     surjective=%s mass_ok=%s\n", r.surjective ? "yes" : "no",
                    r.mass_ok ? "yes" : "no");
    else
        std::printf("verified     no (construction only)\n");
}

int run_genset_single(const std::string& n_text, bool verify, const OutputOptions& opts) {
    mpz_class n(n_text);
    auto r = genset(n, verify);
    print_genset(r);
    int rc = emit_report(opts, genset_report_to_json(r));
    if (rc != 0)
        return rc;
    return verify && !(r.surjective && r.mass_ok) ? 1 : 0;
}

int run_genset_sweep(long max_n, const OutputOptions& opts) {
    std::vector<std::uint8_t> ok(static_cast<std::size_t>(max_n) + 1, 0);
    parallel_for(ok.size(), [&](std::size_t i) {
        long n = static_cast<long>(i);
        auto r = genset(n, true);
        bool pass = r.surjective && r.mass_ok &&
                    static_cast<long>(r.cardinality) == dim_hzn(n);
        if (n != 2 && n != 5)
            pass = pass && r.sum == n;
        else
            pass = pass && (r.special_case == GenSetCase::Special_n2 ||
                            r.special_case == GenSetCase::Special_n5);
        ok[i] = pass ? 1 : 0;
    });
    long failures = 0;
    json failed = json::array();
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i]) {
            ++failures;
            if (failed.size() < 32)
                failed.push_back(i);
        }
    std::printf("genset sweep: n <= %ld, %ld failures\n", max_n, failures);
    int rc = emit_report(opts, json{{"max_n", max_n},
                                    {"checked", ok.size()},
                                    {"failures", failures},
                                    {"failed_n", failed}});
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

int run_exceptional(long max_n, const OutputOptions& opts) {
    json rows = json::array();
    std::printf("%8s %6s %6s\n", "n", "ell", "m");
    for (long n = 1; n <= max_n; ++n) {
        if (auto e = exceptional_e(n)) {
            std::printf("%8ld %6ld %6ld\n", n, e->ell, e->m);
            rows.push_back({{"n", n}, {"ell", e->ell}, {"m", e->m}});
        }
    }
    return emit_report(opts, json{{"max", max_n}, {"members", rows}});
}

// ---- circle cover ----------------------------------------------------------

int run_circle_cover(const std::string& lambda_text, const std::string& gens_text, bool verify,
                     const OutputOptions& opts) {
    PosRational lambda = PosRational::parse(lambda_text);
    std::vector<Rational> gens;
    bool constructed = gens_text.empty();
    long m = 0;
    if (constructed) {
        auto g = circle_genset(lambda);
        gens = g.generators;
        m = g.m;
        verify = true;  // constructed covers are always checked
    } else {
        gens = parse_rational_list(gens_text);
        m = static_cast<long>(gens.size());
    }

    bool ok = true;
    std::string status;
    if (verify) {
        ok = verify_circle_cover(lambda, gens);
        status = ok ? "cover verified" : "NOT a cover";
    } else {
        for (std::size_t i = 0; ok && i < gens.size(); ++i)
            for (std::size_t j = i + 1; ok && j < gens.size(); ++j)
                ok = circle_distance(gens[i], gens[j]) > lambda.value();
        status = ok ? "pairwise separation holds (cover not checked)"
                    : "pairwise separation FAILS";
    }

    std::string gen_list;
    for (const auto& g : gens)
        gen_list += (gen_list.empty() ? "" : ", ") + to_string(circle_reduce(g));
    std::printf("lambda      %s\n", lambda.str().c_str());
    std::printf("generators  {%s}%s\n", gen_list.c_str(), constructed ? " (constructed)" : "");
    std::printf("m           %ld\n", m);
    std::printf("status      %s\n", status.c_str());

    CircleGenSet out{lambda, gens, m};
    json report = circle_genset_to_json(out, verify && ok);
    report["checked"] = verify ? "cover" : "separation";
    report["ok"] = ok;
    int rc = emit_report(opts, report);
    return rc != 0 ? rc : (ok ? 0 : 1);
}

// ---- index identity and duality ---------------------------------------------

int run_rr(const std::string& spec, const OutputOptions& opts) {
    auto r = rr_verify(ArakelovDivisor::parse(spec));
    std::printf("divisor     %s\n", r.divisor.render().c_str());
    std::printf("exp_deg     %s (deg = %.6f)\n", r.exp_deg.str().c_str(),
                LogValue::of(r.exp_deg).approx);
    std::printf("h0          %ld\n", r.h0);
    std::printf("h1          %ld\n", r.h1);
    std::printf("euler       %ld\n", r.euler);
    std::printf("rhs         %ld (ceil' %ld - 1_L %d)\n", r.rhs, r.rhs_ceil, r.in_L);
    std::printf("consistent  %s\n", r.consistent ? "yes" : "NO");
    int rc = emit_report(opts, rr_report_to_json(r));
    return rc != 0 ? rc : (r.consistent ? 0 : 1);
}

int run_duality(const std::string& spec, const OutputOptions& opts) {
    auto s = serre_verify(ArakelovDivisor::parse(spec));
    std::printf("divisor               %s\n", s.divisor.render().c_str());
    std::printf("lambda                %s\n", s.lambda.str().c_str());
    std::printf("exp_deg(K - D)        %s\n", s.exp_deg_complement.str().c_str());
    std::printf("dim H0(K - D)         %ld\n", s.dim_h0_complement);
    std::printf("dim dual characters   %ld\n", s.dim_dual_characters);
    std::printf("degree relation 1/4   %s\n", s.degree_relation_ok ? "yes" : "NO");
    std::printf("consistent            %s\n", s.consistent ? "yes" : "NO");
    int rc = emit_report(opts, serre_report_to_json(s));
    return rc != 0 ? rc : (s.consistent ? 0 : 1);
}

struct SweepParams {
    long lambda_max = 300;
    std::string primes_text = "2,3,5,7,11";
    std::string exp_range = "-3..3";
    bool with_duality = false;
};

int run_rr_sweep(const SweepParams& params, const OutputOptions& opts) {
    std::vector<std::uint64_t> primes;
    for (const auto& r : parse_rational_list(params.primes_text)) {
        if (r.get_den() != 1 || r <= 0)
            throw std::invalid_argument("--primes takes positive integers");
        primes.push_back(r.get_num().get_ui());
    }
    auto dots = params.exp_range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--exp-range must look like -3..3");
    int exp_min = std::stoi(params.exp_range.substr(0, dots));
    int exp_max = std::stoi(params.exp_range.substr(dots + 2));

    auto grid = SweepGrid::build(params.lambda_max, primes, exp_min, exp_max);
    const std::size_t total = grid.size();
    std::printf("sweep: %zu divisors, lambda_max %ld, primes %s, exponents %d..%d%s\n", total,
                params.lambda_max, params.primes_text.c_str(), exp_min, exp_max,
                params.with_duality ? ", with duality" : "");

    std::vector<RRReport> reports(total);
    std::atomic<std::size_t> rr_bad{0}, serre_bad{0};
    std::mutex first_mutex;
    std::string first_bad;
    bool with_duality = params.with_duality;
    parallel_for(total, [&](std::size_t i) {
        auto d = grid.divisor(i);
        reports[i] = rr_verify(d);
        bool ok = reports[i].consistent;
        if (ok && with_duality)
            ok = serre_verify(d).consistent || (serre_bad.fetch_add(1), false);
        if (!reports[i].consistent)
            rr_bad.fetch_add(1);
        if (!ok) {
            std::lock_guard<std::mutex> lock(first_mutex);
            if (first_bad.empty())
                first_bad = d.render();
        }
    });

    std::size_t failures = rr_bad + serre_bad;
    std::printf("sweep: %zu failures%s%s\n", failures, failures ? ", first at " : "",
                first_bad.c_str());

    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) {
            std::cerr << "error: cannot open " << opts.out_path << "\n";
            return 2;
        }
        if (opts.format == "csv") {
            f << rr_csv_header() << "\n";
            for (const auto& r : reports)
                f << rr_report_to_csv(r) << "\n";
        } else {
            f << "{\n  \"summary\": "
              << json{{"total", total},
                      {"rr_failures", rr_bad.load()},
                      {"duality_failures", serre_bad.load()}}
                     .dump()
              << ",\n  \"rows\": [\n";
            for (std::size_t i = 0; i < reports.size(); ++i)
                f << "    " << rr_report_to_json(reports[i]).dump()
                  << (i + 1 < reports.size() ? ",\n" : "\n");
            f << "  ]\n}\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

// ---- oracle ------------------------------------------------------------------

int run_oracle_dim(const std::string& n_text, long max_n, const OutputOptions& opts) {
    json rows = json::array();
    long first = 0, last = 0;
    if (max_n >= 0) {
        first = 0;
        last = max_n;
    } else {
        first = last = std::stol(n_text);
    }
    bool all_equal = true;
    std::printf("%6s %8s %8s %s\n", "n", "formula", "oracle", "witness");
    for (long n = first; n <= last; ++n) {
        auto m = FiniteToleranceModule::hz_interval(n);
        auto r = dim_bruteforce(m, 10);
        long formula = dim_hzn(n);
        std::string witness;
        for (const auto& g : r.generators)
            witness += (witness.empty() ? "" : ", ") + std::to_string(g[0]);
        bool equal = r.dimension && *r.dimension == formula;
        all_equal = all_equal && equal;
        std::printf("%6ld %8ld %8ld {%s}%s\n", n, formula, r.dimension.value_or(-1),
                    witness.c_str(), equal ? "" : "  MISMATCH");
        rows.push_back({{"n", n},
                        {"formula", formula},
                        {"oracle", r.dimension.value_or(-1)},
                        {"witness", witness},
                        {"equal", equal}});
    }
    int rc = emit_report(opts, json{{"rows", rows}, {"all_equal", all_equal}});
    return rc != 0 ? rc : (all_equal ? 0 : 1);
}

int run_oracle_pullback_demo(const OutputOptions& opts) {
    struct Demo {
        const char* label;
        FiniteToleranceModule module;
        GroupHom hom;
    };
    auto diag = [](long long m) {
        FiniteAbelianGroup g({m});
        auto gg = g;
        ElemFn mass = [](const GroupElem&) { return ExtQ::of(0); };
        ElemFn cost = [gg](const GroupElem& x) {
            return gg.normalize(x) == gg.zero() ? ExtQ::of(0) : ExtQ::inf();
        };
        FiniteToleranceModule mod(g, g.elements(), mass, ExtQ::inf(), cost, Rational(0));
        mod.mark_diagonal();
        return mod;
    };
    std::vector<Demo> demos;
    demos.push_back({"identity on Z/5 (diagonal)", diag(5),
                     GroupHom::identity(FiniteAbelianGroup({5}))});
    demos.push_back({"Z/9 -> Z/3 (diagonal)", diag(3),
                     GroupHom::reduction(FiniteAbelianGroup({9}), FiniteAbelianGroup({3}))});
    demos.push_back({"Z/27 -> Z/9 (circle 1/9)",
                     FiniteToleranceModule::circle_cyclic(9, make_rational(1, 9)),
                     GroupHom::reduction(FiniteAbelianGroup({27}), FiniteAbelianGroup({9}))});
    demos.push_back({"Z/12 -> Z/6 (circle 1/6)",
                     FiniteToleranceModule::circle_cyclic(6, make_rational(1, 6)),
                     GroupHom::reduction(FiniteAbelianGroup({12}), FiniteAbelianGroup({6}))});
    demos.push_back({"Z/24 -> Z/12 (circle 1/6)",
                     FiniteToleranceModule::circle_cyclic(12, make_rational(1, 6)),
                     GroupHom::reduction(FiniteAbelianGroup({24}), FiniteAbelianGroup({12}))});

    bool all_ok = true;
    json rows = json::array();
    std::printf("%-28s %10s %10s\n", "pair", "dim", "pullback");
    for (auto& demo : demos) {
        auto pulled = pullback(demo.module, demo.hom);
        auto before = dim_bruteforce(demo.module, 6);
        auto after = dim_bruteforce(pulled, 6);
        bool ok = before.dimension && after.dimension && *before.dimension == *after.dimension;
        all_ok = all_ok && ok;
        std::printf("%-28s %10ld %10ld%s\n", demo.label, before.dimension.value_or(-1),
                    after.dimension.value_or(-1), ok ? "" : "  MISMATCH");
        rows.push_back({{"pair", demo.label},
                        {"dim", before.dimension.value_or(-1)},
                        {"pullback_dim", after.dimension.value_or(-1)},
                        {"equal", ok}});
    }
    int rc = emit_report(opts, json{{"rows", rows}, {"all_equal", all_ok}});
    return rc != 0 ? rc : (all_ok ? 0 : 1);
}

int run_oracle_from_json(const std::string& path, int max_card, const OutputOptions& opts) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    json desc = json::parse(f);
    auto m = module_from_json(desc);
    auto r = dim_bruteforce(m, max_card);
    std::string witness;
    for (const auto& g : r.generators) {
        std::string coords;
        for (long long c : g)
            coords += (coords.empty() ? "" : ",") + std::to_string(c);
        witness += (witness.empty() ? "" : "; ") + coords;
    }
    if (r.dimension)
        std::printf("dim = %ld, witness {%s}\n", *r.dimension, witness.c_str());
    else
        std::printf("no generating set of cardinality <= %d\n", max_card);
    return emit_report(opts, json{{"carrier", m.carrier().size()},
                                  {"dim", r.dimension ? json(*r.dimension) : json(nullptr)},
                                  {"witness", witness}});
}

// ---- measure -------------------------------------------------------------------

int run_l_measure(int terms, const OutputOptions& opts) {
    auto m = l_measure(terms);
    std::printf("terms       0..%d\n", m.terms);
    std::printf("value       %.10f\n", m.value);
    std::printf("tail bound  %.3e\n", m.tail_bound);
    return emit_report(opts, json{{"terms", m.terms},
                                  {"value", m.value},
                                  {"tail_bound", m.tail_bound}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dimension data for divisors on the compactified arithmetic spectrum"};
    app.require_subcommand(1);

    // bt
    auto* bt = app.add_subcommand("bt", "balanced-ternary numerals");
    std::string bt_value, bt_decode, bt_truncate;
    std::vector<std::string> bt_add;
    unsigned long bt_digits = 0;
    OutputOptions bt_out;
    bt->add_option("value", bt_value, "integer to encode");
    bt->add_option("--decode", bt_decode, "digit string over {T,0,1}, most significant first");
    bt->add_option("--add", bt_add, "two digit strings to add")->expected(2);
    bt->add_option("--truncate", bt_truncate, "rational p/q to truncate");
    bt->add_option("--digits", bt_digits, "truncation depth m (multiples of 3^-m)");
    add_output_options(bt, bt_out);

    // dim-h0 / dim-h1
    auto* dh0 = app.add_subcommand("dim-h0", "dimension of the sections of a divisor");
    std::string dh0_spec;
    OutputOptions dh0_out;
    dh0->add_option("--divisor", dh0_spec, "divisor spec, e.g. \"2:-2;lambda=1\"")->required();
    add_output_options(dh0, dh0_out);

    auto* dh1 = app.add_subcommand("dim-h1", "dimension of the circle cohomology of a divisor");
    std::string dh1_spec;
    OutputOptions dh1_out;
    dh1->add_option("--divisor", dh1_spec, "divisor spec")->required();
    add_output_options(dh1, dh1_out);

    // genset
    auto* gs = app.add_subcommand("genset", "minimal generating sets of interval modules");
    std::string gs_n;
    bool gs_verify = false;
    long gs_max = -1;
    OutputOptions gs_out;
    gs->add_option("n", gs_n, "interval bound n");
    gs->add_flag("--verify", gs_verify, "exhaustively verify the construction");
    gs->add_option("--max", gs_max, "sweep all n up to this bound (implies --verify)");
    add_output_options(gs, gs_out);

    // exceptional-e
    auto* ee = app.add_subcommand("exceptional-e", "integers needing the repaired construction");
    long ee_max = 610;
    OutputOptions ee_out;
    ee->add_option("--max", ee_max, "upper bound");
    add_output_options(ee, ee_out);

    // circle-cover
    auto* cc = app.add_subcommand("circle-cover", "circle generating sets and cover checks");
    std::string cc_lambda, cc_gens;
    bool cc_verify = false;
    OutputOptions cc_out;
    cc->add_option("--lambda", cc_lambda, "tolerance radius p/q")->required();
    cc->add_option("--gens", cc_gens, "comma-separated rationals; omit to construct");
    cc->add_flag("--verify", cc_verify, "run the full exact cover check on given generators");
    add_output_options(cc, cc_out);

    // rr
    auto* rr = app.add_subcommand("rr", "both sides of the index identity for one divisor");
    std::string rr_spec;
    OutputOptions rr_out;
    rr->add_option("--divisor", rr_spec, "divisor spec")->required();
    add_output_options(rr, rr_out);

    // rr-sweep
    auto* rs = app.add_subcommand("rr-sweep", "verify the identity across a divisor grid");
    SweepParams rs_params;
    OutputOptions rs_out;
    rs->add_option("--lambda-max", rs_params.lambda_max, "numerator/denominator bound");
    rs->add_option("--primes", rs_params.primes_text, "comma-separated primes");
    rs->add_option("--exp-range", rs_params.exp_range, "exponent range, e.g. -3..3");
    rs->add_flag("--with-duality", rs_params.with_duality, "also check duality per divisor");
    add_output_options(rs, rs_out, /*allow_csv=*/true);

    // duality
    auto* du = app.add_subcommand("duality", "duality check for one divisor");
    std::string du_spec;
    OutputOptions du_out;
    du->add_option("--divisor", du_spec, "divisor spec")->required();
    add_output_options(du, du_out);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
    oracle->require_subcommand(1);
    auto* od = oracle->add_subcommand("dim-h0", "formula vs brute-force dimension");
    std::string od_n = "0";
    long od_max = -1;
    OutputOptions od_out;
    od->add_option("n", od_n, "single bound n");
    od->add_option("--max", od_max, "sweep all n up to this bound");
    add_output_options(od, od_out);
    auto* op = oracle->add_subcommand("pullback-demo", "dimension under pullbacks");
    OutputOptions op_out;
    add_output_options(op, op_out);
    auto* oj = oracle->add_subcommand("from-json", "brute-force dimension of a described module");
    std::string oj_path;
    int oj_max_card = 8;
    OutputOptions oj_out;
    oj->add_option("file", oj_path, "module description JSON")->required();
    oj->add_option("--max-card", oj_max_card, "search cardinality bound");
    add_output_options(oj, oj_out);

    // l-measure
    auto* lm = app.add_subcommand("l-measure", "measure of the exceptional degree set");
    int lm_terms = 30;
    OutputOptions lm_out;
    lm->add_option("--terms", lm_terms, "highest term index k");
    add_output_options(lm, lm_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bt->parsed())
            return run_bt(bt_value, bt_decode, bt_add, bt_truncate, bt_digits, bt_out);
        if (dh0->parsed())
            return run_dim_h0(dh0_spec, dh0_out);
        if (dh1->parsed())
            return run_dim_h1(dh1_spec, dh1_out);
        if (gs->parsed()) {
            if (gs_max >= 0)
                return run_genset_sweep(gs_max, gs_out);
            if (gs_n.empty()) {
                std::cerr << "genset: give n or --max\n";
                return 2;
            }
            return run_genset_single(gs_n, gs_verify, gs_out);
        }
        if (ee->parsed())
            return run_exceptional(ee_max, ee_out);
        if (cc->parsed())
            return run_circle_cover(cc_lambda, cc_gens, cc_verify, cc_out);
        if (rr->parsed())
            return run_rr(rr_spec, rr_out);
        if (rs->parsed())
            return run_rr_sweep(rs_params, rs_out);
        if (du->parsed())
            return run_duality(du_spec, du_out);
        if (oracle->parsed()) {
            if (od->parsed())
                return run_oracle_dim(od_n, od_max, od_out);
            if (op->parsed())
                return run_oracle_pullback_demo(op_out);
            if (oj->parsed())
                return run_oracle_from_json(oj_path, oj_max_card, oj_out);
        }
        if (lm->parsed())
            return run_l_measure(lm_terms, lm_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
