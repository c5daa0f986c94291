#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "genera/chern.hpp"
#include "genera/errors.hpp"
#include "genera/genus.hpp"
#include "genera/json_io.hpp"
#include "genera/set_partition.hpp"
#include "genera/verify.hpp"
#include "genera/zeta_numeric.hpp"
#include "genera/zeta_values.hpp"

namespace {

using namespace genera;

struct OutputConfig {
    std::string format = "pretty"; // json | csv | pretty
    bool reduce = false;
    int numeric = 0; // decimal digits; 0 means symbolic output
    std::uint64_t seed = 12345;
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

ZetaExpr maybe_reduce(const ZetaExpr& x, const OutputConfig& cfg) {
    return cfg.reduce ? x.reduce_even() : x;
}

std::string numeric_string(const ZetaExpr& x, const OutputConfig& cfg) {
    return eval_numeric(x, ZetaEvalContext{cfg.numeric, 10000}).to_string(cfg.numeric);
}

std::string value_string(const ZetaExpr& x, const OutputConfig& cfg) {
    if (cfg.numeric > 0) return numeric_string(x, cfg);
    return maybe_reduce(x, cfg).to_string();
}

void emit(const std::string& s) { std::cout << s << '\n'; }

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot open input file: '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SetPartition set_partition_from_json_text(const std::string& text) {
    nlohmann::json j = parse_json_text(text);
    if (!j.is_array()) throw std::domain_error("a set partition is an array of blocks");
    std::vector<std::vector<int>> blocks;
    int count = 0;
    for (const nlohmann::json& block : j) {
        if (!block.is_array() || block.empty())
            throw std::domain_error("every block must be a nonempty array of integers");
        std::vector<int> b;
        for (const nlohmann::json& el : block) {
            if (!el.is_number_integer())
                throw std::domain_error("block elements must be integers");
            b.push_back(el.get<int>());
            ++count;
        }
        blocks.push_back(std::move(b));
    }
    return SetPartition(count, std::move(blocks));
}

int run_coeffs(const std::string& genus_name, int weight, const OutputConfig& cfg) {
    const GenusSpec g = builtin_genus(genus_name, weight);
    const PartitionMap<ZetaExpr> table = coefficient_table(g, weight);
    if (cfg.format == "json") {
        nlohmann::json j = table_to_json(genus_name, weight, table);
        if (cfg.numeric > 0)
            for (auto& entry : j["entries"])
                entry["numeric"] =
                    numeric_string(zeta_expr_from_json(entry["coef"]), cfg);
        emit(j.dump());
    } else if (cfg.format == "csv") {
        emit("partition,value");
        for (const auto& [lam, coef] : table)
            emit(csv_quote(lam.to_string()) + "," + csv_quote(value_string(coef, cfg)));
    } else {
        for (const auto& [lam, coef] : table)
            emit(lam.to_string() + " -> " + value_string(coef, cfg));
    }
    return 0;
}

int run_zeta(const std::string& kind, const std::vector<int>& t, const OutputConfig& cfg) {
    ZetaExpr x = kind == "star" ? zeta_star_sym(t) : zeta_sym(t);
    if (cfg.format == "json") {
        nlohmann::json j = zeta_expr_to_json(maybe_reduce(x, cfg));
        if (cfg.numeric > 0) j["numeric"] = numeric_string(x, cfg);
        emit(j.dump());
    } else if (cfg.format == "csv") {
        emit("value");
        emit(csv_quote(value_string(x, cfg)));
    } else {
        emit(value_string(x, cfg));
    }
    return 0;
}

int run_mobius(const std::string& pi_text, const std::string& rho_text,
               const OutputConfig& cfg) {
    SetPartition pi = set_partition_from_json_text(pi_text);
    SetPartition rho = set_partition_from_json_text(rho_text);
    if (pi.n() != rho.n())
        throw std::domain_error("both set partitions must share one ground set");
    Integer mu = mobius(pi, rho);
    if (cfg.format == "json") {
        emit(nlohmann::json{{"mobius", mu.get_str()}}.dump());
    } else if (cfg.format == "csv") {
        emit("mobius");
        emit(mu.get_str());
    } else {
        emit(mu.get_str());
    }
    return 0;
}

int run_partitions(int n, bool set_mode, const OutputConfig& cfg) {
    if (n < 0) throw std::domain_error("n must be nonnegative");
    if (set_mode) {
        if (n < 1) throw std::domain_error("set partitions need n >= 1");
        if (n > kMaxEnumerationN)
            throw capability_error("set partition enumeration is capped at n = " +
                                   std::to_string(kMaxEnumerationN));
        std::vector<SetPartition> all = enumerate_set_partitions(n);
        if (cfg.format == "json") {
            nlohmann::json list = nlohmann::json::array();
            for (const SetPartition& pi : all) list.push_back(pi.blocks());
            emit(nlohmann::json{{"n", n}, {"count", all.size()}, {"partitions", list}}.dump());
        } else if (cfg.format == "csv") {
            emit("partition,type");
            for (const SetPartition& pi : all)
                emit(csv_quote(pi.to_string()) + "," + csv_quote(pi.type().to_string()));
        } else {
            for (const SetPartition& pi : all) emit(pi.to_string());
            emit("count: " + std::to_string(all.size()));
        }
        return 0;
    }
    std::vector<IntPartition> all = partitions_of_weight(n);
    if (cfg.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const IntPartition& lam : all) list.push_back(lam.parts());
        emit(nlohmann::json{{"n", n}, {"count", all.size()}, {"partitions", list}}.dump());
    } else if (cfg.format == "csv") {
        emit("partition");
        for (const IntPartition& lam : all) emit(csv_quote(lam.to_string()));
    } else {
        for (const IntPartition& lam : all) emit(lam.to_string());
        emit("count: " + std::to_string(all.size()));
    }
    return 0;
}

template <class V>
int emit_partition_vector(const V& v, const OutputConfig& cfg) {
    if (cfg.format == "json") {
        emit(chern_vector_to_json(v).dump());
    } else if (cfg.format == "csv") {
        emit("partition,value");
        for (const auto& [lam, value] : v.entries())
            emit(csv_quote(lam.to_string()) + "," + csv_quote(rat_to_string(value)));
    } else {
        for (const auto& [lam, value] : v.entries())
            emit(lam.to_string() + " -> " + rat_to_string(value));
    }
    return 0;
}

int run_convert(const std::string& to, const std::string& path, const OutputConfig& cfg) {
    nlohmann::json j = parse_json_text(read_input_file(path));
    if (to == "ch") return emit_partition_vector(chern_to_ch(chern_vector_from_json<ChernVector>(j)), cfg);
    if (to == "chern") return emit_partition_vector(ch_to_chern(chern_vector_from_json<ChVector>(j)), cfg);
    throw std::domain_error("--to must be 'ch' or 'chern'");
}

void hyper_kahler_report(const GenusSpec& g, const ZetaExpr& value) {
    if (g.name() != "td_half") return;
    bool inside;
    if (value.reduce_even().is_rational()) {
        Rational v = value.reduce_even().rational_value();
        inside = v > 0 && v < 1;
    } else {
        BigFloat v = eval_numeric(value, ZetaEvalContext{30, 10000});
        inside = v > BigFloat::from_long(0, 128) && v < BigFloat::from_long(1, 128);
    }
    if (inside)
        std::cerr << "note: the value lies in (0,1), as the hyper-Kahler bound for the "
                     "square-root Todd genus requires; this tool is not a theorem checker.\n";
    else
        std::cerr << "note: the value lies outside (0,1), so the hyper-Kahler bound for the "
                     "square-root Todd genus excludes these Chern numbers; this tool is not a "
                     "theorem checker.\n";
}

int run_eval(const std::string& genus_name, const std::string& path, const OutputConfig& cfg) {
    nlohmann::json j = parse_json_text(read_input_file(path));
    ChernVector c = chern_vector_from_json<ChernVector>(j);
    const GenusSpec g = builtin_genus(genus_name, std::max(1, c.dim()));
    ZetaExpr value = evaluate_genus(g, c);
    hyper_kahler_report(g, value);
    if (cfg.format == "json") {
        nlohmann::json out{{"genus", genus_name},
                           {"dim", c.dim()},
                           {"value", zeta_expr_to_json(maybe_reduce(value, cfg))}};
        if (cfg.numeric > 0) out["numeric"] = numeric_string(value, cfg);
        emit(out.dump());
    } else if (cfg.format == "csv") {
        emit("genus,dim,value");
        emit(csv_quote(genus_name) + "," + std::to_string(c.dim()) + "," +
             csv_quote(value_string(value, cfg)));
    } else {
        emit(value_string(value, cfg));
    }
    return 0;
}

int run_verify(const std::string& which, const OutputConfig& cfg) {
    std::vector<SuiteResult> results;
    if (which == "all") {
        results = run_all_verify_suites(cfg.seed);
    } else {
        results.push_back(run_verify_suite(which, cfg.seed));
    }
    bool all_pass = true;
    nlohmann::json jout = nlohmann::json::array();
    for (const SuiteResult& r : results) {
        all_pass = all_pass && r.pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s", r.seconds);
        std::cerr << r.name << ": " << timing << '\n';
        if (cfg.format == "json") {
            nlohmann::json entry{{"suite", r.name}, {"pass", r.pass}};
            if (!r.pass) entry["detail"] = r.detail;
            jout.push_back(entry);
        } else if (cfg.format == "csv") {
            // header precedes the loop output below
        } else {
            emit(r.name + ": " + (r.pass ? "pass" : "FAIL (" + r.detail + ")"));
        }
    }
    if (cfg.format == "json") {
        emit(nlohmann::json{{"pass", all_pass}, {"suites", jout}}.dump());
    } else if (cfg.format == "csv") {
        emit("suite,pass");
        for (const SuiteResult& r : results)
            emit(csv_quote(r.name) + "," + (r.pass ? "1" : "0"));
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coefficients of complex genera over the zeta coefficient ring"};
    app.require_subcommand(1);

    OutputConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_flag("--reduce", cfg.reduce, "Rewrite even zetas as powers of pi");
    app.add_option("--numeric", cfg.numeric, "Render values numerically with this many digits")
        ->check(CLI::Range(1, 50));
    app.add_option("--seed", cfg.seed, "Seed for randomized verification suites")
        ->capture_default_str();

    std::string genus_name, zeta_kind, pi_text, rho_text, input_path, convert_to = "ch";
    std::string suite = "all";
    std::vector<int> exponents;
    int weight = 0, pn = 0;
    bool set_mode = false;

    CLI::App* coeffs = app.add_subcommand("coeffs", "Coefficient table of a genus at a weight");
    coeffs->add_option("genus", genus_name, "todd, td_half, or gamma")->required();
    coeffs->add_option("weight", weight, "Total weight of the table")->required();

    CLI::App* zeta = app.add_subcommand("zeta", "Symmetric (star) multiple zeta value");
    zeta->add_option("kind", zeta_kind, "sym or star")
        ->required()
        ->check(CLI::IsMember({"sym", "star"}));
    zeta->add_option("exponents", exponents,
                     "Exponent list; entries of 1 regularize to gamma, star needs every entry >= 2")
        ->required();

    CLI::App* mob = app.add_subcommand("mobius", "Mobius function between two set partitions");
    mob->add_option("pi", pi_text, "Finer partition as JSON blocks, e.g. [[1],[2],[3]]")
        ->required();
    mob->add_option("rho", rho_text, "Coarser partition as JSON blocks")->required();

    CLI::App* parts = app.add_subcommand("partitions", "Integer or set partitions");
    parts->add_option("n", pn, "Weight, or ground-set size with --set")->required();
    parts->add_flag("--set", set_mode, "Enumerate set partitions of {1..n}");

    CLI::App* conv = app.add_subcommand("convert", "Convert Chern data between bases");
    conv->add_option("file", input_path, "ChernVector JSON file, or - for stdin")->required();
    conv->add_option("--to", convert_to, "Target basis: ch or chern")
        ->required()
        ->check(CLI::IsMember({"ch", "chern"}));

    CLI::App* ev = app.add_subcommand("eval", "Evaluate a genus on a Chern vector");
    ev->add_option("genus", genus_name, "todd, td_half, or gamma")->required();
    ev->add_option("file", input_path, "ChernVector JSON file, or - for stdin")->required();

    CLI::App* ver = app.add_subcommand("verify", "Run invariant suites");
    ver->add_option("suite", suite, "Suite name, or all")->capture_default_str();

    // Global flags may follow the subcommand, as in `coeffs td_half 4 --reduce`.
    for (CLI::App* sub : {coeffs, zeta, mob, parts, conv, ev, ver}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (coeffs->parsed()) return run_coeffs(genus_name, weight, cfg);
        if (zeta->parsed()) return run_zeta(zeta_kind, exponents, cfg);
        if (mob->parsed()) return run_mobius(pi_text, rho_text, cfg);
        if (parts->parsed()) return run_partitions(pn, set_mode, cfg);
        if (conv->parsed()) return run_convert(convert_to, input_path, cfg);
        if (ev->parsed()) return run_eval(genus_name, input_path, cfg);
        if (ver->parsed()) return run_verify(suite, cfg);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
