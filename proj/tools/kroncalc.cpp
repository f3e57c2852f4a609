// kroncalc: exact Kronecker-coefficient calculator for two two-row shapes,
// reduced Kronecker coefficients, stretching quasipolynomials and
// counter-example searches. Every command is a pure function of its flags;
// output is a human summary or, with --json, a stable machine-readable
// record (byte-identical for identical inputs, also under parallel sweeps).
//
// Exit codes: 0 success, 2 input error, 3 verification mismatch,
// 4 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kron/engine.hpp"
#include "kron/hunt.hpp"
#include "kron/selftest.hpp"
#include "kron/stretch.hpp"

using json = nlohmann::ordered_json;
using namespace kron;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;
constexpr int kExitCap = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct OutputOptions {
    bool json_mode = false;
    bool timings = false;
};

void emit(const json& record, const std::string& human, const OutputOptions& out,
          const Timer& timer) {
    if (out.json_mode) {
        json r = record;
        if (out.timings) r["timing_ms"] = timer.ms();
        std::cout << r.dump(2) << "\n";
    } else {
        std::cout << human;
        if (out.timings)
            std::cout << "time: " << timer.ms() << " ms\n";
    }
}

json quasipolynomial_to_json(const QuasiPolynomial& f) {
    json branches = json::array();
    for (long long i = 1; i <= f.period(); ++i) {
        json coeffs = json::array();
        for (const auto& c : f.branch(i).coefficients()) coeffs.push_back(c.str());
        branches.push_back({{"residue", i % f.period()}, {"coefficients", coeffs}});
    }
    return {{"period", f.period()}, {"branches", branches}};
}

json index_to_json(const std::optional<long long>& idx) {
    if (!idx) return nullptr; // cap exceeded
    return *idx;
}

json report_to_json(const HypothesisReport& rep) {
    json r;
    r["quasipolynomial"] = quasipolynomial_to_json(rep.quasipolynomial);
    r["strong_sh"] = rep.strong_sh_holds;
    r["strong_ph2"] = rep.strong_ph2_holds;
    r["saturation_index"] = index_to_json(rep.saturation_idx);
    if (rep.saturation_idx_class)
        r["saturation_index_class_domain"] = index_to_json(rep.saturation_idx_class);
    r["positivity_index"] = index_to_json(rep.positivity_idx);
    if (rep.shape) {
        r["shape"] = {{"Q", rep.shape->Q},
                      {"L", rep.shape->L},
                      {"delta_even", rep.shape->delta_even.str()},
                      {"delta_odd", rep.shape->delta_odd.str()}};
    }
    return r;
}

std::string index_str(const std::optional<long long>& idx) {
    return idx ? std::to_string(*idx) : std::string("exceeded cap");
}

std::string report_human(const HypothesisReport& rep) {
    std::string s;
    const QuasiPolynomial& f = rep.quasipolynomial;
    s += "period " + std::to_string(f.period()) + "\n";
    for (long long i = 1; i <= f.period(); ++i)
        s += "  N = " + std::to_string(i % f.period()) + " (mod " +
             std::to_string(f.period()) + "): " + f.branch(i).str() + "\n";
    s += "strong SH: " + std::string(rep.strong_sh_holds ? "holds" : "fails") + "\n";
    s += "strong PH2: " + std::string(rep.strong_ph2_holds ? "holds" : "fails") + "\n";
    s += "saturation index: " + index_str(rep.saturation_idx);
    if (rep.saturation_idx_class)
        s += " (residue-class domain: " + index_str(rep.saturation_idx_class) + ")";
    s += "\npositivity index: " + index_str(rep.positivity_idx) + "\n";
    if (rep.shape)
        s += "shape: Q=" + std::to_string(rep.shape->Q) +
             " L=" + std::to_string(rep.shape->L) +
             " delta_even=" + rep.shape->delta_even.str() +
             " delta_odd=" + rep.shape->delta_odd.str() + "\n";
    return s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << content;
}

struct TripleArgs {
    std::string lambda, mu, nu;

    KronTriple parse() const {
        return {Partition::parse(lambda), Partition::parse(mu), Partition::parse(nu)};
    }
};

void add_triple_positionals(CLI::App* cmd, TripleArgs& args) {
    cmd->add_option("lambda", args.lambda, "partition, e.g. 6,4,2")->required();
    cmd->add_option("mu", args.mu, "partition")->required();
    cmd->add_option("nu", args.nu, "partition")->required();
}

json inputs_json(const KronTriple& t) {
    return {{"lambda", t.lambda.str()}, {"mu", t.mu.str()}, {"nu", t.nu.str()}};
}

// Oracle sized for n (plus the stabilization check at n+1) unless the user
// pinned a limit explicitly.
KronOracle make_oracle(long long needed, bool user_set, long long user_max) {
    if (user_set) return KronOracle(int(user_max));
    return KronOracle(int(std::min<long long>(std::max<long long>(needed, 14), 40)));
}

int run_kron(const TripleArgs& args, const std::string& method_str, bool verify,
             bool zero_mode, long long oracle_max, bool oracle_max_set,
             const OutputOptions& out) {
    Timer timer;
    KronTriple t = args.parse();
    KronOracle oracle = make_oracle(t.lambda.weight(), oracle_max_set, oracle_max);
    Method method = parse_method(method_str);
    KronResult res = compute_kron(t, method, oracle);

    json record;
    record["command"] = zero_mode ? "zerokron" : "kron";
    record["inputs"] = inputs_json(t);
    std::string human;
    if (zero_mode) {
        record["result"] = res.value > 0 ? "positive" : "zero";
        human = std::string(res.value > 0 ? "positive" : "zero") + "\n";
    } else {
        record["result"] = res.value;
        human = "g = " + std::to_string(res.value) + "\n";
    }
    record["method"] = method_name(res.method);
    record["determinant_reduction"] = res.determinant_reduction;
    human += "method: " + std::string(method_name(res.method)) +
             (res.determinant_reduction ? " (after determinant reduction)" : "") + "\n";

    if (verify) {
        std::vector<Method> methods;
        if (rotate_to_two_row(t, 4)) {
            methods = {Method::Rosas, Method::Reduced};
            if (t.lambda.weight() <= oracle.max_n()) methods.push_back(Method::Oracle);
        } else {
            throw ParameterError(
                "--verify needs a second method; only the oracle applies to these shapes");
        }
        json checks = json::array();
        std::string vh;
        long long first = 0;
        bool agree = true;
        for (std::size_t i = 0; i < methods.size(); ++i) {
            long long v = compute_kron(t, methods[i], oracle).value;
            checks.push_back({{"method", method_name(methods[i])}, {"value", v}});
            vh += std::string(i ? ", " : "") + method_name(methods[i]) + "=" +
                  std::to_string(v);
            if (i == 0)
                first = v;
            else
                agree = agree && v == first;
        }
        record["verify"] = {{"checks", checks}, {"agree", agree}};
        human += "verify: " + vh + (agree ? " (agree)" : " (MISMATCH)") + "\n";
        if (!agree) {
            emit(record, human, out, timer);
            throw VerifyMismatch("methods disagree on " + t.lambda.str() + " | " +
                                 t.mu.str() + " | " + t.nu.str());
        }
    }
    emit(record, human, out, timer);
    return kExitOk;
}

int run_rkron(const TripleArgs& args, bool polytope, long long oracle_max,
              bool oracle_max_set, const OutputOptions& out) {
    Timer timer;
    Partition gamma = Partition::parse(args.lambda);
    Partition alpha = Partition::parse(args.mu);
    Partition beta = Partition::parse(args.nu);
    json record;
    record["command"] = "rkron";
    record["inputs"] = {{"lambda", gamma.str()}, {"mu", alpha.str()}, {"nu", beta.str()}};
    long long value;
    std::string method;
    if (polytope) {
        if (alpha.length() > 1 || beta.length() > 1 || gamma.length() > 2)
            throw ShapeError("--polytope needs one-row mu, nu and lambda with <= 2 rows");
        value = rkron_one_row(alpha.part(1), beta.part(1), gamma.part(1), gamma.part(2));
        method = "polytope";
    } else {
        long long n0 = alpha.weight() + beta.weight() + alpha.part(1) + beta.part(1) +
                       2 * gamma.weight();
        KronOracle oracle = make_oracle(n0 + 1, oracle_max_set, oracle_max);
        value = rkron_stabilized({gamma, alpha, beta}, oracle);
        method = "stabilized";
    }
    record["result"] = value;
    record["method"] = method;
    emit(record, "gbar = " + std::to_string(value) + "\nmethod: " + method + "\n", out,
         timer);
    return kExitOk;
}

int run_kostka(const std::string& lambda_str, const std::string& mu_str,
               const OutputOptions& out) {
    Timer timer;
    Partition lambda = Partition::parse(lambda_str);
    Partition mu = Partition::parse(mu_str);
    KronOracle oracle;
    long long value = oracle.kostka(lambda, mu);
    json record;
    record["command"] = "kostka";
    record["inputs"] = {{"lambda", lambda.str()}, {"mu", mu.str()}};
    record["result"] = value;
    emit(record, "K = " + std::to_string(value) + "\n", out, timer);
    return kExitOk;
}

int run_lr(const TripleArgs& args, bool via_rkron, long long oracle_max,
           bool oracle_max_set, const OutputOptions& out) {
    Timer timer;
    Partition lambda = Partition::parse(args.lambda);
    Partition mu = Partition::parse(args.mu);
    Partition nu = Partition::parse(args.nu);
    KronOracle tableaux_oracle;
    long long value = tableaux_oracle.lr_coeff(lambda, mu, nu);
    json record;
    record["command"] = "lr";
    record["inputs"] = {{"lambda", lambda.str()}, {"mu", mu.str()}, {"nu", nu.str()}};
    record["result"] = value;
    std::string human = "c = " + std::to_string(value) + "\n";
    if (via_rkron) {
        long long n0 = mu.weight() + nu.weight() + mu.part(1) + nu.part(1) +
                       2 * lambda.weight();
        KronOracle oracle = make_oracle(n0 + 1, oracle_max_set, oracle_max);
        long long reduced = murnaghan_littlewood_lr(lambda, mu, nu, oracle);
        bool agree = reduced == value;
        record["via_rkron"] = reduced;
        record["agree"] = agree;
        human += "via-rkron: " + std::to_string(reduced) +
                 (agree ? " (agree)" : " (MISMATCH)") + "\n";
        if (!agree) {
            emit(record, human, out, timer);
            throw VerifyMismatch("LR-tableaux count and reduced coefficient disagree");
        }
    }
    emit(record, human, out, timer);
    return kExitOk;
}

int run_stretch(const TripleArgs& args, const AnalyzeOptions& opt, long long oracle_max,
                bool oracle_max_set, const OutputOptions& out) {
    Timer timer;
    KronTriple t = args.parse();
    KronOracle oracle =
        make_oracle(t.lambda.weight() * opt.N_max, oracle_max_set, oracle_max);
    StretchSamples samples = sample_stretch(t, opt.N_max, &oracle);
    QuasiPolynomial f = fit_quasipolynomial(samples, opt.period, opt.degree);
    HypothesisReport rep = analyze_quasipolynomial(f, opt);

    json record;
    record["command"] = "stretch";
    record["inputs"] = inputs_json(t);
    record["nmax"] = opt.N_max;
    json vals = json::array();
    for (auto [N, g] : samples.values) vals.push_back({N, g});
    record["samples"] = vals;
    record["method"] = method_name(samples.method);
    record["report"] = report_to_json(rep);

    std::string human = "g~(N) samples:";
    for (auto [N, g] : samples.values) human += " " + std::to_string(g);
    human += "\nmethod: " + std::string(method_name(samples.method)) + "\n";
    human += report_human(rep);
    emit(record, human, out, timer);
    return kExitOk;
}

std::string hunt_csv(const std::vector<HuntHit>& hits) {
    std::string csv =
        "\"lambda\",\"mu\",\"nu\",\"strong_sh\",\"strong_ph2\",\"saturation_index\","
        "\"positivity_index\",\"Q\",\"L\",\"delta_even\",\"delta_odd\"\n";
    for (const auto& h : hits) {
        csv += csv_quote(h.triple.lambda.str()) + "," + csv_quote(h.triple.mu.str()) +
               "," + csv_quote(h.triple.nu.str()) + ",";
        csv += std::string(h.report.strong_sh_holds ? "true" : "false") + ",";
        csv += std::string(h.report.strong_ph2_holds ? "true" : "false") + ",";
        csv += index_str(h.report.saturation_idx) + "," +
               index_str(h.report.positivity_idx) + ",";
        if (h.report.shape)
            csv += std::to_string(h.report.shape->Q) + "," +
                   std::to_string(h.report.shape->L) + "," +
                   csv_quote(h.report.shape->delta_even.str()) + "," +
                   csv_quote(h.report.shape->delta_odd.str());
        else
            csv += ",,,";
        csv += "\n";
    }
    return csv;
}

int run_hunt(long long max_lambda1, const std::string& mode, long long nmax,
             long long cap, unsigned threads, const std::string& csv_path,
             const OutputOptions& out) {
    Timer timer;
    SearchBox box{max_lambda1};
    long long effective_nmax = nmax != 0 ? nmax : (mode == "ph2" ? 8 : 6);
    std::vector<HuntHit> hits;
    bool classification_ok = true;
    if (mode == "sh") {
        hits = hunt_strong_sh(box, effective_nmax, cap, threads);
        for (const auto& h : hits)
            classification_ok = classification_ok && matches_counterexample_family(h.triple);
    } else if (mode == "ph2") {
        hits = hunt_strong_ph2(box, effective_nmax, cap, threads);
        for (const auto& h : hits)
            classification_ok = classification_ok && ph2_congruence_pattern(h.triple);
    } else {
        throw ParseError("unknown hunt mode '" + mode + "' (expected sh or ph2)");
    }

    json record;
    record["command"] = "hunt";
    record["inputs"] = {{"max_lambda1", max_lambda1},
                        {"mode", mode},
                        {"nmax", effective_nmax},
                        {"cap", cap}};
    json jhits = json::array();
    for (const auto& h : hits) {
        json jh = inputs_json(h.triple);
        jh["report"] = report_to_json(h.report);
        jhits.push_back(jh);
    }
    record["hits"] = jhits;
    record["hit_count"] = static_cast<long long>(hits.size());
    record["classification_ok"] = classification_ok;

    std::string human = "hits: " + std::to_string(hits.size()) + "\n";
    for (const auto& h : hits) {
        human += "  lambda=" + h.triple.lambda.str() + " mu=" + h.triple.mu.str() +
                 " nu=" + h.triple.nu.str() + "  s=" + index_str(h.report.saturation_idx) +
                 " p=" + index_str(h.report.positivity_idx);
        if (h.report.shape)
            human += " Q=" + std::to_string(h.report.shape->Q) +
                     " L=" + std::to_string(h.report.shape->L) +
                     " delta_odd=" + h.report.shape->delta_odd.str();
        human += "\n";
    }
    human += std::string("classification (") +
             (mode == "sh" ? "counter-example family" : "congruence pattern") +
             "): " + (classification_ok ? "confirmed" : "VIOLATED") + "\n";
    if (!csv_path.empty()) write_file(csv_path, hunt_csv(hits));
    emit(record, human, out, timer);
    return classification_ok ? kExitOk : kExitVerify;
}

int run_selftest(long long max_weight, unsigned threads, const std::string& csv_path,
                 const OutputOptions& out) {
    Timer timer;
    SelftestResult res = selftest_sweep(max_weight, threads);

    if (!csv_path.empty()) {
        // one row per checked triple, regenerated in canonical order
        std::string csv = "\"lambda\",\"mu\",\"nu\",\"rosas\",\"reduced\",\"oracle\"\n";
        KronOracle oracle(int(std::max<long long>(max_weight, 14)));
        for (long long n = 1; n <= max_weight; ++n)
            for (const auto& t : two_two_row_triples_of_weight(n))
                csv += csv_quote(t.lambda.str()) + "," + csv_quote(t.mu.str()) + "," +
                       csv_quote(t.nu.str()) + "," + std::to_string(kron_two_row(t)) +
                       "," + std::to_string(kron_from_reduced_2x2(t)) + "," +
                       std::to_string(oracle.kron_oracle(t)) + "\n";
        write_file(csv_path, csv);
    }

    json record;
    record["command"] = "selftest";
    record["inputs"] = {{"max_weight", max_weight}};
    record["triples_checked"] = res.triples_checked;
    json mism = json::array();
    for (const auto& c : res.mismatches) {
        json jm = inputs_json(c.triple);
        jm["rosas"] = c.rosas;
        jm["reduced"] = c.reduced;
        jm["oracle"] = c.oracle;
        mism.push_back(jm);
    }
    record["mismatches"] = mism;
    record["pass"] = res.pass();

    std::string human = "checked " + std::to_string(res.triples_checked) +
                        " triples up to weight " + std::to_string(max_weight) + ": ";
    if (res.pass()) {
        human += "all three methods agree\n";
    } else {
        human += std::to_string(res.mismatches.size()) + " MISMATCHES\n";
        for (const auto& c : res.mismatches)
            human += "  lambda=" + c.triple.lambda.str() + " mu=" + c.triple.mu.str() +
                     " nu=" + c.triple.nu.str() + " rosas=" + std::to_string(c.rosas) +
                     " reduced=" + std::to_string(c.reduced) +
                     " oracle=" + std::to_string(c.oracle) + "\n";
    }
    emit(record, human, out, timer);
    return res.pass() ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Kronecker coefficient engine for two two-row shapes"};
    app.require_subcommand(1);

    OutputOptions out;
    TripleArgs kron_args, zero_args, rkron_args, lr_args, stretch_args;
    std::string kostka_lambda, kostka_mu;
    std::string method_str = "auto";
    std::string saturation_domain = "all";
    bool verify = false, polytope = false, via_rkron = false;
    long long oracle_max = 14;
    AnalyzeOptions stretch_opt;
    long long hunt_max_lambda1 = 0, hunt_nmax = 0, hunt_cap = 100;
    std::string hunt_mode = "sh", csv_path;
    unsigned threads = 0;
    long long selftest_max_weight = 9;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", out.json_mode, "machine-readable output");
        cmd->add_flag("--timings", out.timings, "include elapsed time in the output");
    };

    auto* c_kron = app.add_subcommand("kron", "Kronecker coefficient g_{mu,nu}^lambda");
    add_triple_positionals(c_kron, kron_args);
    c_kron->add_option("--method", method_str, "rosas | reduced | oracle | auto");
    c_kron->add_flag("--verify", verify, "cross-check all applicable methods");
    auto* kron_omax = c_kron->add_option("--oracle-max", oracle_max,
                                         "largest symmetric group the oracle may use");
    add_common(c_kron);

    auto* c_zero = app.add_subcommand("zerokron", "decide positivity of g_{mu,nu}^lambda");
    add_triple_positionals(c_zero, zero_args);
    auto* zero_omax = c_zero->add_option("--oracle-max", oracle_max, "oracle size limit");
    add_common(c_zero);

    auto* c_rkron =
        app.add_subcommand("rkron", "reduced Kronecker coefficient gbar_{mu,nu}^lambda");
    add_triple_positionals(c_rkron, rkron_args);
    c_rkron->add_flag("--polytope", polytope,
                      "use the lattice-point system (one-row mu, nu; lambda <= 2 rows)");
    auto* rkron_omax = c_rkron->add_option("--oracle-max", oracle_max, "oracle size limit");
    add_common(c_rkron);

    auto* c_kostka = app.add_subcommand("kostka", "Kostka number K_{lambda,mu}");
    c_kostka->add_option("lambda", kostka_lambda, "partition")->required();
    c_kostka->add_option("mu", kostka_mu, "partition")->required();
    add_common(c_kostka);

    auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c_{mu,nu}^lambda");
    add_triple_positionals(c_lr, lr_args);
    c_lr->add_flag("--via-rkron", via_rkron,
                   "also compute through the reduced Kronecker coefficient and compare");
    auto* lr_omax = c_lr->add_option("--oracle-max", oracle_max, "oracle size limit");
    add_common(c_lr);

    auto* c_stretch =
        app.add_subcommand("stretch", "fit and analyze the stretching quasipolynomial");
    add_triple_positionals(c_stretch, stretch_args);
    c_stretch->add_option("--nmax", stretch_opt.N_max, "number of samples (default 8)");
    c_stretch->add_option("--period", stretch_opt.period, "fit period (default 2)");
    c_stretch->add_option("--degree", stretch_opt.degree, "fit degree (default 2)");
    c_stretch->add_option("--cap", stretch_opt.cap, "index search cap (default 100)");
    c_stretch->add_option("--saturation-domain", saturation_domain,
                          "all | class: integers tested for branch positivity");
    auto* stretch_omax =
        c_stretch->add_option("--oracle-max", oracle_max, "oracle size limit");
    add_common(c_stretch);

    auto* c_hunt = app.add_subcommand("hunt", "search a box for counter-examples");
    c_hunt->add_option("--max-lambda1", hunt_max_lambda1, "bound on lambda_1")->required();
    c_hunt->add_option("--mode", hunt_mode, "sh | ph2 (default sh)");
    c_hunt->add_option("--nmax", hunt_nmax, "sampling window (default 6 for sh, 8 for ph2)");
    c_hunt->add_option("--cap", hunt_cap, "index search cap (default 100)");
    c_hunt->add_option("--threads", threads, "worker threads (default: hardware)");
    c_hunt->add_option("--csv", csv_path, "also write hits as CSV to this path");
    add_common(c_hunt);

    auto* c_self = app.add_subcommand("selftest", "oracle-equivalence sweep");
    c_self->add_option("--max-weight", selftest_max_weight, "sweep bound (default 9)");
    c_self->add_option("--threads", threads, "worker threads (default: hardware)");
    c_self->add_option("--csv", csv_path, "also write all checked triples as CSV");
    add_common(c_self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c_kron)
            return run_kron(kron_args, method_str, verify, false, oracle_max,
                            kron_omax->count() > 0, out);
        if (*c_zero)
            return run_kron(zero_args, "auto", false, true, oracle_max,
                            zero_omax->count() > 0, out);
        if (*c_rkron)
            return run_rkron(rkron_args, polytope, oracle_max, rkron_omax->count() > 0, out);
        if (*c_kostka) return run_kostka(kostka_lambda, kostka_mu, out);
        if (*c_lr)
            return run_lr(lr_args, via_rkron, oracle_max, lr_omax->count() > 0, out);
        if (*c_stretch) {
            if (saturation_domain == "class")
                stretch_opt.saturation_domain = SaturationDomain::ResidueClass;
            else if (saturation_domain != "all")
                throw ParseError("--saturation-domain must be 'all' or 'class'");
            return run_stretch(stretch_args, stretch_opt, oracle_max,
                               stretch_omax->count() > 0, out);
        }
        if (*c_hunt)
            return run_hunt(hunt_max_lambda1, hunt_mode, hunt_nmax, hunt_cap, threads,
                            csv_path, out);
        if (*c_self) return run_selftest(selftest_max_weight, threads, csv_path, out);
        return kExitInput;
    } catch (const VerifyMismatch& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return kExitVerify;
    } catch (const OracleOverflow& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const FitMismatch& e) {
        std::cerr << "fit error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InsufficientSamples& e) {
        std::cerr << "fit error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
