// projlab command line: sample | limit | rate | chi | verify

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "projlab/ensembles.hpp"
#include "projlab/harness.hpp"
#include "projlab/limits.hpp"
#include "projlab/rate.hpp"
#include "projlab/serialize.hpp"
#include "projlab/spectra.hpp"
#include "projlab/tracial.hpp"

namespace {

using namespace projlab;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PROJLAB_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

struct RankSpec {
    int N = 0;
    int k = -1, l = -1;
    double alpha = -1.0, beta = -1.0;

    // exactly one of (k,l) or (alpha,beta); alpha/beta mode rounds to ranks
    void resolve() {
        const bool have_kl = k >= 0 || l >= 0;
        const bool have_ab = alpha >= 0.0 || beta >= 0.0;
        if (have_kl == have_ab)
            throw CLI::ValidationError("give exactly one of (--k, --l) or (--alpha, --beta)");
        if (have_ab) {
            if (alpha < 0.0 || beta < 0.0)
                throw CLI::ValidationError("both --alpha and --beta are required");
            k = static_cast<int>(std::lround(alpha * N));
            l = static_cast<int>(std::lround(beta * N));
        } else {
            if (k < 0 || l < 0)
                throw CLI::ValidationError("both --k and --l are required");
            alpha = static_cast<double>(k) / N;
            beta = static_cast<double>(l) / N;
        }
    }
};

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parameter_error("cannot open output file: " + path);
    out << body;
}

void emit_json(const Json& j, const std::string& path) {
    const std::string body = j.dump(2) + "\n";
    if (path.empty()) std::cout << body;
    else write_text(path, body);
}

int cmd_sample(int N, RankSpec ranks, const CatalogFunction& fn, int samples,
               std::uint64_t seed, const std::string& out, const std::string& format,
               int threads) {
    ranks.N = N;
    ranks.resolve();
    std::vector<std::vector<double>> rows(samples);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < samples; i = next.fetch_add(1)) {
            const ProjectionPair pair = sample_pair(N, ranks.k, ranks.l,
                                                    {seed, static_cast<std::uint64_t>(i)});
            rows[i] = catalog_spectrum(pair, fn);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    if (format == "csv") {
        std::string body;
        body += "# projlab sample\n";
        body += "# N=" + std::to_string(N) + " k=" + std::to_string(ranks.k) +
                " l=" + std::to_string(ranks.l) + " alpha=" + format_double(ranks.alpha) +
                " beta=" + format_double(ranks.beta) + "\n";
        body += std::string("# fn=") + fn.name() + " samples=" + std::to_string(samples) +
                " seed=" + std::to_string(seed) + "\n";
        body += "# rows: sorted eigenvalues per sample";
        if (!fn.hermitian()) body += " (angles in (-pi, pi])";
        body += "\n";
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) body += ",";
                body += format_double(row[j]);
            }
            body += "\n";
        }
        write_text(out, body);
    } else {
        Json meta{{"N", N},       {"k", ranks.k},       {"l", ranks.l},
                  {"alpha", ranks.alpha}, {"beta", ranks.beta}, {"fn", fn.name()},
                  {"samples", samples},   {"seed", seed}};
        emit_json(Json{{"meta", meta}, {"rows", rows}}, out);
    }
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& report_path,
               int threads) {
    SuiteConfig cfg;
    cfg.threads = threads;
    std::vector<std::string> wanted;
    if (suite == "all") wanted = suite_names();
    else wanted.push_back(suite);

    Json reports = Json::array();
    bool all_pass = true;
    for (const auto& name : wanted) {
        const VerificationReport r = run_suite(name, cfg, seed);
        all_pass = all_pass && r.pass;
        reports.push_back(report_to_json(r));
        for (const auto& c : r.checks) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " [" << r.suite << "] " << c.name
                      << "  statistic=" << format_double(c.statistic)
                      << " threshold=" << format_double(c.threshold) << "\n";
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << " suite " << r.suite << " ("
                  << format_double(r.duration_seconds) << " s)\n";
    }
    if (!report_path.empty())
        write_text(report_path, (reports.size() == 1 ? reports[0] : Json{{"suites", reports}})
                                        .dump(2) + "\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation and verification lab for pairs of random projection matrices"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "sample spectra of h(P,Q)");
    int s_N = 0, s_samples = 1, s_threads = 1;
    RankSpec s_ranks;
    std::string s_fn = "pqp", s_out, s_format = "csv";
    double s_a = 1.0, s_b = 1.0;
    std::uint64_t s_seed = default_seed();
    sample->add_option("--N", s_N, "matrix dimension")->required();
    sample->add_option("--k", s_ranks.k, "rank of P");
    sample->add_option("--l", s_ranks.l, "rank of Q");
    sample->add_option("--alpha", s_ranks.alpha, "rank fraction of P, k = round(alpha N)");
    sample->add_option("--beta", s_ranks.beta, "rank fraction of Q, l = round(beta N)");
    sample->add_option("--fn", s_fn, "pqp | anticommutator | linear | unitary");
    sample->add_option("--a", s_a, "linear coefficient a");
    sample->add_option("--b", s_b, "linear coefficient b");
    sample->add_option("--samples", s_samples, "number of samples");
    sample->add_option("--seed", s_seed, "master seed (default from PROJLAB_SEED)");
    sample->add_option("--out", s_out, "output path")->required();
    sample->add_option("--format", s_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--threads", s_threads, "sampler threads");

    // ---- limit ----
    auto* limit = app.add_subcommand("limit", "closed-form limiting law");
    double l_alpha = 0.5, l_beta = 0.5, l_a = 1.0, l_b = 1.0;
    int l_grid = 1000;
    std::string l_fn = "pqp", l_out;
    limit->add_option("--alpha", l_alpha, "limit rank fraction of P")->required();
    limit->add_option("--beta", l_beta, "limit rank fraction of Q")->required();
    limit->add_option("--fn", l_fn, "pqp | anticommutator | linear | unitary");
    limit->add_option("--a", l_a, "linear coefficient a");
    limit->add_option("--b", l_b, "linear coefficient b");
    limit->add_option("--grid", l_grid, "density grid resolution");
    limit->add_option("--out", l_out, "output path (stdout when omitted)");

    // ---- rate ----
    auto* rate = app.add_subcommand("rate", "rate-functional value of a measure file");
    std::string r_measure, r_fn = "pqp", r_out;
    double r_alpha = 0.5, r_beta = 0.5, r_a = 1.0, r_b = 1.0;
    rate->add_option("--measure", r_measure, "SpectralMeasure JSON path")->required();
    rate->add_option("--alpha", r_alpha)->required();
    rate->add_option("--beta", r_beta)->required();
    rate->add_option("--fn", r_fn, "pqp | anticommutator | linear | unitary");
    rate->add_option("--a", r_a, "linear coefficient a");
    rate->add_option("--b", r_b, "linear coefficient b");
    rate->add_option("--out", r_out, "output path (stdout when omitted)");

    // ---- chi ----
    auto* chi = app.add_subcommand("chi", "free entropy of a tracial state file");
    std::string c_state, c_out;
    chi->add_option("--state", c_state, "TracialState JSON path")->required();
    chi->add_option("--out", c_out, "output path (stdout when omitted)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string v_suite = "all", v_report;
    std::uint64_t v_seed = default_seed();
    int v_threads = 1;
    verify->add_option("--suite", v_suite, "suite name or 'all'");
    verify->add_option("--seed", v_seed, "master seed (default from PROJLAB_SEED)");
    verify->add_option("--report", v_report, "write JSON report here");
    verify->add_option("--threads", v_threads, "sampler threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed())
            return cmd_sample(s_N, s_ranks, catalog_from_name(s_fn, s_a, s_b), s_samples,
                              s_seed, s_out, s_format, s_threads);
        if (limit->parsed()) {
            const LimitLaw law =
                minimizer_for(catalog_from_name(l_fn, l_a, l_b), l_alpha, l_beta);
            Json j = law_to_json(law, l_grid);
            j["alpha"] = l_alpha;
            j["beta"] = l_beta;
            j["fn"] = l_fn;
            emit_json(j, l_out);
            return 0;
        }
        if (rate->parsed()) {
            std::ifstream in(r_measure);
            if (!in) throw parameter_error("cannot read measure file: " + r_measure);
            const SpectralMeasure m = measure_from_json(Json::parse(in));
            const ExtReal v =
                rate_contracted(m, catalog_from_name(r_fn, r_a, r_b), r_alpha, r_beta);
            emit_json(Json{{"value", ext_real_to_json(v)}}, r_out);
            return 0;
        }
        if (chi->parsed()) {
            std::ifstream in(c_state);
            if (!in) throw parameter_error("cannot read state file: " + c_state);
            const TracialState tau = state_from_json(Json::parse(in));
            emit_json(Json{{"value", ext_real_to_json(free_entropy(tau))}}, c_out);
            return 0;
        }
        if (verify->parsed()) return run_verify(v_suite, v_seed, v_report, v_threads);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed input file: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
