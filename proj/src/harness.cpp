#include "projlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

#include "projlab/ensembles.hpp"
#include "projlab/limits.hpp"
#include "projlab/quadrature.hpp"
#include "projlab/rate.hpp"
#include "projlab/tracial.hpp"

namespace projlab {

namespace {

constexpr double pi = std::numbers::pi;

// fixed stream-index bases so suites sharing a master seed never collide
constexpr std::uint64_t kStructureBase = 1'000'000;
constexpr std::uint64_t kFreenessBase = 2'000'000;
constexpr std::uint64_t kContractionBase = 3'000'000;
constexpr std::uint64_t kMomentsBase = 4'000'000;
constexpr std::uint64_t kUnitaryBase = 5'000'000;

void parallel_indexed(int count, int threads, const std::function<void(int)>& fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

struct Welford {
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / (n - 1) : 0.0; }
    double standard_error() const { return std::sqrt(variance() / n); }
};

void add_check(VerificationReport& r, std::string name, double statistic,
               double threshold, long samples, std::uint64_t seed) {
    r.checks.push_back(
        {std::move(name), statistic, threshold, samples, seed, statistic <= threshold});
}

// ---------------------------------------------------------------- selberg

// brute-force quadrature of the unnormalized eigenvalue density on [0,1]^n
double brute_force_z(int n, int kappa, int lambda) {
    const GaussLegendre& rule = gl32();
    std::vector<double> x(rule.nodes.size()), w(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        x[i] = 0.5 * (rule.nodes[i] + 1.0);
        w[i] = 0.5 * rule.weights[i];
    }
    auto weight1 = [&](double t) {
        return std::pow(t, kappa) * std::pow(1.0 - t, lambda);
    };
    const std::size_t m = x.size();
    double total = 0.0;
    if (n == 1) {
        for (std::size_t i = 0; i < m; ++i) total += w[i] * weight1(x[i]);
    } else if (n == 2) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const double d = x[i] - x[j];
                total += w[i] * w[j] * weight1(x[i]) * weight1(x[j]) * d * d;
            }
    } else if (n == 3) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k) {
                    const double v = (x[i] - x[j]) * (x[i] - x[k]) * (x[j] - x[k]);
                    total += w[i] * w[j] * w[k] * weight1(x[i]) * weight1(x[j]) *
                             weight1(x[k]) * v * v;
                }
    } else {
        throw parameter_error("brute_force_z: only n <= 3 supported");
    }
    return total;
}

VerificationReport suite_selberg(const SuiteConfig&, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "selberg";
    const int cases[][3] = {{1, 0, 0}, {2, 0, 0}, {2, 1, 1}, {3, 2, 1}};
    for (const auto& c : cases) {
        const double brute = brute_force_z(c[0], c[1], c[2]);
        const double closed = std::exp(selberg_log_z(c[0], c[1], c[2]));
        const double rel = std::abs(brute - closed) / std::abs(brute);
        add_check(r,
                  "Z(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                      std::to_string(c[2]) + ") vs quadrature, relative",
                  rel, 1e-6, 0, seed);
    }
    return r;
}

// ---------------------------------------------------------------- b_limit

VerificationReport suite_b_limit(const SuiteConfig&, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "b_limit";
    const double pairs[][2] = {{0.5, 0.5}, {0.3, 0.6}};
    for (const auto& ab : pairs) {
        const RateParams p = rate_params(ab[0], ab[1]);
        const double limit = p.C;
        std::vector<double> errs;
        for (int N : {64, 128, 256}) {
            const int k = static_cast<int>(std::lround(ab[0] * N));
            const int l = static_cast<int>(std::lround(ab[1] * N));
            const SpectrumParams sp = spectrum_params(N, k, l);
            const double v = selberg_log_z(sp.n, sp.kappaN, sp.lambdaN) /
                             (static_cast<double>(N) * N);
            errs.push_back(std::abs(v - limit));
        }
        const std::string tag =
            "(" + std::to_string(ab[0]) + "," + std::to_string(ab[1]) + ")";
        add_check(r, "final error at N=256, alpha,beta=" + tag, errs.back(), 0.05, 0, seed);
        const double worst_step =
            std::max(errs[1] - errs[0], errs[2] - errs[1]);
        add_check(r, "error decreasing along N=64,128,256, alpha,beta=" + tag,
                  worst_step, 0.0, 0, seed);
    }
    return r;
}

// --------------------------------------------------------------- structure

std::array<double, 4> pq_power_traces(const ProjectionPair& pair) {
    const Matrix x = pair.P * pair.Q;
    Matrix acc = x;
    std::array<double, 4> out{};
    for (int m = 0; m < 4; ++m) {
        out[m] = acc.trace().real() / pair.N;
        if (m < 3) acc = acc * x;
    }
    return out;
}

VerificationReport suite_structure(const SuiteConfig& cfg, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "structure";
    const int configs[][3] = {{12, 3, 4}, {12, 7, 8}};
    const int samples = 10'000;
    std::uint64_t base = kStructureBase;
    for (const auto& c : configs) {
        std::vector<std::array<double, 4>> haar(samples), canon(samples);
        parallel_indexed(samples, cfg.threads, [&](int i) {
            haar[i] = pq_power_traces(
                sample_pair(c[0], c[1], c[2], {seed, base + 2ull * i}));
            canon[i] = pq_power_traces(
                canonical_pair(c[0], c[1], c[2], {seed, base + 2ull * i + 1}));
        });
        for (int m = 0; m < 4; ++m) {
            Welford wh, wc;
            for (int i = 0; i < samples; ++i) {
                wh.add(haar[i][m]);
                wc.add(canon[i][m]);
            }
            const double se = std::sqrt(wh.standard_error() * wh.standard_error() +
                                        wc.standard_error() * wc.standard_error());
            const double z = std::abs(wh.mean - wc.mean) / se;
            add_check(r,
                      "E tr (PQ)^" + std::to_string(m + 1) + " z-score at N=" +
                          std::to_string(c[0]) + ",k=" + std::to_string(c[1]) +
                          ",l=" + std::to_string(c[2]),
                      z, 3.0, samples, seed);
        }
        base += 2ull * samples;
    }
    return r;
}

// ---------------------------------------------------------------- freeness

VerificationReport suite_freeness(const SuiteConfig& cfg, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "freeness";
    const int N = 512;
    const int samples = 20;
    const double pairs[][2] = {{0.5, 0.5}, {0.3, 0.6}};
    std::uint64_t base = kFreenessBase;
    for (const auto& ab : pairs) {
        const double alpha = ab[0], beta = ab[1];
        const int k = static_cast<int>(std::lround(alpha * N));
        const int l = static_cast<int>(std::lround(beta * N));
        const LimitLaw law = minimizer_pqp(alpha, beta);

        std::vector<double> atom_fracs(samples), ks(samples);
        parallel_indexed(samples, cfg.threads, [&](int i) {
            const ProjectionPair pair = sample_pair(N, k, l, {seed, base + i});
            const Vector eigs = hermitian_eigenvalues(pair.P * pair.Q * pair.P);
            int zeros = 0;
            std::vector<double> interior;
            for (Eigen::Index j = 0; j < eigs.size(); ++j) {
                if (std::abs(eigs(j)) <= tol::atom) ++zeros;
                else if (eigs(j) > tol::atom && eigs(j) < 1.0 - tol::atom)
                    interior.push_back(eigs(j));
            }
            atom_fracs[i] = static_cast<double>(zeros) / N;
            std::sort(interior.begin(), interior.end());
            ks[i] = ks_distance(interior, [&law](double x) { return law.cdf(x); });
        });
        double frac = 0.0, mean_ks = 0.0;
        for (int i = 0; i < samples; ++i) {
            frac += atom_fracs[i] / samples;
            mean_ks += ks[i] / samples;
        }
        const std::string tag =
            "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
        add_check(r, "atom-at-0 fraction error, alpha,beta=" + tag,
                  std::abs(frac - (1.0 - std::min(alpha, beta))), 0.02, samples, seed);
        add_check(r, "mean KS of rescaled continuous part, alpha,beta=" + tag,
                  mean_ks, 0.05, samples, seed);
        base += samples;
    }
    return r;
}

// ---------------------------------------------------------------- rate_min

VerificationReport suite_rate_min(const SuiteConfig&, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "rate_min";
    const int n = 2000;
    for (const auto& ab : {std::pair{0.5, 0.5}, std::pair{0.3, 0.6}}) {
        const SpectralMeasure cloud = quantile_cloud(minimizer_pqp(ab.first, ab.second), n);
        const ExtReal v = rate_tilde(cloud, ab.first, ab.second);
        const double stat = v.is_finite() ? std::abs(v.value()) : 1.0;
        add_check(r,
                  "|rate at discretized minimizer|, alpha,beta=(" +
                      std::to_string(ab.first) + "," + std::to_string(ab.second) + ")",
                  stat, 1e-2, n, seed);
    }
    {
        // replace the arcsine cloud by uniform quantiles at alpha=beta=1/2
        SpectralMeasure m;
        m.atoms = {{0.0, 0.5}};
        for (int i = 0; i < n; ++i) m.cloud.push_back((i + 0.5) / n);
        m.cloud_mass = 0.5;
        const ExtReal v = rate_tilde(m, 0.5, 0.5);
        const double target = 3.0 / 8.0 - 0.5 * std::log(2.0);
        const double stat = v.is_finite() ? std::abs(v.value() - target) : 1.0;
        add_check(r, "uniform substitution vs 3/8 - log(2)/2", stat, 2e-3, n, seed);
    }
    {
        SpectralMeasure m;
        m.atoms = {{0.0, 0.4}};
        for (int i = 0; i < n; ++i) m.cloud.push_back((i + 0.5) / n);
        m.cloud_mass = 0.6;
        const ExtReal v = rate_tilde(m, 0.5, 0.5);
        add_check(r, "violated atom mass returns +inf", v.is_pos_inf() ? 0.0 : 1.0, 0.0,
                  n, seed);
    }
    return r;
}

// ------------------------------------------------------------- contraction

VerificationReport suite_contraction(const SuiteConfig& cfg, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "contraction";
    const int configs[][3] = {{8, 3, 4}, {8, 5, 6}, {64, 25, 30}, {64, 40, 45}};
    const int samples = 100;
    const std::vector<CatalogFunction> catalog = {
        CatalogFunction::pqp(), CatalogFunction::anticommutator(),
        CatalogFunction::linear(0.7, -1.3), CatalogFunction::unitary_product()};
    std::uint64_t base = kContractionBase;
    for (const auto& c : configs) {
        std::vector<double> devs(samples, 0.0);
        parallel_indexed(samples, cfg.threads, [&](int i) {
            const ProjectionPair pair = sample_pair(c[0], c[1], c[2], {seed, base + i});
            const TracialState tau = from_pair(pair);
            double worst = 0.0;
            for (const auto& h : catalog) {
                const SpectralMeasure push = pushforward(tau, h);
                const std::vector<double> spec = catalog_spectrum(pair, h);
                const std::vector<double> locs = catalog_atom_locations(h);
                const SpectralMeasure emp = empirical_measure(spec, locs, tol::atom);
                worst = std::max(worst, measure_deviation(push, emp, locs, tol::atom));
            }
            devs[i] = worst;
        });
        const double worst = *std::max_element(devs.begin(), devs.end());
        add_check(r,
                  "max pushforward-vs-empirical deviation at N=" + std::to_string(c[0]) +
                      ",k=" + std::to_string(c[1]) + ",l=" + std::to_string(c[2]),
                  worst, 1e-8, samples, seed);
        base += samples;
    }
    return r;
}

// ----------------------------------------------------------------- moments

VerificationReport suite_moments(const SuiteConfig& cfg, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "moments";
    {
        const int configs[][3] = {{16, 5, 7}, {64, 20, 30}};
        const int samples = 100;
        std::uint64_t base = kMomentsBase;
        double worst = 0.0;
        for (const auto& c : configs) {
            std::vector<double> devs(samples, 0.0);
            parallel_indexed(samples, cfg.threads, [&](int i) {
                const ProjectionPair pair = sample_pair(c[0], c[1], c[2], {seed, base + i});
                double d = 0.0;
                std::string ef, efe;
                for (int k = 1; k <= 5; ++k) {
                    ef += "ef";
                    efe += "efe";
                    const Complex a = word_moment(pair, ef);
                    const Complex b = word_moment(pair, efe);
                    d = std::max(d, std::abs(a - b));
                }
                devs[i] = d;
            });
            worst = std::max(worst, *std::max_element(devs.begin(), devs.end()));
            base += samples;
        }
        add_check(r, "max |tr (PQ)^k - tr (PQP)^k|, k=1..5", worst, 1e-10, 200, seed);
    }
    {
        const int N = 64, k = 20, l = 30;
        const int samples = 10'000;
        std::vector<double> vals(samples);
        parallel_indexed(samples, cfg.threads, [&](int i) {
            const ProjectionPair pair =
                sample_pair(N, k, l, {seed, kMomentsBase + 1'000 + i});
            vals[i] = (pair.P * pair.Q).trace().real() / N;
        });
        Welford w;
        for (double v : vals) w.add(v);
        const double target = static_cast<double>(k) * l / (static_cast<double>(N) * N);
        const double z = std::abs(w.mean - target) / w.standard_error();
        add_check(r, "E tr_N(PQ) z-score vs kl/N^2 at N=64", z, 3.0, samples, seed);
    }
    return r;
}

// ------------------------------------------------------------- unitary_law

VerificationReport suite_unitary_law(const SuiteConfig& cfg, std::uint64_t seed) {
    VerificationReport r;
    r.suite = "unitary_law";
    const int N = 512, samples = 20;
    const int k = 256, l = 256;
    std::vector<double> ks(samples);
    parallel_indexed(samples, cfg.threads, [&](int i) {
        const ProjectionPair pair = sample_pair(N, k, l, {seed, kUnitaryBase + i});
        std::vector<double> angles =
            catalog_spectrum(pair, CatalogFunction::unitary_product());
        ks[i] = ks_distance(angles,
                            [](double th) { return (th + pi) / (2.0 * pi); });
    });
    double mean_ks = 0.0;
    for (double v : ks) mean_ks += v / samples;
    add_check(r, "mean KS of eigenvalue angles vs uniform circle law", mean_ks, 0.05,
              samples, seed);
    return r;
}

}  // namespace

double ks_distance(std::span<const double> sorted_cloud,
                   const std::function<double(double)>& cdf) {
    if (sorted_cloud.empty()) throw parameter_error("ks_distance: empty cloud");
    const double n = static_cast<double>(sorted_cloud.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted_cloud.size(); ++i) {
        const double f = cdf(sorted_cloud[i]);
        worst = std::max(worst, std::abs(f - (i + 1) / n));
        worst = std::max(worst, std::abs(f - i / n));
    }
    return worst;
}

double measure_deviation(SpectralMeasure a, SpectralMeasure b,
                         std::span<const double> atom_locations, double tol) {
    auto absorb = [&](SpectralMeasure& m) {
        if (m.cloud.empty()) return;
        const double w = m.point_mass();
        std::vector<double> kept;
        for (double x : m.cloud) {
            bool taken = false;
            for (double loc : atom_locations) {
                if (std::abs(x - loc) <= tol) {
                    bool found = false;
                    for (auto& at : m.atoms) {
                        if (std::abs(at.location - loc) <= tol) {
                            at.mass += w;
                            found = true;
                            break;
                        }
                    }
                    if (!found) m.atoms.push_back({loc, w});
                    m.cloud_mass -= w;
                    taken = true;
                    break;
                }
            }
            if (!taken) kept.push_back(x);
        }
        m.cloud = std::move(kept);
        if (m.cloud.empty()) m.cloud_mass = 0.0;
        m.canonicalize();
    };
    absorb(a);
    absorb(b);

    double dev = std::abs(a.cloud_mass - b.cloud_mass);
    if (a.cloud.size() != b.cloud.size()) return 1.0;
    for (std::size_t i = 0; i < a.cloud.size(); ++i)
        dev = std::max(dev, std::abs(a.cloud[i] - b.cloud[i]));

    // atoms: every location present on either side must carry the same mass
    auto mass_at = [&](const SpectralMeasure& m, double loc) {
        for (const auto& at : m.atoms)
            if (std::abs(at.location - loc) <= tol) return at.mass;
        return 0.0;
    };
    for (const auto& at : a.atoms)
        dev = std::max(dev, std::abs(at.mass - mass_at(b, at.location)));
    for (const auto& at : b.atoms)
        dev = std::max(dev, std::abs(at.mass - mass_at(a, at.location)));
    return dev;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "selberg", "b_limit", "structure", "freeness",
        "rate_min", "contraction", "moments", "unitary_law"};
    return names;
}

VerificationReport run_suite(std::string_view name, const SuiteConfig& config,
                             std::uint64_t master_seed) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    if (name == "selberg") r = suite_selberg(config, master_seed);
    else if (name == "b_limit") r = suite_b_limit(config, master_seed);
    else if (name == "structure") r = suite_structure(config, master_seed);
    else if (name == "freeness") r = suite_freeness(config, master_seed);
    else if (name == "rate_min") r = suite_rate_min(config, master_seed);
    else if (name == "contraction") r = suite_contraction(config, master_seed);
    else if (name == "moments") r = suite_moments(config, master_seed);
    else if (name == "unitary_law") r = suite_unitary_law(config, master_seed);
    else throw parameter_error("run_suite: unknown suite " + std::string(name));

    r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const CheckRecord& c) { return c.pass; });
    r.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace projlab
