#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "checks.hpp"
#include "mpae/montecarlo.hpp"
#include "mpae/replication.hpp"

using namespace mpae;

namespace {

bool reports_identical(const SimReport& a, const SimReport& b) {
  return a.empirical_mpae == b.empirical_mpae &&
         a.empirical_error_prob == b.empirical_error_prob &&
         a.wilson_ci == b.wilson_ci && a.trials_run == b.trials_run &&
         a.empirical_exponent == b.empirical_exponent &&
         a.analytic_reference == b.analytic_reference &&
         a.bound_untestable == b.bound_untestable &&
         a.mean_signal_energy == b.mean_signal_energy &&
         a.mean_noise_energy == b.mean_noise_energy;
}

}  // namespace

TEST_CASE("results are bitwise reproducible and thread-count independent") {
  SimConfig cfg;
  cfg.n_dim = 32;
  cfg.snr = 1.0;
  cfg.num_levels = 8;
  cfg.trials = 30000;
  cfg.seed = 11;

  cfg.threads = 1;
  SimReport o1 = simulate_quantize_orthogonal(cfg, 0.3);
  SimReport d1 = simulate_replication_detector(cfg, 2);
  cfg.threads = 8;
  SimReport o8 = simulate_quantize_orthogonal(cfg, 0.3);
  SimReport d8 = simulate_replication_detector(cfg, 2);
  CHECK(reports_identical(o1, o8));
  CHECK(reports_identical(d1, d8));

  cfg.threads = 3;  // batch count not divisible by thread count
  SimReport d3 = simulate_replication_detector(cfg, 2);
  CHECK(reports_identical(d1, d3));

  cfg.seed = 12;
  SimReport d_other = simulate_replication_detector(cfg, 2);
  CHECK_FALSE(reports_identical(d1, d_other));
}

TEST_CASE("zero snr reduces to uniform guessing") {
  SimConfig cfg;
  cfg.n_dim = 16;
  cfg.snr = 0.0;
  cfg.num_levels = 8;
  cfg.trials = 100000;
  cfg.seed = 21;
  cfg.threads = 4;
  SimReport rep = simulate_quantize_orthogonal(cfg, 0.6);
  double p_guess = 1.0 - 1.0 / 8.0;
  CHECK(rep.analytic_reference == rel(p_guess, 1e-9));
  CHECK(rep.wilson_ci.first <= p_guess);
  CHECK(p_guess <= rep.wilson_ci.second);
  CHECK_FALSE(rep.bound_untestable);
}

TEST_CASE("zero snr quadratic error matches the random-midpoint law") {
  // u stratified over [0,1), estimator lands on a uniform cell midpoint:
  // E|u_hat - u|^2 = (2 - 1/M^2)/12 + O(strata^2), about 1/6
  SimConfig cfg;
  cfg.n_dim = 64;
  cfg.snr = 0.0;
  cfg.alpha = 2.0;
  cfg.num_levels = 64;
  cfg.trials = 400;
  cfg.seed = 31;
  cfg.threads = 1;
  double acc = 0.0;
  const int strata = 256;
  for (int k = 0; k < strata; ++k) {
    cfg.seed = 1000 + k;
    acc += simulate_quantize_orthogonal(cfg, (k + 0.5) / strata).empirical_mpae;
  }
  double avg = acc / strata;
  double exact = (2.0 - 1.0 / (64.0 * 64.0)) / 12.0;
  CHECK(std::fabs(avg - exact) < 2e-3);        // 3 standard errors
  CHECK(std::fabs(avg - 1.0 / 6.0) < 2.5e-3);  // headline value
}

TEST_CASE("orthogonal error rate matches the exact integral") {
  SimConfig cfg;
  cfg.n_dim = 16;
  cfg.snr = 1.0;  // amplitude 4
  cfg.num_levels = 4;
  cfg.trials = 100000;
  cfg.seed = 41;
  cfg.threads = 4;
  SimReport rep = simulate_quantize_orthogonal(cfg, 0.3);
  CHECK(rep.analytic_reference == rel(0.006529938992151818, 1e-9));
  CHECK(rep.wilson_ci.first <= rep.analytic_reference);
  CHECK(rep.analytic_reference <= rep.wilson_ci.second);
  CHECK_FALSE(rep.bound_untestable);
  // same amplitude through a different (n, snr) split: identical reference
  cfg.n_dim = 64;
  cfg.snr = 0.25;
  SimReport rep2 = simulate_quantize_orthogonal(cfg, 0.3);
  CHECK(rep2.analytic_reference == rel(0.006529938992151818, 1e-9));
}

TEST_CASE("binary case reduces to the gaussian tail") {
  SimConfig cfg;
  cfg.n_dim = 16;
  cfg.snr = 0.5;  // amplitude sqrt(8), pairwise error Q(2)
  cfg.num_levels = 2;
  cfg.trials = 100000;
  cfg.seed = 51;
  cfg.threads = 4;
  SimReport rep = simulate_quantize_orthogonal(cfg, 0.1);
  CHECK(rep.analytic_reference == rel(0.022750131948179098, 1e-9));
  CHECK(rep.wilson_ci.first <= rep.analytic_reference);
  CHECK(rep.analytic_reference <= rep.wilson_ci.second);
}

TEST_CASE("detector energies match the chi-square means") {
  SimConfig cfg;
  cfg.n_dim = 64;
  cfg.snr = 10.0;
  cfg.num_levels = 8;
  cfg.trials = 20000;
  cfg.seed = 61;
  cfg.threads = 4;
  SimReport rep = simulate_replication_detector(cfg, 0);
  // true band: N (1 + snr) = 704, sd of the mean 0.37
  CHECK(std::fabs(rep.mean_signal_energy - 704.0) < 1.2);
  // false bands: N = 64, sd of the mean 0.030
  CHECK(std::fabs(rep.mean_noise_energy - 64.0) < 0.1);
  CHECK(rep.empirical_error_prob == 0.0);  // exact error rate is ~1e-33
  CHECK(rep.bound_untestable);             // reference 6.6e-48 << 10/trials
  CHECK(rep.analytic_reference == rel(6.63771864570827416e-48, 1e-9));
}

TEST_CASE("single-band detector never errs") {
  SimConfig cfg;
  cfg.n_dim = 8;
  cfg.snr = 1.0;
  cfg.num_levels = 1;
  cfg.trials = 5000;
  cfg.seed = 71;
  SimReport rep = simulate_replication_detector(cfg, 0);
  CHECK(rep.empirical_error_prob == 0.0);
  CHECK(rep.empirical_mpae == 0.0);
  CHECK(std::isinf(rep.empirical_exponent));
}

TEST_CASE("error exponent grows with dimension towards the analytic curve") {
  SimConfig base;
  base.snr = 1.0;
  base.num_levels = 32;
  base.trials = 100000;
  base.seed = 7;
  base.threads = 8;
  auto seq = estimate_exponent_sequence(base, {32, 64, 128});
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].first == 32);
  // exact rates: 0.10517, 0.11368, 0.12379, increasing towards
  // Phi(1,1) = 0.13711
  CHECK(std::fabs(seq[0].second - 0.10516601256144084) < 0.005);
  CHECK(std::fabs(seq[1].second - 0.11368468897823773) < 0.005);
  CHECK(std::fabs(seq[2].second - 0.12378646769425615) < 0.010);
  CHECK(seq[0].second < seq[1].second);
  CHECK(seq[1].second < seq[2].second);
  double ceiling = phi(1.0, 1.0).value;
  for (const auto& [n, e] : seq) CHECK(e < ceiling);
  // every empirical exponent beats its union-bound guarantee
  for (const auto& [n, e] : seq) {
    double rate = (2.0 / n) * std::log(32.0);
    CHECK(e > decoding_exponent(1.0, rate));
  }
}

TEST_CASE("zero snr detector exponent is near zero") {
  SimConfig base;
  base.snr = 0.0;
  base.num_levels = 32;
  base.trials = 20000;
  base.seed = 81;
  base.threads = 4;
  auto seq = estimate_exponent_sequence(base, {32, 64});
  for (const auto& [n, e] : seq) {
    CHECK(std::fabs(e) < 0.01);  // guessing: -(2/N) log((M-1)/M)
  }
}

TEST_CASE("wilson interval behaves") {
  auto [lo0, hi0] = wilson_interval(0, 1000);
  CHECK(lo0 == 0.0);
  CHECK(hi0 == rel(3.8416 / (1000.0 + 3.8416), 1e-3));  // z^2/(n + z^2)
  auto [lon, hin] = wilson_interval(1000, 1000);
  CHECK(hin == 1.0);
  auto [lo, hi] = wilson_interval(50, 1000);
  CHECK(lo > 0.0);
  CHECK(lo < 0.05);
  CHECK(0.05 < hi);
  // complement symmetry
  auto [clo, chi_] = wilson_interval(950, 1000);
  CHECK(clo == rel(1.0 - hi, 1e-12));
  CHECK(chi_ == rel(1.0 - lo, 1e-12));
  CHECK_THROWS_AS(wilson_interval(5, 0), std::domain_error);
  CHECK_THROWS_AS(wilson_interval(-1, 10), std::domain_error);
  CHECK_THROWS_AS(wilson_interval(11, 10), std::domain_error);
}

TEST_CASE("doubling trials narrows the interval by about sqrt(2)") {
  SimConfig cfg;
  cfg.n_dim = 64;
  cfg.snr = 1.0;
  cfg.num_levels = 32;
  cfg.trials = 20000;
  cfg.seed = 91;
  cfg.threads = 8;
  SimReport r1 = simulate_replication_detector(cfg, 0);
  cfg.trials = 40000;
  SimReport r2 = simulate_replication_detector(cfg, 0);
  double w1 = r1.wilson_ci.second - r1.wilson_ci.first;
  double w2 = r2.wilson_ci.second - r2.wilson_ci.first;
  CHECK(w1 / w2 > 1.2);
  CHECK(w1 / w2 < 1.7);
}

TEST_CASE("config validation") {
  SimConfig cfg;
  cfg.n_dim = 16;
  cfg.num_levels = 4;
  cfg.trials = 100;

  SimConfig bad = cfg;
  bad.trials = 10'000'001;
  CHECK_THROWS_AS(simulate_quantize_orthogonal(bad, 0.5), std::domain_error);
  bad = cfg;
  bad.n_dim = 1;
  CHECK_THROWS_AS(simulate_replication_detector(bad, 0), std::domain_error);
  bad = cfg;
  bad.num_levels = 32;  // more signals than dimensions
  CHECK_THROWS_AS(simulate_quantize_orthogonal(bad, 0.5), std::domain_error);
  bad = cfg;
  bad.snr = -1.0;
  CHECK_THROWS_AS(simulate_quantize_orthogonal(bad, 0.5), std::domain_error);
  bad = cfg;
  bad.alpha = 0.0;
  CHECK_THROWS_AS(simulate_quantize_orthogonal(bad, 0.5), std::domain_error);
  CHECK_THROWS_AS(simulate_quantize_orthogonal(cfg, 1.0), std::domain_error);
  CHECK_THROWS_AS(simulate_quantize_orthogonal(cfg, -0.1), std::domain_error);
  CHECK_THROWS_AS(simulate_replication_detector(cfg, 4), std::domain_error);
  CHECK_THROWS_AS(simulate_replication_detector(cfg, -1), std::domain_error);
  CHECK_THROWS_AS(estimate_exponent_sequence(cfg, {}), std::domain_error);
  CHECK_THROWS_AS(estimate_exponent_sequence(cfg, {64, 32}), std::domain_error);
}

TEST_CASE("report internal consistency") {
  SimConfig cfg;
  cfg.n_dim = 16;
  cfg.snr = 0.25;
  cfg.num_levels = 8;
  cfg.trials = 20000;
  cfg.seed = 101;
  cfg.threads = 2;
  SimReport rep = simulate_quantize_orthogonal(cfg, 0.42);
  CHECK(rep.trials_run == cfg.trials);
  CHECK(rep.empirical_exponent ==
        -(2.0 / cfg.n_dim) * std::log(rep.empirical_mpae));
  CHECK(rep.wilson_ci.first <= rep.empirical_error_prob);
  CHECK(rep.empirical_error_prob <= rep.wilson_ci.second);
}
