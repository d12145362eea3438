#include "lgldpc/secrecy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "lgldpc/error.hpp"

namespace lgldpc {

CosetCode CosetCode::from_tanner(const TannerGraph& tg) {
  const std::size_t n = tg.variable_count(), m = tg.check_count();
  Gf2Matrix checks(m, n);
  for (std::uint32_t c = 0; c < m; ++c)
    for (const HalfEdge& he : tg.check_neighbors(c)) checks.set(c, he.to, true);

  CosetCode code;
  code.n_ = n;

  Gf2Matrix reduced = checks;
  std::vector<std::size_t> pivots = reduced.rref();
  Gf2Matrix gen(pivots.size(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t w = 0; w < gen.words_per_row(); ++w) gen.row(r)[w] = reduced.row(r)[w];
  code.generator_ = std::move(gen);

  code.parity_ = checks.nullspace_basis();
  std::vector<std::uint8_t> is_pivot(n, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) code.free_cols_.push_back(c);
  // parity row i has a lone 1 on free_cols_[i] among the free columns

  if (code.parity_.rows() + code.generator_.rows() != n)
    raise(ErrorCode::internal_inconsistency, "rank accounting is off in coset construction");
  return code;
}

std::vector<std::uint8_t> CosetCode::encode(std::span<const std::uint8_t> secret, Rng& rng) const {
  if (secret.size() != secret_bits())
    raise(ErrorCode::invalid_argument, "secret length must be " + std::to_string(secret_bits()));

  std::vector<std::uint64_t> packed((n_ + 63) / 64, 0);
  // Particular solution: parity restricted to the free columns is the
  // identity, so scattering s onto them gives x0 H^T = s.
  for (std::size_t i = 0; i < secret.size(); ++i)
    if (secret[i]) packed[free_cols_[i] >> 6] ^= std::uint64_t(1) << (free_cols_[i] & 63);
  for (std::size_t r = 0; r < generator_.rows(); ++r) {
    if (rng.next() & 1) {
      auto row = generator_.row(r);
      for (std::size_t w = 0; w < row.size(); ++w) packed[w] ^= row[w];
    }
  }

  std::vector<std::uint8_t> word(n_);
  for (std::size_t c = 0; c < n_; ++c) word[c] = (packed[c >> 6] >> (c & 63)) & 1;
  return word;
}

std::vector<std::uint8_t> CosetCode::decode(std::span<const std::uint8_t> word) const {
  if (word.size() != n_)
    raise(ErrorCode::invalid_argument, "word length must be " + std::to_string(n_));
  std::vector<std::uint64_t> packed((n_ + 63) / 64, 0);
  for (std::size_t c = 0; c < n_; ++c)
    if (word[c]) packed[c >> 6] |= std::uint64_t(1) << (c & 63);

  std::vector<std::uint8_t> syndrome(secret_bits());
  for (std::size_t r = 0; r < parity_.rows(); ++r) {
    auto row = parity_.row(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < row.size(); ++w) acc ^= row[w] & packed[w];
    syndrome[r] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
  }
  return syndrome;
}

double leakage_bound(const CosetCode& code, double xi, double p_block_estimate) {
  if (xi < 0.0 || xi > 1.0) raise(ErrorCode::invalid_argument, "xi outside [0,1]");
  if (p_block_estimate < 0.0 || p_block_estimate > 1.0)
    raise(ErrorCode::invalid_argument, "block error estimate outside [0,1]");
  return static_cast<double>(code.secret_bits()) * p_block_estimate;
}

std::vector<double> leakage_popcount_profile(const CosetCode& code) {
  const std::size_t n = code.block_length();
  if (n > kExhaustiveLeakageMaxN)
    raise(ErrorCode::size_limit, "exhaustive leakage supports n <= " +
                                     std::to_string(kExhaustiveLeakageMaxN) + ", got " +
                                     std::to_string(n));
  std::vector<std::uint64_t> rows(code.generator().rows());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = code.generator().row(r)[0];

  std::vector<double> sums(n + 1, 0.0);
  const std::uint64_t limit = std::uint64_t(1) << n;
  for (std::uint64_t revealed = 0; revealed < limit; ++revealed) {
    unsigned k = static_cast<unsigned>(std::popcount(revealed));
    unsigned rank = rank_of_masked_words(rows, revealed);
    sums[k] += static_cast<double>(k - rank);
  }
  return sums;
}

double leakage_from_profile(std::span<const double> profile, double xi) {
  if (xi < 0.0 || xi > 1.0) raise(ErrorCode::invalid_argument, "xi outside [0,1]");
  const std::size_t n = profile.size() - 1;
  double total = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (profile[k] == 0.0) continue;
    total += profile[k] * std::pow(1.0 - xi, static_cast<double>(k)) *
             std::pow(xi, static_cast<double>(n - k));
  }
  return total;
}

double exact_leakage(const CosetCode& code, double xi) {
  std::vector<double> profile = leakage_popcount_profile(code);
  return leakage_from_profile(profile, xi);
}

double exact_leakage_sampled(const CosetCode& code, double xi, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers) {
  if (xi < 0.0 || xi > 1.0) raise(ErrorCode::invalid_argument, "xi outside [0,1]");
  if (trials < 1) raise(ErrorCode::invalid_argument, "need at least one trial");
  const std::size_t n = code.block_length();
  const Gf2Matrix& gen = code.generator();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  // Leakage of one trial is an integer; totals are exact and order-free.
  std::vector<std::uint64_t> totals(workers, 0);
  auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> mask((n + 63) / 64);
    Gf2Matrix restricted(gen.rows(), n);
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      Rng rng = Rng::stream(seed, trial);
      std::fill(mask.begin(), mask.end(), 0);
      std::uint64_t revealed = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!rng.bernoulli(xi)) {  // survives the eavesdropper's BEC
          mask[c >> 6] |= std::uint64_t(1) << (c & 63);
          ++revealed;
        }
      }
      for (std::size_t r = 0; r < gen.rows(); ++r) {
        auto src = gen.row(r);
        auto dst = restricted.row(r);
        for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w] & mask[w];
      }
      totals[w] += revealed - restricted.rank();
    }
  };

  if (workers == 1) {
    run_range(0, 0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = trials / workers, extra = trials % workers, lo = 0;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
      pool.emplace_back(run_range, w, lo, hi);
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }

  std::uint64_t total = 0;
  for (std::uint64_t t : totals) total += t;
  return static_cast<double>(total) / static_cast<double>(trials);
}

SecrecyReport make_secrecy_report(const TannerGraph& tg, double xi, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers, bool with_exact) {
  CosetCode code = CosetCode::from_tanner(tg);
  SecrecyReport report;
  report.n = tg.variable_count();
  report.secret_bits = code.secret_bits();
  report.xi = xi;
  report.block = simulate(tg, 1.0 - xi, std::nullopt, trials, seed, workers);
  report.leakage_bound_bits = leakage_bound(code, xi, report.block.block_rate);
  report.leakage_bound_hi = leakage_bound(code, xi, report.block.block_ci.hi);
  if (with_exact) report.exact_leakage_bits = exact_leakage(code, xi);
  return report;
}

}  // namespace lgldpc
