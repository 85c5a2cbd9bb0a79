#include "ssm/random_construction.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ssm/combinations.hpp"
#include "ssm/detail/code_index.hpp"
#include "ssm/random.hpp"

namespace ssm {

QaryCode random_code(std::size_t t, std::size_t n, std::size_t q, std::uint64_t seed) {
  if (q < 2 || q > kMaxAlphabet) throw Error("random code needs 2 <= q <= " + std::to_string(kMaxAlphabet));
  if (t == 0 || n == 0) throw Error("random code needs t >= 1 and n >= 1");
  Rng rng(seed);
  std::vector<std::vector<Symbol>> words(n, std::vector<Symbol>(t));
  for (auto& w : words)
    for (auto& v : w) v = static_cast<Symbol>(uniform_below(rng, q));
  return QaryCode(t, q, std::move(words));
}

Expurgated expurgate_to_ssc(const QaryCode& code, std::size_t d) {
  if (d < 1) throw Error("expurgation needs d >= 1");
  const std::size_t n = code.size();
  ExpurgationLog log;
  log.t = code.length();
  log.q = code.alphabet();
  log.d = d;
  log.initial_n = n;

  const detail::CodeIndex index(code);
  auto alive = index.all_words();
  auto is_alive = [&](std::size_t j) { return (alive[j / kWordBits] >> (j % kWordBits)) & 1U; };
  auto kill = [&](std::size_t j) { alive[j / kWordBits] &= ~(Word{1} << (j % kWordBits)); };

  std::map<std::vector<Symbol>, std::size_t> first_copy;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Symbol> w(code.word(j).begin(), code.word(j).end());
    auto [it, inserted] = first_copy.try_emplace(std::move(w), j);
    if (inserted) continue;
    kill(j);
    log.removed.push_back(Removal{j + 1, Removal::Reason::duplicate, SupportSet{it->second + 1, j + 1}, std::nullopt});
  }

  std::vector<Word> pool;
  for_each_subset_up_to(n, 1, d, [&](std::span<const std::size_t> c0) {
    for (std::size_t j : c0)
      if (!is_alive(j)) return true;
    index.pool(c0, alive, pool);
    for (std::size_t w : c0) {
      if (index.has_private(w, pool)) continue;
      std::vector<std::size_t> frame;
      for (std::size_t k : detail::CodeIndex::members(pool))
        if (k != w) frame.push_back(k);
      kill(w);
      log.removed.push_back(Removal{w + 1, Removal::Reason::ssc_violation, SupportSet::from_zero_based(c0),
                                    SupportSet::from_zero_based(frame)});
      break;
    }
    return true;
  });

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n; ++j)
    if (is_alive(j)) kept.push_back(j);
  log.final_n = kept.size();
  for (std::size_t j : kept) log.kept.push_back(j + 1);
  return Expurgated{code.select(kept), std::move(log)};
}

Construction build_2ssm(std::size_t t, std::size_t n, std::size_t q, std::uint64_t seed) {
  auto [code, log] = expurgate_to_ssc(random_code(t, n, q, seed), 2);
  log.seed = seed;
  BinaryMatrix matrix = concatenate(code);
  const double rate = std::log2(static_cast<double>(code.size())) / static_cast<double>(t * q);
  return Construction{std::move(matrix), std::move(code), std::move(log), rate};
}

std::uint64_t penalty_kernel(std::size_t q, std::size_t m) {
  if (m > 60) throw Error("penalty kernel needs m <= 60");
  const unsigned __int128 p = static_cast<unsigned __int128>(1) << m;
  const unsigned __int128 v = (p - 1) * q - (p - 2);
  if (v > UINT64_MAX) throw Error("penalty kernel overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

namespace {

// penalty_term(q, m) - 1/q. The kernel equals 2^(m+1) * (1 + x) with
// x = (q - 3)/2 - (q - 2) 2^-(m+1), so the excess is log2(1 + x)/((m+1) q).
double penalty_excess(std::size_t q, std::size_t m) {
  const double qd = static_cast<double>(q);
  const double x = (qd - 3.0) / 2.0 - (qd - 2.0) * std::ldexp(1.0, -static_cast<int>(m + 1));
  return std::log1p(x) / std::log(2.0) / (static_cast<double>(m + 1) * qd);
}

}  // namespace

double penalty_term(std::size_t q, std::size_t m) {
  if (q < 2 || m < 1) throw Error("penalty term needs q >= 2 and m >= 1");
  return 1.0 / static_cast<double>(q) + penalty_excess(q, m);
}

RateBoundReport rate_bound(std::size_t q, std::size_t m_cap) {
  if (q < 2) throw Error("rate bound needs q >= 2");
  if (m_cap < 1) throw Error("rate bound needs m_cap >= 1");
  RateBoundReport report;
  report.q = q;
  report.m_cap = m_cap;
  report.asymptotic_term = 1.0 / static_cast<double>(q);

  double best_excess = 0.0;
  std::size_t best_m = 0;
  for (std::size_t m = 1; m <= m_cap; ++m) {
    const double excess = penalty_excess(q, m);
    report.terms.push_back(report.asymptotic_term + excess);
    if (best_m == 0 || excess > best_excess) {
      best_excess = excess;
      best_m = m;
    }
  }
  // A negative best excess means every finite m stays below the 1/q limit,
  // so the supremum is the limit itself.
  if (best_excess >= 0.0) {
    report.m_star = best_m;
    report.max_term = report.terms[best_m - 1];
  } else {
    report.max_term = report.asymptotic_term;
  }
  report.bound = std::log2(static_cast<double>(q)) / static_cast<double>(q) - report.max_term;
  return report;
}

std::vector<KnownBound> known_bounds() {
  const double improved = rate_bound(4).bound;
  return {
      {"R_D(2)", 0.1814, 0.3219, std::nullopt, "2-disjunct matrices (cover-free families)"},
      {"R_S(2bar)", 0.3135, 0.4998, std::nullopt, "2-bar-separable matrices (union-free families)"},
      {"R(2)", 0.1814, 0.4998, improved,
       "2-SSM; sandwiched by the two above, lower bound raised by random coding with expurgation at q = 4"},
  };
}

}  // namespace ssm
