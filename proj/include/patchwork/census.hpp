#pragma once

// Enumeration over canonical sign classes: exhaustive histograms, uniform
// sampling, scheme search and support-table verification.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "patchwork/catalog.hpp"
#include "patchwork/error.hpp"
#include "patchwork/evaluator.hpp"
#include "patchwork/patchwork.hpp"
#include "patchwork/scheme.hpp"
#include "patchwork/signs.hpp"

namespace patchwork {

struct Histogram {
  int degree = 0;
  std::string triangulation;
  bool pseudo_line = false;
  std::map<std::uint64_t, std::uint64_t> counts;  // scheme code -> count
  std::uint64_t total = 0;
  double elapsed_seconds = 0;

  void add(std::uint64_t code, std::uint64_t n = 1) {
    counts[code] += n;
    total += n;
  }

  void merge(const Histogram& o) {
    for (const auto& [c, n] : o.counts) counts[c] += n;
    total += o.total;
  }

  RealScheme scheme(std::uint64_t code) const { return RealScheme::from_code(code, pseudo_line); }

  std::uint64_t count(const RealScheme& s) const {
    const auto it = counts.find(s.code());
    return it == counts.end() ? 0 : it->second;
  }

  /// (scheme string, count), descending count, then scheme string.
  std::vector<std::pair<std::string, std::uint64_t>> rows() const {
    std::vector<std::pair<std::string, std::uint64_t>> r;
    for (const auto& [c, n] : counts) r.emplace_back(scheme(c).render(), n);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return r;
  }

  /// Distribution of the number of ovals (the pseudo-line is not counted).
  std::vector<std::uint64_t> oval_distribution() const {
    std::vector<std::uint64_t> dist;
    for (const auto& [c, n] : counts) {
      const int ovals = (std::bit_width(c) - 1) / 2;
      if (static_cast<int>(dist.size()) <= ovals) dist.resize(ovals + 1, 0);
      dist[ovals] += n;
    }
    return dist;
  }

  /// Mean number of ovals; add 1 for the number of loops when pseudo_line.
  double mean_ovals() const {
    if (total == 0) return 0;
    long double s = 0;
    for (const auto& [c, n] : counts) s += static_cast<long double>((std::bit_width(c) - 1) / 2) * n;
    return static_cast<double>(s / total);
  }

  double mean_loops() const { return mean_ovals() + (pseudo_line ? 1.0 : 0.0); }

  std::string to_csv() const {
    std::ostringstream os;
    os << "scheme,count\n";
    for (const auto& [s, n] : rows()) os << s << ',' << n << '\n';
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["degree"] = degree;
    j["triangulation"] = triangulation;
    j["total"] = total;
    j["elapsed_seconds"] = elapsed_seconds;
    j["mean_ovals"] = mean_ovals();
    j["mean_loops"] = mean_loops();
    j["oval_distribution"] = oval_distribution();
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& [s, n] : rows()) rs.push_back({{"scheme", s}, {"count", n}});
    j["counts"] = rs;
    return j;
  }
};

struct ExhaustiveOptions {
  int workers = 1;
  std::uint64_t begin = 0;
  std::optional<std::uint64_t> end;  // default class_count(d)
  std::string checkpoint_path;       // empty: no checkpoints
  std::uint64_t checkpoint_every = std::uint64_t{1} << 24;
  bool resume = false;
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

namespace detail {

inline int resolve_workers(int w) {
  if (w > 0) return w;
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

/// Evaluates classes [lo, hi) split into `workers` contiguous ranges.
inline Histogram scan_range(const Surface& surface, int d, std::uint64_t lo, std::uint64_t hi, int workers) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::uint64_t>(1, (hi - lo) / 4096))));
  std::vector<Histogram> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  const auto job = [&](int w) {
    try {
      Evaluator ev(surface);
      std::unordered_map<std::uint64_t, std::uint64_t> local;
      const std::uint64_t n = hi - lo;
      const std::uint64_t a = lo + n * w / workers, b = lo + n * (w + 1) / workers;
      for (std::uint64_t k = a; k < b; ++k) ++local[ev.evaluate(class_mask(d, k)).code];
      for (const auto& [c, m] : local) parts[w].add(c, m);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(job, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Histogram h;
  for (const auto& p : parts) h.merge(p);
  return h;
}

inline void write_checkpoint(const std::string& path, const Histogram& h, std::uint64_t checksum_value,
                             std::uint64_t next) {
  nlohmann::json j;
  j["version"] = 1;
  j["degree"] = h.degree;
  j["triangulation"] = h.triangulation;
  j["checksum"] = checksum_value;
  j["next_index"] = next;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [code, n] : h.counts) c[std::to_string(code)] = n;
  j["counts"] = c;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw InputError("cannot write checkpoint " + tmp);
    os << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// One evaluation per canonical class index in [begin, end). The result does
/// not depend on the number of workers.
inline Histogram exhaustive(const Triangulation& t, const std::string& key, const ExhaustiveOptions& opt = {}) {
  const int d = t.degree();
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t end = opt.end.value_or(class_count(d));
  if (end > class_count(d) || opt.begin > end) throw OutOfRange("class index range out of bounds");
  const Surface surface(t);
  const std::uint64_t sum = checksum(t);

  Histogram h;
  h.degree = d;
  h.triangulation = key;
  h.pseudo_line = d % 2 == 1;
  std::uint64_t next = opt.begin;

  if (opt.resume && !opt.checkpoint_path.empty() && std::filesystem::exists(opt.checkpoint_path)) {
    std::ifstream is(opt.checkpoint_path);
    const auto j = nlohmann::json::parse(is);
    if (j.at("version") != 1 || j.at("degree") != d || j.at("triangulation") != key || j.at("checksum") != sum)
      throw InputError("checkpoint " + opt.checkpoint_path + " does not match this triangulation");
    next = j.at("next_index").get<std::uint64_t>();
    for (const auto& [code, n] : j.at("counts").items()) h.add(std::stoull(code), n.get<std::uint64_t>());
  }

  const int workers = detail::resolve_workers(opt.workers);
  const std::uint64_t block = opt.checkpoint_path.empty() ? std::max<std::uint64_t>(end - next, 1) : opt.checkpoint_every;
  while (next < end) {
    const std::uint64_t hi = std::min(end, next + block);
    h.merge(detail::scan_range(surface, d, next, hi, workers));
    next = hi;
    if (!opt.checkpoint_path.empty()) detail::write_checkpoint(opt.checkpoint_path, h, sum, next);
    if (opt.progress) opt.progress(next - opt.begin, end - opt.begin);
  }
  h.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return h;
}

/// n uniform canonical classes (with replacement). Deterministic for a fixed
/// seed, independent of the number of workers: draws are generated in chunks
/// of 65536, chunk c seeded with (seed, c).
inline Histogram sample(const Triangulation& t, const std::string& key, std::uint64_t n, std::uint64_t seed,
                        int workers = 1) {
  if (n == 0) throw InputError("sample size must be at least 1");
  const int d = t.degree();
  const auto t0 = std::chrono::steady_clock::now();
  const Surface surface(t);
  const std::uint64_t classes = class_count(d);
  constexpr std::uint64_t chunk = 65536;
  const std::uint64_t chunks = (n + chunk - 1) / chunk;
  workers = std::max(1, std::min<int>(detail::resolve_workers(workers), static_cast<int>(chunks)));

  std::vector<Histogram> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::uint64_t> next_chunk{0};
  const auto job = [&](int w) {
    try {
      Evaluator ev(surface);
      std::unordered_map<std::uint64_t, std::uint64_t> local;
      for (std::uint64_t c = next_chunk++; c < chunks; c = next_chunk++) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        std::mt19937_64 rng(ss);
        std::uniform_int_distribution<std::uint64_t> pick(0, classes - 1);
        const std::uint64_t m = std::min(chunk, n - c * chunk);
        for (std::uint64_t i = 0; i < m; ++i) ++local[ev.evaluate(class_mask(d, pick(rng))).code];
      }
      for (const auto& [code, m] : local) parts[w].add(code, m);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(job, w);
    for (auto& th : threads) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Histogram h;
  h.degree = d;
  h.triangulation = key;
  h.pseudo_line = d % 2 == 1;
  for (const auto& p : parts) h.merge(p);
  h.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return h;
}

// ---------------------------------------------------------------- search

struct SearchHit {
  std::string triangulation;
  std::string signs;  // lex bit string of the canonical representative
  std::uint64_t class_index = 0;
};

struct SearchResult {
  std::vector<RealScheme> targets;
  std::map<std::uint64_t, std::optional<SearchHit>> hits;  // target code -> hit
  std::uint64_t evaluations = 0;
  bool complete = false;

  std::size_t found() const {
    std::size_t n = 0;
    for (const auto& [c, h] : hits) n += h ? 1 : 0;
    return n;
  }
  std::vector<RealScheme> missing() const {
    std::vector<RealScheme> out;
    for (const auto& t : targets)
      if (!hits.at(t.code())) out.push_back(t);
    return out;
  }
};

enum class SearchStrategy { sequential, random, family_seeded };

inline SearchStrategy parse_strategy(std::string_view s) {
  if (s == "sequential") return SearchStrategy::sequential;
  if (s == "random") return SearchStrategy::random;
  if (s == "family-seeded" || s == "family_seeded") return SearchStrategy::family_seeded;
  throw InputError("unknown search strategy '" + std::string(s) + "'");
}

struct SearchOptions {
  std::uint64_t budget = 1'000'000;  // evaluations, summed over triangulations
  SearchStrategy strategy = SearchStrategy::family_seeded;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> extra_seeds;  // sign masks tried first (family-seeded)
  /// Random walk steps per random restart (family-seeded); moves are accepted
  /// when they reach an unseen scheme or keep the current one.
  int walk_length = 64;
  double time_limit_seconds = 0;  // 0: no limit
};

namespace detail {

/// Canonical class index of a sign mask.
inline std::uint64_t class_index_of_mask(int d, std::uint64_t mask) {
  return index(SignDistribution::from_mask(d, mask));
}

}  // namespace detail

/// Records the first realizer per target over the given triangulations.
/// Every hit is re-verified with the full patchwork construction.
inline SearchResult search(const std::vector<RealScheme>& targets,
                           const std::vector<std::pair<std::string, Triangulation>>& triangulations,
                           const SearchOptions& opt = {}) {
  if (triangulations.empty()) throw InputError("search needs at least one triangulation");
  const int d = triangulations.front().second.degree();
  for (const auto& [k, t] : triangulations)
    if (t.degree() != d) throw InputError("search triangulations must share one degree");

  SearchResult res;
  res.targets = targets;
  for (const auto& t : targets) res.hits[t.code()] = std::nullopt;
  std::size_t remaining = res.hits.size();
  if (remaining == 0) {
    res.complete = true;
    return res;
  }

  std::vector<Surface> surfaces;
  std::vector<Evaluator> evals;
  for (const auto& [k, t] : triangulations) surfaces.emplace_back(t);
  for (const auto& s : surfaces) evals.emplace_back(s);
  const int nt = static_cast<int>(triangulations.size());
  const int npts = num_lattice_points(d);
  const std::uint64_t classes = class_count(d);

  // Returns the scheme code; records a hit if it is a pending target.
  const auto try_mask = [&](int ti, std::uint64_t mask) -> std::uint64_t {
    ++res.evaluations;
    const std::uint64_t code = evals[ti].evaluate(mask).code;
    const auto it = res.hits.find(code);
    if (it != res.hits.end() && !it->second) {
      const SignDistribution s = canonicalize(SignDistribution::from_mask(d, mask));
      const Patchwork p(triangulations[ti].second, s);
      if (p.scheme().code() != code) throw Error("internal", "search hit failed re-verification");
      it->second = SearchHit{triangulations[ti].first, format_signs(s, 0), index(s)};
      --remaining;
    }
    return code;
  };
  const auto start = std::chrono::steady_clock::now();
  const auto done = [&] {
    if (remaining == 0 || res.evaluations >= opt.budget) return true;
    if (opt.time_limit_seconds > 0 && (res.evaluations & 0xfff) == 0)
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > opt.time_limit_seconds;
    return false;
  };

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, classes - 1);
  std::uniform_int_distribution<int> point(0, npts - 1);

  if (opt.strategy == SearchStrategy::sequential) {
    for (std::uint64_t k = 0; k < classes && !done(); ++k)
      for (int ti = 0; ti < nt && !done(); ++ti) try_mask(ti, class_mask(d, k));
  } else {
    if (opt.strategy == SearchStrategy::family_seeded) {
      std::vector<std::uint64_t> seeds = opt.extra_seeds;
      const std::uint64_t eta = harnack(d).mask(), one = constant_signs(d).mask();
      seeds.push_back(eta);
      seeds.push_back(one);
      for (const std::uint64_t base : {eta, one}) {
        for (int i = 0; i < npts; ++i) seeds.push_back(base ^ (std::uint64_t{1} << i));
        for (int i = 0; i < npts; ++i)
          for (int j = i + 1; j < npts; ++j) seeds.push_back(base ^ (std::uint64_t{1} << i) ^ (std::uint64_t{1} << j));
      }
      for (const std::uint64_t m : seeds)
        for (int ti = 0; ti < nt && !done(); ++ti) try_mask(ti, m);
      // Random walks: single-bit moves that stay on the current scheme or
      // discover a scheme not seen before on this triangulation.
      std::vector<std::set<std::uint64_t>> seen(nt);
      while (!done()) {
        for (int ti = 0; ti < nt && !done(); ++ti) {
          std::uint64_t cur = class_mask(d, pick(rng));
          std::uint64_t code = try_mask(ti, cur);
          seen[ti].insert(code);
          for (int s = 0; s < opt.walk_length && !done(); ++s) {
            const std::uint64_t cand = cur ^ (std::uint64_t{1} << point(rng));
            const std::uint64_t c2 = try_mask(ti, cand);
            if (c2 == code || seen[ti].insert(c2).second) {
              cur = cand;
              code = c2;
            }
          }
        }
      }
    } else {
      while (!done())
        for (int ti = 0; ti < nt && !done(); ++ti) try_mask(ti, class_mask(d, pick(rng)));
    }
  }
  res.complete = remaining == 0;
  return res;
}

// ---------------------------------------------------------------- tables

struct SupportRow {
  std::string scheme;
  std::string triangulation;
  std::string signs;
};

struct SupportRowResult {
  SupportRow row;
  bool pass = false;
  std::string computed;  // rendered computed scheme, or the error text
  std::string error;
};

struct SupportReport {
  std::vector<SupportRowResult> rows;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0 && !rows.empty(); }
};

/// CSV with header "scheme,triangulation,signs"; triangulations are catalog keys.
inline std::vector<SupportRow> read_support_table(std::istream& is) {
  std::vector<SupportRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("scheme,", 0) == 0) continue;
    }
    const auto a = line.find(','), b = line.find(',', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw InputError("malformed support table row: " + line);
    const auto c = line.find(',', b + 1);  // further columns are ignored
    rows.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1),
                    line.substr(b + 1, c == std::string::npos ? std::string::npos : c - b - 1)});
  }
  return rows;
}

inline SupportReport verify_support_table(const std::vector<SupportRow>& rows) {
  SupportReport rep;
  std::map<std::string, Triangulation> cache;
  for (const auto& r : rows) {
    SupportRowResult out{r, false, "", ""};
    try {
      const RealScheme declared = parse_scheme(r.scheme);
      auto it = cache.find(r.triangulation);
      if (it == cache.end()) it = cache.emplace(r.triangulation, catalog(r.triangulation)).first;
      const Triangulation& t = it->second;
      const Patchwork p(t, parse_signs(t.degree(), r.signs));
      out.computed = p.scheme().render();
      out.pass = p.scheme() == declared;
    } catch (const Error& e) {
      out.error = e.what();
    }
    (out.pass ? rep.passed : rep.failed) += 1;
    rep.rows.push_back(std::move(out));
  }
  return rep;
}

}  // namespace patchwork
