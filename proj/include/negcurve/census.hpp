#ifndef NEGCURVE_CENSUS_HPP
#define NEGCURVE_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <istream>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "negcurve/criteria.hpp"
#include "negcurve/weight_triple.hpp"

namespace negcurve {

/// Pairwise coprime a <= b <= c <= max in lexicographic order.
inline std::vector<WeightTriple> enumerate_triples(std::int64_t max) {
  require(max >= 1, "enumerate_triples: max must be positive");
  std::vector<WeightTriple> out;
  for (std::int64_t a = 1; a <= max; ++a)
    for (std::int64_t b = a; b <= max; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t c = b; c <= max; ++c)
        if (std::gcd(a, c) == 1 && std::gcd(b, c) == 1) out.emplace_back(a, b, c);
    }
  return out;
}

struct SweepRecord {
  WeightTriple triple{1, 1, 1};
  bool in_B = false;  // (a+b+c)^2 > abc
  Verdict c2 = Verdict::unsatisfied;
  std::optional<Witness> c2_witness;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct CensusSummary {
  std::int64_t max_weight = 0;
  std::int64_t count_A = 0;  // all triples
  std::int64_t count_B = 0;  // (a+b+c)^2 > abc
  std::int64_t count_C = 0;  // (C2) fails
};

struct CensusResult {
  std::vector<SweepRecord> records;  // sorted by triple
  CensusSummary summary;
  bool complete = true;
  std::string error;
};

inline SweepRecord classify(const WeightTriple& t) {
  const auto start = std::chrono::steady_clock::now();
  const auto rep = check_c2(t);
  SweepRecord rec;
  rec.triple = t;
  rec.in_B = t.anticanonical_positive();
  rec.c2 = rep.verdict;
  rec.c2_witness = rep.witness;
  rec.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  ensure(rec.in_B == (rec.c2 == Verdict::trivially_satisfied),
         "classify: B membership and trivial (C2) disagree for " + t.str());
  return rec;
}

inline CensusSummary summarize(std::int64_t max, const std::vector<SweepRecord>& records) {
  CensusSummary s;
  s.max_weight = max;
  for (const auto& r : records) {
    ++s.count_A;
    if (r.in_B) ++s.count_B;
    if (r.c2 == Verdict::unsatisfied) ++s.count_C;
  }
  return s;
}

struct CensusOptions {
  std::int64_t max = 50;
  unsigned jobs = 1;
  /// Records from an earlier partial run; their triples are not recomputed.
  std::vector<SweepRecord> resume;
  /// Called from the worker threads under a lock, once per new record.
  std::function<void(const SweepRecord&)> on_record;
};

/// Classifies every triple with max(a,b,c) <= opts.max. Triples are handed
/// to workers through a shared counter; the output order does not depend on
/// scheduling. A worker exception stops the sweep and the partial result is
/// returned with complete = false.
inline CensusResult run_census(const CensusOptions& opts) {
  require(opts.jobs >= 1, "run_census: jobs must be positive");
  const auto all = enumerate_triples(opts.max);

  std::set<WeightTriple> done;
  CensusResult res;
  for (const auto& r : opts.resume) {
    if (r.triple.c() > opts.max || !done.insert(r.triple).second) continue;
    res.records.push_back(r);
  }
  std::vector<WeightTriple> todo;
  for (const auto& t : all)
    if (!done.contains(t)) todo.push_back(t);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      const std::size_t idx = next.fetch_add(1);
      if (idx >= todo.size()) return;
      try {
        auto rec = classify(todo[idx]);
        std::lock_guard lock(mu);
        if (opts.on_record) opts.on_record(rec);
        res.records.push_back(std::move(rec));
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        if (!failed.exchange(true)) res.error = todo[idx].str() + ": " + e.what();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  res.complete = !failed.load();
  std::sort(res.records.begin(), res.records.end(),
            [](const SweepRecord& l, const SweepRecord& r) { return l.triple < r.triple; });
  res.summary = summarize(opts.max, res.records);
  return res;
}

// Record file: a header row, one comma-separated record per line, then
// "# A=..,B=..,C=.." (and "# INCOMPLETE: <reason>" for an aborted sweep).

inline constexpr const char* kCensusHeader = "a,b,c,xi,eta,in_B,c2_verdict,witness_n,witness_r,elapsed_ms";

inline std::string to_csv_line(const SweepRecord& r, bool with_elapsed = true) {
  std::ostringstream os;
  const auto& t = r.triple;
  os << t.a() << ',' << t.b() << ',' << t.c() << ',' << t.xi() << ',' << t.eta() << ','
     << (r.in_B ? "true" : "false") << ',' << to_string(r.c2) << ',';
  if (r.c2_witness) os << r.c2_witness->n.get_str() << ',' << r.c2_witness->r.get_str();
  else os << ',';
  os << ',' << (with_elapsed ? r.elapsed_ms : 0);
  return os.str();
}

inline std::string summary_line(const CensusSummary& s) {
  return "# A=" + std::to_string(s.count_A) + ",B=" + std::to_string(s.count_B) + ",C=" + std::to_string(s.count_C);
}

inline void write_census(std::ostream& os, const CensusResult& res, bool with_elapsed = true) {
  os << kCensusHeader << '\n';
  for (const auto& r : res.records) os << to_csv_line(r, with_elapsed) << '\n';
  os << summary_line(res.summary) << '\n';
  if (!res.complete) os << "# INCOMPLETE: " << res.error << '\n';
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "satisfied") return Verdict::satisfied;
  if (s == "unsatisfied") return Verdict::unsatisfied;
  if (s == "trivially-satisfied") return Verdict::trivially_satisfied;
  throw ContractViolation("census: unknown verdict '" + s + "'");
}

/// Records of a (possibly partial) record file; comments and the header are skipped.
inline std::vector<SweepRecord> read_census_records(std::istream& in) {
  std::vector<SweepRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == kCensusHeader) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.emplace_back();
    require(f.size() == 10, "census: malformed record line");
    try {
      SweepRecord r;
      r.triple = WeightTriple(std::stoll(f[0]), std::stoll(f[1]), std::stoll(f[2]));
      require(std::stoll(f[3]) == r.triple.xi() && std::stoll(f[4]) == r.triple.eta(),
              "census: xi/eta do not match the weights");
      require(f[5] == "true" || f[5] == "false", "census: in_B must be true or false");
      r.in_B = f[5] == "true";
      r.c2 = parse_verdict(f[6]);
      if (!f[7].empty()) r.c2_witness = Witness{BigInt(f[7]), BigInt(f[8])};
      r.elapsed_ms = f[9].empty() ? 0 : std::stoll(f[9]);
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ContractViolation*>(&e)) throw;
      throw ContractViolation(std::string("census: malformed record line: ") + e.what());
    }
  }
  return out;
}

}  // namespace negcurve

#endif  // NEGCURVE_CENSUS_HPP
