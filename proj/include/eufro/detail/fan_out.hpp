#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "eufro/rounding.hpp"

namespace eufro::detail {

class Histogram {
 public:
  void add(long k, std::uint64_t times = 1) {
    if (counts_.empty()) {
      offset_ = k;
      counts_.push_back(0);
    }
    if (k < offset_) {
      counts_.insert(counts_.begin(), static_cast<std::size_t>(offset_ - k), 0);
      offset_ = k;
    } else if (k - offset_ >= static_cast<long>(counts_.size())) {
      counts_.resize(static_cast<std::size_t>(k - offset_ + 1), 0);
    }
    counts_[static_cast<std::size_t>(k - offset_)] += times;
  }

  void merge(const Histogram& o) {
    for (std::size_t i = 0; i < o.counts_.size(); ++i)
      if (o.counts_[i]) add(o.offset_ + static_cast<long>(i), o.counts_[i]);
  }

  EmpiricalPmf finish() const {
    EmpiricalPmf e;
    std::uint64_t total = 0;
    for (auto c : counts_) total += c;
    e.samples = total;
    e.counts = counts_;
    e.pmf.offset = offset_;
    if (total == 0) return e;
    long double s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      long double k = offset_ + static_cast<long>(i);
      long double c = counts_[i];
      s1 += c * k;
      s2 += c * k * k;
      e.pmf.weights.push_back(static_cast<double>(c / total));
    }
    long double mean = s1 / total;
    e.mean = static_cast<double>(mean);
    e.variance = static_cast<double>(s2 / total - mean * mean);
    return e;
  }

 private:
  long offset_ = 0;
  std::vector<std::uint64_t> counts_;
};

template <class Draw>
Histogram collect(std::uint64_t count, RngStream& rng, Draw& draw) {
  Histogram h;
  for (std::uint64_t i = 0; i < count; ++i) h.add(draw(rng));
  return h;
}

template <class Draw>
EmpiricalPmf run_stream(std::uint64_t samples, RngStream& rng, Draw draw) {
  return collect(samples, rng, draw).finish();
}

// Split samples over streams 0..K-1; the merged counts depend only on (seed, K).
template <class Draw>
EmpiricalPmf fan_out(std::uint64_t samples, const SimulationOptions& opts, Draw draw) {
  const unsigned k = std::max(1u, opts.streams);
  std::vector<Histogram> parts(k);
  std::vector<std::exception_ptr> errors(k);
  auto work = [&](unsigned i) {
    try {
      std::uint64_t share = samples / k + (i < samples % k ? 1 : 0);
      RngStream rng(opts.seed, i);
      Draw local = draw;
      parts[i] = collect(share, rng, local);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (k == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < k; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Histogram all;
  for (const auto& h : parts) all.merge(h);
  return all.finish();
}

}  // namespace eufro::detail
