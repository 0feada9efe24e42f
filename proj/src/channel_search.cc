#include "infomask/channel_search.h"

#include <algorithm>
#include <limits>
#include <string>

namespace infomask {

SearchConfig SearchConfig::CloudDefaults() {
  SearchConfig cfg;
  cfg.grid_resolution = 6;
  cfg.random_samples = 20'000;
  return cfg;
}

void SearchConfig::Validate() const {
  if (grid_resolution < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 1");
  }
  if (random_samples < 0 || refine_steps < 0 || refine_starts < 0) {
    throw Error(ErrorCode::kInvalidArgument, "search counts must be non-negative");
  }
  if (!(refine_step_size > 0.0 && refine_step_size <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "refine step size must lie in (0, 1]");
  }
}

std::uint64_t SimplexGridCount(int m, int k) {
  if (m < 1 || k < 0) return 0;
  // C(k + m - 1, m - 1) computed incrementally; exact while it fits.
  const std::uint64_t r = static_cast<std::uint64_t>(m - 1);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(k) + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

namespace {

void CheckCap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw Error(ErrorCode::kSizeGuard, std::string(what) + " count " +
                                           std::to_string(count) + " exceeds cap " +
                                           std::to_string(cap));
  }
}

std::uint64_t ChannelGridCount(int input_size, int output_size, int k) {
  const std::uint64_t per_row = SimplexGridCount(output_size, k);
  std::uint64_t total = 1;
  for (int i = 0; i < input_size; ++i) {
    if (per_row != 0 && total > std::numeric_limits<std::uint64_t>::max() / per_row) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= per_row;
  }
  return total;
}

// Integer compositions of k into m parts, lexicographic.
std::vector<std::vector<int>> Compositions(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      cur[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  rec(rec, 0, k);
  return out;
}

}  // namespace

std::vector<Pmf> EnumerateSimplex(int m, int k, std::uint64_t cap) {
  if (m < 1 || k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "simplex grid needs m >= 1 and K >= 1");
  }
  CheckCap(SimplexGridCount(m, k), cap, "simplex grid");
  std::vector<Pmf> out;
  for (const auto& comp : Compositions(m, k)) {
    std::vector<double> p(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) p[i] = static_cast<double>(comp[i]) / k;
    out.emplace_back(std::move(p));
  }
  return out;
}

void ForEachChannel(int input_size, int output_size, int k, std::uint64_t cap,
                    const std::function<void(const AuxChannel&)>& visit) {
  if (input_size < 1 || output_size < 1 || k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "channel grid needs positive sizes and K");
  }
  CheckCap(ChannelGridCount(input_size, output_size, k), cap, "channel grid");
  const auto rows = Compositions(output_size, k);
  std::vector<std::size_t> choice(static_cast<std::size_t>(input_size), 0);
  std::vector<double> data(static_cast<std::size_t>(input_size * output_size));
  while (true) {
    for (int i = 0; i < input_size; ++i) {
      const auto& comp = rows[choice[static_cast<std::size_t>(i)]];
      for (int u = 0; u < output_size; ++u) {
        data[static_cast<std::size_t>(i * output_size + u)] =
            static_cast<double>(comp[static_cast<std::size_t>(u)]) / k;
      }
    }
    visit(AuxChannel(input_size, output_size, data));
    int i = input_size - 1;
    for (; i >= 0; --i) {
      if (++choice[static_cast<std::size_t>(i)] < rows.size()) break;
      choice[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) break;
  }
}

std::vector<AuxChannel> EnumerateChannels(int input_size, int output_size, int k,
                                          std::uint64_t cap) {
  std::vector<AuxChannel> out;
  ForEachChannel(input_size, output_size, k, cap,
                 [&](const AuxChannel& ch) { out.push_back(ch); });
  return out;
}

AuxChannel SampleChannel(int input_size, int output_size, Rng& rng) {
  std::vector<double> data(static_cast<std::size_t>(input_size * output_size));
  for (int i = 0; i < input_size; ++i) {
    double total = 0.0;
    for (int u = 0; u < output_size; ++u) {
      const double e = rng.Exponential();
      data[static_cast<std::size_t>(i * output_size + u)] = e;
      total += e;
    }
    for (int u = 0; u < output_size; ++u) {
      data[static_cast<std::size_t>(i * output_size + u)] /= total;
    }
  }
  return AuxChannel(input_size, output_size, std::move(data));
}

void ProjectToSimplex(std::span<double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    cumulative += sorted[i];
    const double t = (cumulative - 1.0) / static_cast<double>(i + 1);
    if (sorted[i] - t > 0.0) theta = t;
  }
  double total = 0.0;
  for (double& x : v) {
    x = std::max(x - theta, 0.0);
    total += x;
  }
  for (double& x : v) x /= total;
}

RefineResult LocalRefine(const ChannelObjective& objective, const AuxChannel& start,
                         int steps, double step_size, Rng& rng) {
  RefineResult result{start, objective(start), {}};
  if (!result.score.feasible) {
    throw Error(ErrorCode::kInfeasibleStart, "refinement start is infeasible");
  }
  const int in = start.input_size();
  const int out = start.output_size();
  std::vector<double> data(start.data().begin(), start.data().end());
  result.trace.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  for (int step = 0; step < steps; ++step) {
    if (out > 1) {
      const int row = static_cast<int>(rng.Below(static_cast<std::uint64_t>(in)));
      std::vector<double> candidate = data;
      std::span<double> r(candidate.data() + row * out, static_cast<std::size_t>(out));
      for (double& x : r) x += step_size * (2.0 * rng.Uniform() - 1.0);
      ProjectToSimplex(r);
      AuxChannel ch(in, out, candidate);
      const Score s = objective(ch);
      if (s.feasible && s.value < result.score.value) {
        data = std::move(candidate);
        result.channel = std::move(ch);
        result.score = s;
      }
    }
    result.trace.push_back(result.score.value);
  }
  return result;
}

}  // namespace infomask
