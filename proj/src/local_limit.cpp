#include "trigraph/local_limit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "trigraph/rng.hpp"
#include "trigraph/tails.hpp"

namespace trigraph {

double NeighborhoodCensus::frequency(const std::string& code) const {
  auto it = counts.find(code);
  if (it == counts.end() || sample_size == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(sample_size);
}

double NeighborhoodCensus::overflow_fraction() const {
  return sample_size == 0 ? 0.0
                          : static_cast<double>(overflow_count) / static_cast<double>(sample_size);
}

void NeighborhoodCensus::merge(const NeighborhoodCensus& other) {
  if (depth != other.depth) throw std::invalid_argument("census merge: depth mismatch");
  sample_size += other.sample_size;
  overflow_count += other.overflow_count;
  for (const auto& [code, count] : other.counts) counts[code] += count;
}

namespace {

// Backtracking canonizer: positions assigned root-first; at each level
// only candidates with the minimal adjacency row toward the assigned
// prefix can start a minimal completion, and twins (vertices swappable by
// an automorphism fixing everything else) are collapsed to one.
class Canonizer {
 public:
  explicit Canonizer(const std::vector<std::uint16_t>& adj)
      : adj_(adj), n_(static_cast<std::uint32_t>(adj.size())) {}

  unsigned __int128 run() {
    vert_at_.fill(0xff);
    has_best_ = false;
    vert_at_[0] = 0;
    search(1, 0);
    return best_;
  }

 private:
  void search(std::uint32_t level, unsigned __int128 prefix) {
    if (++nodes_ > 2000000)
      throw std::runtime_error("canonical_rooted_code: search budget exceeded");
    if (level == n_) {
      if (!has_best_ || prefix < best_) {
        best_ = prefix;
        has_best_ = true;
      }
      return;
    }
    std::uint32_t used_mask = 0;
    for (std::uint32_t j = 0; j < level; ++j) used_mask |= 1u << vert_at_[j];

    std::uint32_t min_row = UINT32_MAX;
    std::array<std::uint8_t, 12> cands{};
    int nc = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (used_mask & (1u << v)) continue;
      std::uint32_t row = 0;
      for (std::uint32_t j = 0; j < level; ++j)
        row = (row << 1) | ((adj_[v] >> vert_at_[j]) & 1u);
      if (row < min_row) {
        min_row = row;
        nc = 0;
        cands[nc++] = static_cast<std::uint8_t>(v);
      } else if (row == min_row) {
        cands[nc++] = static_cast<std::uint8_t>(v);
      }
    }
    // Twin collapse among the tied candidates.
    std::array<std::uint8_t, 12> kept{};
    int nk = 0;
    for (int i = 0; i < nc; ++i) {
      const std::uint32_t v = cands[i];
      bool twin = false;
      for (int j = 0; j < nk && !twin; ++j) {
        const std::uint32_t u = kept[j];
        const std::uint16_t mask = static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
        twin = (adj_[v] & mask) == (adj_[u] & mask);
      }
      if (!twin) kept[nk++] = static_cast<std::uint8_t>(v);
    }
    const unsigned __int128 next_prefix = (prefix << level) | min_row;
    for (int i = 0; i < nk; ++i) {
      vert_at_[level] = kept[i];
      search(level + 1, next_prefix);
    }
    vert_at_[level] = 0xff;
  }

  const std::vector<std::uint16_t>& adj_;
  std::uint32_t n_;
  std::array<std::uint8_t, 13> vert_at_{};
  unsigned __int128 best_ = 0;
  bool has_best_ = false;
  std::uint64_t nodes_ = 0;
};

std::string to_hex(unsigned __int128 bits, std::uint32_t nbits) {
  const std::uint32_t digits = (nbits + 3) / 4;
  std::string out(digits, '0');
  for (std::uint32_t i = 0; i < digits; ++i) {
    const unsigned nibble = static_cast<unsigned>(bits & 0xf);
    out[digits - 1 - i] = "0123456789abcdef"[nibble];
    bits >>= 4;
  }
  return out;
}

}  // namespace

std::string canonical_rooted_code(const std::vector<std::uint16_t>& adj) {
  const std::uint32_t n = static_cast<std::uint32_t>(adj.size());
  if (n == 0 || n > kCoderCap) throw std::invalid_argument("canonical_rooted_code: bad size");
  unsigned __int128 bits = 0;
  if (n > 1) {
    Canonizer canonizer(adj);
    bits = canonizer.run();
  }
  const std::uint32_t nbits = n * (n - 1) / 2;
  return std::to_string(n) + ":" + to_hex(bits, nbits);
}

DecodedRooted decode_rooted_code(const std::string& code) {
  const auto colon = code.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("decode_rooted_code: bad format");
  DecodedRooted out;
  out.n = static_cast<std::uint32_t>(std::stoul(code.substr(0, colon)));
  if (out.n == 0 || out.n > kCoderCap) throw std::invalid_argument("decode_rooted_code: bad n");
  out.adj.assign(out.n, 0);
  unsigned __int128 bits = 0;
  for (std::size_t i = colon + 1; i < code.size(); ++i) {
    const char c = code[i];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = 10 + (c - 'a');
    else
      throw std::invalid_argument("decode_rooted_code: bad hex");
    bits = (bits << 4) | v;
  }
  // Rows were appended level by level, most significant first.
  const std::uint32_t nbits = out.n * (out.n - 1) / 2;
  std::uint32_t shift = nbits;
  for (std::uint32_t i = 1; i < out.n; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) {
      --shift;
      if ((bits >> shift) & 1) {
        out.adj[i] |= static_cast<std::uint16_t>(1u << j);
        out.adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  return out;
}

std::optional<std::vector<std::uint16_t>> neighborhood_ball(const Graph& g, std::uint32_t root,
                                                            int r, std::uint32_t cap) {
  std::vector<std::uint32_t> ball;
  std::vector<int> dist(g.vertex_count(), -1);
  ball.push_back(root);
  dist[root] = 0;
  for (std::size_t head = 0; head < ball.size(); ++head) {
    const std::uint32_t u = ball[head];
    if (dist[u] == r) break;  // BFS order: all later vertices are at >= this depth
    for (std::uint32_t v : g.neighbors(u)) {
      if (dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      ball.push_back(v);
      if (ball.size() > cap) return std::nullopt;
    }
  }
  std::vector<std::uint16_t> adj(ball.size(), 0);
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = i + 1; j < ball.size(); ++j)
      if (g.has_edge(ball[i], ball[j])) {
        adj[i] |= static_cast<std::uint16_t>(1u << j);
        adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
  return adj;
}

NeighborhoodCensus neighborhood_census(const Graph& g, int r, std::uint64_t sample_size,
                                       std::uint64_t seed) {
  if (r < 0) throw std::invalid_argument("neighborhood_census: depth must be >= 0");
  NeighborhoodCensus census;
  census.depth = r;
  std::vector<std::uint32_t> roots;
  const std::uint32_t n = g.vertex_count();
  if (sample_size == 0 || sample_size >= n) {
    roots.resize(n);
    for (std::uint32_t v = 0; v < n; ++v) roots[v] = v;
  } else {
    // Uniform sample without replacement.
    Rng rng(seed);
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t v = 0; v < n; ++v) pool[v] = v;
    for (std::uint64_t j = 0; j < sample_size; ++j)
      std::swap(pool[j], pool[j + rng.below(n - j)]);
    roots.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(sample_size));
  }
  for (std::uint32_t root : roots) {
    auto ball = neighborhood_ball(g, root, r);
    ++census.sample_size;
    if (!ball) {
      ++census.overflow_count;
      continue;
    }
    ++census.counts[canonical_rooted_code(*ball)];
  }
  return census;
}

NeighborhoodCensus sample_ugw_census(double lambda, int r, std::uint64_t samples,
                                     std::uint64_t seed, std::uint64_t size_cap) {
  if (samples < 1) throw std::invalid_argument("sample_ugw_census: samples must be >= 1");
  if (r < 0) throw std::invalid_argument("sample_ugw_census: depth must be >= 0");
  NeighborhoodCensus census;
  census.depth = r;
  Rng rng(seed);
  const std::uint64_t grow_cap = std::min<std::uint64_t>(size_cap, kCoderCap);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // BFS generation: node i has parent[i]; depth-r truncation.
    std::vector<std::uint32_t> parent{0};
    std::vector<int> depth{0};
    bool overflow = false;
    for (std::size_t head = 0; head < parent.size() && !overflow; ++head) {
      if (depth[head] == r) break;
      const std::uint32_t children = rng.poisson(lambda);
      for (std::uint32_t c = 0; c < children; ++c) {
        parent.push_back(static_cast<std::uint32_t>(head));
        depth.push_back(depth[head] + 1);
        if (parent.size() > grow_cap) {
          overflow = true;
          break;
        }
      }
    }
    ++census.sample_size;
    if (overflow) {
      ++census.overflow_count;
      continue;
    }
    std::vector<std::uint16_t> adj(parent.size(), 0);
    for (std::size_t i = 1; i < parent.size(); ++i) {
      adj[i] |= static_cast<std::uint16_t>(1u << parent[i]);
      adj[parent[i]] |= static_cast<std::uint16_t>(1u << i);
    }
    ++census.counts[canonical_rooted_code(adj)];
  }
  return census;
}

double census_tv(const NeighborhoodCensus& a, const NeighborhoodCensus& b) {
  if (a.depth != b.depth) throw std::invalid_argument("census_tv: depth mismatch");
  double tv = std::abs(a.overflow_fraction() - b.overflow_fraction());
  for (const auto& [code, count] : a.counts) {
    (void)count;
    tv += std::abs(a.frequency(code) - b.frequency(code));
  }
  for (const auto& [code, count] : b.counts) {
    (void)count;
    if (a.counts.find(code) == a.counts.end()) tv += b.frequency(code);
  }
  return 0.5 * tv;
}

double census_depth1_tv_to_poisson(const NeighborhoodCensus& census, double lambda) {
  if (census.depth != 1) throw std::invalid_argument("census_depth1_tv_to_poisson: depth must be 1");
  std::array<double, 12> freq{};
  for (const auto& [code, count] : census.counts) {
    const DecodedRooted decoded = decode_rooted_code(code);
    freq[decoded.root_degree()] +=
        static_cast<double>(count) / static_cast<double>(census.sample_size);
  }
  double tv = 0.0, pmf_head = 0.0;
  for (std::uint32_t d = 0; d < 12; ++d) {
    const double pmf = std::exp(d * std::log(lambda) - lambda - std::lgamma(d + 1.0));
    const double pd = lambda == 0.0 ? (d == 0 ? 1.0 : 0.0) : pmf;
    tv += std::abs(freq[d] - pd);
    pmf_head += pd;
  }
  tv += std::abs(census.overflow_fraction() - (1.0 - pmf_head));
  return 0.5 * tv;
}

std::string census_to_json(const NeighborhoodCensus& census) {
  std::ostringstream ss;
  ss.precision(17);
  ss << "{\"depth\":" << census.depth << ",\"sample_size\":" << census.sample_size
     << ",\"overflow\":" << census.overflow_fraction() << ",\"entries\":[";
  bool first = true;
  for (const auto& [code, count] : census.counts) {
    if (!first) ss << ',';
    first = false;
    ss << "{\"code\":\"" << code << "\",\"freq\":"
       << static_cast<double>(count) / static_cast<double>(census.sample_size) << "}";
  }
  ss << "]}";
  return ss.str();
}

LocalExperimentResult conditional_local_experiment(std::uint32_t n, double lambda, double k,
                                                   int r, std::uint64_t graph_samples,
                                                   std::uint64_t seed,
                                                   std::uint64_t max_tries_per_graph) {
  const double p = lambda / n;
  LocalExperimentResult result;
  result.cond.depth = result.uncond.depth = r;
  for (std::uint64_t i = 0; i < graph_samples; ++i) {
    ConditionedSample sample = conditioned_sample(n, p, TailStatistic::T, k,
                                                  Rng::substream(seed, 2 * i).next(),
                                                  max_tries_per_graph);
    result.total_tries += sample.tries;
    result.cond.merge(neighborhood_census(sample.graph, r));
    Graph plain = sample_er_p(n, p, Rng::substream(seed, 2 * i + 1).next());
    result.uncond.merge(neighborhood_census(plain, r));
  }
  result.ugw = sample_ugw_census(lambda, r, result.cond.sample_size,
                                 Rng::substream(seed, 1u << 30).next());
  result.tv_cond_uncond = census_tv(result.cond, result.uncond);
  result.tv_cond_ugw = census_tv(result.cond, result.ugw);
  return result;
}

}  // namespace trigraph
