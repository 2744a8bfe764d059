#ifndef LIQ_SURROGATE_HPP
#define LIQ_SURROGATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liq/curves.hpp"
#include "liq/detail/binary_io.hpp"
#include "liq/detail/parallel.hpp"
#include "liq/detail/rng.hpp"
#include "liq/errors.hpp"
#include "liq/geo.hpp"
#include "liq/mi.hpp"

namespace liq {
namespace surrogate {

/// Schema name of the groundwater-depth feature; augmentation keys on it.
inline constexpr char kGwtFeature[] = "gwt_depth";

/// Sentinel for an unbounded tree depth. Numerically larger than any real
/// depth so the "smallest depth wins" tie rule orders it last.
inline constexpr std::uint32_t kUnlimitedDepth = 0xFFFFFFFFu;

struct FeatureSchema {
  std::vector<std::string> names;

  /// Order-sensitive hash of the feature names; stored in model files so a
  /// model is never applied to a table with a different column layout.
  std::uint64_t id() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const auto& n : names) {
      h = detail::fnv1a(n.data(), n.size(), h);
      h = detail::fnv1a("\x1f", 1, h);
    }
    return h;
  }

  std::ptrdiff_t find(std::string_view name) const {
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == name) return static_cast<std::ptrdiff_t>(j);
    return -1;
  }
};

struct FeatureVector {
  std::vector<double> values;
  std::uint64_t schema_id = 0;
};

/// One sparse observation of the feature fields; NaN marks a missing entry.
struct FeatureSample {
  std::vector<double> values;
  geo::LonLat location;
};

struct TrainingRow {
  std::vector<double> features;
  double target = 0.0;
  double weight = 1.0;
  geo::LonLat location;
  bool synthetic = false;
};

struct TrainingSet {
  FeatureSchema schema;
  std::vector<TrainingRow> rows;
};

/// Fill every missing entry of `query` from the geographically nearest sample
/// that has that feature; ties go to the lowest sample index.
inline std::vector<double> impute_nearest(
    const std::vector<FeatureSample>& samples, const FeatureSample& query) {
  std::vector<double> out = query.values;
  std::vector<double> dist;
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (std::isfinite(out[j])) continue;
    if (dist.empty() && !samples.empty()) {
      dist.reserve(samples.size());
      for (const auto& s : samples)
        dist.push_back(geo::great_circle_m(query.location, s.location));
    }
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = samples.size();
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (j >= samples[i].values.size() || !std::isfinite(samples[i].values[j]))
        continue;
      if (dist[i] < best) {
        best = dist[i];
        best_i = i;
      }
    }
    if (best_i == samples.size())
      throw NoValidSample("no valid sample for feature " + std::to_string(j));
    out[j] = samples[best_i].values[j];
  }
  return out;
}

/// Duplicate every row once with a fresh groundwater depth drawn uniformly
/// from (0, max_depth] and the target recomputed for that depth. Originals
/// come first and are untouched; duplicates carry synthetic = true.
/// `recompute_target(row_index, new_gwt)` re-runs whatever produced the
/// original target (mechanics sweep + curve fit in the full pipeline).
inline TrainingSet augment_groundwater(
    const TrainingSet& set, double max_depth, std::uint64_t seed,
    const std::function<double(std::size_t, double)>& recompute_target) {
  std::ptrdiff_t g = set.schema.find(kGwtFeature);
  if (g < 0) throw SchemaMissingGwt();
  TrainingSet out = set;
  out.rows.reserve(set.rows.size() * 2);
  for (std::size_t i = 0; i < set.rows.size(); ++i) {
    detail::SplitMix64 rng(detail::derive_seed(seed, i));
    TrainingRow dup = set.rows[i];
    double gwt = max_depth * (1.0 - rng.next_double());
    dup.features[static_cast<std::size_t>(g)] = gwt;
    dup.target = recompute_target(i, gwt);
    dup.synthetic = true;
    out.rows.push_back(std::move(dup));
  }
  return out;
}

/// Spatial density weights: w_i = max(floor, d_ref / d_i) with d_i the number
/// of points within `radius_m` of point i (itself included) and d_ref the
/// median of those counts, rescaled afterwards to mean 1.
inline std::vector<double> density_weights(
    const std::vector<geo::LonLat>& locations, double radius_m, double floor) {
  if (!(radius_m > 0.0)) throw NonFiniteInput("density radius must be > 0");
  std::size_t n = locations.size();
  if (n == 0) return {};
  std::vector<double> counts(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] += 1.0;
    for (std::size_t k = i + 1; k < n; ++k) {
      if (geo::great_circle_m(locations[i], locations[k]) <= radius_m) {
        counts[i] += 1.0;
        counts[k] += 1.0;
      }
    }
  }
  std::vector<double> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  double d_ref = n % 2 ? sorted[n / 2]
                       : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  std::vector<double> w(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::max(floor, d_ref / counts[i]);
    sum += w[i];
  }
  double scale = static_cast<double>(n) / sum;
  for (auto& v : w) v *= scale;
  return w;
}

// ---------------------------------------------------------------------------
// Bagged regression trees
// ---------------------------------------------------------------------------

struct Hyperparams {
  std::uint32_t n_trees = 100;
  std::uint32_t min_leaf = 5;
  std::uint32_t max_depth = kUnlimitedDepth;
  std::uint32_t features_per_split = 0;  ///< 0 = consider every feature
};

enum class Target : std::uint8_t { A = 0, B = 1 };

inline const char* to_string(Target t) { return t == Target::A ? "A" : "B"; }

inline Target target_from_string(std::string_view s) {
  if (s == "A" || s == "a") return Target::A;
  if (s == "B" || s == "b") return Target::B;
  throw ConfigError("unknown target: " + std::string(s));
}

struct TreeNode {
  std::int32_t feature = -1;  ///< -1 marks a leaf
  std::int32_t left = -1;
  std::int32_t right = -1;
  double threshold = 0.0;
  double value = 0.0;  ///< weighted mean target of the node's samples
  double gain = 0.0;   ///< weighted SSE decrease of the split, 0 at leaves
};

struct Tree {
  std::vector<TreeNode> nodes;

  double predict(const std::vector<double>& x) const {
    std::size_t i = 0;
    while (nodes[i].feature >= 0) {
      const TreeNode& nd = nodes[i];
      i = static_cast<std::size_t>(
          x[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left
                                                                  : nd.right);
    }
    return nodes[i].value;
  }
};

struct TreeEnsemble {
  Hyperparams hyperparams;
  std::uint64_t schema_id = 0;
  std::uint32_t n_features = 0;
  Target target = Target::A;
  MiKind mi_kind = MiKind::Lpi;
  std::vector<Tree> trees;
};

namespace detail {

using liq::detail::SplitMix64;

/// Multinomial bootstrap: n draws with replacement, each row picked with
/// probability proportional to its weight. Returns per-row multiplicities.
inline std::vector<double> bootstrap_multiplicities(
    const std::vector<double>& row_weights, SplitMix64& rng) {
  std::size_t n = row_weights.size();
  std::vector<double> cum(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += std::max(0.0, row_weights[i]);
    cum[i] = total;
  }
  if (!(total > 0.0)) throw TooFewRows("total sampling weight is zero");
  std::vector<double> mult(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double u = rng.next_double() * total;
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    mult[static_cast<std::size_t>(it - cum.begin())] += 1.0;
  }
  return mult;
}

class TreeBuilder {
public:
  TreeBuilder(const TrainingSet& set, const Hyperparams& hp,
              std::vector<std::uint32_t> rows, std::vector<double> weights,
              SplitMix64 rng)
      : set_(set),
        hp_(hp),
        rows_(std::move(rows)),
        w_(std::move(weights)),
        rng_(rng) {}

  Tree build() {
    std::vector<std::uint32_t> idx(rows_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    grow(std::move(idx), 0);
    return std::move(tree_);
  }

private:
  double x_of(std::uint32_t pos, std::size_t j) const {
    return set_.rows[rows_[pos]].features[j];
  }
  double y_of(std::uint32_t pos) const { return set_.rows[rows_[pos]].target; }

  std::vector<std::uint32_t> candidate_features() {
    std::size_t nf = set_.schema.names.size();
    std::vector<std::uint32_t> feats(nf);
    std::iota(feats.begin(), feats.end(), 0u);
    std::size_t m = hp_.features_per_split;
    if (m == 0 || m >= nf) return feats;
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t j = k + static_cast<std::size_t>(rng_.next_below(nf - k));
      std::swap(feats[k], feats[j]);
    }
    feats.resize(m);
    std::sort(feats.begin(), feats.end());
    return feats;
  }

  std::int32_t grow(std::vector<std::uint32_t> idx, std::uint32_t depth) {
    double W = 0.0, M = 0.0, Q = 0.0;
    for (auto p : idx) {
      double w = w_[p], y = y_of(p);
      W += w;
      M += w * y;
      Q += w * y * y;
    }
    auto me = static_cast<std::int32_t>(tree_.nodes.size());
    tree_.nodes.push_back({});
    tree_.nodes[static_cast<std::size_t>(me)].value = M / W;
    double sse = std::max(0.0, Q - M * M / W);
    double min_leaf = static_cast<double>(hp_.min_leaf);
    if (depth >= hp_.max_depth || W < 2.0 * min_leaf || sse <= 0.0) return me;

    double best_gain = 0.0, best_thr = 0.0;
    std::int32_t best_feature = -1;
    std::vector<std::uint32_t> ord;
    for (std::uint32_t j : candidate_features()) {
      ord = idx;
      std::sort(ord.begin(), ord.end(),
                [&](std::uint32_t a, std::uint32_t b) {
                  double xa = x_of(a, j), xb = x_of(b, j);
                  if (xa != xb) return xa < xb;
                  return a < b;
                });
      double WL = 0.0, ML = 0.0, QL = 0.0;
      for (std::size_t k = 0; k + 1 < ord.size(); ++k) {
        double w = w_[ord[k]], y = y_of(ord[k]);
        WL += w;
        ML += w * y;
        QL += w * y * y;
        double xa = x_of(ord[k], j), xb = x_of(ord[k + 1], j);
        if (xa == xb) continue;
        if (WL < min_leaf) continue;
        double WR = W - WL;
        if (WR < min_leaf) break;
        double sl = std::max(0.0, QL - ML * ML / WL);
        double MR = M - ML, QR = Q - QL;
        double sr = std::max(0.0, QR - MR * MR / WR);
        double gain = sse - sl - sr;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<std::int32_t>(j);
          double thr = xa + 0.5 * (xb - xa);
          if (!(thr < xb)) thr = xa;
          best_thr = thr;
        }
      }
    }
    if (best_feature < 0) return me;

    std::vector<std::uint32_t> lidx, ridx;
    for (auto p : idx) {
      (x_of(p, static_cast<std::size_t>(best_feature)) <= best_thr ? lidx
                                                                   : ridx)
          .push_back(p);
    }
    idx.clear();
    idx.shrink_to_fit();
    std::int32_t l = grow(std::move(lidx), depth + 1);
    std::int32_t r = grow(std::move(ridx), depth + 1);
    TreeNode& nd = tree_.nodes[static_cast<std::size_t>(me)];
    nd.feature = best_feature;
    nd.threshold = best_thr;
    nd.left = l;
    nd.right = r;
    nd.gain = best_gain;
    return me;
  }

  const TrainingSet& set_;
  const Hyperparams& hp_;
  std::vector<std::uint32_t> rows_;
  std::vector<double> w_;
  SplitMix64 rng_;
  Tree tree_;
};

inline void validate_training(const TrainingSet& set, const Hyperparams& hp) {
  if (hp.n_trees < 1 || hp.min_leaf < 1)
    throw ConfigError("n_trees and min_leaf must be >= 1");
  if (set.rows.size() < 2ull * hp.min_leaf)
    throw TooFewRows("need at least 2*min_leaf rows");
  std::size_t nf = set.schema.names.size();
  for (const auto& r : set.rows)
    if (r.features.size() != nf)
      throw SchemaMismatch("row feature count differs from schema");
}

}  // namespace detail

/// One deterministic CART tree on the full set with its stored row weights.
/// Baseline for the bagging-vs-single-tree comparisons; no bootstrap and no
/// feature subsampling.
inline Tree train_tree(const TrainingSet& set, const Hyperparams& hp) {
  detail::validate_training(set, hp);
  std::vector<std::uint32_t> rows;
  std::vector<double> w;
  for (std::uint32_t i = 0; i < set.rows.size(); ++i) {
    if (set.rows[i].weight > 0.0) {
      rows.push_back(i);
      w.push_back(set.rows[i].weight);
    }
  }
  if (rows.empty()) throw TooFewRows("total sampling weight is zero");
  Hyperparams single = hp;
  single.features_per_split = 0;
  detail::TreeBuilder b(set, single, std::move(rows), std::move(w),
                        detail::SplitMix64(0));
  Tree t = b.build();
  return t;
}

/// Bagged ensemble: each tree is grown on a weighted bootstrap resample of
/// size |set| (draw probability proportional to row weight, multiplicities
/// become in-tree weights). Deterministic under (set, hp, seed) regardless
/// of the job count.
inline TreeEnsemble train_bagged(const TrainingSet& set, const Hyperparams& hp,
                                 std::uint64_t seed, int jobs = 0) {
  detail::validate_training(set, hp);
  std::vector<double> row_w(set.rows.size());
  for (std::size_t i = 0; i < set.rows.size(); ++i)
    row_w[i] = set.rows[i].weight;

  TreeEnsemble e;
  e.hyperparams = hp;
  e.schema_id = set.schema.id();
  e.n_features = static_cast<std::uint32_t>(set.schema.names.size());
  e.trees.resize(hp.n_trees);
  liq::detail::parallel_for(
      hp.n_trees,
      [&](std::size_t t) {
        detail::SplitMix64 rng(liq::detail::derive_seed(seed, t));
        auto mult = detail::bootstrap_multiplicities(row_w, rng);
        std::vector<std::uint32_t> rows;
        std::vector<double> w;
        for (std::uint32_t i = 0; i < mult.size(); ++i) {
          if (mult[i] > 0.0) {
            rows.push_back(i);
            w.push_back(mult[i]);
          }
        }
        detail::TreeBuilder b(set, hp, std::move(rows), std::move(w), rng);
        e.trees[t] = b.build();
      },
      jobs);
  return e;
}

/// Ensemble prediction: unweighted mean over trees, clamped to the storable
/// curve-parameter range.
inline double predict(const TreeEnsemble& e, const std::vector<double>& x) {
  if (x.size() != e.n_features)
    throw SchemaMismatch("feature vector length differs from model");
  if (e.trees.empty()) throw TooFewRows("ensemble has no trees");
  double s = 0.0;
  for (const auto& t : e.trees) s += t.predict(x);
  return std::clamp(s / static_cast<double>(e.trees.size()), 0.0,
                    curves::kAbMax);
}

inline double predict(const TreeEnsemble& e, const FeatureVector& fv) {
  if (fv.schema_id != 0 && e.schema_id != 0 && fv.schema_id != e.schema_id)
    throw SchemaMismatch("feature schema differs from model schema");
  return predict(e, fv.values);
}

inline std::vector<double> predict_batch(
    const TreeEnsemble& e, const std::vector<std::vector<double>>& xs,
    int jobs = 0) {
  std::vector<double> out(xs.size());
  liq::detail::parallel_for(
      xs.size(), [&](std::size_t i) { out[i] = predict(e, xs[i]); }, jobs);
  return out;
}

/// Total weighted impurity decrease per feature across the ensemble,
/// normalized so the largest value is 1 (all zeros if nothing ever split).
inline std::vector<double> predictor_importance(const TreeEnsemble& e) {
  std::vector<double> imp(e.n_features, 0.0);
  for (const auto& t : e.trees)
    for (const auto& nd : t.nodes)
      if (nd.feature >= 0) imp[static_cast<std::size_t>(nd.feature)] += nd.gain;
  double mx = 0.0;
  for (double v : imp) mx = std::max(mx, v);
  if (mx > 0.0)
    for (auto& v : imp) v /= mx;
  return imp;
}

// ---------------------------------------------------------------------------
// Cross-validation and grid search
// ---------------------------------------------------------------------------

/// Fold assignment per row: a seeded shuffle dealt round-robin, so fold sizes
/// differ by at most one and every row validates exactly once. Depends only
/// on (n, k, seed), which keeps the folds identical across lattice points.
inline std::vector<std::uint32_t> cv_folds(std::size_t n, std::uint32_t k,
                                           std::uint64_t seed) {
  if (k < 2) throw ConfigError("cross-validation needs k >= 2");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  detail::SplitMix64 rng(liq::detail::derive_seed(seed, 0xF01D5ULL));
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  std::vector<std::uint32_t> fold(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    fold[order[pos]] = static_cast<std::uint32_t>(pos % k);
  return fold;
}

/// Weighted k-fold CV mean-square-error of a bagged model. Synthetic
/// (augmented) rows train but never score; scoring weights are the row
/// weights.
inline double cv_mse(const TrainingSet& set, const Hyperparams& hp,
                     std::uint32_t k, std::uint64_t seed, int jobs = 0) {
  auto fold = cv_folds(set.rows.size(), k, seed);
  double num = 0.0, den = 0.0;
  for (std::uint32_t f = 0; f < k; ++f) {
    TrainingSet train;
    train.schema = set.schema;
    std::vector<std::uint32_t> val;
    for (std::uint32_t i = 0; i < set.rows.size(); ++i) {
      if (fold[i] == f)
        val.push_back(i);
      else
        train.rows.push_back(set.rows[i]);
    }
    auto model =
        train_bagged(train, hp, liq::detail::derive_seed(seed, 1000 + f), jobs);
    for (auto i : val) {
      const TrainingRow& r = set.rows[i];
      if (r.synthetic) continue;
      double d = predict(model, r.features) - r.target;
      num += r.weight * d * d;
      den += r.weight;
    }
  }
  if (!(den > 0.0)) throw TooFewRows("no non-synthetic rows to validate");
  return num / den;
}

struct GridSearchResult {
  Hyperparams best;
  double best_mse = 0.0;
  std::vector<double> all_mse;  ///< CV-MSE per lattice point, input order
};

/// Exhaustive search over the lattice with one shared fold assignment.
/// Ties break to fewer trees, then to smaller depth.
inline GridSearchResult grid_search(const TrainingSet& set,
                                    const std::vector<Hyperparams>& grid,
                                    std::uint32_t k, std::uint64_t seed,
                                    int jobs = 0) {
  if (grid.empty()) throw EmptyGrid();
  std::vector<double> mse(grid.size());
  liq::detail::parallel_for(
      grid.size(),
      [&](std::size_t g) { mse[g] = cv_mse(set, grid[g], k, seed, 1); }, jobs);
  std::size_t best = 0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (mse[g] < mse[best] ||
        (mse[g] == mse[best] &&
         (grid[g].n_trees < grid[best].n_trees ||
          (grid[g].n_trees == grid[best].n_trees &&
           grid[g].max_depth < grid[best].max_depth)))) {
      best = g;
    }
  }
  return {grid[best], mse[best], std::move(mse)};
}

inline std::vector<Hyperparams> default_grid() {
  std::vector<Hyperparams> grid;
  for (std::uint32_t trees : {50u, 100u, 200u})
    for (std::uint32_t leaf : {1u, 5u, 20u})
      for (std::uint32_t depth : {kUnlimitedDepth, 20u})
        grid.push_back({trees, leaf, depth, 0u});
  return grid;
}

/// Train/test split stratified by coarse spatial cell so nearby soundings do
/// not straddle the boundary. Row order within each part follows the input.
inline std::pair<TrainingSet, TrainingSet> stratified_split(
    const TrainingSet& set, double test_fraction, double cell_deg,
    std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0))
    throw ConfigError("test_fraction must lie in [0, 1]");
  if (!(cell_deg > 0.0)) throw ConfigError("cell size must be > 0");
  std::map<std::pair<long long, long long>, std::vector<std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < set.rows.size(); ++i) {
    const auto& loc = set.rows[i].location;
    cells[{static_cast<long long>(std::floor(loc.lon / cell_deg)),
           static_cast<long long>(std::floor(loc.lat / cell_deg))}]
        .push_back(i);
  }
  std::vector<bool> is_test(set.rows.size(), false);
  std::uint64_t cell_no = 0;
  for (auto& [key, members] : cells) {
    detail::SplitMix64 rng(liq::detail::derive_seed(seed, cell_no++));
    for (std::size_t i = members.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng.next_below(i));
      std::swap(members[i - 1], members[j]);
    }
    auto take = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < take; ++i) is_test[members[i]] = true;
  }
  TrainingSet train, test;
  train.schema = set.schema;
  test.schema = set.schema;
  for (std::uint32_t i = 0; i < set.rows.size(); ++i)
    (is_test[i] ? test : train).rows.push_back(set.rows[i]);
  return {std::move(train), std::move(test)};
}

// ---------------------------------------------------------------------------
// Model container
// ---------------------------------------------------------------------------

inline constexpr char kLiqtMagic[4] = {'L', 'I', 'Q', 'T'};
inline constexpr std::uint32_t kLiqtVersion = 1;

inline void write_liqt(const TreeEnsemble& e, std::ostream& os) {
  using liq::detail::write_le;
  os.write(kLiqtMagic, 4);
  write_le<std::uint32_t>(os, kLiqtVersion);
  write_le<std::uint64_t>(os, e.schema_id);
  write_le<std::uint32_t>(os, e.n_features);
  write_le<std::uint32_t>(os, e.hyperparams.n_trees);
  write_le<std::uint32_t>(os, e.hyperparams.min_leaf);
  write_le<std::uint32_t>(os, e.hyperparams.max_depth);
  write_le<std::uint32_t>(os, e.hyperparams.features_per_split);
  write_le<std::uint8_t>(os, static_cast<std::uint8_t>(e.target));
  write_le<std::uint8_t>(os, static_cast<std::uint8_t>(e.mi_kind));
  write_le<std::uint16_t>(os, 0);
  write_le<std::uint32_t>(os, static_cast<std::uint32_t>(e.trees.size()));
  for (const auto& t : e.trees) {
    write_le<std::uint32_t>(os, static_cast<std::uint32_t>(t.nodes.size()));
    for (const auto& nd : t.nodes) {
      write_le<std::int32_t>(os, nd.feature);
      write_le<std::int32_t>(os, nd.left);
      write_le<std::int32_t>(os, nd.right);
      write_le<double>(os, nd.threshold);
      write_le<double>(os, nd.value);
      write_le<double>(os, nd.gain);
    }
  }
  if (!os) throw IoError("model write failed");
}

inline void write_liqt(const TreeEnsemble& e, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open for write: " + path);
  write_liqt(e, os);
}

inline TreeEnsemble read_liqt(std::istream& is) {
  using liq::detail::read_le;
  char magic[4] = {};
  is.read(magic, 4);
  if (!is || is.gcount() != 4) throw TruncatedFile("model shorter than magic");
  if (std::memcmp(magic, kLiqtMagic, 4) != 0)
    throw BadMagic("not a LIQT model file");
  if (read_le<std::uint32_t>(is) != kLiqtVersion)
    throw HeaderInconsistent("unsupported model version");

  TreeEnsemble e;
  e.schema_id = read_le<std::uint64_t>(is);
  e.n_features = read_le<std::uint32_t>(is);
  e.hyperparams.n_trees = read_le<std::uint32_t>(is);
  e.hyperparams.min_leaf = read_le<std::uint32_t>(is);
  e.hyperparams.max_depth = read_le<std::uint32_t>(is);
  e.hyperparams.features_per_split = read_le<std::uint32_t>(is);
  auto target = read_le<std::uint8_t>(is);
  auto mi = read_le<std::uint8_t>(is);
  read_le<std::uint16_t>(is);
  if (target > 1 || mi > 2)
    throw HeaderInconsistent("unknown target or index kind");
  e.target = static_cast<Target>(target);
  e.mi_kind = static_cast<MiKind>(mi);

  auto tree_count = read_le<std::uint32_t>(is);
  if (tree_count == 0 || e.n_features == 0)
    throw HeaderInconsistent("empty model");
  e.trees.resize(tree_count);
  for (auto& t : e.trees) {
    auto node_count = read_le<std::uint32_t>(is);
    if (node_count == 0) throw HeaderInconsistent("tree without nodes");
    t.nodes.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
      TreeNode& nd = t.nodes[i];
      nd.feature = read_le<std::int32_t>(is);
      nd.left = read_le<std::int32_t>(is);
      nd.right = read_le<std::int32_t>(is);
      nd.threshold = read_le<double>(is);
      nd.value = read_le<double>(is);
      nd.gain = read_le<double>(is);
      if (nd.feature < 0) {
        if (nd.left != -1 || nd.right != -1)
          throw HeaderInconsistent("leaf with children");
        if (!std::isfinite(nd.value))
          throw HeaderInconsistent("non-finite leaf value");
      } else {
        bool child_ok =
            nd.left > static_cast<std::int32_t>(i) &&
            nd.right > static_cast<std::int32_t>(i) &&
            nd.left < static_cast<std::int32_t>(node_count) &&
            nd.right < static_cast<std::int32_t>(node_count);
        if (!child_ok ||
            nd.feature >= static_cast<std::int32_t>(e.n_features) ||
            !std::isfinite(nd.threshold))
          throw HeaderInconsistent("invalid split node");
      }
    }
  }
  return e;
}

inline TreeEnsemble read_liqt(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open for read: " + path);
  return read_liqt(is);
}

}  // namespace surrogate
}  // namespace liq

#endif  // LIQ_SURROGATE_HPP
