#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "walkmix/graph.hpp"

namespace walkmix {

enum class Provenance { kReal, kVirtual, kDuplicate };

const char* provenance_name(Provenance p);

struct Sample {
  std::vector<double> vec;
  std::vector<LabelId> labels;  // sorted, duplicate-free, nonempty
  Provenance provenance = Provenance::kReal;

  // Indices of the two source samples for synthesized entries; npos for real
  // ones. Duplicates carry the same index twice.
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t parent_a = npos;
  std::size_t parent_b = npos;

  bool has_label(LabelId l) const;
};

struct LabeledDataset {
  std::vector<Sample> samples;
  int dim = 0;

  std::size_t size() const { return samples.size(); }
};

struct AugmentConfig {
  enum class Mode { kInterpolate, kDuplicate };

  double addcoeff = 1.0;
  double theta = 0.5;
  std::uint64_t seed = 1;
  Mode mode = Mode::kInterpolate;
};

/// theta * v1 + (1 - theta) * v2.
std::vector<double> midpoint(std::span<const double> v1, std::span<const double> v2, double theta);

/// Per-label indices of the real samples.
std::vector<std::vector<std::size_t>> real_label_index(const LabeledDataset& dataset,
                                                       std::size_t label_count);

/// ceil(addcoeff * num_max), with a small guard against the product landing a
/// hair above an integer.
std::size_t balance_target(double addcoeff, std::size_t num_max);

/// Raises every label's sample count to max(real count, balance_target).
/// num_max is the largest per-label real count, frozen before any synthesis.
/// New samples are midpoints (cfg.theta) of two distinct real samples of the
/// label, drawn uniformly with replacement across iterations from
/// Rng(derive_seed(cfg.seed, label)); their label set is the intersection of
/// the parents' sets. A label with a single real sample degenerates to
/// duplication. In duplicate mode every added sample is a verbatim copy of one
/// uniformly chosen real sample with its full label set. Real samples are
/// never modified or removed; parents are always real, never synthetic.
LabeledDataset balance(const LabeledDataset& dataset, std::size_t label_count,
                       const AugmentConfig& cfg);

/// balance() with the mode forced to duplicate.
LabeledDataset duplicate_baseline(const LabeledDataset& dataset, std::size_t label_count,
                                  const AugmentConfig& cfg);

/// Euclidean-distance descriptives over the real samples. Labels with fewer
/// than 2 samples are skipped and listed. intra(L) averages over unordered
/// sample pairs within L; inter(L, L') averages over pairs (x, y) with x in L
/// but not L' and y in L' but not L. Everything here is reported, never
/// asserted: the compactness / norm hypotheses are empirical.
struct GeometryReport {
  struct LabelStats {
    LabelId label = 0;
    std::size_t count = 0;
    double intra_mean = 0.0;
    double norm_mean = 0.0;
    double norm_std = 0.0;
    double norm_cv = 0.0;  // norm_std / norm_mean (0 when the mean is 0)
  };
  struct PairStats {
    LabelId a = 0, b = 0;
    double inter_mean = 0.0;
    bool intra_less_than_inter = false;  // intra of both endpoints below inter
  };

  std::vector<LabelStats> labels;
  std::vector<PairStats> pairs;
  std::vector<LabelId> skipped;

  double mean_intra = 0.0;
  double mean_inter = 0.0;
  double intra_inter_ratio = 0.0;
  double norm_gap = 0.0;  // mean |norm_mean(a) - norm_mean(b)| over pairs
};

GeometryReport geometry_diagnostics(const LabeledDataset& dataset, std::size_t label_count);

/// CSV rows: statistic name, label(s) ("a|b" for pairs, empty for globals),
/// value.
void save_geometry_csv(const GeometryReport& report, const std::string& path);

/// CSV rows: provenance, labels ("a|b|c"), vector components.
void save_dataset_csv(const LabeledDataset& dataset, const std::string& path);

}  // namespace walkmix
