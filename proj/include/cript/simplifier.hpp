#pragma once

#include <vector>

#include "cript/code.hpp"
#include "cript/code_model.hpp"
#include "cript/encoder.hpp"

namespace cript {

/// Inclusive range of FullCode band indices merged into one string.
struct LevelCluster {
  int first_band = 0;
  int last_band = 0;

  int span() const noexcept { return last_band - first_band; }  // pixel rows covered
  friend bool operator==(const LevelCluster&, const LevelCluster&) = default;
};

/// Greedy top-to-bottom grouping of the critical bands: a new cluster starts
/// whenever a critical level lies `min_gap` or more rows below the previous
/// one. `min_gap` must be at least 1; 1 yields singleton clusters.
std::vector<LevelCluster> cluster_levels(const FullCode& f, int min_gap);

enum class ArcKind : char { B = 'B', C = 'C', D = 'D', O = 'O' };

/// A connected piece of boundary inside a cluster. Members refer to the
/// FullCode: `string_index` is the band index.
struct MergedArc {
  ArcKind kind;
  std::vector<LetterRef> members;
};

struct MergeResult {
  std::vector<BandLetter> letters;  // the merged band string
  std::vector<MergedArc> arcs;      // every component, O arcs included
  int deleted = 0;                  // number of O arcs dropped
  bool fallback_ordering = false;   // B and D arcs were ordered across different levels
};

/// Merges the bands of one cluster into a single string. Arcs that reach
/// neither the cluster's top nor its bottom level (type O) are deleted.
MergeResult merge_cluster(const FullCode& f, const LevelCluster& cluster);

struct SimplifyResult {
  CriptCode code;
  FullCode reduced;  // one band per surviving non-trivial merged string
  std::vector<LevelCluster> clusters;
  std::vector<MergedArc> deleted;
  std::vector<int> fallback_clusters;  // indices into `clusters`
};

SimplifyResult simplify_detailed(const FullCode& f, int min_gap);

CriptCode simplify(const FullCode& f, int min_gap);

}  // namespace cript
