#include "cript/simplifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cript {

std::vector<LevelCluster> cluster_levels(const FullCode& f, int min_gap) {
  if (min_gap < 1) throw std::invalid_argument("min_gap must be at least 1");
  std::vector<LevelCluster> clusters;
  double previous = 0.0;
  for (std::size_t k = 0; k < f.bands.size(); ++k) {
    const Band& band = f.bands[k];
    if (!band.critical()) continue;
    if (clusters.empty() || band.level - previous >= min_gap) {
      clusters.push_back({static_cast<int>(k), static_cast<int>(k)});
    } else {
      clusters.back().last_band = static_cast<int>(k);
    }
    previous = band.level;
  }
  return clusters;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct Component {
  std::vector<LetterRef> members;
  std::vector<int> top_ends;     // positions in the first band
  std::vector<int> bottom_ends;  // positions in the last band
  int top_band = 0;              // topmost band reached
  int key40 = 0;                  // leftmost sort key in top_band
  ArcKind kind = ArcKind::O;
};

}  // namespace

MergeResult merge_cluster(const FullCode& f, const LevelCluster& cluster) {
  const int first = cluster.first_band;
  const int last = cluster.last_band;
  if (first < 0 || last < first || last >= static_cast<int>(f.bands.size()))
    throw std::out_of_range("cluster outside the code");

  auto band = [&](int k) -> const std::vector<BandLetter>& { return f.bands[static_cast<std::size_t>(k)].letters; };

  std::vector<std::size_t> offset(static_cast<std::size_t>(last - first) + 2, 0);
  for (int k = first; k <= last; ++k)
    offset[static_cast<std::size_t>(k - first) + 1] = offset[static_cast<std::size_t>(k - first)] + band(k).size();
  auto id = [&](int k, std::size_t p) { return offset[static_cast<std::size_t>(k - first)] + p; };
  DisjointSets sets(offset.back());

  for (int k = first; k <= last; ++k) {
    const auto& letters = band(k);
    // Conjugates: consecutive occurrences of B (and of D) within the band.
    for (Letter kind : {Letter::B, Letter::D}) {
      std::size_t open = letters.size();
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (letters[p].kind != kind) continue;
        if (open == letters.size()) {
          open = p;
        } else {
          sets.unite(id(k, open), id(k, p));
          open = letters.size();
        }
      }
    }
    // Contacts with the next band inside the cluster, matched by rank.
    if (k < last) {
      const auto& below = band(k + 1);
      std::vector<std::size_t> up, down;
      for (std::size_t p = 0; p < letters.size(); ++p)
        if (letters[p].kind != Letter::D) up.push_back(p);
      for (std::size_t p = 0; p < below.size(); ++p)
        if (below[p].kind != Letter::B) down.push_back(p);
      if (up.size() != down.size()) throw std::invalid_argument("unbalanced bands inside a cluster");
      for (std::size_t r = 0; r < up.size(); ++r) sets.unite(id(k, up[r]), id(k + 1, down[r]));
    }
  }

  std::vector<Component> comps;
  std::vector<int> comp_of_root(offset.back(), -1);
  for (int k = first; k <= last; ++k) {
    const auto& letters = band(k);
    for (std::size_t p = 0; p < letters.size(); ++p) {
      const std::size_t root = sets.find(id(k, p));
      int& c = comp_of_root[root];
      if (c < 0) {
        c = static_cast<int>(comps.size());
        comps.push_back({});
        comps.back().top_band = k;
        comps.back().key40 = letters[p].key40;
      }
      Component& comp = comps[static_cast<std::size_t>(c)];
      comp.members.push_back({k, static_cast<int>(p)});
      if (k == comp.top_band) comp.key40 = std::min(comp.key40, letters[p].key40);
      if (k == first && letters[p].kind != Letter::B) comp.top_ends.push_back(static_cast<int>(p));
      if (k == last && letters[p].kind != Letter::D) comp.bottom_ends.push_back(static_cast<int>(p));
    }
  }

  MergeResult result;
  std::vector<int> crossings, births, deaths;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Component& comp = comps[c];
    const bool top = !comp.top_ends.empty();
    const bool bottom = !comp.bottom_ends.empty();
    comp.kind = top && bottom ? ArcKind::C : bottom ? ArcKind::B : top ? ArcKind::D : ArcKind::O;
    result.arcs.push_back({comp.kind, comp.members});
    switch (comp.kind) {
      case ArcKind::C: crossings.push_back(static_cast<int>(c)); break;
      case ArcKind::B: births.push_back(static_cast<int>(c)); break;
      case ArcKind::D: deaths.push_back(static_cast<int>(c)); break;
      case ArcKind::O: ++result.deleted; break;
    }
  }

  // Crossings keep their order on both boundary levels. A birth sits in the
  // gap between crossings given by its bottom ends, a death by its top ends.
  auto top_pos = [&](int c) { return comps[static_cast<std::size_t>(c)].top_ends.front(); };
  auto bottom_pos = [&](int c) { return comps[static_cast<std::size_t>(c)].bottom_ends.front(); };
  std::sort(crossings.begin(), crossings.end(), [&](int a, int b) { return top_pos(a) < top_pos(b); });
  std::sort(births.begin(), births.end(), [&](int a, int b) { return bottom_pos(a) < bottom_pos(b); });
  std::sort(deaths.begin(), deaths.end(), [&](int a, int b) { return top_pos(a) < top_pos(b); });

  auto gap_of = [&](int pos, bool use_top) {
    int g = 0;
    for (int c : crossings)
      if ((use_top ? top_pos(c) : bottom_pos(c)) < pos) ++g;
    return g;
  };

  std::vector<int> order;
  std::size_t bi = 0, di = 0;
  for (std::size_t g = 0; g <= crossings.size(); ++g) {
    std::vector<int> gap_births, gap_deaths;
    while (bi < births.size() && static_cast<std::size_t>(gap_of(bottom_pos(births[bi]), false)) == g)
      gap_births.push_back(births[bi++]);
    while (di < deaths.size() && static_cast<std::size_t>(gap_of(top_pos(deaths[di]), true)) == g)
      gap_deaths.push_back(deaths[di++]);
    if (!gap_births.empty() && !gap_deaths.empty() && first != last) result.fallback_ordering = true;
    // Interleave by leftmost sort key on each arc's topmost level.
    std::size_t x = 0, y = 0;
    while (x < gap_births.size() || y < gap_deaths.size()) {
      const bool take_death =
          x == gap_births.size() ||
          (y < gap_deaths.size() && comps[static_cast<std::size_t>(gap_deaths[y])].key40 <
                                        comps[static_cast<std::size_t>(gap_births[x])].key40);
      order.push_back(take_death ? gap_deaths[y++] : gap_births[x++]);
    }
    if (g < crossings.size()) order.push_back(crossings[g]);
  }

  // Rebuild letters with rank-based switch indices and increasing keys.
  int upper = 0, lower = 0;
  for (int c : order) {
    const ArcKind kind = comps[static_cast<std::size_t>(c)].kind;
    const int key = static_cast<int>(result.letters.size()) * 2;
    if (kind == ArcKind::C) {
      result.letters.push_back({Letter::C, key, ++upper, ++lower, 0});
    } else if (kind == ArcKind::B) {
      result.letters.push_back({Letter::B, key, 0, lower + 1, lower + 2});
      result.letters.push_back({Letter::B, key + 2, 0, lower + 2, lower + 1});
      lower += 2;
    } else {
      result.letters.push_back({Letter::D, key, upper + 1, 0, upper + 2});
      result.letters.push_back({Letter::D, key + 2, upper + 2, 0, upper + 1});
      upper += 2;
    }
  }
  return result;
}

SimplifyResult simplify_detailed(const FullCode& f, int min_gap) {
  SimplifyResult result;
  result.clusters = cluster_levels(f, min_gap);
  result.reduced.width = f.width;
  result.reduced.height = f.height;
  for (std::size_t i = 0; i < result.clusters.size(); ++i) {
    const LevelCluster& cl = result.clusters[i];
    MergeResult merged = merge_cluster(f, cl);
    for (auto& arc : merged.arcs)
      if (arc.kind == ArcKind::O) result.deleted.push_back(std::move(arc));
    if (merged.fallback_ordering) result.fallback_clusters.push_back(static_cast<int>(i));
    Band band;
    band.level = f.bands[static_cast<std::size_t>(cl.first_band)].level;
    band.letters = std::move(merged.letters);
    if (!band.critical()) continue;
    result.code.strings.push_back(band.string());
    result.reduced.bands.push_back(std::move(band));
  }
  return result;
}

CriptCode simplify(const FullCode& f, int min_gap) {
  return simplify_detailed(f, min_gap).code;
}

}  // namespace cript
