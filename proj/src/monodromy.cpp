#include "secants/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace secants {

PermutationTen PermutationTen::identity() {
  PermutationTen p;
  for (int i = 0; i < 10; ++i) p.images[i] = i + 1;
  return p;
}

void PermutationTen::validate() const {
  std::array<bool, 10> seen{};
  for (int v : images) {
    if (v < 1 || v > 10 || seen[v - 1])
      throw Error("permutation: images are not a bijection of 1..10");
    seen[v - 1] = true;
  }
}

PermutationTen compose(const PermutationTen& p, const PermutationTen& q) {
  PermutationTen r;
  for (int i = 1; i <= 10; ++i) r.images[i - 1] = p(q(i));
  return r;
}

PermutationTen inverse(const PermutationTen& p) {
  PermutationTen r;
  for (int i = 1; i <= 10; ++i) r.images[p(i) - 1] = i;
  return r;
}

std::string cycle_notation(const PermutationTen& p) {
  p.validate();
  std::ostringstream os;
  std::array<bool, 10> done{};
  for (int i = 1; i <= 10; ++i) {
    if (done[i - 1]) continue;
    os << "(" << i;
    done[i - 1] = true;
    for (int j = p(i); j != i; j = p(j)) {
      os << " " << j;
      done[j - 1] = true;
    }
    os << ")";
  }
  return os.str();
}

PermutationTen permutation_from_cycles(const std::string& text) {
  PermutationTen p = PermutationTen::identity();
  std::array<bool, 10> assigned{};
  std::size_t pos = 0;
  auto skip_blank = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_blank();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw IOError("cycle notation: expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    skip_blank();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw IOError("cycle notation: expected digit in '" + text + "'");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > 10) throw IOError("cycle notation: entry out of range 1..10");
      if (assigned[v - 1]) throw IOError("cycle notation: repeated entry");
      assigned[v - 1] = true;
      cycle.push_back(v);
      skip_blank();
    }
    if (pos == text.size()) throw IOError("cycle notation: missing ')'");
    ++pos;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    any = true;
    skip_blank();
  }
  if (!any) throw IOError("cycle notation: no cycles in '" + text + "'");
  p.validate();
  return p;
}

std::uint64_t group_order(const std::vector<PermutationTen>& generators) {
  if (generators.empty()) throw Error("group_order: need at least one generator");
  for (const PermutationTen& g : generators) g.validate();

  struct Level {
    int base = 0;
    std::map<int, PermutationTen> transversal;  // point -> rep with rep(base) = point
  };
  std::vector<Level> chain;
  // Strong generators bucketed by the deepest base prefix they fix: a
  // generator stored at depth k stabilizes bases 0..k-1, so it acts on every
  // level l <= k. Level l's orbit therefore uses the union over depths >= l.
  std::vector<std::vector<PermutationTen>> strong;

  const PermutationTen id = PermutationTen::identity();

  auto effective_gens = [&](std::size_t l) {
    std::vector<PermutationTen> out;
    for (std::size_t k = l; k < strong.size(); ++k)
      out.insert(out.end(), strong[k].begin(), strong[k].end());
    return out;
  };

  auto rebuild = [&](std::size_t l) {
    Level& lev = chain[l];
    lev.transversal.clear();
    lev.transversal[lev.base] = id;
    const std::vector<PermutationTen> gens = effective_gens(l);
    std::vector<int> queue = {lev.base};
    while (!queue.empty()) {
      int point = queue.back();
      queue.pop_back();
      const PermutationTen rep = lev.transversal.at(point);
      for (const PermutationTen& s : gens) {
        int image = s(point);
        if (!lev.transversal.count(image)) {
          lev.transversal[image] = compose(s, rep);
          queue.push_back(image);
        }
      }
    }
  };

  // Strip g through levels from.. ; returns the residue and the level where
  // it stuck (chain.size() when it fell off the end).
  auto sift = [&](PermutationTen g, std::size_t from) {
    std::size_t l = from;
    while (l < chain.size() && !(g == id)) {
      auto it = chain[l].transversal.find(g(chain[l].base));
      if (it == chain[l].transversal.end()) break;
      g = compose(inverse(it->second), g);
      ++l;
    }
    return std::pair<PermutationTen, std::size_t>(g, l);
  };

  // Record a residue that fixes the first l base points, opening a fresh
  // level when it ran past the end of the chain.
  auto add_strong = [&](const PermutationTen& h, std::size_t l) {
    if (l == chain.size()) {
      int moved = 0;
      for (int i = 1; i <= 10; ++i)
        if (h(i) != i) {
          moved = i;
          break;
        }
      chain.push_back(Level{moved, {}});
      strong.emplace_back();
    }
    strong[l].push_back(h);
    rebuild(l);
  };

  for (const PermutationTen& g : generators) {
    auto [h, l] = sift(g, 0);
    if (!(h == id)) add_strong(h, l);
  }
  if (chain.empty()) return 1;  // every generator was the identity

  // Verify Schreier closure deepest level first; a fresh strong generator
  // reopens verification at its own depth, and the walk back up re-checks
  // every shallower level whose effective generating set grew.
  std::ptrdiff_t i = std::ptrdiff_t(chain.size()) - 1;
  while (i >= 0) {
    const std::size_t li = std::size_t(i);
    rebuild(li);
    const std::vector<PermutationTen> gens = effective_gens(li);
    std::vector<PermutationTen> reps;
    reps.reserve(chain[li].transversal.size());
    for (const auto& [point, rep] : chain[li].transversal) reps.push_back(rep);
    const int base = chain[li].base;
    bool clean = true;
    for (const PermutationTen& u : reps) {
      for (const PermutationTen& s : gens) {
        const PermutationTen su = compose(s, u);
        const PermutationTen& u2 = chain[li].transversal.at(su(base));
        auto [h, m] = sift(compose(inverse(u2), su), li + 1);
        if (!(h == id)) {
          add_strong(h, m);
          i = std::ptrdiff_t(m);
          clean = false;
          break;
        }
      }
      if (!clean) break;
    }
    if (clean) --i;
  }

  std::uint64_t order = 1;
  for (std::size_t l = 0; l < chain.size(); ++l) {
    rebuild(l);
    order *= chain[l].transversal.size();
  }
  return order;
}

std::array<EdgeValidity, 3> validate_loop(const TriangleLoop& loop) {
  std::array<EdgeValidity, 3> out;
  for (int e = 0; e < 3; ++e) {
    out[e].from = e;
    out[e].to = (e + 1) % 3;
    out[e].roots = edge_determinant_roots(loop.vertices[e], loop.vertices[(e + 1) % 3]);
  }
  return out;
}

MonodromyRun track_loop(const TriangleLoop& loop, const StartSet& start,
                        const TrackerConfig& cfg) {
  if (!start.base.approx_equal(loop.vertices[0], 1e-12))
    throw Error("track_loop: the loop must start at the start set's base instance");

  MonodromyRun run{loop, std::nullopt, {}, {}, {}};
  for (int e = 0; e < 3; ++e) {
    run.edge_validity[e].from = e;
    run.edge_validity[e].to = (e + 1) % 3;
    try {
      run.edge_validity[e].roots =
          edge_determinant_roots(loop.vertices[e], loop.vertices[(e + 1) % 3]);
    } catch (const DegenerateCubicError&) {
      // A constant or deficient determinant (repeated vertices) has no
      // crossings to report; the tracked paths decide whether the edge works.
      run.edge_validity[e].roots = EdgeRootsResult{};
      run.edge_validity[e].roots.min_segment_distance =
          std::numeric_limits<double>::infinity();
    }
  }
  run.path_statuses.resize(30);

  TrackerConfig edge_cfg = cfg;
  edge_cfg.corrector_tolerance = std::min(cfg.corrector_tolerance, 1e-11);

  for (int i = 0; i < 10; ++i) {
    SolutionPoint x = start.representatives[i];
    for (int e = 0; e < 3; ++e) {
      PathResult pr =
          track_path(loop.vertices[e], loop.vertices[(e + 1) % 3], x, edge_cfg, false);
      run.path_statuses[3 * i + e] = pr;
      if (pr.status != PathStatus::Converged) {
        std::ostringstream os;
        os << "loop tracking failed: orbit " << i + 1 << ", edge " << e << "->"
           << (e + 1) % 3 << ": " << to_string(pr.status);
        if (!pr.note.empty()) os << " (" << pr.note << ")";
        throw LoopFailureError(os.str());
      }
      x = pr.endpoint;
    }
    run.final_points[i] = x;
  }

  PermutationTen sigma;
  std::array<bool, 10> taken{};
  for (int i = 0; i < 10; ++i) {
    double best = std::numeric_limits<double>::infinity();
    double second = std::numeric_limits<double>::infinity();
    int best_j = -1;
    for (int j = 0; j < 10; ++j) {
      double d = std::numeric_limits<double>::infinity();
      for (const SolutionPoint& img : orbit_expand(run.final_points[i]))
        d = std::min(d, distance(img, start.representatives[j]));
      if (d < best) {
        second = best;
        best = d;
        best_j = j;
      } else if (d < second) {
        second = d;
      }
    }
    if (best_j < 0 || !(second >= 10.0 * best) || best > 1e-6) {
      std::ostringstream os;
      os << "ambiguous orbit match for loop endpoint " << i + 1 << ": closest orbit "
         << best_j + 1 << " at " << best << ", runner-up at " << second;
      throw AmbiguousMatchingError(os.str());
    }
    if (taken[best_j])
      throw AmbiguousMatchingError("loop endpoints do not induce a bijection of orbits");
    taken[best_j] = true;
    sigma.images[i] = best_j + 1;
  }
  sigma.validate();
  run.permutation = sigma;
  return run;
}

}  // namespace secants
