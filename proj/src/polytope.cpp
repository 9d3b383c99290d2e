#include "nilhoro/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilhoro {

Rat apply_functional(const RatVec& f, const LatticeVec& p) {
  Rat acc = 0;
  for (std::size_t c = 0; c < f.size(); ++c) acc += f[c] * Rat(p[c]);
  return acc;
}

namespace {

// Next dim-subset of {0..count-1} in lexicographic order; false when done.
bool next_subset(std::vector<std::size_t>& idx, std::size_t count) {
  const std::size_t k = idx.size();
  std::size_t t = k;
  while (t > 0 && idx[t - 1] == count - k + (t - 1)) --t;
  if (t == 0) return false;
  ++idx[t - 1];
  for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
  return true;
}

RatMat rows_for(const std::vector<LatticeVec>& pts, const std::vector<std::size_t>& idx) {
  RatMat m;
  for (auto r : idx) {
    RatVec row;
    for (const auto& v : pts[r]) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<LatticeVec>& points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: no points");
  const std::size_t dim = points.front().size();
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("convex_hull: dimension must be 1, 2 or 3");
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("convex_hull: mixed dimensions");

  std::vector<LatticeVec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Affine span must be full-dimensional.
  {
    RatMat diffs;
    for (std::size_t r = 1; r < pts.size(); ++r) {
      RatVec row;
      for (std::size_t c = 0; c < dim; ++c) row.emplace_back(pts[r][c] - pts[0][c]);
      diffs.push_back(std::move(row));
    }
    const int r = rat_rank(diffs);
    if (r < static_cast<int>(dim))
      throw std::invalid_argument("convex_hull: points affinely span only dimension " +
                                  std::to_string(r) + " < " + std::to_string(dim));
  }

  // Candidate supporting hyperplanes f.x = 1 through each dim-subset.
  std::vector<RatVec> functionals;
  std::vector<std::size_t> idx(dim);
  for (std::size_t t = 0; t < dim; ++t) idx[t] = t;
  do {
    auto m = rows_for(pts, idx);
    const auto f = rat_solve(std::move(m), RatVec(dim, Rat(1)));
    if (!f) {
      // Singular subset: if a hyperplane through the origin supports the
      // point set here, the origin is not interior and the f = 1
      // normalisation cannot represent that facet.
      auto nv = rat_null_vector(rows_for(pts, idx), dim);
      if (nv) {
        bool has_pos = false, has_neg = false;
        for (const auto& p : pts) {
          const Rat v = apply_functional(*nv, p);
          has_pos = has_pos || v > 0;
          has_neg = has_neg || v < 0;
        }
        if (!(has_pos && has_neg) && rat_rank(rows_for(pts, idx)) == static_cast<int>(dim) - 1)
          throw std::invalid_argument(
              "convex_hull: origin lies on the boundary of the hull; facets cannot be "
              "normalised to f = 1");
      }
      continue;
    }
    bool supporting = true;
    for (const auto& p : pts)
      if (apply_functional(*f, p) > 1) {
        supporting = false;
        break;
      }
    if (!supporting) continue;
    if (std::find(functionals.begin(), functionals.end(), *f) == functionals.end())
      functionals.push_back(*f);
  } while (next_subset(idx, pts.size()));

  std::sort(functionals.begin(), functionals.end());

  // A point is a hull vertex iff the functionals tight at it have full rank.
  std::vector<bool> is_vertex(pts.size(), false);
  std::vector<std::vector<std::size_t>> on_facet(functionals.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    RatMat tight;
    for (std::size_t fidx = 0; fidx < functionals.size(); ++fidx) {
      if (apply_functional(functionals[fidx], pts[p]) == 1) {
        tight.push_back(functionals[fidx]);
        on_facet[fidx].push_back(p);
      }
    }
    is_vertex[p] = rat_rank(std::move(tight)) == static_cast<int>(dim);
  }

  LatticePolytope poly;
  poly.dim = static_cast<int>(dim);
  std::vector<std::size_t> vertex_of_point(pts.size(), SIZE_MAX);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (is_vertex[p]) {
      vertex_of_point[p] = poly.vertices.size();
      poly.vertices.push_back(pts[p]);
    }
  }
  for (std::size_t fidx = 0; fidx < functionals.size(); ++fidx) {
    PolytopeFacet facet;
    facet.functional = functionals[fidx];
    for (auto p : on_facet[fidx])
      if (is_vertex[p]) facet.vertex_indices.push_back(vertex_of_point[p]);
    poly.facets.push_back(std::move(facet));
  }
  return poly;
}

}  // namespace nilhoro
