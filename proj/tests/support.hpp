#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "amphichiral/build.hpp"
#include "amphichiral/checkerboard.hpp"
#include "amphichiral/conway.hpp"
#include "amphichiral/diagram.hpp"
#include "amphichiral/error.hpp"

namespace fixtures {

inline const char* const kDH = "(2 1,3) 1 1 (2 1,3)";
inline const char* const kMutantAmph = ".(2,3).(3,2)";
inline const char* const kMutantChiral = ".(2,3).(2,3)";
inline const char* const kSixStar = "6*(2 1,2) 1.(2,2 1) 1";
inline const char* const kSixStarOther = "6*(1,(2,(1,2))).(((2,1),2),1)";

// The four listed minimal diagrams of the 14-crossing knot.
inline const std::vector<std::string> kDHDiagrams = {
    "((((2,1),3),1),1) ((2,1),3)",
    "((((1,2),3),1),1) ((2,1),3)",
    "((1,(3,(2,1))),1) ((2,1),3)",
    "(1,(1,((2,1),3))) ((2,1),3)",
};

// Every symbol used as a named regression input.
inline std::vector<std::string> all() {
  return {kDH,
          kMutantAmph,
          kMutantChiral,
          kSixStar,
          "(2 1,2) 1 1 (2 1,2)",
          "(2 1,2,2) 1 1 (2 1,2,2)",
          "(3 1,2 2 1) 1 1 (3 1,2 2 1)",
          "(3 1,2,2 1) 1 1 (3 1,2,2 1)",
          "3",
          "2 2",
          "5 2",
          "(3,3) 1 1 (3,3)",
          kDHDiagrams[1],
          kDHDiagrams[2],
          kDHDiagrams[3]};
}

}  // namespace fixtures

namespace gen {

// Random Conway expression with positive leaves, about `budget` crossings.
inline amphi::TangleExpr random_expr(std::mt19937& rng, int budget) {
  using amphi::TangleExpr;
  std::uniform_int_distribution<int> pick(0, 9);
  if (budget <= 3 || pick(rng) < 3) return TangleExpr::integer(std::uniform_int_distribution<int>(1, std::max(1, std::min(budget, 4)))(rng));
  const int left = std::uniform_int_distribution<int>(1, budget - 1)(rng);
  TangleExpr a = random_expr(rng, left), b = random_expr(rng, budget - left);
  switch (pick(rng) % 3) {
    case 0: return TangleExpr::product(std::move(a), std::move(b));
    case 1: return TangleExpr::sum(std::move(a), std::move(b));
    default: return TangleExpr::ramification({std::move(a), std::move(b)});
  }
}

// Random reduced-or-not alternating diagram from a Conway expression;
// split closures are retried.
inline amphi::Diagram random_diagram(std::mt19937& rng, int max_crossings) {
  for (;;) {
    const int budget = std::uniform_int_distribution<int>(1, max_crossings)(rng);
    try {
      return amphi::build(random_expr(rng, budget));
    } catch (const amphi::Error&) {
    }
  }
}

// Random connected plane multigraph grown by pendant edges, loops and
// chords inside faces. Signs are all +1 when `sign` is set.
inline amphi::PlaneGraph random_graph(std::mt19937& rng, int edges, bool sign) {
  std::vector<int> sigma;
  auto insert_after = [&](int h, int x) {
    if (h < 0) {
      sigma[x] = x;
      return;
    }
    sigma[x] = sigma[h];
    sigma[h] = x;
  };
  for (int e = 0; e < edges; ++e) {
    const int a = 2 * e, b = 2 * e + 1;
    sigma.resize(2 * e + 2, -1);
    const int old = 2 * e;  // half-edges present before this step
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (old == 0) {
      insert_after(-1, a);
      if (kind == 0) {
        insert_after(a, b);  // loop on the lone vertex
      } else {
        insert_after(-1, b);  // pendant edge
      }
      continue;
    }
    const int h = std::uniform_int_distribution<int>(0, old - 1)(rng);
    if (kind == 0) {
      insert_after(h, a);
      insert_after(-1, b);
    } else if (kind == 1) {
      insert_after(h, a);
      insert_after(a, b);
    } else {
      // Chord between two corners of the face containing corner h.
      std::vector<int> tmp(sigma.begin(), sigma.begin() + old);
      const amphi::PlaneGraph g(tmp);
      const auto face = g.face_of_corner();
      std::vector<int> same;
      for (int x = 0; x < old; ++x)
        if (face[x] == face[h]) same.push_back(x);
      const int h2 = same[std::uniform_int_distribution<int>(0, static_cast<int>(same.size()) - 1)(rng)];
      insert_after(h, a);
      insert_after(h2 == h ? a : h2, b);
    }
  }
  std::vector<int> signs;
  if (sign) signs.assign(edges, 1);
  return amphi::PlaneGraph(sigma, signs);
}

// Random relabelling of the same labelled map.
inline amphi::Diagram shuffle(const amphi::Diagram& d, std::mt19937& rng) {
  std::vector<int> perm(d.crossing_count()), rot(d.crossing_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& r : rot) r = std::uniform_int_distribution<int>(0, 3)(rng);
  return amphi::relabel(d, perm, rot);
}

}  // namespace gen
