#include "ttk/invariants.hpp"

#include <map>

namespace ttk {

std::string to_string(LSpace v) {
  switch (v) {
    case LSpace::Yes: return "yes";
    case LSpace::No: return "no";
    case LSpace::Undecided: return "undecided";
  }
  return "?";
}

std::string to_string(Reason v) {
  switch (v) {
    case Reason::Staircase: return "staircase";
    case Reason::RankObstruction: return "rank_obstruction";
    case Reason::None: return "none";
  }
  return "?";
}

StaircaseResult is_staircase(const KnotComplex& complex) {
  StaircaseResult res;
  const int m = static_cast<int>(complex.generators.size());
  auto fail = [&](std::string why) {
    res.witness = std::move(why);
    res.ordering.clear();
    return res;
  };
  if (m % 2 == 0) return fail("even number of generators");
  if (static_cast<int>(complex.arrows.size()) != m - 1) return fail("arrow count is not m - 1");
  std::vector<std::vector<int>> adj(m);  // arrow indices at each generator
  for (std::size_t i = 0; i < complex.arrows.size(); ++i) {
    const Arrow& a = complex.arrows[i];
    if (a.n_z > 0 && a.n_w > 0) return fail("diagonal arrow " + std::to_string(a.from) + "->" + std::to_string(a.to));
    if (a.n_z == 0 && a.n_w == 0) return fail("arrow without base points");
    adj[a.from].push_back(static_cast<int>(i));
    adj[a.to].push_back(static_cast<int>(i));
  }
  if (m == 1) {
    res.is_staircase = true;
    res.ordering = {0};
    return res;
  }
  // Walk the path from the endpoint with the lower Alexander grading.
  std::vector<int> ends;
  for (int v = 0; v < m; ++v) {
    if (adj[v].size() > 2 || adj[v].empty()) return fail("generator " + std::to_string(v) + " has degree " +
                                                        std::to_string(adj[v].size()));
    if (adj[v].size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return fail("arrow graph is not a path");
  const auto& g = complex.generators;
  int cur = g[ends[0]].alexander <= g[ends[1]].alexander ? ends[0] : ends[1];
  int via = -1;
  std::vector<int> order{cur};
  while (static_cast<int>(order.size()) < m) {
    int next_arrow = -1;
    for (int ai : adj[cur])
      if (ai != via) next_arrow = ai;
    if (next_arrow < 0) return fail("arrow graph is disconnected");
    const Arrow& a = complex.arrows[next_arrow];
    cur = a.from == cur ? a.to : a.from;
    via = next_arrow;
    order.push_back(cur);
  }
  // x_i with even i (1-based) emits one horizontal and one vertical arrow to its
  // neighbours; odd ones emit nothing.
  for (int i = 0; i < m; ++i) {
    const int v = order[i];
    int horizontal = 0, vertical = 0, outgoing = 0;
    for (int ai : adj[v]) {
      const Arrow& a = complex.arrows[ai];
      if (a.from != v) continue;
      ++outgoing;
      (a.n_z == 0 ? horizontal : vertical) += 1;
    }
    const bool even = (i + 1) % 2 == 0;
    if (!even && outgoing != 0) return fail("odd generator " + std::to_string(v) + " has an outgoing arrow");
    if (even && (horizontal != 1 || vertical != 1))
      return fail("even generator " + std::to_string(v) + " lacks one horizontal and one vertical arrow");
    if (i > 0 && g[order[i]].alexander <= g[order[i - 1]].alexander)
      return fail("Alexander grading not increasing along the path");
  }
  res.is_staircase = true;
  res.ordering = std::move(order);
  return res;
}

RankObstruction rank_obstruction(const BigradedRanks& ranks) {
  std::map<int, long> per_a;
  for (const auto& [k, r] : ranks.ranks) per_a[k.second] += r;
  RankObstruction out;
  for (const auto& [a, r] : per_a)
    if (r >= 2) out.grading = a;
  out.obstructed = out.grading.has_value();
  return out;
}

bool theorem1_predicate(const TwistedTorusParams& params) {
  if (params.r == 0) throw PredicateNotApplicable("predicate needs r >= 1");
  if (params.s == 1 && params.p >= 3) throw PredicateNotApplicable("predicate needs s >= 2 when p >= 3");
  const int p = params.p, s = params.s;
  return s == p - 1 || ((s == 2 || s == p - 2) && params.r == 1);
}

ClassificationResult classify(const KnotComplex& complex) {
  ClassificationResult out;
  out.complex = complex;
  out.ranks = hat_hfk_ranks(complex);
  out.staircase = is_staircase(complex);
  out.obstruction = rank_obstruction(out.ranks);
  if (out.staircase.is_staircase) {
    out.is_lspace = LSpace::Yes;
    out.reason = Reason::Staircase;
  } else if (out.obstruction.obstructed) {
    out.is_lspace = LSpace::No;
    out.reason = Reason::RankObstruction;
  }
  return out;
}

ClassificationResult classify(const TwistedTorusParams& params) {
  const GenusOneDiagram d = build_diagram(params);
  return classify(build_complex(d, enumerate_bigons(d)));
}

}  // namespace ttk
