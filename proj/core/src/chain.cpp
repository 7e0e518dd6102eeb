#include "ttk/chain.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace ttk {

namespace {

// The corner convention of enumerate_bigons already yields positive twists
// with top Alexander grading equal to the genus (trefoil anchor), so arrows are
// used as enumerated. Flipping this reverses every arrow.
constexpr bool kFlipArrows = false;

struct Relative {
  std::vector<long> alexander, maslov;
  int domain_links = 0;
};

std::vector<Arrow> arrows_of(const std::vector<Bigon>& bigons) {
  std::vector<Arrow> out;
  for (const auto& b : bigons) {
    Arrow a{b.from, b.to, b.n_z, b.n_w};
    if (kFlipArrows) std::swap(a.from, a.to);
    out.push_back(a);
  }
  return out;
}

// Relative gradings integrated along arrows; separate components are joined
// by connecting domains.
Relative relative_gradings(const GenusOneDiagram& diagram, int m, const std::vector<Arrow>& arrows) {
  Relative rel{std::vector<long>(m, 0), std::vector<long>(m, 0), 0};
  std::vector<std::vector<std::pair<int, int>>> adj(m);  // (neighbor, arrow index)
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    adj[arrows[i].from].push_back({arrows[i].to, static_cast<int>(i)});
    adj[arrows[i].to].push_back({arrows[i].from, static_cast<int>(i)});
  }
  std::vector<bool> seen(m, false);
  std::optional<Regions> regions_cache;
  for (int root = 0; root < m; ++root) {
    if (seen[root]) continue;
    if (root != 0) {
      if (!regions_cache) regions_cache = regions(diagram);
      const DomainVector d = connecting_domain(diagram, *regions_cache, 0, root);
      const long nz = d.n_z(*regions_cache), nw = d.n_w(*regions_cache);
      rel.alexander[root] = rel.alexander[0] - (nz - nw);
      rel.maslov[root] = rel.maslov[0] - (maslov_index(*regions_cache, d) - 2 * nw);
      ++rel.domain_links;
    }
    seen[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (auto [u, ai] : adj[v]) {
        if (seen[u]) continue;
        const Arrow& a = arrows[ai];
        const long da = a.n_z - a.n_w, dm = 1 - 2 * a.n_w;
        // grading(from) - grading(to) = drop
        if (a.from == v) {
          rel.alexander[u] = rel.alexander[v] - da;
          rel.maslov[u] = rel.maslov[v] - dm;
        } else {
          rel.alexander[u] = rel.alexander[v] + da;
          rel.maslov[u] = rel.maslov[v] + dm;
        }
        seen[u] = true;
        q.push(u);
      }
    }
  }
  for (const auto& a : arrows) {
    if (rel.alexander[a.from] - rel.alexander[a.to] != a.n_z - a.n_w ||
        rel.maslov[a.from] - rel.maslov[a.to] != 1 - 2 * a.n_w)
      throw InvariantViolation("build_complex: inconsistent relative gradings around a cycle");
  }
  return rel;
}

// Cancels arrows (all of which must drop the first key component by one) over
// the two-element field; returns the surviving generator ids.
std::vector<int> cancel(int m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::set<int>> out(m), in(m);
  auto toggle = [&](int a, int b) {
    if (out[a].erase(b)) {
      in[b].erase(a);
    } else {
      out[a].insert(b);
      in[b].insert(a);
    }
  };
  for (auto [a, b] : edges) toggle(a, b);
  std::vector<bool> alive(m, true);
  for (int x = 0; x < m; ++x) {
    while (alive[x] && !out[x].empty()) {
      const int y = *out[x].begin();
      const std::vector<int> sources(in[y].begin(), in[y].end());
      const std::vector<int> targets(out[x].begin(), out[x].end());
      for (int a : sources)
        if (a != x)
          for (int b : targets)
            if (b != y) toggle(a, b);
      for (int v : {x, y}) {
        for (int b : std::vector<int>(out[v].begin(), out[v].end())) toggle(v, b);
        for (int a : std::vector<int>(in[v].begin(), in[v].end())) toggle(a, v);
        alive[v] = false;
      }
    }
  }
  std::vector<int> survivors;
  for (int v = 0; v < m; ++v)
    if (alive[v]) survivors.push_back(v);
  return survivors;
}

std::vector<int> s3_survivors(int m, const std::vector<Arrow>& arrows) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : arrows)
    if (a.n_w == 0) edges.push_back({a.from, a.to});
  const auto survivors = cancel(m, edges);
  if (survivors.size() != 1)
    throw InvariantViolation("hf_s3_check: total rank " + std::to_string(survivors.size()) + " != 1");
  return survivors;
}

int narrow(long v) {
  if (v < INT32_MIN || v > INT32_MAX) throw InvariantViolation("grading out of range");
  return static_cast<int>(v);
}

}  // namespace

long BigradedRanks::total() const {
  long t = 0;
  for (const auto& [k, r] : ranks) t += r;
  return t;
}

long BigradedRanks::at_alexander(int a) const {
  long t = 0;
  for (const auto& [k, r] : ranks)
    if (k.second == a) t += r;
  return t;
}

int BigradedRanks::top_alexander() const {
  std::optional<int> top;
  for (const auto& [k, r] : ranks)
    if (r > 0 && (!top || k.second > *top)) top = k.second;
  if (!top) throw InvariantViolation("top_alexander: empty ranks");
  return *top;
}

KnotComplex build_complex(const GenusOneDiagram& diagram, const std::vector<Bigon>& bigons) {
  const int m = static_cast<int>(diagram.intersection_count());
  const auto arrows = arrows_of(bigons);
  const Relative rel = relative_gradings(diagram, m, arrows);

  // Alexander: centre the hat homology support.
  KnotComplex c;
  c.arrows = arrows;
  c.domain_links = rel.domain_links;
  for (int i = 0; i < m; ++i) c.generators.push_back({i, narrow(rel.alexander[i]), narrow(rel.maslov[i])});
  BigradedRanks hat = hat_hfk_ranks(c);
  long amin = 0, amax = 0;
  bool first = true;
  for (const auto& [k, r] : hat.ranks) {
    if (r == 0) continue;
    amin = first ? k.second : std::min<long>(amin, k.second);
    amax = first ? k.second : std::max<long>(amax, k.second);
    first = false;
  }
  if ((amin + amax) % 2 != 0) throw InvariantViolation("build_complex: Alexander support has no centre");
  const long a_shift = -(amin + amax) / 2;

  // Maslov: the class surviving in the complex of n_w = 0 arrows sits at 0.
  const int survivor = s3_survivors(m, arrows).front();
  const long m_shift = -rel.maslov[survivor];
  for (auto& g : c.generators) {
    g.alexander = narrow(g.alexander + a_shift);
    g.maslov = narrow(g.maslov + m_shift);
  }

  hat = hat_hfk_ranks(c);
  for (const auto& [k, r] : hat.ranks)
    if (hat.at_alexander(k.second) != hat.at_alexander(-k.second))
      throw InvariantViolation("build_complex: Alexander ranks not symmetric");
  const LaurentPoly delta = alexander_poly(hat);
  if (delta.at_one() != 1) throw InvariantViolation("build_complex: Delta(1) != 1 under the Maslov pinning");
  return c;
}

BigradedRanks hat_hfk_ranks(const KnotComplex& complex) {
  const int m = static_cast<int>(complex.generators.size());
  std::vector<std::pair<int, int>> edges;
  for (const auto& a : complex.arrows)
    if (a.n_z == 0 && a.n_w == 0) edges.push_back({a.from, a.to});
  BigradedRanks out;
  for (int v : cancel(m, edges)) ++out.ranks[{complex.generators[v].maslov, complex.generators[v].alexander}];
  return out;
}

LaurentPoly alexander_poly(const BigradedRanks& ranks) {
  LaurentPoly p;
  for (const auto& [k, r] : ranks.ranks) p.add_term((k.first % 2 == 0 ? 1 : -1) * r, k.second);
  if (!p.is_symmetric()) throw InvariantViolation("alexander_poly: not symmetric: " + p.to_string());
  return p;
}

BigradedRanks hf_s3_check(const GenusOneDiagram& diagram, const std::vector<Bigon>& bigons) {
  const int m = static_cast<int>(diagram.intersection_count());
  const auto arrows = arrows_of(bigons);
  relative_gradings(diagram, m, arrows);  // throws on inconsistent gradings
  s3_survivors(m, arrows);
  BigradedRanks out;
  out.ranks[{0, 0}] = 1;
  return out;
}

BigradedRanks hf_s3_check(const KnotComplex& complex) {
  const int m = static_cast<int>(complex.generators.size());
  const int v = s3_survivors(m, complex.arrows).front();
  BigradedRanks out;
  out.ranks[{complex.generators[v].maslov, 0}] = 1;
  if (complex.generators[v].maslov != 0) throw InvariantViolation("hf_s3_check: surviving class not in grading 0");
  return out;
}

void check_complex(const KnotComplex& complex) {
  const auto& g = complex.generators;
  std::vector<std::vector<const Arrow*>> out(g.size());
  for (const auto& a : complex.arrows) {
    if (g[a.from].maslov - g[a.to].maslov != 1 - 2 * a.n_w)
      throw InvariantViolation("check_complex: Maslov drop of arrow " + std::to_string(a.from) + "->" +
                               std::to_string(a.to));
    if (g[a.from].alexander - g[a.to].alexander != a.n_z - a.n_w)
      throw InvariantViolation("check_complex: Alexander drop of arrow " + std::to_string(a.from) + "->" +
                               std::to_string(a.to));
    out[a.from].push_back(&a);
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::map<std::tuple<int, int, int>, int> terms;  // (target, U power, V power) -> count
    for (const Arrow* a : out[x])
      for (const Arrow* b : out[a->to]) ++terms[{b->to, a->n_w + b->n_w, a->n_z + b->n_z}];
    for (const auto& [k, count] : terms)
      if (count % 2 != 0)
        throw InvariantViolation("check_complex: d^2 != 0 at generator " + std::to_string(x));
  }
}

void check_rank_symmetry(const BigradedRanks& ranks) {
  for (const auto& [k, r] : ranks.ranks) {
    auto it = ranks.ranks.find({k.first - 2 * k.second, -k.second});
    if (it == ranks.ranks.end() || it->second != r)
      throw InvariantViolation("rank symmetry fails at (" + std::to_string(k.first) + ", " +
                               std::to_string(k.second) + ")");
  }
}

void write_complex(std::ostream& out, const KnotComplex& complex) {
  out << "ttk-complex 1\n";
  out << "generators " << complex.generators.size() << "\n";
  for (const auto& g : complex.generators) out << g.id << " " << g.alexander << " " << g.maslov << "\n";
  out << "arrows " << complex.arrows.size() << "\n";
  for (const auto& a : complex.arrows) out << a.from << " " << a.to << " " << a.n_z << " " << a.n_w << "\n";
}

KnotComplex read_complex(std::istream& in) {
  std::string tag, word;
  int version = 0;
  if (!(in >> tag >> version) || tag != "ttk-complex" || version != 1)
    throw std::runtime_error("read_complex: bad header");
  std::size_t n = 0;
  if (!(in >> word >> n) || word != "generators") throw std::runtime_error("read_complex: expected generators");
  KnotComplex c;
  for (std::size_t i = 0; i < n; ++i) {
    Generator g;
    if (!(in >> g.id >> g.alexander >> g.maslov)) throw std::runtime_error("read_complex: truncated generators");
    c.generators.push_back(g);
  }
  if (!(in >> word >> n) || word != "arrows") throw std::runtime_error("read_complex: expected arrows");
  for (std::size_t i = 0; i < n; ++i) {
    Arrow a;
    if (!(in >> a.from >> a.to >> a.n_z >> a.n_w)) throw std::runtime_error("read_complex: truncated arrows");
    const int m = static_cast<int>(c.generators.size());
    if (a.from < 0 || a.from >= m || a.to < 0 || a.to >= m) throw std::runtime_error("read_complex: arrow id");
    c.arrows.push_back(a);
  }
  return c;
}

}  // namespace ttk
