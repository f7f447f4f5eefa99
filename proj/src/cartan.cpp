#include "blockdual/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "blockdual/errors.hpp"

namespace blockdual {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

// Leading principal minors via fraction-free (Bareiss) elimination.
bool positive_definite(const IntMatrix& sym) {
  const int n = sym.n;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = sym.at(i, j);
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;  // k-th leading minor is m[k][k] * sign(prev...)
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

// Standard Cartan matrix for a single irreducible factor, Bourbaki numbering.
IntMatrix irreducible_cartan(char letter, int rank) {
  IntMatrix a(rank);
  for (int i = 0; i < rank; ++i) a.at(i, i) = 2;
  auto edge = [&](int i, int j, long long aij, long long aji) {
    a.at(i, j) = aij;
    a.at(j, i) = aji;
  };
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1, -1, -1);
  };
  switch (letter) {
    case 'A':
      if (rank < 1) throw UnknownType("type A needs rank >= 1");
      path(rank);
      break;
    case 'B':
      if (rank < 2) throw UnknownType("type B needs rank >= 2");
      path(rank);
      edge(rank - 2, rank - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      if (rank < 2) throw UnknownType("type C needs rank >= 2");
      path(rank);
      edge(rank - 2, rank - 1, -2, -1);  // alpha_n long
      break;
    case 'D':
      if (rank < 4) throw UnknownType("type D needs rank >= 4");
      path(rank - 1);
      edge(rank - 3, rank - 1, -1, -1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw UnknownType("type E needs rank 6, 7 or 8");
      // Bourbaki: chain 1-3-4-5-...-n, with 2 attached to 4.
      edge(0, 2, -1, -1);
      for (int i = 2; i + 1 < rank; ++i) edge(i, i + 1, -1, -1);
      edge(1, 3, -1, -1);
      break;
    case 'F':
      if (rank != 4) throw UnknownType("type F needs rank 4");
      path(4);
      edge(1, 2, -1, -2);  // 1,2 long; 3,4 short
      break;
    case 'G':
      if (rank != 2) throw UnknownType("type G needs rank 2");
      edge(0, 1, -3, -1);
      break;
    default:
      throw UnknownType(std::string("unknown type letter '") + letter + "'");
  }
  return a;
}

// Path ordering of a component's vertex set: walk the diagram from an
// endpoint. Branched diagrams (D, E) are returned in BFS order instead.
std::vector<int> order_component(const IntMatrix& a, const std::vector<int>& verts0) {
  auto adjacent = [&](int u, int v) { return a.at(u, v) != 0; };
  std::vector<int> degree(verts0.size(), 0);
  for (size_t i = 0; i < verts0.size(); ++i)
    for (size_t j = 0; j < verts0.size(); ++j)
      if (i != j && adjacent(verts0[i], verts0[j])) ++degree[i];
  const bool is_path =
      std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
  std::vector<int> order;
  std::set<int> seen;
  int start = verts0[0];
  if (is_path) {
    for (size_t i = 0; i < verts0.size(); ++i)
      if (degree[i] <= 1) {
        start = verts0[i];
        break;
      }
    // Prefer the endpoint with the smaller index for determinism.
    for (size_t i = 0; i < verts0.size(); ++i)
      if (degree[i] <= 1 && verts0[i] < start) start = verts0[i];
  }
  std::vector<int> frontier{start};
  seen.insert(start);
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.erase(frontier.begin());
    order.push_back(u);
    std::vector<int> next;
    for (int v : verts0)
      if (!seen.count(v) && adjacent(u, v)) next.push_back(v);
    std::sort(next.begin(), next.end());
    for (int v : next) {
      seen.insert(v);
      frontier.insert(frontier.begin() + (is_path ? 0 : frontier.size()), v);
    }
  }
  return order;
}

char classify_component(const IntMatrix& a, const std::vector<int>& ordered) {
  const int r = static_cast<int>(ordered.size());
  if (r == 1) return 'A';
  std::vector<int> degree(r, 0);
  long long max_product = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && a.at(ordered[i], ordered[j]) != 0) {
        ++degree[i];
        max_product = std::max(
            max_product, a.at(ordered[i], ordered[j]) * a.at(ordered[j], ordered[i]));
      }
  const int branches = static_cast<int>(
      std::count_if(degree.begin(), degree.end(), [](int d) { return d >= 3; }));
  if (max_product == 3) return 'G';
  if (max_product == 2) {
    if (r == 2) return 'B';
    // Double bond in the middle of a rank-4 path: F4.
    if (r == 4 && a.at(ordered[1], ordered[2]) * a.at(ordered[2], ordered[1]) == 2)
      return 'F';
    // Otherwise B or C depending on which end carries the short root.
    // Row with the -2 belongs to the short simple root.
    for (int i = 0; i + 1 < r; ++i) {
      const long long down = a.at(ordered[i + 1], ordered[i]);
      if (down == -2) return 'B';
      if (a.at(ordered[i], ordered[i + 1]) == -2) return 'C';
    }
    return 'B';
  }
  if (branches > 0) {
    // Distinguish D from E by the branch-node position: in D the short arms
    // both have length 1.
    int branch_pos = -1;
    for (int i = 0; i < r; ++i)
      if (degree[i] >= 3) branch_pos = i;
    int short_arms = 0;
    for (int i = 0; i < r; ++i)
      if (degree[i] == 1) {
        // arm length 1 from the branch node
        if (a.at(ordered[i], ordered[branch_pos]) != 0) ++short_arms;
      }
    return short_arms >= 2 ? 'D' : 'E';
  }
  return 'A';
}

}  // namespace

IntVector CartanDatum::simple_root(int i) const {
  IntVector v(static_cast<size_t>(rank()), 0);
  v[i - 1] = 1;
  return v;
}

IntMatrix CartanDatum::reflection_matrix(int i) const {
  // s_i(alpha_j) = alpha_j - a_{ij} alpha_i
  IntMatrix m = IntMatrix::identity(rank());
  for (int j = 0; j < rank(); ++j) m.at(i - 1, j) -= cartan_.at(i - 1, j);
  return m;
}

long long CartanDatum::inner(const IntVector& u, const IntVector& v) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += u[i] * bilinear_.at(i, j) * v[j];
  return s;
}

int CartanDatum::root_sign(const IntVector& v) {
  for (long long c : v)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

std::shared_ptr<const CartanDatum> CartanDatum::from_spec(const std::string& spec) {
  if (spec.empty()) throw UnknownType("empty Cartan spec");
  // Split on 'x' into factors like "A3".
  std::vector<std::pair<char, int>> factors;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t next = spec.find('x', pos);
    std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
      throw UnknownType("cannot parse Cartan spec factor '" + tok + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    for (size_t k = 1; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k])))
        throw UnknownType("cannot parse Cartan spec factor '" + tok + "'");
    const int r = std::stoi(tok.substr(1));
    factors.emplace_back(letter, r);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  int total = 0;
  for (auto& [l, r] : factors) total += r;
  IntMatrix a(total);
  int off = 0;
  for (auto& [l, r] : factors) {
    IntMatrix block = irreducible_cartan(l, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) a.at(off + i, off + j) = block.at(i, j);
    off += r;
  }
  auto datum = from_matrix(a, spec);
  return datum;
}

std::shared_ptr<const CartanDatum> CartanDatum::from_matrix(const IntMatrix& cartan,
                                                            std::string name) {
  const int n = cartan.n;
  if (n <= 0) throw UnknownType("Cartan matrix must be non-empty");
  for (int i = 0; i < n; ++i) {
    if (cartan.at(i, i) != 2)
      throw NotFiniteType("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan.at(i, j) > 0)
        throw NotFiniteType("off-diagonal Cartan entries must be <= 0");
      if ((cartan.at(i, j) == 0) != (cartan.at(j, i) == 0))
        throw NotFiniteType("Cartan matrix must have symmetric zero pattern");
    }
  }

  // Symmetriser with minimal positive integer diagonal, found per component
  // by propagating d_j / d_i = a_ij / a_ji along edges.
  std::vector<long long> num(n, 0), den(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comp_vertices;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(comp_vertices.size());
    comp_vertices.emplace_back();
    num[s] = 1;
    den[s] = 1;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp_vertices[c].push_back(u);
      for (int v = 0; v < n; ++v) {
        if (v == u || cartan.at(u, v) == 0) continue;
        // d_u * a_uv = d_v * a_vu  =>  d_v = d_u * a_uv / a_vu
        long long nn = num[u] * cartan.at(u, v);
        long long dd = den[u] * cartan.at(v, u);
        if (nn < 0) nn = -nn;  // both entries negative, ratio positive
        if (dd < 0) dd = -dd;
        const long long g = gcd_ll(nn, dd);
        nn /= g;
        dd /= g;
        if (comp[v] < 0) {
          comp[v] = c;
          num[v] = nn;
          den[v] = dd;
          stack.push_back(v);
        } else if (num[v] * dd != nn * den[v]) {
          throw NotFiniteType("Cartan matrix is not symmetrisable");
        }
      }
    }
  }
  std::vector<long long> d(n, 1);
  for (auto& verts : comp_vertices) {
    long long l = 1;
    for (int v : verts) l = l / gcd_ll(l, den[v]) * den[v];
    long long g = 0;
    for (int v : verts) g = gcd_ll(g, num[v] * (l / den[v]));
    for (int v : verts) d[v] = num[v] * (l / den[v]) / g;
  }
  IntMatrix sym(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym.at(i, j) = d[i] * cartan.at(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sym.at(i, j) != sym.at(j, i))
        throw NotFiniteType("Cartan matrix is not symmetrisable");
  if (!positive_definite(sym))
    throw NotFiniteType("symmetrised Cartan matrix is not positive definite");

  auto datum = std::shared_ptr<CartanDatum>(new CartanDatum());
  datum->name_ = std::move(name);
  datum->cartan_ = cartan;
  datum->bilinear_ = sym;

  for (auto& verts : comp_vertices) {
    CartanComponent component;
    std::vector<int> ordered = order_component(cartan, verts);
    component.letter = classify_component(cartan, ordered);
    component.rank = static_cast<int>(ordered.size());
    for (int v : ordered) component.indices.push_back(v + 1);
    datum->components_.push_back(std::move(component));
  }
  std::sort(datum->components_.begin(), datum->components_.end(),
            [](const CartanComponent& x, const CartanComponent& y) {
              return x.indices.front() < y.indices.front();
            });

  // Close the set of simple roots under all simple reflections; positive
  // definiteness above guarantees termination.
  std::set<IntVector> roots;
  std::vector<IntVector> frontier;
  for (int i = 1; i <= n; ++i) {
    frontier.push_back(datum->simple_root(i));
    roots.insert(frontier.back());
  }
  std::vector<IntMatrix> refl;
  for (int i = 1; i <= n; ++i) refl.push_back(datum->reflection_matrix(i));
  while (!frontier.empty()) {
    IntVector beta = frontier.back();
    frontier.pop_back();
    for (const auto& s : refl) {
      IntVector gamma = s.apply(beta);
      if (roots.insert(gamma).second) frontier.push_back(gamma);
    }
  }
  for (const auto& beta : roots)
    if (root_sign(beta) > 0) datum->positive_roots_.push_back(beta);
  std::sort(datum->positive_roots_.begin(), datum->positive_roots_.end());
  return datum;
}

}  // namespace blockdual
